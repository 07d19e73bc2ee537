#pragma once

#include <string>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/irreps.hpp"
#include "cayley/linalg.hpp"

namespace cayley {

// Matrix coefficient pi_{k,i}(g) = <pi(g)e_k, e_i> as a vector over the
// group.  Component indices k, i are 1-based (matching the usual notation);
// group element indices are 0-based throughout.
struct CoefficientVector {
    std::string rep;
    int k = 1, i = 1;
    bool normalized = false;  // scaled by sqrt(dim/|G|)
    cvec values;
};

CoefficientVector coefficient_vector(const FiniteGroup& g, const UnitaryIrrep& irrep, int k,
                                     int i, bool normalized);

// The change-of-basis matrix B whose columns are all normalized coefficient
// vectors, ordered rep-outer (set order), then i, then j; column (pi,i,j)
// holds sqrt(d/N) pi_{j,i}.  Unitary by Schur orthogonality; this is checked
// at construction (1e-9).
struct FourierMatrixB {
    struct ColumnLabel {
        std::string rep;
        int i = 1, j = 1;
    };
    CMat matrix;
    std::vector<ColumnLabel> labels;

    // consecutive column ranges spanning each subspace E_{pi,i}
    struct BlockRef {
        std::string rep;
        int i = 1;
        int start = 0, dim = 0;
    };
    std::vector<BlockRef> blocks() const;
};

FourierMatrixB fourier_matrix(const FiniteGroup& g, const IrrepSet& set);

// Adjacency of Cayley(G, w): A(g,h) = w(g^-1 h).  Requires w symmetric.
struct CayleyAdjacency {
    CMat matrix;  // real entries
};

CayleyAdjacency adjacency(const FiniteGroup& g, const WeightFunction& w);

// Right regular representation rho(x): (rho(x)f)(h) = f(hx);
// matrix entries rho(x)_{i,j} = [g_i x == g_j].
CMat regular_representation(const FiniteGroup& g, int x);

// Orthonormal eigenbasis of A_G assembled block-by-block from the
// eigenvectors of pi(w): for each rep (set order), each eigenpair (descending,
// deterministic via hermitian_eig), each i = 1..d, the vector
// sqrt(d/N) sum_k x_k pi_{k,i}.
struct PreferredEigenbasis {
    struct Label {
        std::string rep;
        int i = 1;
        double lambda = 0;
    };
    CMat vectors;  // columns
    std::vector<double> eigenvalues;
    std::vector<Label> labels;
};

PreferredEigenbasis preferred_eigenbasis(const FiniteGroup& g, const IrrepSet& set,
                                         const WeightFunction& w);

// Quasi-abelian shortcut: for class-function weights every coefficient vector
// is an eigenvector and each rep contributes one eigenvalue tr(pi(w))/d with
// multiplicity d^2.  The eigenvector property is asserted (1e-8) before
// returning.
struct QuasiAbelianLine {
    std::string rep;
    double lambda = 0;
    int multiplicity = 0;
};

std::vector<QuasiAbelianLine> quasi_abelian_spectrum(const FiniteGroup& g, const IrrepSet& set,
                                                     const WeightFunction& w);

// Conjugate a matrix commuting with the right regular representation into its
// block diagonal form B^* A B; returns the d x d blocks (d copies per rep,
// labelled by subspace index i).  Off-block leakage > 1e-9 * ||A||_F raises a
// NumericalError naming the worst entry.
struct LabeledBlock {
    std::string rep;
    int i = 1;
    CMat block;
};

std::vector<LabeledBlock> block_diagonalize(const CMat& a, const FourierMatrixB& b);

}
