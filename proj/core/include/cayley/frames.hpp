#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/irreps.hpp"
#include "cayley/linalg.hpp"
#include "cayley/spectral.hpp"

namespace cayley {

struct AtomLabel {
    std::string rep;
    int i = 1;
    double lambda = 0;
};

struct Frame {
    int ambient = 0;
    std::vector<cvec> atoms;
    std::vector<std::optional<AtomLabel>> labels;  // parallel to atoms

    bool fully_labeled() const;
};

Frame frame_from_atoms(std::vector<cvec> atoms);

struct FrameBounds {
    double lower = 0, upper = 0;
    double condition = 0;  // upper/lower; +inf when the atoms do not span
};

// Optimal bounds = extreme eigenvalues of the frame operator S = sum psi psi^*.
FrameBounds frame_bounds(const Frame& f);

// Theta_{pi,i}(x) = sqrt(d/N) sum_k x_k pi_{k,i}: the canonical isometry from
// C^d onto the subspace E_{pi,i}.
cvec theta_map(const FiniteGroup& g, const UnitaryIrrep& irrep, int i, std::span<const cplx> x);

// Generator menu for eigenspace frames, all expressed in eigenspace
// coordinates of dimension m:
//   orthonormal: e_1..e_m                     (m atoms, Parseval)
//   mercedes:    regular simplex, m+1 atoms   (tight, bound (m+1)/m)
//   harmonic(t): rows of the t-point DFT, t atoms (tight, bound t/m; t >= m)
//   explicit:    caller-provided vectors (must span)
struct GenOrthonormal {};
struct GenMercedes {};
struct GenHarmonic {
    int m = 0;
};
struct GenExplicit {
    std::vector<cvec> vectors;
};
using GeneratorSpec = std::variant<GenOrthonormal, GenMercedes, GenHarmonic, GenExplicit>;

// Produces the unit-norm generator vectors for the parametric kinds
// (explicit generators carry their own vectors and are rejected here).
std::vector<cvec> small_frame_generator(const GeneratorSpec& kind, int dim);

// One entry per (rep, i, eigenvalue of pi(w)); lambda is matched to the
// computed spectrum within 1e-6.
struct SubspaceFrameSpec {
    std::string rep;
    int i = 1;
    double lambda = 0;
    GeneratorSpec generator;
};

struct CayleyFrameResult {
    Frame frame;
    FrameBounds bounds;  // via min/max of per-spec bounds; checked against frame_bounds
    bool tight = false;
};

// Assembles sub-frames Theta(generator) over a complete, duplicate-free cover
// of (rep, i, lambda) triples.  Atom order: rep (set order), lambda
// (descending), generator atom, then i -- so an all-orthonormal cover yields
// exactly the preferred eigenbasis.
CayleyFrameResult build_cayley_frame(const FiniteGroup& g, const IrrepSet& set,
                                     const WeightFunction& w,
                                     const std::vector<SubspaceFrameSpec>& specs);

struct AtomMembership {
    bool frobenius_schur = false;  // single-block support
    bool cayley = false;           // block coords are an eigenvector of pi(w)
    std::string rep;               // dominant block
    int i = 1;
    double lambda = 0;      // matched eigenvalue when cayley holds
    double off_block = 0;   // largest norm outside the dominant block
    double residual = 0;    // best eigen-residual of the block coordinates
};

struct MembershipReport {
    std::vector<AtomMembership> atoms;
    bool all_frobenius_schur = false;
    bool all_cayley = false;
    bool spans = false;
    FrameBounds bounds;
};

// Tests each atom for single-block support and the eigenvector property at
// tolerance tol (atoms are normalized before testing).
MembershipReport is_cayley_frame(const Frame& f, const FiniteGroup& g, const IrrepSet& set,
                                 const WeightFunction& w, double tol = 1e-8);

// Orthonormal sparsity basis with a (rep, i) block label per column.
struct SparsityBasis {
    CMat vectors;
    std::vector<std::string> rep;
    std::vector<int> i;

    static SparsityBasis from(const PreferredEigenbasis& b);
    static SparsityBasis from(const FourierMatrixB& b);
};

struct RipResult {
    double delta = 0;
    std::optional<double> blockwise_bound;  // max over blocks, when computable
    unsigned long long supports = 0;        // size-k supports examined for delta
};

// Restricted isometry constant of order k for the analysis map of f against
// the given sparsity basis, by exhaustive support enumeration (k <= 12).
// For fully labeled frames the block-wise bound is computed as well and
// delta <= bound + 1e-9 is asserted.
RipResult rip_constant(const Frame& f, const SparsityBasis& basis, int k);

}
