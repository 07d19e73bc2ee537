#include "cayley/spectral.hpp"

#include <cmath>
#include <string>

#include "cayley/errors.hpp"

namespace cayley {

CoefficientVector coefficient_vector(const FiniteGroup& g, const UnitaryIrrep& irrep, int k,
                                     int i, bool normalized) {
    if (k < 1 || k > irrep.dim || i < 1 || i > irrep.dim)
        throw ValidationError("coefficient_vector: component index out of range for irrep '" +
                              irrep.name + "'");
    if (static_cast<int>(irrep.matrices.size()) != g.order)
        throw ValidationError("coefficient_vector: irrep does not match group order");
    CoefficientVector cv;
    cv.rep = irrep.name;
    cv.k = k;
    cv.i = i;
    cv.normalized = normalized;
    cv.values.resize(g.order);
    const double scale = normalized ? std::sqrt(static_cast<double>(irrep.dim) / g.order) : 1.0;
    for (int e = 0; e < g.order; ++e) {
        // <pi(g)e_k, e_i> is the (i,k) entry
        cv.values[e] = scale * irrep.at(e)(i - 1, k - 1);
    }
    return cv;
}

std::vector<FourierMatrixB::BlockRef> FourierMatrixB::blocks() const {
    std::vector<BlockRef> out;
    for (size_t c = 0; c < labels.size(); ++c) {
        if (out.empty() || out.back().rep != labels[c].rep || out.back().i != labels[c].i)
            out.push_back({labels[c].rep, labels[c].i, static_cast<int>(c), 0});
        ++out.back().dim;
    }
    return out;
}

FourierMatrixB fourier_matrix(const FiniteGroup& g, const IrrepSet& set) {
    const int n = g.order;
    if (set.total_dim_sq() != n)
        throw ValidationError("fourier_matrix: sum of irrep dim^2 is " +
                              std::to_string(set.total_dim_sq()) + ", group order is " +
                              std::to_string(n));
    FourierMatrixB b;
    b.matrix = CMat(n, n);
    int c = 0;
    for (const auto& r : set.irreps)
        for (int i = 1; i <= r.dim; ++i)
            for (int j = 1; j <= r.dim; ++j) {
                const CoefficientVector cv = coefficient_vector(g, r, j, i, true);
                b.matrix.set_col(c, cv.values);
                b.labels.push_back({r.name, i, j});
                ++c;
            }

    const double dev = (b.matrix.adjoint() * b.matrix - CMat::identity(n)).max_abs();
    if (dev > 1e-9)
        throw NumericalError("fourier_matrix: columns are not orthonormal (deviation " +
                             std::to_string(dev) + "); the irrep set is not a valid system");
    return b;
}

CayleyAdjacency adjacency(const FiniteGroup& g, const WeightFunction& w) {
    if (static_cast<int>(w.values.size()) != g.order)
        throw ValidationError("adjacency: weight vector length does not match group order");
    require_symmetric(g, w);
    CayleyAdjacency a;
    a.matrix = CMat(g.order, g.order);
    for (int r = 0; r < g.order; ++r)
        for (int c = 0; c < g.order; ++c) a.matrix(r, c) = w(g.product(g.inv(r), c));
    return a;
}

CMat regular_representation(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order) throw ValidationError("regular_representation: element out of range");
    CMat m(g.order, g.order);
    for (int i = 0; i < g.order; ++i) m(i, g.product(i, x)) = 1.0;
    return m;
}

PreferredEigenbasis preferred_eigenbasis(const FiniteGroup& g, const IrrepSet& set,
                                         const WeightFunction& w) {
    const int n = g.order;
    if (set.total_dim_sq() != n)
        throw ValidationError("preferred_eigenbasis: irrep set is not complete for this group");
    require_symmetric(g, w);

    PreferredEigenbasis out;
    out.vectors = CMat(n, n);
    int col = 0;
    for (const auto& r : set.irreps) {
        const CMat pw = apply_to_function(r, std::span<const double>(w.values));
        const HermitianEigen eig = hermitian_eig(pw);
        const double scale = std::sqrt(static_cast<double>(r.dim) / n);
        for (int p = 0; p < r.dim; ++p) {
            const cvec x = eig.vectors.col(p);
            for (int i = 1; i <= r.dim; ++i) {
                // v(g) = sqrt(d/N) * (pi(g) x)_i
                cvec v(n);
                for (int e = 0; e < n; ++e) {
                    cplx s = 0;
                    for (int k = 0; k < r.dim; ++k) s += r.at(e)(i - 1, k) * x[k];
                    v[e] = scale * s;
                }
                out.vectors.set_col(col, v);
                out.eigenvalues.push_back(eig.values[p]);
                out.labels.push_back({r.name, i, eig.values[p]});
                ++col;
            }
        }
    }

    // eigen-residual postcondition against the assembled adjacency
    const CayleyAdjacency a = adjacency(g, w);
    const double tol = 1e-8 * (1.0 + a.matrix.norm_fro());
    for (int c = 0; c < n; ++c) {
        const cvec v = out.vectors.col(c);
        cvec av = a.matrix.apply(v);
        axpy(av, -out.eigenvalues[c], v);
        if (norm2(av) > tol)
            throw NumericalError("preferred_eigenbasis: eigen-residual " +
                                 std::to_string(norm2(av)) + " for block (" + out.labels[c].rep +
                                 ", i=" + std::to_string(out.labels[c].i) + ")");
    }
    return out;
}

std::vector<QuasiAbelianLine> quasi_abelian_spectrum(const FiniteGroup& g, const IrrepSet& set,
                                                     const WeightFunction& w) {
    if (static_cast<int>(w.values.size()) != g.order)
        throw ValidationError("quasi_abelian_spectrum: weight length does not match group order");
    if (auto x = class_function_violation(g, w)) {
        const auto& cls = g.classes[g.class_index[*x]];
        throw ValidationError("weight is not a class function: w(" + g.name(*x) + ") = " +
                              std::to_string(w(*x)) + " differs from w(" + g.name(cls.front()) +
                              ") = " + std::to_string(w(cls.front())) +
                              " in the same conjugacy class");
    }
    require_symmetric(g, w);

    const CayleyAdjacency a = adjacency(g, w);
    std::vector<QuasiAbelianLine> lines;
    for (const auto& r : set.irreps) {
        const CMat pw = apply_to_function(r, std::span<const double>(w.values));
        cplx tr = 0;
        for (int i = 0; i < r.dim; ++i) tr += pw(i, i);
        const double lambda = tr.real() / r.dim;

        // every coefficient vector of this rep must be a lambda-eigenvector
        for (int k = 1; k <= r.dim; ++k)
            for (int i = 1; i <= r.dim; ++i) {
                const CoefficientVector cv = coefficient_vector(g, r, k, i, true);
                cvec av = a.matrix.apply(cv.values);
                axpy(av, -cplx{lambda}, cv.values);
                if (norm2(av) > 1e-8)
                    throw NumericalError("quasi_abelian_spectrum: coefficient vector (" + r.name +
                                         ")_{" + std::to_string(k) + "," + std::to_string(i) +
                                         "} has eigen-residual " + std::to_string(norm2(av)));
            }
        lines.push_back({r.name, lambda, r.dim * r.dim});
    }
    return lines;
}

std::vector<LabeledBlock> block_diagonalize(const CMat& a, const FourierMatrixB& b) {
    const int n = b.matrix.rows();
    if (a.rows() != n || a.cols() != n)
        throw ValidationError("block_diagonalize: matrix size does not match the Fourier matrix");
    const CMat m = b.matrix.adjoint() * a * b.matrix;

    const auto blocks = b.blocks();
    std::vector<int> owner(n, -1);
    for (size_t bi = 0; bi < blocks.size(); ++bi)
        for (int c = 0; c < blocks[bi].dim; ++c) owner[blocks[bi].start + c] = static_cast<int>(bi);

    double worst = 0;
    int wr = 0, wc = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (owner[r] != owner[c] && std::abs(m(r, c)) > worst) {
                worst = std::abs(m(r, c));
                wr = r;
                wc = c;
            }
    if (worst > 1e-9 * a.norm_fro())
        throw NumericalError("block_diagonalize: off-block leakage " + std::to_string(worst) +
                             " at entry (" + std::to_string(wr) + "," + std::to_string(wc) +
                             "); the matrix does not commute with the right regular representation");

    std::vector<LabeledBlock> out;
    for (const auto& blk : blocks) {
        LabeledBlock lb;
        lb.rep = blk.rep;
        lb.i = blk.i;
        lb.block = CMat(blk.dim, blk.dim);
        for (int r = 0; r < blk.dim; ++r)
            for (int c = 0; c < blk.dim; ++c) lb.block(r, c) = m(blk.start + r, blk.start + c);
        out.push_back(std::move(lb));
    }
    return out;
}

}
