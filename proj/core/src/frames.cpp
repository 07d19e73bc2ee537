#include "cayley/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

bool Frame::fully_labeled() const {
    if (atoms.empty() || labels.size() != atoms.size()) return false;
    return std::all_of(labels.begin(), labels.end(),
                       [](const std::optional<AtomLabel>& l) { return l.has_value(); });
}

Frame frame_from_atoms(std::vector<cvec> atoms) {
    Frame f;
    if (atoms.empty()) throw ValidationError("frame has no atoms");
    f.ambient = static_cast<int>(atoms.front().size());
    for (const cvec& a : atoms)
        if (static_cast<int>(a.size()) != f.ambient)
            throw ValidationError("frame atoms have inconsistent dimensions");
    f.atoms = std::move(atoms);
    f.labels.assign(f.atoms.size(), std::nullopt);
    return f;
}

FrameBounds frame_bounds(const Frame& f) {
    if (f.atoms.empty()) throw ValidationError("frame_bounds: frame has no atoms");
    const int n = f.ambient;
    CMat s(n, n);
    for (const cvec& a : f.atoms)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) s(r, c) += a[r] * std::conj(a[c]);
    const HermitianEigen eig = hermitian_eig(s);
    FrameBounds b;
    b.upper = std::max(0.0, eig.values.front());
    b.lower = std::max(0.0, eig.values.back());
    b.condition = b.lower > 1e-12 * std::max(1.0, b.upper)
                      ? b.upper / b.lower
                      : std::numeric_limits<double>::infinity();
    return b;
}

cvec theta_map(const FiniteGroup& g, const UnitaryIrrep& irrep, int i, std::span<const cplx> x) {
    if (i < 1 || i > irrep.dim)
        throw ValidationError("theta_map: subspace index out of range for irrep '" + irrep.name +
                              "'");
    if (static_cast<int>(x.size()) != irrep.dim)
        throw ValidationError("theta_map: coordinate vector length does not match irrep dim");
    const int n = static_cast<int>(irrep.matrices.size());
    const double scale = std::sqrt(static_cast<double>(irrep.dim) / g.order);
    cvec v(n);
    for (int e = 0; e < n; ++e) {
        cplx s = 0;
        for (int k = 0; k < irrep.dim; ++k) s += irrep.at(e)(i - 1, k) * x[k];
        v[e] = scale * s;
    }
    return v;
}

namespace {

std::vector<std::vector<double>> simplex(int d) {
    if (d == 1) return {{1.0}, {-1.0}};
    const auto prev = simplex(d - 1);
    std::vector<std::vector<double>> out;
    std::vector<double> e1(d, 0.0);
    e1[0] = 1.0;
    out.push_back(std::move(e1));
    const double c = -1.0 / d;
    const double s = std::sqrt(1.0 - 1.0 / (static_cast<double>(d) * d));
    for (const auto& p : prev) {
        std::vector<double> v(d);
        v[0] = c;
        for (int k = 0; k < d - 1; ++k) v[k + 1] = s * p[k];
        out.push_back(std::move(v));
    }
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

std::vector<cvec> small_frame_generator(const GeneratorSpec& kind, int dim) {
    if (dim < 1) throw ValidationError("small_frame_generator: dimension must be >= 1");
    if (std::holds_alternative<GenOrthonormal>(kind)) {
        std::vector<cvec> out(dim, cvec(dim));
        for (int k = 0; k < dim; ++k) out[k][k] = 1.0;
        return out;
    }
    if (std::holds_alternative<GenMercedes>(kind)) {
        std::vector<cvec> out;
        for (const auto& v : simplex(dim)) out.emplace_back(v.begin(), v.end());
        return out;
    }
    if (const auto* h = std::get_if<GenHarmonic>(&kind)) {
        if (h->m < dim)
            throw ValidationError("harmonic generator needs at least dim vectors (m >= " +
                                  std::to_string(dim) + ")");
        std::vector<cvec> out;
        const double root = 1.0 / std::sqrt(static_cast<double>(dim));
        for (int j = 0; j < h->m; ++j) {
            cvec v(dim);
            for (int k = 0; k < dim; ++k) {
                const double ang = 2.0 * std::numbers::pi * j * k / h->m;
                v[k] = root * cplx{std::cos(ang), std::sin(ang)};
            }
            out.push_back(std::move(v));
        }
        return out;
    }
    throw ValidationError("small_frame_generator: explicit generators carry their own vectors");
}

namespace {

struct RepEig {
    CMat pw;
    HermitianEigen eig;
    struct Distinct {
        double lambda = 0;
        int start = 0, mult = 0;
    };
    std::vector<Distinct> distinct;  // descending
};

RepEig rep_eigendata(const UnitaryIrrep& r, const WeightFunction& w) {
    RepEig re;
    re.pw = apply_to_function(r, std::span<const double>(w.values));
    re.eig = hermitian_eig(re.pw);
    for (int p = 0; p < r.dim; ++p) {
        if (re.distinct.empty() || re.distinct.back().lambda - re.eig.values[p] > 1e-6)
            re.distinct.push_back({re.eig.values[p], p, 0});
        ++re.distinct.back().mult;
    }
    return re;
}

std::vector<cvec> generator_vectors(const GeneratorSpec& gen, int mult) {
    if (const auto* ex = std::get_if<GenExplicit>(&gen)) {
        if (ex->vectors.empty()) throw ValidationError("explicit generator has no vectors");
        for (const cvec& v : ex->vectors)
            if (static_cast<int>(v.size()) != mult)
                throw ValidationError(
                    "explicit generator vector length does not match the eigenspace dimension " +
                    std::to_string(mult));
        return ex->vectors;
    }
    return small_frame_generator(gen, mult);
}

// frame operator of the generator vectors in eigenspace coordinates
FrameBounds generator_bounds(const std::vector<cvec>& gen, int mult) {
    CMat s(mult, mult);
    for (const cvec& v : gen)
        for (int r = 0; r < mult; ++r)
            for (int c = 0; c < mult; ++c) s(r, c) += v[r] * std::conj(v[c]);
    const HermitianEigen eig = hermitian_eig(s);
    FrameBounds b;
    b.upper = std::max(0.0, eig.values.front());
    b.lower = std::max(0.0, eig.values.back());
    b.condition = b.lower > 1e-12 * std::max(1.0, b.upper)
                      ? b.upper / b.lower
                      : std::numeric_limits<double>::infinity();
    return b;
}

}  // namespace

CayleyFrameResult build_cayley_frame(const FiniteGroup& g, const IrrepSet& set,
                                     const WeightFunction& w,
                                     const std::vector<SubspaceFrameSpec>& specs) {
    if (set.total_dim_sq() != g.order)
        throw ValidationError("build_cayley_frame: irrep set is not complete for this group");
    require_symmetric(g, w);

    std::vector<RepEig> eigdata;
    eigdata.reserve(set.irreps.size());
    for (const auto& r : set.irreps) eigdata.push_back(rep_eigendata(r, w));

    // resolve specs onto (rep, i, distinct-eigenvalue) slots
    // slot key: (rep index, i, distinct index) -> spec index
    std::map<std::tuple<int, int, int>, int> cover;
    for (size_t s = 0; s < specs.size(); ++s) {
        const auto& sp = specs[s];
        const int ri = set.index_of(sp.rep);
        const auto& r = set.irreps[ri];
        if (sp.i < 1 || sp.i > r.dim)
            throw ValidationError("frame spec for rep '" + sp.rep + "' has i=" +
                                  std::to_string(sp.i) + " outside 1.." + std::to_string(r.dim));
        const auto& dist = eigdata[ri].distinct;
        int best = -1;
        double bestdiff = std::numeric_limits<double>::infinity();
        for (size_t d = 0; d < dist.size(); ++d) {
            const double diff = std::abs(dist[d].lambda - sp.lambda);
            if (diff < bestdiff) {
                bestdiff = diff;
                best = static_cast<int>(d);
            }
        }
        if (best < 0 || bestdiff > 1e-6) {
            std::string avail;
            for (const auto& d : dist) avail += (avail.empty() ? "" : ", ") + fmt(d.lambda);
            throw ValidationError("frame spec lambda=" + fmt(sp.lambda) + " for rep '" + sp.rep +
                                  "' matches no eigenvalue of pi(w); available: " + avail);
        }
        const auto key = std::make_tuple(ri, sp.i, best);
        if (cover.count(key))
            throw ValidationError("duplicate frame spec for (" + sp.rep + ", i=" +
                                  std::to_string(sp.i) + ", lambda=" +
                                  fmt(eigdata[ri].distinct[best].lambda) + ")");
        cover[key] = static_cast<int>(s);
    }
    for (size_t ri = 0; ri < set.irreps.size(); ++ri)
        for (int i = 1; i <= set.irreps[ri].dim; ++i)
            for (size_t d = 0; d < eigdata[ri].distinct.size(); ++d)
                if (!cover.count(std::make_tuple(static_cast<int>(ri), i, static_cast<int>(d))))
                    throw ValidationError("frame specs do not cover (" + set.irreps[ri].name +
                                          ", i=" + std::to_string(i) + ", lambda=" +
                                          fmt(eigdata[ri].distinct[d].lambda) + ")");

    CayleyFrameResult out;
    out.frame.ambient = g.order;
    double lo = std::numeric_limits<double>::infinity(), hi = 0;

    for (size_t ri = 0; ri < set.irreps.size(); ++ri) {
        const auto& r = set.irreps[ri];
        for (size_t d = 0; d < eigdata[ri].distinct.size(); ++d) {
            const auto& dist = eigdata[ri].distinct[d];
            // generator vectors per i (they may differ across i)
            std::vector<std::vector<cvec>> gens(r.dim);
            size_t max_atoms = 0;
            for (int i = 1; i <= r.dim; ++i) {
                const int si = cover.at(std::make_tuple(static_cast<int>(ri), i, static_cast<int>(d)));
                gens[i - 1] = generator_vectors(specs[si].generator, dist.mult);
                const FrameBounds gb = generator_bounds(gens[i - 1], dist.mult);
                if (gb.lower <= 1e-10)
                    throw ValidationError("generator for (" + r.name + ", i=" + std::to_string(i) +
                                          ", lambda=" + fmt(dist.lambda) +
                                          ") does not span its eigenspace");
                lo = std::min(lo, gb.lower);
                hi = std::max(hi, gb.upper);
                max_atoms = std::max(max_atoms, gens[i - 1].size());
            }
            for (size_t a = 0; a < max_atoms; ++a)
                for (int i = 1; i <= r.dim; ++i) {
                    if (a >= gens[i - 1].size()) continue;
                    // ambient-coordinates vector of the generator atom
                    cvec y(r.dim, cplx{});
                    for (int l = 0; l < dist.mult; ++l)
                        axpy(y, gens[i - 1][a][l], eigdata[ri].eig.vectors.col(dist.start + l));
                    out.frame.atoms.push_back(theta_map(g, r, i, y));
                    out.frame.labels.push_back(AtomLabel{r.name, i, dist.lambda});
                }
        }
    }

    out.bounds.lower = lo;
    out.bounds.upper = hi;
    out.bounds.condition = lo > 1e-12 * std::max(1.0, hi)
                               ? hi / lo
                               : std::numeric_limits<double>::infinity();
    out.tight = (hi - lo) <= 1e-8;

    const FrameBounds direct = frame_bounds(out.frame);
    if (std::abs(direct.lower - lo) > 1e-8 || std::abs(direct.upper - hi) > 1e-8)
        throw NumericalError("build_cayley_frame: propagated bounds (" + fmt(lo) + ", " + fmt(hi) +
                             ") disagree with the frame operator spectrum (" + fmt(direct.lower) +
                             ", " + fmt(direct.upper) + ")");
    return out;
}

MembershipReport is_cayley_frame(const Frame& f, const FiniteGroup& g, const IrrepSet& set,
                                 const WeightFunction& w, double tol) {
    if (f.ambient != g.order)
        throw ValidationError("is_cayley_frame: frame ambient dimension does not match group");
    require_symmetric(g, w);
    const FourierMatrixB b = fourier_matrix(g, set);
    const auto blocks = b.blocks();
    std::vector<RepEig> eigdata;
    for (const auto& r : set.irreps) eigdata.push_back(rep_eigendata(r, w));

    MembershipReport rep;
    rep.all_frobenius_schur = true;
    rep.all_cayley = true;
    const CMat badj = b.matrix.adjoint();

    for (const cvec& atom : f.atoms) {
        AtomMembership m;
        const double na = norm2(atom);
        if (na <= 1e-14) {
            rep.atoms.push_back(m);
            rep.all_frobenius_schur = rep.all_cayley = false;
            continue;
        }
        const cvec psi = scaled(atom, 1.0 / na);
        const cvec c = badj.apply(psi);

        int dom = -1;
        double dom_norm = -1, second = 0;
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            double s = 0;
            for (int k = 0; k < blocks[bi].dim; ++k) s += std::norm(c[blocks[bi].start + k]);
            s = std::sqrt(s);
            if (s > dom_norm) {
                second = std::max(second, dom_norm);
                dom_norm = s;
                dom = static_cast<int>(bi);
            } else {
                second = std::max(second, s);
            }
        }
        m.rep = blocks[dom].rep;
        m.i = blocks[dom].i;
        m.off_block = std::max(second, 0.0);
        m.frobenius_schur = m.off_block <= tol;

        const int ri = set.index_of(blocks[dom].rep);
        cvec y(c.begin() + blocks[dom].start, c.begin() + blocks[dom].start + blocks[dom].dim);
        const double ny = norm2(y);
        m.residual = std::numeric_limits<double>::infinity();
        if (ny > 1e-14) {
            for (const auto& dist : eigdata[ri].distinct) {
                cvec wy = eigdata[ri].pw.apply(y);
                axpy(wy, -cplx{dist.lambda}, y);
                const double res = norm2(wy) / ny;
                if (res < m.residual) {
                    m.residual = res;
                    m.lambda = dist.lambda;
                }
            }
        }
        m.cayley = m.frobenius_schur && m.residual <= tol;
        rep.all_frobenius_schur = rep.all_frobenius_schur && m.frobenius_schur;
        rep.all_cayley = rep.all_cayley && m.cayley;
        rep.atoms.push_back(std::move(m));
    }

    rep.bounds = frame_bounds(f);
    rep.spans = rep.bounds.lower > 1e-10 * std::max(1.0, rep.bounds.upper);
    return rep;
}

SparsityBasis SparsityBasis::from(const PreferredEigenbasis& b) {
    SparsityBasis s;
    s.vectors = b.vectors;
    for (const auto& l : b.labels) {
        s.rep.push_back(l.rep);
        s.i.push_back(l.i);
    }
    return s;
}

SparsityBasis SparsityBasis::from(const FourierMatrixB& b) {
    SparsityBasis s;
    s.vectors = b.matrix;
    for (const auto& l : b.labels) {
        s.rep.push_back(l.rep);
        s.i.push_back(l.i);
    }
    return s;
}

namespace {

// delta over all supports of the given size drawn from `pool`, using the
// precomputed cross-Gram rows C(t, a) = <b_t, psi_a>.
double rip_over_pool(const CMat& cross, const std::vector<int>& pool, int k,
                     unsigned long long& supports) {
    const int p = static_cast<int>(pool.size());
    std::vector<int> idx(k);
    for (int j = 0; j < k; ++j) idx[j] = j;
    double delta = 0;
    while (true) {
        CMat gram(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                cplx s = 0;
                for (int a = 0; a < cross.cols(); ++a)
                    s += cross(pool[idx[r]], a) * std::conj(cross(pool[idx[c]], a));
                gram(r, c) = s;
            }
        const HermitianEigen eig = hermitian_eig(gram);
        delta = std::max({delta, eig.values.front() - 1.0, 1.0 - eig.values.back()});
        ++supports;

        int j = k - 1;
        while (j >= 0 && idx[j] == p - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
    return delta;
}

}  // namespace

RipResult rip_constant(const Frame& f, const SparsityBasis& basis, int k) {
    const int nb = basis.vectors.cols();
    const int na = static_cast<int>(f.atoms.size());
    if (k < 1) throw ValidationError("rip_constant: order k must be >= 1");
    if (k > 12)
        throw ValidationError("rip_constant: k > 12 refused (support enumeration cost guard)");
    if (k > nb) throw ValidationError("rip_constant: k exceeds the sparsity basis size");
    if (f.ambient != basis.vectors.rows())
        throw ValidationError("rip_constant: frame and basis dimensions do not match");
    for (int a = 0; a < na; ++a)
        if (std::abs(norm2(f.atoms[a]) - 1.0) > 1e-8)
            throw ValidationError("rip_constant: atom " + std::to_string(a) +
                                  " is not unit norm");
    const double orth = (basis.vectors.adjoint() * basis.vectors -
                         CMat::identity(nb)).max_abs();
    if (orth > 1e-8)
        throw ValidationError("rip_constant: sparsity basis is not orthonormal");

    CMat cross(nb, na);
    for (int t = 0; t < nb; ++t) {
        const cvec bt = basis.vectors.col(t);
        for (int a = 0; a < na; ++a) cross(t, a) = inner(bt, f.atoms[a]);
    }

    RipResult out;
    std::vector<int> all(nb);
    for (int t = 0; t < nb; ++t) all[t] = t;
    out.delta = rip_over_pool(cross, all, k, out.supports);

    if (f.fully_labeled() && !basis.rep.empty()) {
        std::map<std::pair<std::string, int>, std::vector<int>> by_block;
        for (int t = 0; t < nb; ++t) by_block[{basis.rep[t], basis.i[t]}].push_back(t);
        double bound = 0;
        unsigned long long scratch = 0;  // per-block supports are not reported
        for (const auto& [key, pool] : by_block) {
            const int kk = std::min<int>(k, static_cast<int>(pool.size()));
            bound = std::max(bound, rip_over_pool(cross, pool, kk, scratch));
        }
        out.blockwise_bound = bound;
        if (out.delta > bound + 1e-9)
            throw NumericalError("rip_constant: delta " + fmt(out.delta) +
                                 " exceeds the block-wise bound " + fmt(bound));
    }
    return out;
}

}
