#include "cayley/irreps.hpp"

#include <cmath>
#include <numbers>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

// --- S3 -------------------------------------------------------------------
// Standard representation on id,(12),(23),(13),(123),(132); the non-generator
// matrices follow from multiplicativity: (13)=(12)(23)(12), (123)=(12)(23),
// (132)=(23)(12).
CMat s3_pi(int g) {
    const double h = 0.5, s = std::sqrt(3.0) / 2.0;
    static const double tab[6][4] = {
        {1, 0, 0, 1},      // id
        {-h, s, s, h},     // (12)
        {1, 0, 0, -1},     // (23)
        {-h, -s, -s, h},   // (13)
        {-h, -s, s, -h},   // (123)
        {-h, s, -s, -h},   // (132)
    };
    CMat m(2, 2);
    for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = tab[g][k];
    return m;
}

// --- S4 -------------------------------------------------------------------
// Element order: id,(12),(23),(34),(13),(14),(24),(12)(34),(13)(24),(14)(23),
// (123),(132),(124),(142),(134),(143),(234),(243),(1234),(1432),(1423),
// (1342),(1324),(1243).

constexpr int kS4Sign[24] = {1,  -1, -1, -1, -1, -1, -1, 1,  1,  1,  1,  1,
                             1,  1,  1,  1,  1,  1,  -1, -1, -1, -1, -1, -1};

// sigma entries encoded as powers of the third root of unity; -1 marks a zero
constexpr int kS4Sigma[24][4] = {
    {0, -1, -1, 0},   // id
    {-1, 0, 0, -1},   // (12)
    {-1, 2, 1, -1},   // (23)
    {-1, 0, 0, -1},   // (34)
    {-1, 1, 2, -1},   // (13)
    {-1, 2, 1, -1},   // (14)
    {-1, 1, 2, -1},   // (24)
    {0, -1, -1, 0},   // (12)(34)
    {0, -1, -1, 0},   // (13)(24)
    {0, -1, -1, 0},   // (14)(23)
    {1, -1, -1, 2},   // (123)
    {2, -1, -1, 1},   // (132)
    {2, -1, -1, 1},   // (124)
    {1, -1, -1, 2},   // (142)
    {1, -1, -1, 2},   // (134)
    {2, -1, -1, 1},   // (143)
    {2, -1, -1, 1},   // (234)
    {1, -1, -1, 2},   // (243)
    {-1, 1, 2, -1},   // (1234)
    {-1, 1, 2, -1},   // (1432)
    {-1, 0, 0, -1},   // (1423)
    {-1, 2, 1, -1},   // (1342)
    {-1, 0, 0, -1},   // (1324)
    {-1, 2, 1, -1},   // (1243)
};

constexpr int kS4Pi[24][9] = {
    {1, 0, 0, 0, 1, 0, 0, 0, 1},      // id
    {-1, 0, 0, 0, 0, 1, 0, 1, 0},     // (12)
    {0, 0, -1, 0, -1, 0, -1, 0, 0},   // (23)
    {-1, 0, 0, 0, 0, -1, 0, -1, 0},   // (34)
    {0, 1, 0, 1, 0, 0, 0, 0, -1},     // (13)
    {0, 0, 1, 0, -1, 0, 1, 0, 0},     // (14)
    {0, -1, 0, -1, 0, 0, 0, 0, -1},   // (24)
    {1, 0, 0, 0, -1, 0, 0, 0, -1},    // (12)(34)
    {-1, 0, 0, 0, -1, 0, 0, 0, 1},    // (13)(24)
    {-1, 0, 0, 0, 1, 0, 0, 0, -1},    // (14)(23)
    {0, 0, 1, -1, 0, 0, 0, -1, 0},    // (123)
    {0, -1, 0, 0, 0, -1, 1, 0, 0},    // (132)
    {0, 1, 0, 0, 0, -1, -1, 0, 0},    // (124)
    {0, 0, -1, 1, 0, 0, 0, -1, 0},    // (142)
    {0, 0, -1, -1, 0, 0, 0, 1, 0},    // (134)
    {0, -1, 0, 0, 0, 1, -1, 0, 0},    // (143)
    {0, 1, 0, 0, 0, 1, 1, 0, 0},      // (234)
    {0, 0, 1, 1, 0, 0, 0, 1, 0},      // (243)
    {0, -1, 0, 1, 0, 0, 0, 0, 1},     // (1234)
    {0, 1, 0, -1, 0, 0, 0, 0, 1},     // (1432)
    {1, 0, 0, 0, 0, -1, 0, 1, 0},     // (1423)
    {0, 0, 1, 0, 1, 0, -1, 0, 0},     // (1342)
    {1, 0, 0, 0, 0, 1, 0, -1, 0},     // (1324)
    {0, 0, -1, 0, 1, 0, 1, 0, 0},     // (1243)
};

constexpr int kS4PiPrime[24][9] = {
    {1, 0, 0, 0, 1, 0, 0, 0, 1},      // id
    {1, 0, 0, 0, 0, -1, 0, -1, 0},    // (12)
    {0, 0, 1, 0, 1, 0, 1, 0, 0},      // (23)
    {1, 0, 0, 0, 0, 1, 0, 1, 0},      // (34)
    {0, -1, 0, -1, 0, 0, 0, 0, 1},    // (13)
    {0, 0, -1, 0, 1, 0, -1, 0, 0},    // (14)
    {0, 1, 0, 1, 0, 0, 0, 0, 1},      // (24)
    {1, 0, 0, 0, -1, 0, 0, 0, -1},    // (12)(34)
    {-1, 0, 0, 0, -1, 0, 0, 0, 1},    // (13)(24)
    {-1, 0, 0, 0, 1, 0, 0, 0, -1},    // (14)(23)
    {0, 0, 1, -1, 0, 0, 0, -1, 0},    // (123)
    {0, -1, 0, 0, 0, -1, 1, 0, 0},    // (132)
    {0, 1, 0, 0, 0, -1, -1, 0, 0},    // (124)
    {0, 0, -1, 1, 0, 0, 0, -1, 0},    // (142)
    {0, 0, -1, -1, 0, 0, 0, 1, 0},    // (134)
    {0, -1, 0, 0, 0, 1, -1, 0, 0},    // (143)
    {0, 1, 0, 0, 0, 1, 1, 0, 0},      // (234)
    {0, 0, 1, 1, 0, 0, 0, 1, 0},      // (243)
    {0, 1, 0, -1, 0, 0, 0, 0, -1},    // (1234)
    {0, -1, 0, 1, 0, 0, 0, 0, -1},    // (1432)
    {-1, 0, 0, 0, 0, 1, 0, -1, 0},    // (1423)
    {0, 0, -1, 0, -1, 0, 1, 0, 0},    // (1342)
    {-1, 0, 0, 0, 0, -1, 0, 1, 0},    // (1324)
    {0, 0, 1, 0, -1, 0, -1, 0, 0},    // (1243)
};

UnitaryIrrep one_dim(std::string name, std::vector<cplx> values) {
    UnitaryIrrep r;
    r.name = std::move(name);
    r.dim = 1;
    r.matrices.reserve(values.size());
    for (cplx v : values) {
        CMat m(1, 1);
        m(0, 0) = v;
        r.matrices.push_back(std::move(m));
    }
    return r;
}

UnitaryIrrep from_int_table(std::string name, int dim, const int* tab, int n) {
    UnitaryIrrep r;
    r.name = std::move(name);
    r.dim = dim;
    r.matrices.reserve(n);
    for (int g = 0; g < n; ++g) {
        CMat m(dim, dim);
        for (int k = 0; k < dim * dim; ++k) m(k / dim, k % dim) = tab[g * dim * dim + k];
        r.matrices.push_back(std::move(m));
    }
    return r;
}

const std::vector<std::string>& s3_names() {
    static const std::vector<std::string> v = {"id", "(12)", "(23)", "(13)", "(123)", "(132)"};
    return v;
}

const std::vector<std::string>& s4_names() {
    static const std::vector<std::string> v = {
        "id",     "(12)",   "(23)",   "(34)",   "(13)",     "(14)",
        "(24)",   "(12)(34)", "(13)(24)", "(14)(23)", "(123)", "(132)",
        "(124)",  "(142)",  "(134)",  "(143)",  "(234)",  "(243)",
        "(1234)", "(1432)", "(1423)", "(1342)", "(1324)", "(1243)"};
    return v;
}

bool is_modular_addition(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.product(a, b) != (a + b) % g.order) return false;
    return true;
}

}  // namespace

const UnitaryIrrep& IrrepSet::by_name(const std::string& name) const {
    for (const auto& r : irreps)
        if (r.name == name) return r;
    throw ValidationError("no irrep named '" + name + "' in the set");
}

int IrrepSet::index_of(const std::string& name) const {
    for (size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].name == name) return static_cast<int>(i);
    throw ValidationError("no irrep named '" + name + "' in the set");
}

int IrrepSet::total_dim_sq() const {
    int s = 0;
    for (const auto& r : irreps) s += r.dim * r.dim;
    return s;
}

IrrepSet builtin_irreps(const FiniteGroup& g, BuiltinIrreps kind) {
    IrrepSet set;
    switch (kind) {
        case BuiltinIrreps::Cyclic: {
            if (!is_modular_addition(g))
                throw ValidationError("builtin cyclic irreps need a group built by build_cyclic");
            const int n = g.order;
            for (int j = 0; j < n; ++j) {
                std::vector<cplx> vals(n);
                for (int k = 0; k < n; ++k) {
                    const double ang = 2.0 * std::numbers::pi * j * k / n;
                    vals[k] = {std::cos(ang), std::sin(ang)};
                }
                set.irreps.push_back(one_dim("chi" + std::to_string(j), std::move(vals)));
            }
            return set;
        }
        case BuiltinIrreps::Symmetric3: {
            if (g.order != 6 || g.names != s3_names())
                throw ValidationError("builtin S3 irreps need the group from build_symmetric(3)");
            set.irreps.push_back(one_dim("iota", {1, 1, 1, 1, 1, 1}));
            set.irreps.push_back(one_dim("tau", {1, -1, -1, -1, 1, 1}));
            UnitaryIrrep pi;
            pi.name = "pi";
            pi.dim = 2;
            for (int e = 0; e < 6; ++e) pi.matrices.push_back(s3_pi(e));
            set.irreps.push_back(std::move(pi));
            return set;
        }
        case BuiltinIrreps::Symmetric4: {
            if (g.order != 24 || g.names != s4_names())
                throw ValidationError("builtin S4 irreps need the group from build_symmetric(4)");
            std::vector<cplx> iota(24, 1.0), tau(24);
            for (int e = 0; e < 24; ++e) tau[e] = kS4Sign[e];
            set.irreps.push_back(one_dim("iota", std::move(iota)));
            set.irreps.push_back(one_dim("tau", std::move(tau)));

            const cplx omega{-0.5, std::sqrt(3.0) / 2.0};  // third root of unity
            const cplx omega_pow[3] = {1.0, omega, std::conj(omega)};
            UnitaryIrrep sigma;
            sigma.name = "sigma";
            sigma.dim = 2;
            for (int e = 0; e < 24; ++e) {
                CMat m(2, 2);
                for (int k = 0; k < 4; ++k) {
                    const int code = kS4Sigma[e][k];
                    m(k / 2, k % 2) = code < 0 ? cplx{} : omega_pow[code];
                }
                sigma.matrices.push_back(std::move(m));
            }
            set.irreps.push_back(std::move(sigma));
            set.irreps.push_back(from_int_table("pi", 3, &kS4Pi[0][0], 24));
            set.irreps.push_back(from_int_table("pi_prime", 3, &kS4PiPrime[0][0], 24));
            return set;
        }
    }
    throw ValidationError("unknown builtin irrep kind");
}

IrrepSet builtin_irreps_for(const FiniteGroup& g) {
    if (g.order == 6 && g.names == s3_names()) return builtin_irreps(g, BuiltinIrreps::Symmetric3);
    if (g.order == 24 && g.names == s4_names()) return builtin_irreps(g, BuiltinIrreps::Symmetric4);
    if (is_modular_addition(g)) return builtin_irreps(g, BuiltinIrreps::Cyclic);
    throw ValidationError("no builtin irreps for this group; provide an irrep file");
}

ValidationReport validate_irrep_set(const FiniteGroup& g, const IrrepSet& set) {
    const int n = g.order;
    for (const auto& r : set.irreps) {
        if (static_cast<int>(r.matrices.size()) != n)
            throw ValidationError("irrep '" + r.name + "' has " +
                                  std::to_string(r.matrices.size()) + " matrices, expected " +
                                  std::to_string(n));
        for (const auto& m : r.matrices)
            if (m.rows() != r.dim || m.cols() != r.dim)
                throw ValidationError("irrep '" + r.name + "' contains a matrix of wrong shape");
    }

    ValidationReport rep;
    auto add = [&rep](std::string name, bool pass, double dev, std::string detail) {
        rep.checks.push_back({std::move(name), pass, dev, std::move(detail)});
    };

    {
        double worst = 0;
        std::string detail;
        for (const auto& r : set.irreps)
            for (int e = 0; e < n; ++e) {
                const double d = (r.at(e).adjoint() * r.at(e) - CMat::identity(r.dim)).max_abs();
                if (d > worst) {
                    worst = d;
                    detail = r.name + "(" + g.name(e) + ") is not unitary";
                }
            }
        add("unitarity", worst <= 1e-10, worst, worst <= 1e-10 ? "" : detail);
    }
    {
        double worst = 0;
        std::string detail;
        for (const auto& r : set.irreps)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const double d = (r.at(a) * r.at(b) - r.at(g.product(a, b))).max_abs();
                    if (d > worst) {
                        worst = d;
                        detail = r.name + ": pi(" + g.name(a) + ")pi(" + g.name(b) +
                                 ") != pi(" + g.name(g.product(a, b)) + ")";
                    }
                }
        add("homomorphism", worst <= 1e-10, worst, worst <= 1e-10 ? "" : detail);
    }
    {
        double worst = 0;
        std::string detail;
        for (const auto& r : set.irreps) {
            const double d = (r.at(g.identity) - CMat::identity(r.dim)).max_abs();
            if (d > worst) {
                worst = d;
                detail = r.name + "(id) != I";
            }
        }
        add("identity", worst <= 1e-10, worst, worst <= 1e-10 ? "" : detail);
    }
    {
        double worst = 0;
        std::string detail;
        for (const auto& r : set.irreps) {
            const cvec chi = character(r);
            const double d = std::abs(inner(chi, chi) / static_cast<double>(n) - cplx{1.0});
            if (d > worst) {
                worst = d;
                detail = "'" + r.name + "' is not irreducible (character norm off by " +
                         std::to_string(d) + ")";
            }
        }
        add("irreducibility", worst <= 1e-8, worst, worst <= 1e-8 ? "" : detail);
    }
    {
        double worst = 0;
        std::string detail;
        for (size_t a = 0; a < set.irreps.size(); ++a)
            for (size_t b = a + 1; b < set.irreps.size(); ++b) {
                const cvec ca = character(set.irreps[a]), cb = character(set.irreps[b]);
                const double d = std::abs(inner(ca, cb)) / n;
                if (d > worst) {
                    worst = d;
                    detail = "'" + set.irreps[a].name + "' and '" + set.irreps[b].name +
                             "' are equivalent";
                }
            }
        add("inequivalence", worst <= 1e-8, worst, worst <= 1e-8 ? "" : detail);
    }
    {
        const int total = set.total_dim_sq();
        const bool pass = total == n;
        add("completeness", pass, std::abs(total - n),
            pass ? ""
                 : "sum of dim^2 is " + std::to_string(total) + ", group order is " +
                       std::to_string(n));
    }
    return rep;
}

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

CMat apply_to_function(const UnitaryIrrep& irrep, std::span<const cplx> f) {
    if (static_cast<int>(f.size()) != static_cast<int>(irrep.matrices.size()))
        throw ValidationError("apply_to_function: function length does not match group order");
    CMat acc(irrep.dim, irrep.dim);
    for (size_t x = 0; x < f.size(); ++x) {
        if (f[x] == cplx{}) continue;
        CMat term = irrep.matrices[x];
        term *= f[x];
        acc += term;
    }
    return acc;
}

CMat apply_to_function(const UnitaryIrrep& irrep, std::span<const double> f) {
    cvec fc(f.begin(), f.end());
    return apply_to_function(irrep, fc);
}

cvec character(const UnitaryIrrep& irrep) {
    cvec chi(irrep.matrices.size());
    for (size_t g = 0; g < irrep.matrices.size(); ++g) {
        cplx t = 0;
        for (int i = 0; i < irrep.dim; ++i) t += irrep.matrices[g](i, i);
        chi[g] = t;
    }
    return chi;
}

}
