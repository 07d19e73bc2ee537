#pragma once

#include <span>
#include <string>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/linalg.hpp"

namespace cayley {

// A unitary irreducible representation, stored as one matrix per group
// element in the group's element order.
struct UnitaryIrrep {
    std::string name;
    int dim = 0;
    std::vector<CMat> matrices;

    const CMat& at(int g) const { return matrices[g]; }
};

// A complete system of inequivalent unitary irreps (sum of dim^2 = |G|),
// in a frozen order that downstream block layouts inherit.
struct IrrepSet {
    std::vector<UnitaryIrrep> irreps;

    const UnitaryIrrep& by_name(const std::string& name) const;  // ValidationError if missing
    int index_of(const std::string& name) const;
    int total_dim_sq() const;
};

enum class BuiltinIrreps {
    Cyclic,      // characters chi_j(k) = exp(2 pi i jk/n), names "chi0".."chi{n-1}"
    Symmetric3,  // iota, tau, pi       (dims 1,1,2)
    Symmetric4,  // iota, tau, sigma, pi, pi_prime  (dims 1,1,2,3,3)
};

// The built-in tables.  The group must have been produced by the matching
// builder (checked via order and element names).
IrrepSet builtin_irreps(const FiniteGroup& g, BuiltinIrreps kind);

// Convenience: pick the builtin matching the group, if any.
IrrepSet builtin_irreps_for(const FiniteGroup& g);

struct IrrepCheck {
    std::string name;       // which check
    bool pass = false;
    double deviation = 0;   // worst deviation seen
    std::string detail;     // witness description, empty when pass
};

struct ValidationReport {
    std::vector<IrrepCheck> checks;
    bool all_pass() const;
};

// Validates: unitarity (1e-10), homomorphism over all pairs (1e-10),
// identity image (1e-10), irreducibility via character norm (1e-8),
// pairwise inequivalence via character orthogonality (1e-8), and the
// completeness count sum dim^2 == |G| (exact).
ValidationReport validate_irrep_set(const FiniteGroup& g, const IrrepSet& set);

// pi(f) = sum_x f(x) pi(x)
CMat apply_to_function(const UnitaryIrrep& irrep, std::span<const double> f);
CMat apply_to_function(const UnitaryIrrep& irrep, std::span<const cplx> f);

// Character chi(g) = tr pi(g), one value per element.
cvec character(const UnitaryIrrep& irrep);

}
