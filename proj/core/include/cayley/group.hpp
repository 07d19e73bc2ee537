#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

// A finite group as a validated multiplication table.  Element order is part
// of the contract: functions on the group are vectors indexed by it, so every
// builder freezes a canonical ordering.
struct FiniteGroup {
    int order = 0;
    int identity = 0;
    std::vector<int> mul;                    // order x order, row-major: mul[a*order+b] = a*b
    std::vector<int> inverse;                // inverse[g] = g^-1
    std::vector<std::string> names;          // canonical element names
    std::vector<std::vector<int>> classes;   // conjugacy classes, members ascending,
                                             // classes ordered by smallest member
    std::vector<int> class_index;            // element -> index into classes

    int product(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
    int inv(int g) const { return inverse[g]; }
    const std::string& name(int g) const { return names[g]; }
    int index_of(const std::string& name) const;  // ValidationError on unknown name
};

// Z_n with elements named "0".."n-1"; product = addition mod n.
FiniteGroup build_cyclic(int n);

// S_3 / S_4 with the canonical orderings
//   S_3: id,(12),(23),(13),(123),(132)
//   S_4: id,(12),(23),(34),(13),(14),(24),(12)(34),(13)(24),(14)(23),
//        (123),(132),(124),(142),(134),(143),(234),(243),
//        (1234),(1432),(1423),(1342),(1324),(1243)
// and product = function composition: (gh)(x) = g(h(x)), so (12)(23) = (123).
FiniteGroup build_symmetric(int n);  // n in {3, 4}

// Arbitrary group from a raw table.  Checks closure, associativity, identity
// and inverses, naming the witness entry/triple on failure.  Names default to
// "g0".."g{n-1}".
FiniteGroup build_from_table(const std::vector<std::vector<int>>& table,
                             std::vector<std::string> names = {});

// Edge weights, indexed by group element.
struct WeightFunction {
    std::vector<double> values;
    double operator()(int g) const { return values[g]; }
};

// Indicator weight of a generating set given by element names (duplicates rejected).
WeightFunction weight_from_generating_set(const FiniteGroup& g,
                                          const std::vector<std::string>& elements);

// Explicit weights by element name; unlisted elements get weight 0.
WeightFunction weight_from_map(const FiniteGroup& g,
                               const std::vector<std::pair<std::string, double>>& entries);

// First element with w(x) != w(x^-1), if any.
std::optional<int> symmetry_violation(const FiniteGroup& g, const WeightFunction& w);

// First element whose weight differs from its class representative's, if any.
std::optional<int> class_function_violation(const FiniteGroup& g, const WeightFunction& w);

// Throws ValidationError naming the violating element.
void require_symmetric(const FiniteGroup& g, const WeightFunction& w);

}
