#include "cayley/group.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

void finish(FiniteGroup& g) {
    const int n = g.order;
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.product(a, b) == g.identity && g.product(b, a) == g.identity) {
                g.inverse[a] = b;
                break;
            }
        }
        if (g.inverse[a] < 0)
            throw ValidationError("group table: element '" + g.names[a] + "' has no inverse");
    }

    g.classes.clear();
    g.class_index.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (g.class_index[a] >= 0) continue;
        std::set<int> cls;
        for (int h = 0; h < n; ++h) cls.insert(g.product(g.product(h, a), g.inverse[h]));
        std::vector<int> members(cls.begin(), cls.end());
        for (int m : members) g.class_index[m] = static_cast<int>(g.classes.size());
        g.classes.push_back(std::move(members));
    }
}

// "(abc)(de)" -> permutation on {1..n}, stored 0-based.  Only single-digit
// points appear here (n <= 4 in the builtin groups).
std::vector<int> perm_from_cycles(const std::string& s, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    if (s == "id") return p;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(') throw ValidationError("bad cycle notation: " + s);
        size_t close = s.find(')', pos);
        if (close == std::string::npos) throw ValidationError("bad cycle notation: " + s);
        std::vector<int> cyc;
        for (size_t i = pos + 1; i < close; ++i) {
            if (s[i] < '1' || s[i] > '0' + n) throw ValidationError("bad cycle notation: " + s);
            cyc.push_back(s[i] - '1');
        }
        for (size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
        pos = close + 1;
    }
    return p;
}

FiniteGroup from_permutations(const std::vector<std::string>& names, int n) {
    const int N = static_cast<int>(names.size());
    std::vector<std::vector<int>> perms(N);
    for (int i = 0; i < N; ++i) perms[i] = perm_from_cycles(names[i], n);

    auto index_of_perm = [&](const std::vector<int>& p) {
        for (int i = 0; i < N; ++i)
            if (perms[i] == p) return i;
        throw ValidationError("permutation composition left the element list");
    };

    FiniteGroup g;
    g.order = N;
    g.identity = 0;
    g.names = names;
    g.mul.resize(static_cast<size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            // (ab)(x) = a(b(x)): apply b first
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
            g.mul[static_cast<size_t>(a) * N + b] = index_of_perm(comp);
        }
    finish(g);
    return g;
}

}  // namespace

int FiniteGroup::index_of(const std::string& nm) const {
    for (int i = 0; i < order; ++i)
        if (names[i] == nm) return i;
    throw ValidationError("unknown group element name '" + nm + "'");
}

FiniteGroup build_cyclic(int n) {
    if (n < 1) throw ValidationError("cyclic group order must be >= 1");
    FiniteGroup g;
    g.order = n;
    g.identity = 0;
    g.names.resize(n);
    for (int i = 0; i < n; ++i) g.names[i] = std::to_string(i);
    g.mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
    finish(g);
    return g;
}

FiniteGroup build_symmetric(int n) {
    if (n == 3) {
        return from_permutations({"id", "(12)", "(23)", "(13)", "(123)", "(132)"}, 3);
    }
    if (n == 4) {
        return from_permutations(
            {"id",     "(12)",   "(23)",   "(34)",   "(13)",   "(14)",
             "(24)",   "(12)(34)", "(13)(24)", "(14)(23)", "(123)", "(132)",
             "(124)",  "(142)",  "(134)",  "(143)",  "(234)",  "(243)",
             "(1234)", "(1432)", "(1423)", "(1342)", "(1324)", "(1243)"},
            4);
    }
    throw ValidationError("build_symmetric supports n = 3 or 4 only");
}

FiniteGroup build_from_table(const std::vector<std::vector<int>>& table,
                             std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n < 1) throw ValidationError("group table is empty");
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(table[r].size()) != n)
            throw ValidationError("group table row " + std::to_string(r) + " has wrong length");
        for (int c = 0; c < n; ++c)
            if (table[r][c] < 0 || table[r][c] >= n)
                throw ValidationError("group table entry (" + std::to_string(r) + "," +
                                      std::to_string(c) + ") = " + std::to_string(table[r][c]) +
                                      " is out of range");
    }
    if (names.empty()) {
        names.resize(n);
        for (int i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
    }
    if (static_cast<int>(names.size()) != n)
        throw ValidationError("group names list does not match table size");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (names[i] == names[j])
                throw ValidationError("duplicate group element name '" + names[i] + "'");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw ValidationError("group table is not associative at (" + names[a] + "," +
                                          names[b] + "," + names[c] + ")");

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw ValidationError("group table has no identity element");

    FiniteGroup g;
    g.order = n;
    g.identity = identity;
    g.names = std::move(names);
    g.mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = table[a][b];
    finish(g);
    return g;
}

WeightFunction weight_from_generating_set(const FiniteGroup& g,
                                          const std::vector<std::string>& elements) {
    WeightFunction w;
    w.values.assign(g.order, 0.0);
    for (const std::string& nm : elements) {
        const int idx = g.index_of(nm);
        if (w.values[idx] != 0.0)
            throw ValidationError("generating set lists element '" + nm + "' twice");
        w.values[idx] = 1.0;
    }
    return w;
}

WeightFunction weight_from_map(const FiniteGroup& g,
                               const std::vector<std::pair<std::string, double>>& entries) {
    WeightFunction w;
    w.values.assign(g.order, 0.0);
    std::vector<bool> seen(g.order, false);
    for (const auto& [nm, val] : entries) {
        const int idx = g.index_of(nm);
        if (seen[idx]) throw ValidationError("weight map lists element '" + nm + "' twice");
        if (val < 0.0)
            throw ValidationError("weight of element '" + nm + "' is negative");
        seen[idx] = true;
        w.values[idx] = val;
    }
    return w;
}

std::optional<int> symmetry_violation(const FiniteGroup& g, const WeightFunction& w) {
    for (int x = 0; x < g.order; ++x) {
        const double diff = std::abs(w(x) - w(g.inv(x)));
        const double scale = std::max({1.0, std::abs(w(x)), std::abs(w(g.inv(x)))});
        if (diff > 1e-12 * scale) return x;
    }
    return std::nullopt;
}

std::optional<int> class_function_violation(const FiniteGroup& g, const WeightFunction& w) {
    for (const auto& cls : g.classes) {
        const double ref = w(cls.front());
        for (int m : cls) {
            const double scale = std::max({1.0, std::abs(ref), std::abs(w(m))});
            if (std::abs(w(m) - ref) > 1e-12 * scale) return m;
        }
    }
    return std::nullopt;
}

void require_symmetric(const FiniteGroup& g, const WeightFunction& w) {
    if (auto x = symmetry_violation(g, w))
        throw ValidationError("weight function is not symmetric: w(" + g.name(*x) + ") = " +
                              std::to_string(w(*x)) + " but w(" + g.name(g.inv(*x)) + ") = " +
                              std::to_string(w(g.inv(*x))));
}

}
