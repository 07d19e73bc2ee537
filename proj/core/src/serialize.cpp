#include "cayley/serialize.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("JSON parse error: ") + e.what());
    }
}

cplx cplx_from_json(const json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ValidationError(std::string(what) + ": expected a number or an [re, im] pair");
}

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json cvec_to_json(const cvec& v) {
    json a = json::array();
    for (cplx z : v) a.push_back(cplx_to_json(z));
    return a;
}

const json& field(const json& j, const char* key, const char* ctx) {
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(std::string(ctx) + ": missing field \"" + key + "\"");
    return *it;
}

}  // namespace

FiniteGroup group_from_config(const std::string& json_text) {
    const json j = parse(json_text);
    if (!j.is_object()) throw ValidationError("group config: expected an object");
    const std::string kind = field(j, "kind", "group config").get<std::string>();
    if (kind == "cyclic") return build_cyclic(field(j, "n", "group config").get<int>());
    if (kind == "symmetric") return build_symmetric(field(j, "n", "group config").get<int>());
    if (kind == "table") {
        const auto table =
            field(j, "table", "group config").get<std::vector<std::vector<int>>>();
        std::vector<std::string> names;
        if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
        return build_from_table(table, std::move(names));
    }
    throw ValidationError("group config: unknown kind \"" + kind + "\"");
}

WeightFunction weight_from_config(const FiniteGroup& g, const std::string& json_text) {
    const json j = parse(json_text);
    if (!j.is_object()) throw ValidationError("weight config: expected an object");
    const std::string kind = field(j, "kind", "weight config").get<std::string>();
    if (kind == "generating_set") {
        const auto elems =
            field(j, "elements", "weight config").get<std::vector<std::string>>();
        return weight_from_generating_set(g, elems);
    }
    if (kind == "map") {
        const json& vals = field(j, "values", "weight config");
        if (!vals.is_object()) throw ValidationError("weight config: \"values\" must be an object");
        std::vector<std::pair<std::string, double>> entries;
        for (auto it = vals.begin(); it != vals.end(); ++it) {
            if (!it.value().is_number())
                throw ValidationError("weight config: weight of \"" + it.key() +
                                      "\" must be a number");
            entries.emplace_back(it.key(), it.value().get<double>());
        }
        return weight_from_map(g, entries);
    }
    throw ValidationError("weight config: unknown kind \"" + kind + "\"");
}

IrrepSet irreps_from_json(const std::string& json_text) {
    json j = parse(json_text);
    if (j.is_object() && j.contains("irreps")) j = j["irreps"];
    if (!j.is_array()) throw ValidationError("irrep file: expected an array of irreps");
    IrrepSet set;
    for (const json& jr : j) {
        UnitaryIrrep r;
        r.name = field(jr, "name", "irrep file").get<std::string>();
        r.dim = field(jr, "dim", "irrep file").get<int>();
        if (r.dim < 1) throw ValidationError("irrep '" + r.name + "': dim must be >= 1");
        const json& mats = field(jr, "matrices", "irrep file");
        if (!mats.is_array())
            throw ValidationError("irrep '" + r.name + "': \"matrices\" must be an array");
        for (const json& jm : mats) {
            if (!jm.is_array() || static_cast<int>(jm.size()) != r.dim)
                throw ValidationError("irrep '" + r.name + "': matrix is not " +
                                      std::to_string(r.dim) + " rows");
            CMat m(r.dim, r.dim);
            for (int row = 0; row < r.dim; ++row) {
                const json& jrow = jm[row];
                if (!jrow.is_array() || static_cast<int>(jrow.size()) != r.dim)
                    throw ValidationError("irrep '" + r.name + "': matrix row has wrong length");
                for (int col = 0; col < r.dim; ++col)
                    m(row, col) = cplx_from_json(jrow[col], "irrep matrix entry");
            }
            r.matrices.push_back(std::move(m));
        }
        set.irreps.push_back(std::move(r));
    }
    return set;
}

std::string irreps_to_json(const IrrepSet& set, bool pretty) {
    json out = json::array();
    for (const auto& r : set.irreps) {
        json jm = json::array();
        for (const CMat& m : r.matrices) {
            json rows = json::array();
            for (int row = 0; row < m.rows(); ++row) {
                json jrow = json::array();
                for (int col = 0; col < m.cols(); ++col) jrow.push_back(cplx_to_json(m(row, col)));
                rows.push_back(std::move(jrow));
            }
            jm.push_back(std::move(rows));
        }
        out.push_back(json{{"name", r.name}, {"dim", r.dim}, {"matrices", std::move(jm)}});
    }
    return out.dump(pretty ? 2 : -1);
}

std::string eigenbasis_to_json(const PreferredEigenbasis& basis, bool pretty) {
    json out;
    out["eigenvalues"] = basis.eigenvalues;
    json labels = json::array();
    for (const auto& l : basis.labels)
        labels.push_back(json{{"rep", l.rep}, {"i", l.i}, {"lambda", l.lambda}});
    out["labels"] = std::move(labels);
    json vecs = json::array();
    for (int c = 0; c < basis.vectors.cols(); ++c) vecs.push_back(cvec_to_json(basis.vectors.col(c)));
    out["vectors"] = std::move(vecs);
    return out.dump(pretty ? 2 : -1);
}

std::string eigenbasis_to_csv(const PreferredEigenbasis& basis) {
    const int n = basis.vectors.rows();
    for (int c = 0; c < basis.vectors.cols(); ++c)
        for (int r = 0; r < n; ++r)
            if (std::abs(basis.vectors(r, c).imag()) > 1e-12)
                throw ValidationError("eigenbasis is not real-valued; CSV export unavailable");
    std::ostringstream os;
    os.precision(17);
    os << "lambda,rep,i,components...\n";
    for (int c = 0; c < basis.vectors.cols(); ++c) {
        os << basis.eigenvalues[c] << ',' << basis.labels[c].rep << ',' << basis.labels[c].i;
        for (int r = 0; r < n; ++r) os << ',' << basis.vectors(r, c).real();
        os << '\n';
    }
    return os.str();
}

namespace {

GeneratorSpec generator_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "orthonormal") return GenOrthonormal{};
        if (s == "mercedes") return GenMercedes{};
        throw ValidationError("unknown generator \"" + s + "\"");
    }
    if (j.is_object()) {
        const std::string kind = field(j, "kind", "generator").get<std::string>();
        if (kind == "orthonormal") return GenOrthonormal{};
        if (kind == "mercedes") return GenMercedes{};
        if (kind == "harmonic") return GenHarmonic{field(j, "m", "harmonic generator").get<int>()};
        if (kind == "explicit") {
            GenExplicit ex;
            const json& vecs = field(j, "vectors", "explicit generator");
            if (!vecs.is_array() || vecs.empty())
                throw ValidationError("explicit generator: \"vectors\" must be a nonempty array");
            for (const json& jv : vecs) {
                if (!jv.is_array()) throw ValidationError("explicit generator: bad vector");
                cvec v;
                for (const json& je : jv) v.push_back(cplx_from_json(je, "generator entry"));
                ex.vectors.push_back(std::move(v));
            }
            return ex;
        }
        throw ValidationError("unknown generator kind \"" + kind + "\"");
    }
    throw ValidationError("generator must be a string or an object");
}

}  // namespace

std::vector<SubspaceFrameSpec> frame_specs_from_json(const std::string& json_text) {
    json j = parse(json_text);
    if (j.is_object() && j.contains("specs")) j = j["specs"];
    if (!j.is_array()) throw ValidationError("frame spec: expected an array of specs");
    std::vector<SubspaceFrameSpec> out;
    for (const json& js : j) {
        SubspaceFrameSpec sp;
        sp.rep = field(js, "rep", "frame spec").get<std::string>();
        sp.i = field(js, "i", "frame spec").get<int>();
        sp.lambda = field(js, "lambda", "frame spec").get<double>();
        sp.generator = generator_from_json(field(js, "generator", "frame spec"));
        out.push_back(std::move(sp));
    }
    return out;
}

std::string frame_to_json(const Frame& f, const FrameBounds& bounds, bool tight, bool pretty) {
    json out;
    out["num_atoms"] = f.atoms.size();
    json atoms = json::array();
    for (const cvec& a : f.atoms) atoms.push_back(cvec_to_json(a));
    out["atoms"] = std::move(atoms);
    json labels = json::array();
    for (const auto& l : f.labels) {
        if (l)
            labels.push_back(json{{"rep", l->rep}, {"i", l->i}, {"lambda", l->lambda}});
        else
            labels.push_back(nullptr);
    }
    out["labels"] = std::move(labels);
    out["bounds"] = {{"lower", bounds.lower},
                     {"upper", bounds.upper},
                     {"condition", std::isfinite(bounds.condition)
                                       ? json(bounds.condition)
                                       : json(nullptr)}};
    out["tight"] = tight;
    return out.dump(pretty ? 2 : -1);
}

GraphSignal signal_from_json(const std::string& json_text) {
    json j = parse(json_text);
    if (j.is_object() && j.contains("values")) j = j["values"];
    if (!j.is_array()) throw ValidationError("signal file: expected an array of values");
    GraphSignal s;
    for (const json& je : j) s.values.push_back(cplx_from_json(je, "signal value"));
    return s;
}

GraphSignal signal_from_csv(const std::string& csv_text) {
    GraphSignal s;
    std::istringstream is(csv_text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line.starts_with("#")) continue;
        std::istringstream ls(line);
        double re = 0, im = 0;
        char comma = 0;
        if (!(ls >> re))
            throw ValidationError("signal csv: line " + std::to_string(lineno) +
                                  " is not numeric");
        if (ls >> comma) {
            if (comma != ',' || !(ls >> im))
                throw ValidationError("signal csv: line " + std::to_string(lineno) +
                                      " is malformed");
        }
        char extra = 0;
        if (ls >> extra)
            throw ValidationError("signal csv: line " + std::to_string(lineno) +
                                  " has trailing content");
        s.values.push_back({re, im});
    }
    return s;
}

std::string fingerprint_json(const std::string& json_text) {
    const std::string canon = parse(json_text).dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path);
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}
