// Command line front end: spectra, eigenbases, frames, verification, GFT and
// RIP computations for weighted Cayley graphs, driven by a JSON config.
//
// Exit codes: 0 ok, 2 validation failure, 3 numerical tolerance breach,
// 4 I/O or internal failure.  Errors go to stderr as one JSON object.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayley/errors.hpp"
#include "cayley/frames.hpp"
#include "cayley/group.hpp"
#include "cayley/gsp.hpp"
#include "cayley/irreps.hpp"
#include "cayley/serialize.hpp"
#include "cayley/spectral.hpp"
#include "cayley/version.hpp"

using nlohmann::json;

namespace {

struct RunConfig {
    std::string config_path;
    std::string out_path;
    std::string signal_path;
    std::string mode = "canonical_dual";
    double tol = 1e-8;
    bool pretty = false;
    bool csv = false;
    bool inverse = false;
    std::uint64_t seed = 0;
};

json parse_config(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw cayley::ValidationError(std::string("config parse error: ") + e.what());
    }
}

struct Ctx {
    std::string config_text;
    json config;
    cayley::FiniteGroup group;
    cayley::IrrepSet irreps;
    bool has_weight = false;
    cayley::WeightFunction weight;
};

Ctx load_ctx(const RunConfig& rc, bool need_weight) {
    Ctx ctx;
    ctx.config_text = cayley::read_text_file(rc.config_path);
    ctx.config = parse_config(ctx.config_text);
    if (!ctx.config.is_object())
        throw cayley::ValidationError("config: expected a JSON object");
    if (!ctx.config.contains("group"))
        throw cayley::ValidationError("config: missing \"group\"");
    ctx.group = cayley::group_from_config(ctx.config["group"].dump());

    if (ctx.config.contains("irreps")) {
        const json& ji = ctx.config["irreps"];
        if (!ji.is_object() || !ji.contains("file"))
            throw cayley::ValidationError("config: \"irreps\" must be {\"file\": path}");
        ctx.irreps =
            cayley::irreps_from_json(cayley::read_text_file(ji["file"].get<std::string>()));
        const auto report = cayley::validate_irrep_set(ctx.group, ctx.irreps);
        for (const auto& c : report.checks)
            if (!c.pass)
                throw cayley::ValidationError("irrep file failed validation (" + c.name +
                                              "): " + c.detail);
    } else {
        ctx.irreps = cayley::builtin_irreps_for(ctx.group);
    }

    if (ctx.config.contains("weight")) {
        ctx.weight = cayley::weight_from_config(ctx.group, ctx.config["weight"].dump());
        ctx.has_weight = true;
    } else if (need_weight) {
        throw cayley::ValidationError("config: missing \"weight\"");
    }
    return ctx;
}

json envelope(const Ctx& ctx, const std::string& command) {
    return json{{"version", cayley::kVersion},
                {"command", command},
                {"fingerprint", cayley::fingerprint_json(ctx.config_text)}};
}

void emit_text(const std::string& text, const RunConfig& rc) {
    if (rc.out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        cayley::write_text_file(rc.out_path, text);
    }
}

void emit(const json& payload, const RunConfig& rc) {
    emit_text(payload.dump(rc.pretty ? 2 : -1) + "\n", rc);
}

json cplx_json(cayley::cplx z) { return json::array({z.real(), z.imag()}); }

json cvec_json(const cayley::cvec& v) {
    json a = json::array();
    for (cayley::cplx z : v) a.push_back(cplx_json(z));
    return a;
}

cayley::GraphSignal load_signal(const Ctx& ctx, const RunConfig& rc) {
    std::string path = rc.signal_path;
    if (path.empty() && ctx.config.contains("signal"))
        path = ctx.config["signal"].get<std::string>();
    if (path.empty())
        throw cayley::ValidationError("no signal given (use --signal or config \"signal\")");
    const std::string text = cayley::read_text_file(path);
    return path.ends_with(".csv") ? cayley::signal_from_csv(text)
                                  : cayley::signal_from_json(text);
}

std::vector<cayley::SubspaceFrameSpec> load_specs(const Ctx& ctx) {
    if (!ctx.config.contains("frame"))
        throw cayley::ValidationError("config: missing \"frame\" spec list");
    return cayley::frame_specs_from_json(ctx.config["frame"].dump());
}

// deterministic cross-platform test-signal generator (splitmix64)
struct SplitMix {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-52 - 1.0; }  // [-1,1)
};

int cmd_spectrum(const RunConfig& rc) {
    const Ctx ctx = load_ctx(rc, true);
    const auto basis = cayley::preferred_eigenbasis(ctx.group, ctx.irreps, ctx.weight);
    const auto adj = cayley::adjacency(ctx.group, ctx.weight);
    const double ctol = 1e-8 * std::max(1.0, adj.matrix.norm_fro());

    std::vector<int> order(basis.eigenvalues.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return basis.eigenvalues[a] > basis.eigenvalues[b];
    });

    json lines = json::array();
    size_t k = 0;
    while (k < order.size()) {
        size_t e = k + 1;
        while (e < order.size() &&
               basis.eigenvalues[order[e - 1]] - basis.eigenvalues[order[e]] <= ctol)
            ++e;
        double mean = 0;
        for (size_t j = k; j < e; ++j) mean += basis.eigenvalues[order[j]];
        mean /= static_cast<double>(e - k);
        json blocks = json::array();
        for (size_t j = k; j < e; ++j) {
            const auto& l = basis.labels[order[j]];
            json entry{{"rep", l.rep}, {"i", l.i}};
            if (std::find(blocks.begin(), blocks.end(), entry) == blocks.end())
                blocks.push_back(std::move(entry));
        }
        lines.push_back(json{{"lambda", mean},
                             {"multiplicity", e - k},
                             {"blocks", std::move(blocks)}});
        k = e;
    }

    json out = envelope(ctx, "spectrum");
    out["spectrum"] = std::move(lines);
    if (!cayley::class_function_violation(ctx.group, ctx.weight)) {
        json qa = json::array();
        for (const auto& line : cayley::quasi_abelian_spectrum(ctx.group, ctx.irreps, ctx.weight))
            qa.push_back(json{{"rep", line.rep},
                              {"lambda", line.lambda},
                              {"multiplicity", line.multiplicity}});
        out["quasi_abelian"] = std::move(qa);
    }
    emit(out, rc);
    return 0;
}

int cmd_eigenbasis(const RunConfig& rc) {
    const Ctx ctx = load_ctx(rc, true);
    const auto basis = cayley::preferred_eigenbasis(ctx.group, ctx.irreps, ctx.weight);
    if (rc.csv) {
        emit_text(cayley::eigenbasis_to_csv(basis), rc);
        return 0;
    }
    json out = envelope(ctx, "eigenbasis");
    out.update(json::parse(cayley::eigenbasis_to_json(basis)));
    emit(out, rc);
    return 0;
}

int cmd_frame(const RunConfig& rc) {
    const Ctx ctx = load_ctx(rc, true);
    const auto specs = load_specs(ctx);
    const auto result = cayley::build_cayley_frame(ctx.group, ctx.irreps, ctx.weight, specs);
    const auto membership =
        cayley::is_cayley_frame(result.frame, ctx.group, ctx.irreps, ctx.weight, rc.tol);

    json out = envelope(ctx, "frame");
    out.update(json::parse(
        cayley::frame_to_json(result.frame, result.bounds, result.tight)));
    out["membership"] = {{"all_frobenius_schur", membership.all_frobenius_schur},
                         {"all_cayley", membership.all_cayley},
                         {"spans", membership.spans}};
    emit(out, rc);
    return 0;
}

int cmd_verify(const RunConfig& rc) {
    const Ctx ctx = load_ctx(rc, false);
    json checks = json::array();
    bool all = true;
    auto push = [&](const std::string& name, bool pass, double dev, const std::string& detail) {
        checks.push_back(json{{"name", name}, {"pass", pass}, {"deviation", dev},
                              {"detail", detail}});
        all = all && pass;
    };

    const auto report = cayley::validate_irrep_set(ctx.group, ctx.irreps);
    for (const auto& c : report.checks) push(c.name, c.pass, c.deviation, c.detail);

    const auto b = cayley::fourier_matrix(ctx.group, ctx.irreps);
    const double bdev =
        (b.matrix.adjoint() * b.matrix - cayley::CMat::identity(ctx.group.order)).max_abs();
    push("fourier_unitarity", bdev <= 1e-9, bdev, bdev <= 1e-9 ? "" : "B is not unitary");

    if (ctx.has_weight) {
        const auto adj = cayley::adjacency(ctx.group, ctx.weight);
        try {
            (void)cayley::block_diagonalize(adj.matrix, b);
            push("block_diagonalization", true, 0.0, "");
        } catch (const cayley::NumericalError& e) {
            push("block_diagonalization", false, 0.0, e.what());
        }
        try {
            const auto basis = cayley::preferred_eigenbasis(ctx.group, ctx.irreps, ctx.weight);
            double worst = 0;
            SplitMix rng{rc.seed};
            for (int trial = 0; trial < 5; ++trial) {
                cayley::GraphSignal f;
                f.values.resize(ctx.group.order);
                for (auto& z : f.values) z = {rng.real(), rng.real()};
                const auto rec = cayley::igft(cayley::gft(f, basis), basis);
                for (int i = 0; i < ctx.group.order; ++i)
                    worst = std::max(worst, std::abs(rec.values[i] - f.values[i]));
            }
            push("gft_round_trip", worst <= 1e-10, worst,
                 worst <= 1e-10 ? "" : "round trip error too large");
        } catch (const cayley::NumericalError& e) {
            push("preferred_eigenbasis", false, 0.0, e.what());
        }
    }

    json out = envelope(ctx, "verify");
    out["checks"] = std::move(checks);
    out["all_pass"] = all;
    emit(out, rc);
    return all ? 0 : 3;
}

int cmd_gft(const RunConfig& rc) {
    const Ctx ctx = load_ctx(rc, true);
    const auto basis = cayley::preferred_eigenbasis(ctx.group, ctx.irreps, ctx.weight);
    const auto signal = load_signal(ctx, rc);
    json out = envelope(ctx, "gft");

    if (rc.inverse) {
        if (static_cast<int>(signal.values.size()) != ctx.group.order)
            throw cayley::ValidationError("coefficient file length does not match group order");
        out["values"] = cvec_json(cayley::igft(signal.values, basis).values);
        emit(out, rc);
        return 0;
    }
    const auto coeffs = cayley::gft(signal, basis);
    out["coefficients"] = cvec_json(coeffs);
    json labels = json::array();
    for (const auto& l : basis.labels)
        labels.push_back(json{{"rep", l.rep}, {"i", l.i}, {"lambda", l.lambda}});
    out["labels"] = std::move(labels);

    // energy per subspace block (rep, i)
    json blocks = json::array();
    for (size_t j = 0; j < coeffs.size(); ++j) {
        const auto& l = basis.labels[j];
        bool found = false;
        for (auto& blk : blocks)
            if (blk["rep"] == l.rep && blk["i"] == l.i) {
                blk["energy"] = blk["energy"].get<double>() + std::norm(coeffs[j]);
                found = true;
                break;
            }
        if (!found)
            blocks.push_back(json{{"rep", l.rep}, {"i", l.i}, {"energy", std::norm(coeffs[j])}});
    }
    out["by_block"] = std::move(blocks);
    emit(out, rc);
    return 0;
}

int cmd_analyze(const RunConfig& rc) {
    const Ctx ctx = load_ctx(rc, true);
    const auto specs = load_specs(ctx);
    const auto result = cayley::build_cayley_frame(ctx.group, ctx.irreps, ctx.weight, specs);
    const auto signal = load_signal(ctx, rc);
    if (static_cast<int>(signal.values.size()) != ctx.group.order)
        throw cayley::ValidationError("signal length does not match group order");

    cayley::SynthesisMode mode;
    if (rc.mode == "canonical_dual") mode = cayley::SynthesisMode::CanonicalDual;
    else if (rc.mode == "direct") mode = cayley::SynthesisMode::Direct;
    else throw cayley::ValidationError("unknown synthesis mode \"" + rc.mode + "\"");

    const auto coeffs = cayley::frame_analyze(signal, result.frame);
    const auto rec = cayley::frame_synthesize(coeffs, result.frame, mode);
    double err = 0;
    for (int i = 0; i < ctx.group.order; ++i)
        err += std::norm(rec.values[i] - signal.values[i]);

    json out = envelope(ctx, "analyze");
    out["coefficients"] = cvec_json(coeffs);
    out["reconstruction"] = cvec_json(rec.values);
    out["reconstruction_error"] = std::sqrt(err);
    out["mode"] = rc.mode;
    out["bounds"] = {{"lower", result.bounds.lower}, {"upper", result.bounds.upper}};
    emit(out, rc);
    return 0;
}

int cmd_rip(const RunConfig& rc) {
    const Ctx ctx = load_ctx(rc, true);
    const auto specs = load_specs(ctx);
    const auto result = cayley::build_cayley_frame(ctx.group, ctx.irreps, ctx.weight, specs);

    if (!ctx.config.contains("rip") || !ctx.config["rip"].contains("k"))
        throw cayley::ValidationError("config: missing \"rip\": {\"k\": ...}");
    const int k = ctx.config["rip"]["k"].get<int>();
    const std::string basis_kind = ctx.config["rip"].value("basis", "eigenbasis");

    cayley::SparsityBasis basis;
    if (basis_kind == "eigenbasis") {
        basis = cayley::SparsityBasis::from(
            cayley::preferred_eigenbasis(ctx.group, ctx.irreps, ctx.weight));
    } else if (basis_kind == "fourier") {
        basis = cayley::SparsityBasis::from(cayley::fourier_matrix(ctx.group, ctx.irreps));
    } else {
        throw cayley::ValidationError("rip basis must be \"eigenbasis\" or \"fourier\"");
    }

    const auto rip = cayley::rip_constant(result.frame, basis, k);
    json out = envelope(ctx, "rip");
    out["k"] = k;
    out["basis"] = basis_kind;
    out["delta"] = rip.delta;
    out["blockwise_bound"] =
        rip.blockwise_bound ? json(*rip.blockwise_bound) : json(nullptr);
    out["supports"] = rip.supports;
    emit(out, rc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral decomposition and frames for weighted Cayley graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig rc;
    app.add_option("--config", rc.config_path, "JSON config file")->required();
    app.add_option("--out", rc.out_path, "write output here instead of stdout");
    app.add_option("--tol", rc.tol, "tolerance for membership reporting");
    app.add_option("--seed", rc.seed, "seed for randomized self-tests");
    app.add_flag("--pretty", rc.pretty, "indent JSON output");

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues with block provenance");
    CLI::App* eigenbasis = app.add_subcommand("eigenbasis", "export the preferred eigenbasis");
    eigenbasis->add_flag("--csv", rc.csv, "CSV export (real-valued bases only)");
    CLI::App* frame = app.add_subcommand("frame", "build a frame from the config spec list");
    CLI::App* verify = app.add_subcommand("verify", "validate irreps and transforms");
    CLI::App* gft = app.add_subcommand("gft", "graph Fourier transform of a signal");
    gft->add_option("--signal", rc.signal_path, "signal file (.json or .csv)");
    gft->add_flag("--inverse", rc.inverse, "treat the input as coefficients");
    CLI::App* analyze = app.add_subcommand("analyze", "frame analysis + reconstruction");
    analyze->add_option("--signal", rc.signal_path, "signal file (.json or .csv)");
    analyze->add_option("--mode", rc.mode, "canonical_dual | direct");
    CLI::App* rip = app.add_subcommand("rip", "restricted isometry constant (brute force)");

    CLI11_PARSE(app, argc, argv);

    auto fail = [](const char* kind, const std::string& msg, int code) {
        const json err{{"error", {{"kind", kind}, {"message", msg}}}};
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return code;
    };

    try {
        if (spectrum->parsed()) return cmd_spectrum(rc);
        if (eigenbasis->parsed()) return cmd_eigenbasis(rc);
        if (frame->parsed()) return cmd_frame(rc);
        if (verify->parsed()) return cmd_verify(rc);
        if (gft->parsed()) return cmd_gft(rc);
        if (analyze->parsed()) return cmd_analyze(rc);
        if (rip->parsed()) return cmd_rip(rc);
    } catch (const cayley::ValidationError& e) {
        return fail("validation", e.what(), 2);
    } catch (const cayley::NumericalError& e) {
        return fail("numerical", e.what(), 3);
    } catch (const cayley::IoError& e) {
        return fail("io", e.what(), 4);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 4);
    }
    return 0;
}
