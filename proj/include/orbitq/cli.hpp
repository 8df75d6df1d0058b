#pragma once

// orbitq command line: verify, compute, phase-retrieve.
// Exit codes: 0 success, 1 check failure, 2 usage/config/input error.

#include "config.hpp"
#include "io.hpp"

#include <CLI11.hpp>
#include <iostream>

namespace orbitq {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

inline const char* orbit_sign_name(OrbitSign s) { return s == OrbitSign::Plus ? "+" : "-"; }

// transform tier 1 with two Gaussian windows
inline RunConfig default_config() {
    RunConfig c;
    c.carrier = transform_carrier(1)->axes();
    c.group_grid = transform_lattice(1)->axes();
    SignalSpec g0, g1;
    g0.kind = g1.kind = SignalSpec::Kind::GaussianLog;
    g0.gaussian = {0.1, 0.3, 2.4};
    g1.gaussian = {0.0, 0.3};
    c.signals["g0"] = g0;
    c.signals["g1"] = g1;
    c.signals["zero"] = SignalSpec{};
    return c;
}

struct CliOptions {
    std::string config;
    std::string suite;
    int threads = 0;
    std::optional<std::uint64_t> seed;
    std::string out;
    double tolerance_scale = 1.0;
    std::string truth;
    std::string psi, phi, fn;
    std::string scalogram;
    std::string what;
};

namespace detail {

inline RunConfig resolve_config(const CliOptions& o) {
    RunConfig c = o.config.empty() ? default_config() : load_config(o.config);
    if (!o.suite.empty()) {
        const auto s = parse_suite(o.suite);
        if (!s) throw ConfigError("--suite: unknown suite '" + o.suite + "'");
        c.suite = *s;
    }
    if (o.seed) c.seed = *o.seed;
    if (!o.out.empty()) c.out = o.out;
    if (o.threads > 0) c.threads = o.threads;
    return c;
}

inline void write_json(const std::filesystem::path& p, const nlohmann::ordered_json& j) {
    std::ofstream f(p);
    if (!f) throw IoError("cannot write '" + p.string() + "'");
    f << j.dump(2) << '\n';
    if (!f) throw IoError("write failed for '" + p.string() + "'");
}

inline int cmd_verify(const CliOptions& o, std::ostream& out) {
    const RunConfig c = resolve_config(o);
    if (!(o.tolerance_scale >= 0.0) || !std::isfinite(o.tolerance_scale))
        throw ConfigError("--tolerance-scale must be a finite number >= 0");
    set_threads(c.threads);
    VerifyOptions vo{c.orbit_sign, c.seed, o.tolerance_scale, c.tolerances};
    std::vector<SuiteTiming> timing;
    const VerificationReport rep = verify(c.suite, vo, &timing);

    nlohmann::ordered_json j;
    j["suite"] = to_string(c.suite);
    j["seed"] = c.seed;
    j["orbit_sign"] = orbit_sign_name(c.orbit_sign);
    const nlohmann::ordered_json body = rep.to_json();
    for (const auto& [k, v] : body.items()) j[k] = v;
    const std::filesystem::path dir(c.out);
    std::filesystem::create_directories(dir);
    write_json(dir / "report.json", j);
    nlohmann::ordered_json t;
    t["threads"] = c.threads;
    double total = 0.0;
    for (const auto& s : timing) {
        t["suites"][s.suite] = s.seconds;
        total += s.seconds;
    }
    t["total_seconds"] = total;
    write_json(dir / "timing.json", t);

    for (const auto& r : rep.records())
        if (!r.pass) out << "FAIL " << r.id << "  error " << r.error << " > tolerance " << r.tolerance << '\n';
    out << "verify " << to_string(c.suite) << ": " << rep.size() - rep.failures() << "/" << rep.size() << " passed, report "
        << (dir / "report.json").string() << '\n';
    return rep.passed() ? kExitOk : kExitFail;
}

struct Computed {
    GridData data;
    std::string anchor;
};

inline Computed compute_object(const RunConfig& c, const CliOptions& o) {
    const RepPtr rep = c.representation();
    const GridPtr lat = c.lattice();
    const CarrierPtr car = rep->carrier();
    const auto need = [](const std::string& v, const char* flag) {
        if (v.empty()) throw ConfigError(std::string("missing ") + flag);
        return v;
    };
    const auto state = [&](const std::string& name) { return c.state(name, car); };
    const std::string& w = o.what;
    if (w == "wavelet" || w == "scalogram") {
        const StateVector psi = state(need(o.psi, "--psi"));
        const StateVector phi = state(o.phi.empty() ? o.psi : o.phi);
        GroupFunction f = wavelet(*rep, psi, phi, lat);
        if (w == "wavelet") return {to_grid_data(f), "W_phi psi(x) = <psi, pi(x)^* phi>"};
        f.values = f.values.cwiseAbs2().cast<cplx>();
        return {to_grid_data(f), "|W_phi psi(x)|^2"};
    }
    const TransformContext ctx(rep, lat);
    if (w == "fw") {
        const KernelOperator A = rank_one(state(need(o.psi, "--psi")), state(o.phi.empty() ? o.psi : o.phi));
        return {to_grid_data(fourier_wigner(ctx, A)), "F_W(A)(x) = tr(A D pi(x))"};
    }
    if (w == "fko") {
        const GroupFunction f = c.function(need(o.fn, "--fn"), lat);
        return {to_grid_data(fourier_kirillov(ctx, f, FkoMode::Fft)), "F_KO f(kappa(g)) on the orbit"};
    }
    const auto q = std::make_shared<const Quantizer>(std::make_shared<const TransformContext>(ctx));
    if (w == "wigner") {
        const StateVector psi = state(need(o.psi, "--psi"));
        return {to_grid_data(q->wigner(psi, state(o.phi.empty() ? o.psi : o.phi))), "W(psi, phi) = a_{psi (x) phi}"};
    }
    if (w == "dequantize") {
        KernelOperator S = rank_one(state(need(o.psi, "--psi")), state(o.phi.empty() ? o.psi : o.phi));
        std::string anchor = "a_S = F_KO(F_W(S)), S = psi (x) phi";
        if (!o.fn.empty()) {
            S = conv_fn_op(*rep, c.function(o.fn, lat), S);
            anchor = "a_S = F_KO(F_W(S)), S = f * (psi (x) phi)";
        }
        return {to_grid_data(q->dequantize(S)), anchor};
    }
    throw ConfigError("unknown compute target '" + w + "'");
}

inline int cmd_compute(const CliOptions& o, std::ostream& out) {
    const RunConfig c = resolve_config(o);
    set_threads(c.threads);
    const Computed r = compute_object(c, o);
    const std::filesystem::path dir(c.out);
    write_grid_files(r.data, dir, o.what,
                     meta_json(r.data, o.what, to_string(c.group), orbit_sign_name(c.orbit_sign), r.anchor));
    out << "wrote " << (dir / o.what).string() << ".{csv,oqf,meta.json}\n";
    return kExitOk;
}

inline int cmd_phase_retrieve(const CliOptions& o, std::ostream& out) {
    const RunConfig c = resolve_config(o);
    set_threads(c.threads);
    if (o.scalogram.empty()) throw ConfigError("missing --scalogram");
    if (o.phi.empty()) throw ConfigError("missing --phi");
    const OqfData in = read_oqf(o.scalogram);
    const RepPtr rep = c.representation();
    const TransformContext ctx(rep, c.lattice());
    const GridPtr& lat = ctx.exp_grid();
    std::vector<std::uint32_t> want;
    for (const auto& a : lat->axes()) want.push_back(static_cast<std::uint32_t>(a.count));
    if (in.counts != want) throw IoError("scalogram dimensions do not match the configured group grid");

    const StateVector phi = c.state(o.phi, rep->carrier());
    RetrievalConfig cfg;
    cfg.reference = phi;
    std::optional<StateVector> truth;
    if (!o.truth.empty()) truth = c.state(o.truth, rep->carrier());
    const RetrievalResult r = phase_retrieve(ctx, GroupFunction{lat, in.values}, phi, cfg, truth);

    const GridData d = to_grid_data(r.psi);
    const std::filesystem::path dir(c.out);
    auto meta = meta_json(d, "reconstruction", to_string(c.group), orbit_sign_name(c.orbit_sign),
                          "|W_phi psi|^2 determines psi up to a global phase");
    meta["kept_singular_values"] = r.rank;
    meta["cutoff"] = cfg.regularization;
    write_grid_files(d, dir, "reconstruction", meta);
    out << "wrote " << (dir / "reconstruction").string() << ".{csv,oqf,meta.json}\n";
    if (r.fidelity) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", *r.fidelity);
        out << "fidelity " << buf << (r.below_floor ? " (below floor)" : "") << '\n';
        if (r.below_floor) return kExitFail;
    }
    return kExitOk;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"orbitq: quantization on exponential Lie groups"};
    app.require_subcommand(1);
    CliOptions o;
    const auto common = [&](CLI::App* s) {
        s->add_option("--config", o.config, "JSON run configuration");
        s->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
        s->add_option("--seed", o.seed, "seed for all randomness");
        s->add_option("--out", o.out, "output directory");
    };
    CLI::App* v = app.add_subcommand("verify", "run identity suites and write a JSON report");
    common(v);
    v->add_option("--suite", o.suite, "groups, transforms, quant, qha, apps or all");
    v->add_option("--tolerance-scale", o.tolerance_scale, "multiply every tolerance");

    CLI::App* c = app.add_subcommand("compute", "export a transform on the configured grids");
    common(c);
    c->add_option("what", o.what, "wigner, dequantize, fko, fw, scalogram or wavelet")
        ->required()
        ->check(CLI::IsMember({"wigner", "dequantize", "fko", "fw", "scalogram", "wavelet"}));
    c->add_option("--psi", o.psi, "state signal name");
    c->add_option("--phi", o.phi, "window signal name (defaults to --psi)");
    c->add_option("--fn", o.fn, "group function signal name");

    CLI::App* p = app.add_subcommand("phase-retrieve", "reconstruct a signal from an OQF1 scalogram");
    common(p);
    p->add_option("--scalogram", o.scalogram, "OQF1 scalogram on the configured group grid")->required();
    p->add_option("--phi", o.phi, "window signal name")->required();
    p->add_option("--truth", o.truth, "ground-truth signal name; prints the fidelity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    try {
        if (v->parsed()) return detail::cmd_verify(o, out);
        if (c->parsed()) return detail::cmd_compute(o, out);
        return detail::cmd_phase_retrieve(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace orbitq
