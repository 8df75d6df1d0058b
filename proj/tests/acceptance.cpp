// Acceptance run: two `verify --suite all` invocations through the CLI, then one
// PASS/FAIL line per criterion against tolerances pinned here.

#include "orbitq/cli.hpp"

#include <cstdio>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Criteria {
    std::map<std::string, json> checks;
    json timing;
    int failed = 0;
    std::vector<std::string> missing;

    const json* find(const std::string& id) {
        const auto it = checks.find(id);
        if (it == checks.end()) {
            missing.push_back(id);
            return nullptr;
        }
        return &it->second;
    }

    // error <= bound
    bool le(const std::string& id, double bound, std::string& detail) {
        const json* c = find(id);
        if (!c) {
            detail += " " + id + "=missing";
            return false;
        }
        const double e = (*c)["error"].get<double>();
        char buf[160];
        std::snprintf(buf, sizeof buf, " %s=%.3g", id.c_str(), e);
        detail += buf;
        return e <= bound;
    }

    // refinement records hold the largest ratio of consecutive errors
    bool decreasing(const std::string& id, std::string& detail) {
        const json* c = find(id);
        if (!c) {
            detail += " " + id + "=missing";
            return false;
        }
        const double r = (*c)["error"].get<double>();
        char buf[160];
        std::snprintf(buf, sizeof buf, " %s=%.3g", id.c_str(), r);
        detail += buf;
        return r < 1.0;
    }

    void report(int n, bool ok, const std::string& what, const std::string& detail) {
        if (!ok) ++failed;
        std::printf("%s criterion %d: %s |%s\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.c_str());
    }
};

int run_verify(const fs::path& out) {
    const std::string o = out.string();
    const char* argv[] = {"orbitq", "verify", "--suite", "all", "--seed", "20240917", "--out", o.c_str()};
    std::ostringstream sink, err;
    const int rc = orbitq::run_cli(8, argv, sink, err);
    std::fputs(sink.str().c_str(), stdout);
    std::fputs(err.str().c_str(), stderr);
    return rc;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main() {
    const fs::path root = fs::temp_directory_path() / "orbitq_acceptance";
    fs::remove_all(root);
    const int rc_a = run_verify(root / "a");
    const int rc_b = run_verify(root / "b");
    if (rc_a == orbitq::kExitUsage || rc_b == orbitq::kExitUsage) {
        std::printf("FAIL verify did not run\n");
        return 1;
    }

    Criteria C;
    const json report = json::parse(slurp(root / "a" / "report.json"));
    for (const auto& c : report["checks"]) C.checks[c["id"].get<std::string>()] = c;
    C.timing = json::parse(slurp(root / "a" / "timing.json"));
    const auto seconds = [&](const char* suite) { return C.timing["suites"][suite].get<double>(); };

    const std::vector<std::string> groups{"affine", "shearlet", "heisenberg"};
    const std::vector<std::string> axioms{"associativity", "identity",        "inverse",
                                          "exp_log",       "ad_homomorphism", "k_homomorphism"};
    {
        std::string d;
        bool ok = true;
        for (const auto& g : groups)
            for (const auto& a : axioms) ok &= C.le("groups." + g + "." + a, 1e-12, d);
        C.report(1, ok, "group axioms, exp/log, Ad and K homomorphisms <= 1e-12", d);
    }
    {
        std::string d;
        bool ok = true;
        for (const auto& g : groups) {
            ok &= C.le("groups." + g + ".theta_formula", 1e-10, d);
            ok &= C.le("groups." + g + ".theta_modular", 1e-12, d);
        }
        C.report(2, ok, "Theta formula <= 1e-10, Delta(exp X) Theta(X) = Theta(-X) <= 1e-12", d);
    }
    {
        std::string d;
        bool ok = C.le("transforms.duflo_moore", 1e-2, d);
        ok &= C.decreasing("transforms.duflo_moore.refinement", d);
        C.report(3, ok, "Duflo-Moore orthogonality <= 1e-2, decreasing over 3 levels", d);
    }
    {
        std::string d;
        bool ok = true;
        for (const char* id : {"unitarity", "inverse", "projection", "conjugation"})
            ok &= C.le(std::string("transforms.fko.") + id, 1e-10, d);
        C.report(4, ok, "F_KO unitarity, inverse, projection, conjugation <= 1e-10", d);
    }
    {
        std::string d;
        bool ok = true;
        for (const char* kind : {"isometry", "left_inverse"})
            for (const char* rank : {"rank1", "rank3"}) {
                const std::string id = std::string("transforms.fw.") + kind + "." + rank;
                ok &= C.le(id, 1e-2, d);
                ok &= C.decreasing(id + ".refinement", d);
            }
        ok &= C.le("transforms.fw.dual_path", 1e-8, d);
        C.report(5, ok, "F_W isometry and left inverse <= 1e-2 and decreasing, dual path <= 1e-8", d);
    }
    {
        std::string d;
        bool ok = C.le("transforms.projection_theorem", 1e-2, d);
        ok &= C.decreasing("transforms.projection_theorem.refinement", d);
        C.report(6, ok, "projection theorem <= 1e-2, decreasing", d);
    }
    {
        std::string d;
        bool ok = C.le("quant.wigner_quantize", 1e-2, d);
        ok &= C.le("quant.moyal", 1e-2, d);
        ok &= C.le("quant.translation", 1e-2, d);
        ok &= C.le("quant.adjoint", 1e-8, d);
        ok &= C.le("quant.closed_form_dequantize", 1e-4, d);
        C.report(7, ok, "quantization identities", d);
    }
    {
        std::string d;
        bool ok = C.le("quant.hstar.associativity", 1e-8, d);
        ok &= C.le("quant.hstar.adjoint_product", 1e-8, d);
        ok &= C.le("quant.hstar.inner_rule", 1e-8, d);
        // ratio ||f # g|| / (||f|| ||g||)
        ok &= C.le("quant.hstar.submultiplicative", 1.0, d);
        C.report(8, ok, "H*-algebra identities <= 1e-8, submultiplicative", d);
    }
    {
        std::string d;
        bool ok = C.le("qha.wigner_modulus", 1e-10, d);
        ok &= C.le("qha.conv_fn_op.symbol", 1e-2, d);
        ok &= C.le("qha.conv_op_op.symbol", 1e-2, d);
        // negative parts of the spectrum and of the real values
        ok &= C.le("qha.positivity.fn_op", 1e-10, d);
        ok &= C.le("qha.positivity.op_op", 1e-10, d);
        // ratio lhs / rhs of the Young inequality
        for (const char* t : {"p1q1r1", "p2q1r2", "p2q2rinf"}) ok &= C.le(std::string("qha.young.") + t, 1.0 + 1e-6, d);
        C.report(9, ok, "QHA convolution identities, positivity, Young bounds", d);
    }
    {
        std::string d;
        bool ok = true;
        for (int s = 0; s < 5; ++s) ok &= C.le("qha.trace.s" + std::to_string(s) + ".right", 1e-2, d);
        ok &= C.le("quant.wigner.mass", 1e-2, d);
        C.report(10, ok, "affine trace formula on 5 symbols, Wigner mass <= 1e-2", d);
    }
    {
        std::string d;
        // error is 1 - fidelity
        bool ok = C.le("apps.phase_retrieval.fidelity", 1e-2, d);
        ok &= C.le("apps.phase_retrieval.global_phase", 1e-10, d);
        const double t = seconds("apps");
        d += " apps_seconds=" + std::to_string(t);
        ok &= t <= 300.0;
        C.report(11, ok, "phase retrieval fidelity >= 0.99, global phase <= 1e-10, runtime <= 5 min", d);
    }
    {
        std::string d;
        bool ok = C.le("apps.wigner_approx.distance", 1e-6, d);
        ok &= C.le("apps.wigner_approx.probe", 1e-6, d);
        C.report(12, ok, "Wigner approximation distance 1 +- 1e-6, beats 1000 probes", d);
    }
    {
        std::string d;
        bool ok = true;
        int pairs = 0;
        for (int k = 0; k < 20; ++k) {
            char id[64];
            std::snprintf(id, sizeof id, "apps.intersection.pair%02d.separated", k);
            const json* c = C.find(id);
            // error is floor / min residual
            if (c && (*c)["error"].get<double>() <= 1.0) ++pairs;
            else ok = false;
        }
        d += " separated_pairs=" + std::to_string(pairs) + "/20";
        ok &= C.le("apps.intersection.orthogonal", 1e-2, d);
        C.report(13, ok, "intersection test on 20 window pairs, orthogonal windows <= 1e-2", d);
    }
    {
        std::string d;
        bool ok = true;
        for (const auto& a : axioms) ok &= C.le("groups.shearlet." + a, 1e-12, d);
        ok &= C.le("groups.shearlet.theta_formula", 1e-10, d);
        ok &= C.le("groups.shearlet.theta_modular", 1e-12, d);
        ok &= C.le("transforms.shearlet.unitarity", 5e-2, d);
        ok &= C.le("transforms.shearlet.dual_path", 5e-2, d);
        const double t = seconds("transforms");
        d += " transforms_seconds=" + std::to_string(t);
        ok &= t <= 600.0;
        C.report(14, ok, "shearlet tier at 16^4 / 32x32 <= 5e-2, runtime <= 10 min", d);
    }
    {
        const std::string a = slurp(root / "a" / "report.json"), b = slurp(root / "b" / "report.json");
        const bool ok = !a.empty() && a == b;
        C.report(15, ok, "two verify --suite all runs give byte-identical reports",
                 " bytes=" + std::to_string(a.size()) + (ok ? " identical" : " differ"));
    }

    for (const auto& m : C.missing) std::printf("missing check %s\n", m.c_str());
    std::printf("acceptance: %d/15 criteria passed\n", 15 - C.failed);
    fs::remove_all(root);
    return C.failed == 0 ? 0 : 1;
}
