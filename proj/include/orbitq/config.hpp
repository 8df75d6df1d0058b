#pragma once

// Declarative run configuration (JSON).
//
//   {
//     "group": "affine", "orbit_sign": "+",
//     "carrier": [{"kind": "log", "min": -2.8, "step": 0.0625, "count": 64}],
//     "group_grid": [{"step": 0.0625, "count": 65}, {"step": 0.125, "count": 65}],
//     "signals": {"g0": {"type": "gaussian_log", "center": 0.1, "width": 0.3, "freq": 2.0}},
//     "suite": "all", "seed": 7, "tolerances": {"quant.moyal": 1e-3}, "out": "out", "threads": 1
//   }
//
// group_grid axes without "min" are centered and need an odd count.

#include "verify.hpp"

#include <fstream>
#include <json.hpp>

namespace orbitq {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kMinCarrierCount = 8;
constexpr int kMaxLatticePoints = 70'000;

struct SignalSpec {
    enum class Kind { GaussianLog, HermiteLog, Bump, Zero };
    Kind kind = Kind::Zero;
    GaussianSpec gaussian;
    int order = 0;
    double center = 0.0, width = 0.3;
    std::array<double, 4> bump_center{};
    double radius = 0.0;
};

struct RunConfig {
    GroupName group = GroupName::Affine;
    OrbitSign orbit_sign = OrbitSign::Plus;
    std::vector<CarrierAxis> carrier;
    std::vector<LatticeAxis> group_grid;
    std::map<std::string, SignalSpec> signals;
    Suite suite = Suite::All;
    std::uint64_t seed = 20240917;
    std::map<std::string, double> tolerances;
    std::string out = "out";
    int threads = 1;

    GroupDescriptor descriptor() const {
        return group == GroupName::Affine ? GroupDescriptor::affine(orbit_sign) : GroupDescriptor::shearlet(orbit_sign);
    }
    CarrierPtr carrier_grid() const { return std::make_shared<const CarrierGrid>(carrier); }
    GridPtr lattice() const { return GroupGrid::exponential(descriptor(), group_grid); }
    RepPtr representation() const { return std::make_shared<const Representation>(descriptor(), carrier_grid()); }

    const SignalSpec& signal(const std::string& name) const {
        const auto it = signals.find(name);
        if (it == signals.end()) throw ConfigError("unknown signal '" + name + "'");
        return it->second;
    }

    StateVector state(const std::string& name, const CarrierPtr& c) const {
        const SignalSpec& s = signal(name);
        switch (s.kind) {
        case SignalSpec::Kind::GaussianLog: return gaussian_log(c, s.gaussian);
        case SignalSpec::Kind::HermiteLog: return hermite_log(c, s.order, s.center, s.width);
        case SignalSpec::Kind::Zero: return StateVector::zero(c);
        case SignalSpec::Kind::Bump: break;
        }
        throw ConfigError("signal '" + name + "' is a group function, not a state");
    }

    GroupFunction function(const std::string& name, const GridPtr& g) const {
        const SignalSpec& s = signal(name);
        if (s.kind == SignalSpec::Kind::Zero) return GroupFunction::zero(g);
        if (s.kind == SignalSpec::Kind::Bump) return bump(g, s.bump_center, s.radius);
        throw ConfigError("signal '" + name + "' is a state, not a group function");
    }
};

namespace detail {

using json = nlohmann::json;

inline const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
    return j.at(key);
}

inline double number(const json& j, const char* key, const std::string& where) {
    const json& v = member(j, key, where);
    if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(where + "." + key + ": not finite");
    return x;
}

inline double number_or(const json& j, const char* key, double dflt, const std::string& where) {
    return j.contains(key) ? number(j, key, where) : dflt;
}

inline int count(const json& j, const char* key, const std::string& where) {
    const json& v = member(j, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1'000'000)
        throw ConfigError(where + "." + key + ": expected a positive integer");
    return v.get<int>();
}

inline std::string text(const json& j, const char* key, const std::string& where) {
    const json& v = member(j, key, where);
    if (!v.is_string()) throw ConfigError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

inline SignalSpec parse_signal(const std::string& name, const json& j) {
    const std::string where = "signals." + name;
    SignalSpec s;
    const std::string type = text(j, "type", where);
    if (type == "gaussian_log") {
        s.kind = SignalSpec::Kind::GaussianLog;
        s.gaussian.center = number(j, "center", where);
        s.gaussian.width = number(j, "width", where);
        s.gaussian.freq = number_or(j, "freq", 0.0, where);
        s.gaussian.center2 = number_or(j, "center2", 0.0, where);
        s.gaussian.width2 = number_or(j, "width2", 1.0, where);
        if (!(s.gaussian.width > 0.0) || !(s.gaussian.width2 > 0.0)) throw ConfigError(where + ": width must be positive");
    } else if (type == "hermite_log") {
        s.kind = SignalSpec::Kind::HermiteLog;
        const json& o = member(j, "order", where);
        if (!o.is_number_integer() || o.get<int>() < 0 || o.get<int>() > 40)
            throw ConfigError(where + ".order: expected an integer in [0, 40]");
        s.order = o.get<int>();
        s.center = number_or(j, "center", 0.0, where);
        s.width = number_or(j, "width", 0.3, where);
        if (!(s.width > 0.0)) throw ConfigError(where + ": width must be positive");
    } else if (type == "bump") {
        s.kind = SignalSpec::Kind::Bump;
        const json& c = member(j, "center", where);
        if (!c.is_array() || c.empty() || c.size() > 4) throw ConfigError(where + ".center: expected 1 to 4 numbers");
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (!c[k].is_number()) throw ConfigError(where + ".center: expected numbers");
            s.bump_center[k] = c[k].get<double>();
        }
        s.radius = number(j, "radius", where);
        if (!(s.radius > 0.0)) throw ConfigError(where + ": radius must be positive");
    } else if (type == "zero") {
        s.kind = SignalSpec::Kind::Zero;
    } else {
        throw ConfigError(where + ": unknown signal type '" + type + "'");
    }
    return s;
}

}  // namespace detail

inline RunConfig parse_config(const nlohmann::json& j) {
    using detail::count;
    using detail::number;
    using detail::text;
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig c;

    const std::string g = j.contains("group") ? text(j, "group", "config") : "affine";
    if (g == "affine") c.group = GroupName::Affine;
    else if (g == "shearlet") c.group = GroupName::Shearlet;
    else if (g == "heisenberg") throw ConfigError("group: heisenberg has no square-integrable representation here");
    else throw ConfigError("group: unknown group '" + g + "'");

    if (j.contains("orbit_sign")) {
        const std::string s = text(j, "orbit_sign", "config");
        if (s == "+" || s == "plus") c.orbit_sign = OrbitSign::Plus;
        else if (s == "-" || s == "minus") c.orbit_sign = OrbitSign::Minus;
        else throw ConfigError("orbit_sign: expected '+' or '-'");
    }

    const auto& ca = detail::member(j, "carrier", "config");
    if (!ca.is_array()) throw ConfigError("carrier: expected an array of axes");
    for (std::size_t k = 0; k < ca.size(); ++k) {
        const std::string where = "carrier[" + std::to_string(k) + "]";
        CarrierAxis a;
        const std::string kind = ca[k].contains("kind") ? text(ca[k], "kind", where) : (k == 0 ? "log" : "linear");
        if (kind == "log") a.kind = AxisKind::Log;
        else if (kind == "linear") a.kind = AxisKind::Linear;
        else throw ConfigError(where + ".kind: expected 'log' or 'linear'");
        a.min = number(ca[k], "min", where);
        a.step = number(ca[k], "step", where);
        a.count = count(ca[k], "count", where);
        if (!(a.step > 0.0)) throw ConfigError(where + ".step: must be positive");
        if (a.count < kMinCarrierCount) throw ConfigError(where + ".count: at least " + std::to_string(kMinCarrierCount));
        c.carrier.push_back(a);
    }

    const auto& ga = detail::member(j, "group_grid", "config");
    if (!ga.is_array()) throw ConfigError("group_grid: expected an array of axes");
    long long points = 1;
    for (std::size_t k = 0; k < ga.size(); ++k) {
        const std::string where = "group_grid[" + std::to_string(k) + "]";
        const double step = number(ga[k], "step", where);
        const int n = count(ga[k], "count", where);
        if (!(step > 0.0)) throw ConfigError(where + ".step: must be positive");
        if (ga[k].contains("min")) {
            c.group_grid.push_back({number(ga[k], "min", where), step, n});
        } else {
            if (n % 2 == 0) throw ConfigError(where + ".count: a centered axis needs an odd count");
            c.group_grid.push_back(LatticeAxis::centered(step, n));
        }
        points *= n;
    }
    if (points > kMaxLatticePoints)
        throw ConfigError("group_grid: " + std::to_string(points) + " points exceed the budget of " +
                          std::to_string(kMaxLatticePoints));

    if (j.contains("signals")) {
        const auto& s = j.at("signals");
        if (!s.is_object()) throw ConfigError("signals: expected an object");
        for (const auto& [name, spec] : s.items()) c.signals[name] = detail::parse_signal(name, spec);
    }
    if (!c.signals.count("zero")) c.signals["zero"] = SignalSpec{};

    if (j.contains("suite")) {
        const auto s = parse_suite(text(j, "suite", "config"));
        if (!s) throw ConfigError("suite: unknown suite");
        c.suite = *s;
    }
    if (j.contains("seed")) {
        const auto& s = j.at("seed");
        if (!s.is_number_unsigned()) throw ConfigError("seed: expected a non-negative integer");
        c.seed = s.get<std::uint64_t>();
    }
    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        if (!t.is_object()) throw ConfigError("tolerances: expected an object");
        for (const auto& [id, v] : t.items()) {
            if (!v.is_number() || v.get<double>() < 0.0) throw ConfigError("tolerances." + id + ": expected a number >= 0");
            c.tolerances[id] = v.get<double>();
        }
    }
    if (j.contains("out")) c.out = text(j, "out", "config");
    if (j.contains("threads")) {
        c.threads = count(j, "threads", "config");
    }

    // shape checks against the group
    try {
        c.representation();
        c.lattice();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("grids: ") + e.what());
    }
    return c;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    return parse_config(j);
}

}  // namespace orbitq
