#pragma once

// Grid data export.
//   CSV:  header axis1,...,axisN,re,im; row-major; 17 significant digits
//   OQF1: "OQF1", u32 rank, u32 count per axis, then (re, im) f64 pairs, all little endian
//   meta: <name>.meta.json with axes, group, orbit sign and anchor

#include "groupfn.hpp"
#include "hilbert.hpp"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>

namespace orbitq {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DataAxis {
    std::string label;
    std::vector<double> coords;
};

// values in row-major order over the axes, last axis fastest
struct GridData {
    std::vector<DataAxis> axes;
    VecC values;
    std::string chart;  // "exponential", "orbit" or "carrier"
};

inline GridData to_grid_data(const GroupFunction& f) {
    GridData d;
    const GroupGrid& g = *f.grid;
    const bool exp = g.chart() == Chart::Exponential;
    d.chart = exp ? "exponential" : "orbit";
    for (int k = 0; k < g.dim(); ++k) {
        const LatticeAxis& a = g.axes()[static_cast<std::size_t>(k)];
        DataAxis ax{(exp ? "X" : "Y") + std::to_string(k + 1), {}};
        for (int i = 0; i < a.count; ++i) ax.coords.push_back(a.coord(i));
        d.axes.push_back(std::move(ax));
    }
    d.values = f.values;
    return d;
}

inline GridData to_grid_data(const StateVector& v) {
    GridData d;
    d.chart = "carrier";
    const CarrierGrid& c = *v.grid;
    for (int k = 0; k < c.rank(); ++k) {
        const CarrierAxis& a = c.axes()[static_cast<std::size_t>(k)];
        DataAxis ax{a.kind == AxisKind::Log ? "ln r" : "s", {}};
        for (int i = 0; i < a.count; ++i) ax.coords.push_back(a.coord(i));
        d.axes.push_back(std::move(ax));
    }
    d.values = v.values;
    return d;
}

inline void write_csv(const GridData& d, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    for (std::size_t k = 0; k < d.axes.size(); ++k) out << "axis" << k + 1 << ',';
    out << "re,im\n";
    const std::size_t rank = d.axes.size();
    std::vector<std::size_t> idx(rank, 0);
    char buf[40];
    const auto put = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out << buf;
    };
    for (Eigen::Index i = 0; i < d.values.size(); ++i) {
        for (std::size_t k = 0; k < rank; ++k) {
            put(d.axes[k].coords[idx[k]]);
            out << ',';
        }
        put(d.values[i].real());
        out << ',';
        put(d.values[i].imag());
        out << '\n';
        for (std::size_t k = rank; k-- > 0;) {
            if (++idx[k] < d.axes[k].coords.size()) break;
            idx[k] = 0;
        }
    }
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

namespace detail {

template <class T>
void put_le(std::ostream& out, T v) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(b, b + sizeof(T));
    out.write(reinterpret_cast<const char*>(b), sizeof(T));
}

template <class T>
T get_le(std::istream& in) {
    unsigned char b[sizeof(T)];
    if (!in.read(reinterpret_cast<char*>(b), sizeof(T))) throw IoError("truncated OQF1 data");
    if constexpr (std::endian::native == std::endian::big) std::reverse(b, b + sizeof(T));
    T v;
    std::memcpy(&v, b, sizeof(T));
    return v;
}

}  // namespace detail

struct OqfData {
    std::vector<std::uint32_t> counts;
    VecC values;
};

inline void write_oqf(const std::vector<std::uint32_t>& counts, const VecC& values, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out.write("OQF1", 4);
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(counts.size()));
    for (std::uint32_t c : counts) detail::put_le<std::uint32_t>(out, c);
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        detail::put_le<double>(out, values[i].real());
        detail::put_le<double>(out, values[i].imag());
    }
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

inline void write_oqf(const GridData& d, const std::filesystem::path& path) {
    std::vector<std::uint32_t> counts;
    for (const auto& a : d.axes) counts.push_back(static_cast<std::uint32_t>(a.coords.size()));
    write_oqf(counts, d.values, path);
}

inline OqfData read_oqf(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, "OQF1", 4) != 0) throw IoError("'" + path.string() + "' is not OQF1 data");
    OqfData d;
    const auto rank = detail::get_le<std::uint32_t>(in);
    if (rank == 0 || rank > 8) throw IoError("OQF1 rank out of range");
    std::uint64_t n = 1;
    for (std::uint32_t k = 0; k < rank; ++k) {
        d.counts.push_back(detail::get_le<std::uint32_t>(in));
        n *= d.counts.back();
        if (n > 100'000'000) throw IoError("OQF1 grid too large");
    }
    d.values.resize(static_cast<Eigen::Index>(n));
    for (std::uint64_t i = 0; i < n; ++i) {
        const double re = detail::get_le<double>(in);
        const double im = detail::get_le<double>(in);
        d.values[static_cast<Eigen::Index>(i)] = cplx(re, im);
    }
    if (in.peek() != std::char_traits<char>::eof()) throw IoError("trailing bytes after OQF1 data");
    return d;
}

inline nlohmann::ordered_json meta_json(const GridData& d, const std::string& object, const std::string& group,
                                        const std::string& orbit_sign, const std::string& anchor) {
    nlohmann::ordered_json j;
    j["object"] = object;
    j["anchor"] = anchor;
    j["group"] = group;
    j["orbit_sign"] = orbit_sign;
    j["chart"] = d.chart;
    nlohmann::ordered_json axes = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < d.axes.size(); ++k) {
        const auto& c = d.axes[k].coords;
        axes.push_back({{"name", "axis" + std::to_string(k + 1)},
                        {"label", d.axes[k].label},
                        {"min", c.front()},
                        {"step", c.size() > 1 ? c[1] - c[0] : 0.0},
                        {"count", c.size()}});
    }
    j["axes"] = std::move(axes);
    j["values"] = "complex, row-major, last axis fastest";
    return j;
}

// <dir>/<name>.csv, .oqf and .meta.json
inline void write_grid_files(const GridData& d, const std::filesystem::path& dir, const std::string& name,
                             const nlohmann::ordered_json& meta) {
    std::filesystem::create_directories(dir);
    write_csv(d, dir / (name + ".csv"));
    write_oqf(d, dir / (name + ".oqf"));
    std::ofstream m(dir / (name + ".meta.json"));
    if (!m) throw IoError("cannot write metadata for '" + name + "'");
    m << meta.dump(2) << '\n';
}

}  // namespace orbitq
