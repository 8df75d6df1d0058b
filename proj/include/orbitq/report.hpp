#pragma once

// Pass/fail records for identity checks.

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace orbitq {

struct CheckRecord {
    std::string id;
    std::string anchor;
    double error = 0.0;
    double tolerance = 0.0;
    std::string grid;
    bool pass = false;
    std::string note;
    double base_tolerance = 0.0;  // before overrides and scaling
};

class VerificationReport {
public:
    explicit VerificationReport(double tolerance_scale = 1.0) : scale_(tolerance_scale) {}

    double tolerance_scale() const { return scale_; }

    // per-id tolerances that replace the built-in ones before scaling
    void set_overrides(std::map<std::string, double> o) { overrides_ = std::move(o); }

    // pass iff error <= tolerance * scale; NaN never passes
    const CheckRecord& add(std::string id, std::string anchor, double error, double tolerance, std::string grid,
                           std::string note = {}) {
        const double base = tolerance;
        const auto it = overrides_.find(id);
        if (it != overrides_.end()) tolerance = it->second;
        CheckRecord r{std::move(id), std::move(anchor), error, tolerance * scale_, std::move(grid), false,
                      std::move(note), base};
        r.pass = std::isfinite(error) && error <= r.tolerance;
        records_.push_back(std::move(r));
        return records_.back();
    }

    // records are re-judged under this report's overrides and scale
    void merge(const VerificationReport& o) {
        for (const CheckRecord& r : o.records_) add(r.id, r.anchor, r.error, r.base_tolerance, r.grid, r.note);
    }

    const std::vector<CheckRecord>& records() const { return records_; }
    int size() const { return static_cast<int>(records_.size()); }
    int failures() const {
        return static_cast<int>(std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return !r.pass; }));
    }
    bool passed() const { return failures() == 0; }

    const CheckRecord* find(const std::string& id) const {
        for (const auto& r : records_)
            if (r.id == id) return &r;
        return nullptr;
    }

    nlohmann::ordered_json to_json() const {
        std::vector<const CheckRecord*> sorted;
        for (const auto& r : records_) sorted.push_back(&r);
        std::stable_sort(sorted.begin(), sorted.end(), [](const CheckRecord* a, const CheckRecord* b) { return a->id < b->id; });
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const CheckRecord* r : sorted) {
            nlohmann::ordered_json j;
            j["id"] = r->id;
            j["anchor"] = r->anchor;
            j["error"] = finite_or_string(r->error);
            j["tolerance"] = r->tolerance;
            j["grid"] = r->grid;
            j["pass"] = r->pass;
            if (!r->note.empty()) j["note"] = r->note;
            checks.push_back(std::move(j));
        }
        nlohmann::ordered_json out;
        out["summary"] = {{"checks", size()}, {"passed", size() - failures()}, {"failed", failures()},
                          {"tolerance_scale", scale_}};
        out["checks"] = std::move(checks);
        return out;
    }

private:
    static nlohmann::ordered_json finite_or_string(double v) {
        if (std::isfinite(v)) return v;
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    }

    double scale_ = 1.0;
    std::map<std::string, double> overrides_;
    std::vector<CheckRecord> records_;
};

}  // namespace orbitq
