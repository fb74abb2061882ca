/**
 * @file report.hpp
 * @brief Check results and their JSON form.
 *
 * A report passes iff every check passes. Serialization is byte-stable: keys
 * come out in a fixed order and checks keep their run order.
 */
#pragma once

#include "json.hpp"  // vendored nlohmann::json

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace z3z3 {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
    std::string id;
    std::vector<Check> checks;
    std::optional<int> expected_dim;
    std::optional<int> computed_dim;
    long long elapsed_ms = 0;

    [[nodiscard]] bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    [[nodiscard]] int failures() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
    bool add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
        return pass;
    }
    [[nodiscard]] const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    /// equality ignoring elapsed_ms, the one field outside the determinism contract
    [[nodiscard]] bool same_content(const Report& o) const {
        return id == o.id && checks == o.checks && expected_dim == o.expected_dim && computed_dim == o.computed_dim;
    }
};

inline void to_json(nlohmann::ordered_json& j, const Check& c) {
    j = nlohmann::ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

inline void from_json(const nlohmann::ordered_json& j, Check& c) {
    j.at("name").get_to(c.name);
    j.at("pass").get_to(c.pass);
    j.at("detail").get_to(c.detail);
}

namespace detail {

inline nlohmann::ordered_json optional_int(const std::optional<int>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

inline std::optional<int> read_optional_int(const nlohmann::ordered_json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<int>();
}

}  // namespace detail

inline void to_json(nlohmann::ordered_json& j, const Report& r) {
    j = nlohmann::ordered_json{{"case", r.id},
                               {"checks", r.checks},
                               {"expected_dim", detail::optional_int(r.expected_dim)},
                               {"computed_dim", detail::optional_int(r.computed_dim)},
                               {"elapsed_ms", r.elapsed_ms}};
}

inline void from_json(const nlohmann::ordered_json& j, Report& r) {
    j.at("case").get_to(r.id);
    j.at("checks").get_to(r.checks);
    r.expected_dim = detail::read_optional_int(j.at("expected_dim"));
    r.computed_dim = detail::read_optional_int(j.at("computed_dim"));
    j.at("elapsed_ms").get_to(r.elapsed_ms);
}

/// Wall-clock milliseconds since construction.
class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace z3z3
