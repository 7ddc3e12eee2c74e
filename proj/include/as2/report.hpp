#pragma once

/**
 * @file report.hpp
 * @brief Pass/fail check reports with text and JSON renderings.
 *
 * JSON layout: {"check": NAME, <fields in insertion order>, "pass": BOOL}.
 */

#include "as2/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace as2 {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers; larger ones become strings.
inline Json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

struct CheckReport {
    std::string check;
    std::vector<std::pair<std::string, Json>> fields;
    bool pass = false;

    CheckReport& with(std::string key, Json value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    [[nodiscard]] Json to_json() const {
        Json j;
        j["check"] = check;
        for (const auto& [k, v] : fields) j[k] = v;
        j["pass"] = pass;
        return j;
    }

    [[nodiscard]] std::string to_text() const {
        std::string out = pass ? "PASS " : "FAIL ";
        out += check;
        for (const auto& [k, v] : fields) {
            out += ' ';
            out += k;
            out += '=';
            out += v.is_string() ? v.get<std::string>() : v.dump();
        }
        return out;
    }
};

inline bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace as2
