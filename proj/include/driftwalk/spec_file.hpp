#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "driftwalk/environment.hpp"

namespace driftwalk {

/// A probability as written in a spec file: either a JSON number, a decimal
/// string, or an exact fraction string such as "2/3". The original text is
/// kept so that re-emitting a spec reproduces it.
struct Probability {
    double value = 0.0;
    std::string text;
    bool quoted = false;

    friend bool operator==(const Probability&, const Probability&) = default;
};

/// Parses "0.75", "1", "2/3". `field` names the spec entry in diagnostics.
Probability parse_probability(std::string_view text, std::string_view field);

/// One of three shapes:
///   {"n": N, "omega": [w1, ..., w_{N-1}]}
///   {"n": N, "q": q, "p": p, "positions": [s1, ..., sk]}
///   {"n": N, "q": q, "p": p, "k": k, "layout": "equally_spaced"}
struct EnvironmentSpec {
    enum class Shape { explicit_omega, positions, equally_spaced };

    Shape shape = Shape::explicit_omega;
    std::size_t n = 0;
    std::vector<Probability> omega;
    std::optional<Probability> q;
    std::optional<Probability> p;
    std::vector<std::size_t> positions;
    std::size_t k = 0;

    Environment environment() const;
    /// Present for the two parametric shapes.
    std::optional<DriftPlacement> placement() const;

    friend bool operator==(const EnvironmentSpec&, const EnvironmentSpec&) = default;
};

/// Validates shape and every Environment / DriftPlacement constraint.
/// Throws ValidationError naming the offending field.
EnvironmentSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const EnvironmentSpec& spec);
EnvironmentSpec load_spec(const std::filesystem::path& path);

}  // namespace driftwalk
