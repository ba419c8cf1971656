#include "driftwalk/spec_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <stdexcept>

#include "driftwalk/errors.hpp"
#include "driftwalk/numeric.hpp"
#include "driftwalk/placement.hpp"

namespace driftwalk {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_decimal(std::string_view text, std::string_view field) {
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError("cannot parse '" + std::string(text) + "' as a number",
                              std::string(field));
    }
    return value;
}

Probability probability_from_json(const nlohmann::json& value, const std::string& field) {
    if (value.is_number()) {
        return {value.get<double>(), value.dump(), false};
    }
    if (value.is_string()) {
        auto p = parse_probability(value.get<std::string>(), field);
        p.quoted = true;
        return p;
    }
    throw ValidationError("expected a number or a fraction string", field);
}

nlohmann::json probability_to_json(const Probability& p) {
    if (p.quoted) return p.text;
    return nlohmann::json::parse(p.text);
}

std::size_t count_from_json(const nlohmann::json& value, const std::string& field) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ValidationError("expected a non-negative integer", field);
    }
    return value.get<std::size_t>();
}

}  // namespace

Probability parse_probability(std::string_view text, std::string_view field) {
    const std::string_view body = trim(text);
    Probability out;
    out.text = std::string(body);
    out.quoted = true;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const double num = parse_decimal(body.substr(0, slash), field);
        const double den = parse_decimal(body.substr(slash + 1), field);
        if (den == 0.0) throw ValidationError("zero denominator in '" + out.text + "'", std::string(field));
        out.value = num / den;
    } else {
        out.value = parse_decimal(body, field);
    }
    return out;
}

Environment EnvironmentSpec::environment() const {
    if (shape == Shape::explicit_omega) {
        std::vector<double> w;
        w.reserve(omega.size());
        for (const auto& p : omega) w.push_back(p.value);
        return Environment(n, std::move(w));
    }
    return make_environment(*placement());
}

std::optional<DriftPlacement> EnvironmentSpec::placement() const {
    const DriftParams params{q ? q->value : 0.0, p ? p->value : 0.0};
    switch (shape) {
        case Shape::explicit_omega:
            return std::nullopt;
        case Shape::positions:
            return DriftPlacement(n, positions, params);
        case Shape::equally_spaced:
            if (n < 1 || k > n - 1) throw ValidationError("k must lie in [0, n-1]", "k");
            return DriftPlacement(n, equally_spaced_positions(n - 1, k), params);
    }
    return std::nullopt;
}

EnvironmentSpec spec_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ValidationError("spec must be a JSON object", "spec");

    static const std::set<std::string> known{"n", "omega", "q", "p", "positions", "k", "layout"};
    for (const auto& [key, _] : doc.items()) {
        if (!known.count(key)) throw ValidationError("unknown field '" + key + "'", key);
    }

    const int shapes = static_cast<int>(doc.contains("omega")) +
                       static_cast<int>(doc.contains("positions")) +
                       static_cast<int>(doc.contains("layout"));
    if (shapes != 1) {
        throw ValidationError("spec needs exactly one of 'omega', 'positions' or 'layout'",
                              "spec");
    }
    if (!doc.contains("n")) throw ValidationError("missing field 'n'", "n");

    EnvironmentSpec spec;
    spec.n = count_from_json(doc.at("n"), "n");
    if (spec.n < 1) throw ValidationError("n must be at least 1", "n");
    if (spec.n > kMaxSites) {
        throw SizeError("n = " + std::to_string(spec.n) + " exceeds the supported " +
                        std::to_string(kMaxSites));
    }

    if (doc.contains("omega")) {
        spec.shape = EnvironmentSpec::Shape::explicit_omega;
        for (const char* key : {"q", "p", "k"}) {
            if (doc.contains(key)) {
                throw ValidationError(std::string("field '") + key +
                                          "' does not belong with 'omega'",
                                      key);
            }
        }
        const auto& arr = doc.at("omega");
        if (!arr.is_array()) throw ValidationError("'omega' must be an array", "omega");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            spec.omega.push_back(
                probability_from_json(arr[i], "omega[" + std::to_string(i) + "]"));
        }
    } else {
        for (const char* key : {"q", "p"}) {
            if (!doc.contains(key)) {
                throw ValidationError(std::string("missing field '") + key + "'", key);
            }
        }
        spec.q = probability_from_json(doc.at("q"), "q");
        spec.p = probability_from_json(doc.at("p"), "p");

        if (doc.contains("positions")) {
            spec.shape = EnvironmentSpec::Shape::positions;
            const auto& arr = doc.at("positions");
            if (!arr.is_array()) {
                throw ValidationError("'positions' must be an array", "positions");
            }
            for (std::size_t i = 0; i < arr.size(); ++i) {
                spec.positions.push_back(
                    count_from_json(arr[i], "positions[" + std::to_string(i) + "]"));
            }
            spec.k = spec.positions.size();
            if (doc.contains("k") && count_from_json(doc.at("k"), "k") != spec.k) {
                throw ValidationError("'k' disagrees with the number of positions", "k");
            }
        } else {
            spec.shape = EnvironmentSpec::Shape::equally_spaced;
            const auto& layout = doc.at("layout");
            if (!layout.is_string() || layout.get<std::string>() != "equally_spaced") {
                throw ValidationError("'layout' must be \"equally_spaced\"", "layout");
            }
            if (!doc.contains("k")) throw ValidationError("missing field 'k'", "k");
            spec.k = count_from_json(doc.at("k"), "k");
        }
    }

    // Enforce every domain constraint at load time.
    (void)spec.environment();
    return spec;
}

nlohmann::json spec_to_json(const EnvironmentSpec& spec) {
    nlohmann::json doc;
    doc["n"] = spec.n;
    switch (spec.shape) {
        case EnvironmentSpec::Shape::explicit_omega: {
            auto arr = nlohmann::json::array();
            for (const auto& p : spec.omega) arr.push_back(probability_to_json(p));
            doc["omega"] = std::move(arr);
            break;
        }
        case EnvironmentSpec::Shape::positions:
            doc["q"] = probability_to_json(*spec.q);
            doc["p"] = probability_to_json(*spec.p);
            doc["positions"] = spec.positions;
            break;
        case EnvironmentSpec::Shape::equally_spaced:
            doc["q"] = probability_to_json(*spec.q);
            doc["p"] = probability_to_json(*spec.p);
            doc["k"] = spec.k;
            doc["layout"] = "equally_spaced";
            break;
    }
    return doc;
}

EnvironmentSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file '" + path.string() + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("spec file '" + path.string() + "' is not valid JSON: " + e.what(),
                              "spec");
    }
    return spec_from_json(doc);
}

}  // namespace driftwalk
