#pragma once

/**
 * @file scene.hpp
 * @brief Line-oriented scene files: a fan plus named divisors and pair
 *        boundaries.
 *
 * Format:
 *   rays            # exactly one section; N lines of two integers, ccw
 *   1 0
 *   0 1
 *   -1 -1
 *   divisor <name> <N rationals>
 *   boundary <name> <N rationals>
 * '#' starts a comment; blank lines are ignored.
 */

#include "toric/fan.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

struct SceneError : std::runtime_error {
    int line;
    SceneError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct SceneFile {
    std::vector<Vec> rays;
    std::map<std::string, std::vector<Rat>> divisors;
    std::map<std::string, std::vector<Rat>> boundaries;

    bool operator==(const SceneFile& o) const = default;

    Fan fan() const { return Fan::validate(rays); }
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline Int parse_int_token(const std::string& t, int line) {
    Rat q = [&] {
        try {
            return parse_rat(t);
        } catch (const std::exception& e) {
            throw SceneError(line, e.what());
        }
    }();
    if (!is_integer(q)) throw SceneError(line, "expected an integer, got '" + t + "'");
    return numerator(q);
}

}  // namespace detail

inline SceneFile parse_scene(const std::string& text) {
    SceneFile scene;
    bool seen_rays = false;
    bool in_rays = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto toks = detail::tokens(detail::strip_comment(raw));
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "rays") {
            if (toks.size() != 1) throw SceneError(line, "'rays' takes no arguments");
            if (seen_rays) throw SceneError(line, "duplicate rays section");
            seen_rays = true;
            in_rays = true;
            continue;
        }
        if (head == "divisor" || head == "boundary") {
            in_rays = false;
            if (!seen_rays)
                throw SceneError(line, "'" + head + "' before the rays section");
            if (toks.size() < 2) throw SceneError(line, "'" + head + "' needs a name");
            const std::string& name = toks[1];
            auto& table = head == "divisor" ? scene.divisors : scene.boundaries;
            if (table.count(name)) throw SceneError(line, "duplicate name '" + name + "'");
            if (toks.size() - 2 != scene.rays.size())
                throw SceneError(line, "'" + name + "' has " +
                                           std::to_string(toks.size() - 2) +
                                           " coefficients, fan has " +
                                           std::to_string(scene.rays.size()) + " rays");
            std::vector<Rat> coeffs;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                try {
                    coeffs.push_back(parse_rat(toks[i]));
                } catch (const std::exception& e) {
                    throw SceneError(line, e.what());
                }
            }
            table.emplace(name, std::move(coeffs));
            continue;
        }
        if (in_rays) {
            if (toks.size() != 2)
                throw SceneError(line, "a ray line needs exactly two integers");
            scene.rays.emplace_back(detail::parse_int_token(toks[0], line),
                                    detail::parse_int_token(toks[1], line));
            continue;
        }
        throw SceneError(line, "unrecognized directive '" + head + "'");
    }
    if (!seen_rays) throw SceneError(line, "missing rays section");
    if (scene.rays.size() < 3) throw SceneError(line, "rays section has fewer than 3 rays");
    return scene;
}

inline std::string emit_scene(const SceneFile& scene) {
    std::ostringstream out;
    out << "rays\n";
    for (const auto& r : scene.rays) out << r.x.str() << " " << r.y.str() << "\n";
    for (const auto& [name, coeffs] : scene.divisors) {
        out << "divisor " << name;
        for (const auto& q : coeffs) out << " " << format_rat(q);
        out << "\n";
    }
    for (const auto& [name, coeffs] : scene.boundaries) {
        out << "boundary " << name;
        for (const auto& q : coeffs) out << " " << format_rat(q);
        out << "\n";
    }
    return out.str();
}

}  // namespace toric
