#pragma once

#include <string>
#include <vector>

#include "bethe/suite.hpp"

// JSON documents shared by the bethe-gl2 subcommands and the Python module.
// Rationals are strings "p/q"; floats are decimal strings.
namespace bethe {

// Comma separated rationals; ConfigError on a bad token.
std::vector<Rational> parse_points(const std::string& s);
// Explicit points, or seeded_points(n, seed) when empty. ConfigError when the
// count is not n or n is outside [1, 8].
std::vector<Rational> resolve_points(int n, const std::vector<Rational>& points, std::uint64_t seed);

// kname is "zero" or "nilpotent".
Json operator_json(int n, const std::vector<Rational>& points, const std::string& kname);
Json decompose_json(int n, const std::vector<Rational>& points);
Json leaves_json(int n, const std::vector<Rational>& points, unsigned precision, std::uint64_t seed);
Json character_json(int k, int d, int order);
// elimination_golden(k, d) after validating the pair.
Json eliminate_json(int k, int d);

}  // namespace bethe
