#pragma once

// JSON, CSV and plain-text forms of series, triangles and Bernoulli families.
// Every numeric value is written as its canonical scalar string.

#include <string>
#include <string_view>

#include "dseries/fps.hpp"
#include "dseries/stirling.hpp"

namespace dseries {

TriangleKind parse_kind(std::string_view name);

// {"order", "ring", "coeffs", "egf"}; with egf set the listed values are
// n! * coeffs[n].
std::string series_json(const Series& s, bool egf = false);
Series series_from_json(std::string_view text);
std::string series_csv(const Series& s, bool egf = false);
std::string series_plain(const Series& s, bool egf = false);

// {"kind", "f", "ring", "max_n", "rows"}.
std::string triangle_json(const Triangle& t, std::string_view f);
// Throws BadScalarText or InvalidArgument on malformed input.
Triangle triangle_from_json(std::string_view text);
// Header n,k,value.
std::string triangle_csv(const Triangle& t);
std::string triangle_plain(const Triangle& t);

std::string bernoulli_json(const BernoulliFamily& b, std::string_view f);
std::string bernoulli_csv(const BernoulliFamily& b);
std::string bernoulli_plain(const BernoulliFamily& b);

// Quotes a CSV cell that contains '/', ',' or '"'.
std::string csv_cell(const std::string& v);

}  // namespace dseries
