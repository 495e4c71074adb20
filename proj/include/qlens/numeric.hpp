#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlens {

// Sum with pairwise reduction; deterministic for a fixed element order and
// accurate to ~log2(n) ulp for same-sign terms.
double pairwise_sum(std::span<const double> values);

struct GoldenResult {
    double x = 0;
    double fx = 0;
    int iterations = 0;
};

// Golden-section search for the minimum of a unimodal f on [a, b].
// Stops when the bracket shrinks below xtol (absolute).
GoldenResult golden_section_minimize(const std::function<double(double)>& f,
                                     double a, double b, double xtol);

// Shortest round-trip decimal representation ('.' separator, no locale).
std::string format_double(double value);

// Strict double parser; throws ConfigError on trailing garbage or empty input.
double parse_double(std::string_view text);

}  // namespace qlens
