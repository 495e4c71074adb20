#include "qlens/numeric.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>

#include "qlens/errors.hpp"

namespace qlens {

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0)
        return 0.0;
    if (n <= 8) {
        double acc = values[0];
        for (std::size_t i = 1; i < n; ++i)
            acc += values[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

GoldenResult golden_section_minimize(const std::function<double(double)>& f,
                                     double a, double b, double xtol) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;   // 0.618...
    static const double inv_phi2 = (3.0 - std::sqrt(5.0)) / 2.0;  // 0.382...

    double x1 = a + inv_phi2 * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    int iterations = 0;
    while (b - a > xtol && iterations < 400) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + inv_phi2 * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
        ++iterations;
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm), iterations};
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
    double value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError("malformed number: '" + std::string(text) + "'");
    return value;
}

}  // namespace qlens
