#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "macrodesk/errors.hpp"

namespace macrodesk {

// Exact arithmetic for the island economy: fish, hours and pesos stay
// bit-exact through every identity check, so equilibrium tests can demand
// zero tolerance.
using Rational = boost::rational<std::int64_t>;

inline Rational rat(std::int64_t n) { return Rational(n); }

inline Rational rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ValidationError("rational: zero denominator");
    return Rational(num, den);
}

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

// Converts a scenario-file number to an exact rational. Scenario money and
// wage values carry at most six fraction digits; anything finer is rejected
// rather than silently rounded.
inline Rational rational_from_decimal(double x) {
    constexpr std::int64_t scale = 1'000'000;
    if (!std::isfinite(x)) throw ValidationError("rational: non-finite value");
    const double scaled = x * static_cast<double>(scale);
    if (std::abs(scaled) > 9.0e18) throw ValidationError("rational: value out of range");
    const std::int64_t n = std::llround(scaled);
    if (std::abs(scaled - static_cast<double>(n)) > 1e-6) {
        throw ValidationError("rational: more than six fraction digits");
    }
    return Rational(n, scale);
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace macrodesk
