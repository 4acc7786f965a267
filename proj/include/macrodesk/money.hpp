#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

#include "macrodesk/errors.hpp"

namespace macrodesk {

// Fixed-point money with two fraction digits. National-accounting identities
// are integer sums, so they hold exactly; no tolerance creeps in through the
// representation.
class Money {
  public:
    constexpr Money() = default;

    static constexpr Money from_cents(std::int64_t cents) {
        Money m;
        m.cents_ = cents;
        return m;
    }

    static constexpr Money from_units(std::int64_t units) { return from_cents(units * 100); }

    // Accepts values with at most two fraction digits; finer values indicate
    // a malformed input file.
    static Money parse(double value) {
        if (!std::isfinite(value)) throw ValidationError("money: non-finite value");
        const double scaled = value * 100.0;
        if (std::abs(scaled) > 9.0e18) throw ValidationError("money: value out of range");
        const std::int64_t c = std::llround(scaled);
        if (std::abs(scaled - static_cast<double>(c)) > 1e-6) {
            throw ValidationError("money: more than two fraction digits");
        }
        return from_cents(c);
    }

    constexpr std::int64_t cents() const { return cents_; }
    double value() const { return static_cast<double>(cents_) / 100.0; }

    constexpr Money operator-() const { return from_cents(-cents_); }
    constexpr Money& operator+=(Money o) { cents_ += o.cents_; return *this; }
    constexpr Money& operator-=(Money o) { cents_ -= o.cents_; return *this; }

    friend constexpr Money operator+(Money a, Money b) { return from_cents(a.cents_ + b.cents_); }
    friend constexpr Money operator-(Money a, Money b) { return from_cents(a.cents_ - b.cents_); }
    friend constexpr auto operator<=>(Money a, Money b) = default;

    std::string str() const {
        const std::int64_t c = cents_ < 0 ? -cents_ : cents_;
        std::string s = cents_ < 0 ? "-" : "";
        s += std::to_string(c / 100);
        const std::int64_t frac = c % 100;
        if (frac != 0) {
            s += '.';
            s += static_cast<char>('0' + frac / 10);
            if (frac % 10 != 0) s += static_cast<char>('0' + frac % 10);
        }
        return s;
    }

  private:
    std::int64_t cents_ = 0;
};

}  // namespace macrodesk
