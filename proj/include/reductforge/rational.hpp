#pragma once

#include "reductforge/error.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace reductforge {

// Exact rational arithmetic for accuracy / quality / rule metrics. Kept
// exact internally; two-decimal rendering happens only at report
// boundaries. Values stay tiny (counts over a table), so int64 never
// overflows here.
//
// Self-contained on purpose: boost::rational 1.74 infinitely recurses on
// mixed integer comparisons under C++20's reversed operator rewriting.
class Ratio {
public:
    constexpr Ratio() = default;
    constexpr Ratio(std::int64_t value) : num_(value) {} // NOLINT: implicit like an integer
    constexpr Ratio(std::int64_t numerator, std::int64_t denominator)
        : num_(numerator), den_(denominator) {
        if (den_ == 0) fail(ErrorKind::domain, "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t numerator() const { return num_; }
    constexpr std::int64_t denominator() const { return den_; }

    friend constexpr bool operator==(const Ratio&, const Ratio&) = default;
    friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend constexpr Ratio operator+(const Ratio& a, const Ratio& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Ratio operator-(const Ratio& a, const Ratio& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Ratio operator*(const Ratio& a, const Ratio& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    constexpr Ratio& operator+=(const Ratio& other) { return *this = *this + other; }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Renders with exactly two decimals, rounding half away from zero.
// format_fixed2(Ratio(4, 15)) == "0.27".
inline std::string format_fixed2(const Ratio& r) {
    std::int64_t num = r.numerator();
    const std::int64_t den = r.denominator();
    const bool neg = num < 0;
    if (neg) num = -num;
    const std::int64_t scaled = (num * 200 + den) / (2 * den);
    std::string s = neg && scaled != 0 ? "-" : "";
    s += std::to_string(scaled / 100);
    s += '.';
    const std::int64_t frac = scaled % 100;
    if (frac < 10) s += '0';
    s += std::to_string(frac);
    return s;
}

} // namespace reductforge
