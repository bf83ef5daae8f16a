#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "suffcheck/errors.hpp"

namespace suffcheck {

// Exact rational over int64 numerator / positive int64 denominator, always in
// lowest terms. Arithmetic goes through 128-bit intermediates and raises
// Overflow instead of wrapping; comparisons never round.
class Rational {
  public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_negative() const noexcept { return num_ < 0; }

    Rational operator-() const noexcept;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

    // "7/3", "-4", "0"
    std::string to_string() const;
    static Rational parse(std::string_view text);

  private:
    static Rational make(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace suffcheck
