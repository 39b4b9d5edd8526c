#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace minari {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with unbounded numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so equality of
/// values is equality of representations. Decimal renderings are computed on
/// demand and never stored.
class ExactRatio {
public:
    ExactRatio() = default;
    ExactRatio(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRatio(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRatio(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return value_ == 0; }
    int sign() const;
    ExactRatio abs() const;

    ExactRatio& operator+=(const ExactRatio& rhs);
    ExactRatio& operator-=(const ExactRatio& rhs);
    ExactRatio& operator*=(const ExactRatio& rhs);
    /// Throws UndefinedIndexError when `rhs` is zero.
    ExactRatio& operator/=(const ExactRatio& rhs);

    friend ExactRatio operator+(ExactRatio lhs, const ExactRatio& rhs) { return lhs += rhs; }
    friend ExactRatio operator-(ExactRatio lhs, const ExactRatio& rhs) { return lhs -= rhs; }
    friend ExactRatio operator*(ExactRatio lhs, const ExactRatio& rhs) { return lhs *= rhs; }
    friend ExactRatio operator/(ExactRatio lhs, const ExactRatio& rhs) { return lhs /= rhs; }
    ExactRatio operator-() const;

    friend bool operator==(const ExactRatio& lhs, const ExactRatio& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const ExactRatio& lhs, const ExactRatio& rhs);

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Decimal rounded (half away from zero) to `digits` significant digits,
    /// trailing zeros removed. Zero renders as "0".
    std::string to_significant(int digits) const;

    /// Decimal rounded (half away from zero) to exactly `places` decimals.
    std::string to_fixed(int places) const;

    double to_double() const;

    /// Parses "p/q", integers, and decimals with an optional exponent
    /// ("0.81", "-1.5e-3"). Decimals are read exactly, so "0.81" is 81/100.
    /// Throws InputError on anything else.
    static ExactRatio parse(std::string_view text);

private:
    boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRatio& x);

/// Base-10 integer with optional sign; leading zeros allowed. Throws InputError.
BigInt parse_decimal_integer(std::string_view text);

/// C(n, 2) = n(n-1)/2 for n >= 0.
BigInt choose2(const BigInt& n);

}  // namespace minari
