#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace reebforge {

/// Exact rational number with a positive denominator, always reduced.
/// Heights and sweep values are rationals so that event ordering never
/// depends on floating-point ties.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    /// Accepts "p/q" or a plain integer, e.g. "-3/4", "7".
    static std::optional<Rational> parse(std::string_view text);

    /// Accepts the same forms as parse() plus decimals ("1.25", "-0.5").
    static std::optional<Rational> parse_decimal(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// Canonical serialized form, always "p/q" (so "3" prints as "3/1").
    std::string str() const;

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const;
    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;
    Rational operator*(const Rational& other) const;

    bool operator==(const Rational& other) const = default;
    std::strong_ordering operator<=>(const Rational& other) const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace reebforge
