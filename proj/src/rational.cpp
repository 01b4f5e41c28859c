#include "reebforge/rational.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace reebforge {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a == 0 ? 1 : a;
}

Rational make_reduced(i128 n, i128 d) {
    i128 g = gcd128(n, d);
    return Rational(checked_narrow(n / g), checked_narrow(d / g));
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

std::optional<Rational> Rational::parse_decimal(std::string_view text) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return parse(text);
    std::string_view intpart = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return std::nullopt;
    bool negative = !intpart.empty() && intpart.front() == '-';
    if (negative || (!intpart.empty() && intpart.front() == '+')) intpart.remove_prefix(1);
    if (intpart.empty()) intpart = "0";
    auto whole = parse_int(intpart);
    if (!whole || *whole < 0) return std::nullopt;
    std::int64_t fnum = 0;
    std::int64_t fden = 1;
    for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        if (fden > INT64_MAX / 10) return std::nullopt;
        fnum = fnum * 10 + (c - '0');
        fden *= 10;
    }
    Rational value = Rational(*whole) + Rational(fnum, fden);
    return negative ? -value : value;
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& other) const {
    i128 n = i128(num_) * other.den_ + i128(other.num_) * den_;
    i128 d = i128(den_) * other.den_;
    return make_reduced(n, d);
}

Rational Rational::operator-(const Rational& other) const {
    return *this + (-other);
}

Rational Rational::operator*(const Rational& other) const {
    return make_reduced(i128(num_) * other.num_, i128(den_) * other.den_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    i128 lhs = i128(num_) * other.den_;
    i128 rhs = i128(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace reebforge
