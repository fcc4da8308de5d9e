#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "bifre/errors.hpp"

namespace bifre {

/// Unbounded exact rational. Quantities that may leave the unit interval
/// (for instance the sum of two unit rationals in solvability checks)
/// are computed in this type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Renders a rational as "p" or "p/q".
inline std::string fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Truncated decimal rendering with the given number of fractional
/// digits. Annotation only; exact values are the fraction strings.
inline std::string decimal_string(const Rational& r, unsigned digits = 4) {
    Integer num = numerator(r);
    const Integer den = denominator(r);
    std::string s;
    if (num < 0) {
        s += '-';
        num = -num;
    }
    s += Integer(num / den).str();
    num %= den;
    if (num == 0) return s;
    s += '.';
    for (unsigned k = 0; k < digits && num != 0; ++k) {
        num *= 10;
        s += Integer(num / den).str();
        num %= den;
    }
    if (num != 0) s += "...";
    return s;
}

/// An exact rational number in [0, 1].
///
/// The backing representation is always reduced with a positive
/// denominator, so structural equality coincides with numeric equality
/// and comparing two values is exact. Construction rejects anything
/// outside the unit interval.
class UnitRational {
public:
    UnitRational() = default;

    explicit UnitRational(Rational value) : value_(std::move(value)) {
        if (value_ < 0 || value_ > 1)
            throw RangeError("value " + fraction_string(value_) + " outside [0, 1]");
    }

    UnitRational(Integer num, Integer den) : UnitRational(make_ratio(std::move(num), std::move(den))) {}

    UnitRational(long num, long den) : UnitRational(Integer(num), Integer(den)) {}

    static UnitRational zero() { return UnitRational(); }
    static UnitRational one() { return UnitRational(Rational(1)); }

    const Rational& value() const { return value_; }
    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    std::string str() const { return fraction_string(value_); }

    friend bool operator==(const UnitRational& a, const UnitRational& b) {
        return a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const UnitRational& a, const UnitRational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ == b.value_) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

private:
    static Rational make_ratio(Integer num, Integer den) {
        if (den == 0) throw RangeError("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(std::move(num), std::move(den));
    }

    Rational value_{};
};

/// Parses "p/q" or a decimal literal into an exact unit rational.
/// Decimals are exact base-10 fractions: "0.8" is 4/5, and "0.3333333"
/// is 3333333/10000000, not 1/3. Use the fraction form for
/// non-terminating values.
inline UnitRational parse_unit_scalar(std::string_view text) {
    const auto fail = [&] {
        throw ParseError("cannot parse scalar '" + std::string(text) + "'");
    };

    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) fail();

    const auto all_digits = [](std::string_view d) {
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    // Leading zeros would switch the backing parser into octal mode.
    const auto to_integer = [](std::string_view d) {
        const std::size_t first = d.find_first_not_of('0');
        return first == std::string_view::npos ? Integer(0) : Integer(std::string(d.substr(first)));
    };

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        return UnitRational(to_integer(num), to_integer(den));
    }

    std::string_view ipart = s;
    std::string_view fpart;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        ipart = s.substr(0, dot);
        fpart = s.substr(dot + 1);
        if (fpart.find('.') != std::string_view::npos) fail();
    }
    if (ipart.empty() && fpart.empty()) fail();
    if (!ipart.empty() && !all_digits(ipart)) fail();
    if (!fpart.empty() && !all_digits(fpart)) fail();

    std::string digits;
    digits.reserve(ipart.size() + fpart.size());
    digits.append(ipart);
    digits.append(fpart);
    Integer num = to_integer(digits);
    Integer den = 1;
    for (std::size_t k = 0; k < fpart.size(); ++k) den *= 10;
    return UnitRational(std::move(num), std::move(den));
}

} // namespace bifre
