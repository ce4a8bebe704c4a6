#include "pbtk/decimal.hpp"

#include <array>
#include <cmath>

#include "pbtk/error.hpp"

namespace pbtk {

namespace {

using int128 = __int128;

constexpr std::array<std::int64_t, 19> kPow10 = {
    1LL,
    10LL,
    100LL,
    1000LL,
    10000LL,
    100000LL,
    1000000LL,
    10000000LL,
    100000000LL,
    1000000000LL,
    10000000000LL,
    100000000000LL,
    1000000000000LL,
    10000000000000LL,
    100000000000000LL,
    1000000000000000LL,
    10000000000000000LL,
    100000000000000000LL,
    1000000000000000000LL,
};

// Largest mantissa with max_significant_digits digits.
constexpr std::int64_t kMantissaLimit = kPow10[Decimal::max_significant_digits] - 1;

std::int64_t narrow_or_throw(int128 value) {
    if (value > kMantissaLimit || value < -kMantissaLimit) {
        throw Error("DECIMAL_OVERFLOW", "exact decimal arithmetic overflow");
    }
    return static_cast<std::int64_t>(value);
}

}  // namespace

Decimal Decimal::from_int(std::int64_t value) {
    Decimal d;
    d.units_ = narrow_or_throw(value);
    d.scale_ = 0;
    return d;
}

Decimal Decimal::positive_infinity() {
    Decimal d;
    d.kind_ = Kind::positive_inf;
    return d;
}

Decimal Decimal::negative_infinity() {
    Decimal d;
    d.kind_ = Kind::negative_inf;
    return d;
}

bool Decimal::is_negative() const {
    if (kind_ == Kind::negative_inf) return true;
    if (kind_ == Kind::positive_inf) return false;
    return units_ < 0;
}

void Decimal::normalize() {
    if (kind_ != Kind::finite) {
        units_ = 0;
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && units_ % 10 == 0) {
        units_ /= 10;
        --scale_;
    }
    if (units_ == 0) scale_ = 0;
}

std::optional<Decimal> Decimal::from_string(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    std::size_t int_digits = 0;
    int128 mantissa = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        mantissa = mantissa * 10 + (text[pos] - '0');
        if (mantissa > kMantissaLimit) return std::nullopt;
        ++int_digits;
        ++pos;
    }
    if (int_digits == 0) return std::nullopt;  // also rejects ".5" and "-."
    std::size_t frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            mantissa = mantissa * 10 + (text[pos] - '0');
            if (mantissa > kMantissaLimit) return std::nullopt;
            ++frac_digits;
            ++pos;
        }
        if (frac_digits == 0) return std::nullopt;  // "1." is malformed
        if (frac_digits > static_cast<std::size_t>(max_fraction_digits)) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    Decimal d;
    d.units_ = static_cast<std::int64_t>(negative ? -mantissa : mantissa);
    d.scale_ = static_cast<std::uint8_t>(frac_digits);
    d.normalize();
    return d;
}

std::string Decimal::to_string() const {
    if (kind_ == Kind::positive_inf) return "inf";
    if (kind_ == Kind::negative_inf) return "-inf";
    std::int64_t abs_units = units_ < 0 ? -units_ : units_;
    std::string digits = std::to_string(abs_units);
    if (scale_ > 0) {
        if (digits.size() <= scale_) {
            digits.insert(0, scale_ + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - scale_, 1, '.');
    }
    if (units_ < 0) digits.insert(0, 1, '-');
    return digits;
}

double Decimal::to_double() const {
    if (kind_ == Kind::positive_inf) return HUGE_VAL;
    if (kind_ == Kind::negative_inf) return -HUGE_VAL;
    return static_cast<double>(units_) / static_cast<double>(kPow10[scale_]);
}

Decimal Decimal::operator+(const Decimal& other) const {
    if (!is_finite() || !other.is_finite()) {
        throw Error("NONFINITE_ARITHMETIC", "arithmetic on an infinite bound");
    }
    std::uint8_t scale = std::max(scale_, other.scale_);
    int128 a = static_cast<int128>(units_) * kPow10[scale - scale_];
    int128 b = static_cast<int128>(other.units_) * kPow10[scale - other.scale_];
    Decimal d;
    d.units_ = narrow_or_throw(a + b);
    d.scale_ = scale;
    d.normalize();
    return d;
}

Decimal Decimal::operator-(const Decimal& other) const {
    if (!other.is_finite()) {
        throw Error("NONFINITE_ARITHMETIC", "arithmetic on an infinite bound");
    }
    Decimal negated = other;
    negated.units_ = -negated.units_;
    return *this + negated;
}

Decimal Decimal::scaled_by(std::int64_t factor) const {
    if (!is_finite()) {
        throw Error("NONFINITE_ARITHMETIC", "arithmetic on an infinite bound");
    }
    Decimal d;
    d.units_ = narrow_or_throw(static_cast<int128>(units_) * factor);
    d.scale_ = scale_;
    d.normalize();
    return d;
}

std::strong_ordering Decimal::operator<=>(const Decimal& other) const {
    auto rank = [](Kind k) { return k == Kind::negative_inf ? -1 : k == Kind::finite ? 0 : 1; };
    if (kind_ != Kind::finite || other.kind_ != Kind::finite) {
        return rank(kind_) <=> rank(other.kind_);
    }
    std::uint8_t scale = std::max(scale_, other.scale_);
    int128 a = static_cast<int128>(units_) * kPow10[scale - scale_];
    int128 b = static_cast<int128>(other.units_) * kPow10[scale - other.scale_];
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool Decimal::operator==(const Decimal& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
}

Decimal Decimal::ratio(std::int64_t numerator, std::int64_t denominator, int max_frac) {
    if (denominator == 0) throw Error("DECIMAL_OVERFLOW", "division by zero");
    bool negative = (numerator < 0) != (denominator < 0);
    int128 num = numerator < 0 ? -static_cast<int128>(numerator) : numerator;
    int128 den = denominator < 0 ? -static_cast<int128>(denominator) : denominator;
    int128 whole = num / den;
    int128 rem = num % den;
    int frac = 0;
    int128 mantissa = whole;
    while (rem != 0 && frac < max_frac) {
        rem *= 10;
        mantissa = mantissa * 10 + rem / den;
        rem %= den;
        ++frac;
    }
    if (rem * 2 >= den) mantissa += 1;  // round half away from zero
    Decimal d;
    d.units_ = narrow_or_throw(negative ? -mantissa : mantissa);
    d.scale_ = static_cast<std::uint8_t>(frac);
    d.normalize();
    return d;
}

}  // namespace pbtk
