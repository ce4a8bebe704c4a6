#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pbtk {

/// Exact decimal number used for money amounts and ballot points.
///
/// Values are stored as an integer mantissa scaled by a power of ten, so
/// sums and comparisons are exact and platform-independent; binary floating
/// point is never involved. Up to 18 significant digits and 9 fractional
/// digits are representable. The two infinities exist only to express
/// unbounded constraint defaults; arithmetic on them throws.
class Decimal {
public:
    /// Zero.
    Decimal() = default;

    static Decimal from_int(std::int64_t value);

    /// Parses a decimal literal: optional '-', digits, optionally '.' and
    /// more digits. Rejects leading '+', lone '.', empty input, exponents,
    /// "Infinity" spellings, and anything past the precision limits.
    static std::optional<Decimal> from_string(std::string_view text);

    static Decimal positive_infinity();
    static Decimal negative_infinity();

    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_positive_infinity() const { return kind_ == Kind::positive_inf; }
    bool is_negative_infinity() const { return kind_ == Kind::negative_inf; }
    bool is_zero() const { return kind_ == Kind::finite && units_ == 0; }
    bool is_negative() const;

    /// Canonical text form: no sign on zero, no trailing fractional zeros,
    /// no exponent. Infinities render as "inf" / "-inf" (report output only;
    /// they are not valid file syntax).
    std::string to_string() const;

    /// Lossy conversion for display and Python interop.
    double to_double() const;

    /// Exact arithmetic; throws Error(DECIMAL_OVERFLOW) past 18 significant
    /// digits and Error(NONFINITE_ARITHMETIC) on infinities.
    Decimal operator+(const Decimal& other) const;
    Decimal operator-(const Decimal& other) const;
    Decimal scaled_by(std::int64_t factor) const;

    std::strong_ordering operator<=>(const Decimal& other) const;
    bool operator==(const Decimal& other) const;

    /// Exact quotient of two integers rounded half-away-from-zero to at most
    /// `max_fraction_digits` places. Display helper (vote-length means).
    static Decimal ratio(std::int64_t numerator, std::int64_t denominator,
                         int max_fraction_digits = 6);

    static constexpr int max_significant_digits = 18;
    static constexpr int max_fraction_digits = 9;

private:
    enum class Kind : std::uint8_t { finite, positive_inf, negative_inf };

    std::int64_t units_ = 0;   // mantissa; value = units_ * 10^-scale_
    std::uint8_t scale_ = 0;   // fractional digits, 0..max_fraction_digits
    Kind kind_ = Kind::finite;

    void normalize();
};

}  // namespace pbtk
