#pragma once

#include "pexider/rational.hpp"

#include <compare>
#include <optional>
#include <string>

namespace pexider {

/// An element of the extended real line: an exact rational, -inf or +inf.
class ExtReal {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtReal() = default;
    ExtReal(Rational q);  // NOLINT(google-explicit-constructor)
    ExtReal(long v) : ExtReal(Rational(v)) {}  // NOLINT(google-explicit-constructor)

    static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }
    static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

    /// The finite value; throws DomainError for an infinity.
    const Rational& value() const;

    ExtReal operator-() const;
    ExtReal twice() const;
    ExtReal half() const;

    /// Throws DomainError on (+inf) + (-inf).
    friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
    friend ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

    friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);
    friend bool operator==(const ExtReal& a, const ExtReal& b) { return (a <=> b) == 0; }

private:
    explicit ExtReal(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Finite;
    Rational value_;
};

const ExtReal& max(const ExtReal& a, const ExtReal& b);
const ExtReal& min(const ExtReal& a, const ExtReal& b);

/// `-inf`, `+inf`, or the rational's canonical text.
std::string to_string(const ExtReal& x);

/// Accepts `inf`, `+inf`, `-inf` (also `infinity`) and any rational literal.
ExtReal parse_ext_real(std::string_view text);

}  // namespace pexider
