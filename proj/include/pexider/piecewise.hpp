#pragma once

#include "pexider/interval_set.hpp"

#include <optional>
#include <vector>

namespace pexider {

struct Piece {
    Interval piece;
    Rational value;

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// A step function on a nonempty open interval with finitely many pieces.
///
/// Interior breakpoints belong to the piece on their right: the first piece
/// is open, every later one is [b, next) and the last runs to sup domain.
/// Adjacent pieces never share a value (merged at construction).
class PiecewiseConstant {
public:
    /// Validates that `pieces` partition `domain` under the breakpoint
    /// convention and canonicalizes. Throws DomainError otherwise.
    PiecewiseConstant(Interval domain, const std::vector<Piece>& pieces);

    /// `values.size() == breakpoints.size() + 1`; breakpoints strictly
    /// increasing and strictly inside `domain`.
    PiecewiseConstant(Interval domain, std::vector<Rational> breakpoints, std::vector<Rational> values);

    static PiecewiseConstant constant(Interval domain, Rational value);

    const Interval& domain() const noexcept { return domain_; }
    const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<Rational>& values() const noexcept { return values_; }
    std::size_t piece_count() const noexcept { return values_.size(); }

    Interval piece(std::size_t index) const;
    std::vector<Piece> pieces() const;

    /// Index of the piece containing x. Throws DomainError outside the domain.
    std::size_t piece_index(const Rational& x) const;
    const Rational& evaluate(const Rational& x) const { return values_[piece_index(x)]; }

    /// sup of the u with f == value on (inf domain, u); -inf if none.
    ExtReal left_plateau_sup(const Rational& value) const;
    /// inf of the u with f == value on (u, sup domain); +inf if none.
    ExtReal right_plateau_inf(const Rational& value) const;

    std::optional<Rational> is_constant() const;

    /// f^{-1}({value}) as a normalized set of pieces.
    IntervalSet level_components(const Rational& value) const;

    friend bool operator==(const PiecewiseConstant&, const PiecewiseConstant&) = default;

private:
    void canonicalize();

    Interval domain_;
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

}  // namespace pexider
