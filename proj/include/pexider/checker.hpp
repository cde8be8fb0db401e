#pragma once

#include "pexider/instance.hpp"

#include <optional>

namespace pexider {

/// A pair (x, y) in I1 x I2 with phi((x+y)/2) != 0 and f1(x) != f2(y).
struct Witness {
    Rational x;
    Rational y;

    Rational midpoint() const { return pexider::midpoint(x, y); }
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;  // present iff !holds
};

/// Union of half_sum(P, Q) over piece pairs of f1, f2 with different values.
/// The equation holds exactly when this set lies in the zero set.
IntervalSet required_zero_region(const PiecewiseConstant& f1, const PiecewiseConstant& f2);

/// Exact decision. A failing verdict carries a rational witness.
Verdict check_exact(const EquationInstance& inst);

/// Literal evaluation of the equation on the lattice step * Z inside
/// (I1 ∩ window) x (I2 ∩ window). Sound, not complete.
/// Throws DomainError if step <= 0 or window is unbounded.
Verdict check_grid(const EquationInstance& inst, const Interval& window, const Rational& step);

/// Closed hull of every finite endpoint and breakpoint, padded by 1.
Interval default_window(const EquationInstance& inst);

bool is_zero_set_closed(const EquationInstance& inst);

/// Direct pointwise test of a candidate witness.
bool is_violation(const EquationInstance& inst, const Rational& x, const Rational& y);

}  // namespace pexider
