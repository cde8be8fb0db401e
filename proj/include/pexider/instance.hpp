#pragma once

#include "pexider/piecewise.hpp"

namespace pexider {

/// phi((x+y)/2) (f1(x) - f2(y)) = 0 on I1 x I2, with phi known only through
/// its zero set inside D = (I1 + I2) / 2.
class EquationInstance {
public:
    /// Throws DomainError unless I1, I2 are nonempty open, the functions live
    /// on them, and zero_set ⊆ D.
    EquationInstance(Interval i1, Interval i2, IntervalSet zero_set, PiecewiseConstant f1, PiecewiseConstant f2);
    EquationInstance(PiecewiseConstant f1, PiecewiseConstant f2, IntervalSet zero_set);

    const Interval& i1() const noexcept { return i1_; }
    const Interval& i2() const noexcept { return i2_; }
    const Interval& domain() const noexcept { return d_; }
    const IntervalSet& zero_set() const noexcept { return zero_set_; }
    const PiecewiseConstant& f1() const noexcept { return f1_; }
    const PiecewiseConstant& f2() const noexcept { return f2_; }

    /// phi(u) == 0. `u` must lie in D.
    bool phi_vanishes(const Rational& u) const { return zero_set_.contains(u); }

    EquationInstance with_zero_set(IntervalSet zero_set) const;

    friend bool operator==(const EquationInstance&, const EquationInstance&) = default;

private:
    Interval i1_;
    Interval i2_;
    Interval d_;
    IntervalSet zero_set_;
    PiecewiseConstant f1_;
    PiecewiseConstant f2_;
};

}  // namespace pexider
