#include "pexider/instance.hpp"

#include "pexider/error.hpp"

namespace pexider {

EquationInstance::EquationInstance(Interval i1, Interval i2, IntervalSet zero_set, PiecewiseConstant f1,
                                   PiecewiseConstant f2)
    : i1_(std::move(i1)),
      i2_(std::move(i2)),
      d_(half_sum(i1_, i2_)),
      zero_set_(std::move(zero_set)),
      f1_(std::move(f1)),
      f2_(std::move(f2)) {
    if (i1_.is_empty() || !i1_.is_open()) {
        throw DomainError("I1 must be a nonempty open interval, got " + to_string(i1_));
    }
    if (i2_.is_empty() || !i2_.is_open()) {
        throw DomainError("I2 must be a nonempty open interval, got " + to_string(i2_));
    }
    if (f1_.domain() != i1_) {
        throw DomainError("f1 is defined on " + to_string(f1_.domain()) + ", expected I1 = " + to_string(i1_));
    }
    if (f2_.domain() != i2_) {
        throw DomainError("f2 is defined on " + to_string(f2_.domain()) + ", expected I2 = " + to_string(i2_));
    }
    if (!is_subset(zero_set_, IntervalSet(d_))) {
        throw DomainError("zero set " + to_string(zero_set_) + " is not contained in D = " + to_string(d_));
    }
}

EquationInstance::EquationInstance(PiecewiseConstant f1, PiecewiseConstant f2, IntervalSet zero_set)
    : EquationInstance(f1.domain(), f2.domain(), std::move(zero_set), f1, f2) {}

EquationInstance EquationInstance::with_zero_set(IntervalSet zero_set) const {
    return EquationInstance(i1_, i2_, std::move(zero_set), f1_, f2_);
}

}  // namespace pexider
