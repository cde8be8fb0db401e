#include "pexider/classifier.hpp"

#include "pexider/error.hpp"

namespace pexider {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool both_constant_equal_to(const EquationInstance& inst, const Rational& lambda) {
    auto c1 = inst.f1().is_constant();
    auto c2 = inst.f2().is_constant();
    return c1 && c2 && *c1 == lambda && *c2 == lambda;
}

std::optional<Rational> common_constant(const EquationInstance& inst) {
    auto c1 = inst.f1().is_constant();
    auto c2 = inst.f2().is_constant();
    if (c1 && c2 && *c1 == *c2) {
        return c1;
    }
    return std::nullopt;
}

IntervalSet open_interiors(const IntervalSet& s) {
    std::vector<Interval> parts;
    for (const Interval& p : s.parts()) {
        parts.push_back(Interval::make(p.lo(), p.hi(), false, false));
    }
    return IntervalSet(std::move(parts));
}

// I \ (left ∪ right) when that is a single interval, Empty when void.
std::optional<Interval> remainder(const Interval& whole, const Interval& left, const Interval& right) {
    IntervalSet rest = complement_within(IntervalSet{left, right}, whole);
    if (rest.size() > 1) {
        return std::nullopt;
    }
    return rest.is_empty() ? Interval::empty() : rest.parts().front();
}

bool is_closed_proper_subinterval(const Interval& k, const Interval& whole) {
    return !k.is_empty() && k != whole && whole.contains(k) && is_closed_in(IntervalSet(k), whole);
}

bool plateau_ok(const Interval& u, const Interval& whole, const PiecewiseConstant& f,
                const std::optional<Rational>& value, bool left_end) {
    if (!value) {
        return u.is_empty();
    }
    if (u.is_empty() || !u.is_open() || !whole.contains(u)) {
        return false;
    }
    if (left_end ? u.lo() != whole.lo() : u.hi() != whole.hi()) {
        return false;
    }
    return is_subset(IntervalSet(u), f.level_components(*value));
}

bool verify_two_sided(const EquationInstance& inst, const TwoSidedPlateaus& c) {
    if (!c.lambda && !c.mu) {
        return false;
    }
    if (!plateau_ok(c.u1, inst.i1(), inst.f1(), c.lambda, true) ||
        !plateau_ok(c.v1, inst.i2(), inst.f2(), c.lambda, true) ||
        !plateau_ok(c.u2, inst.i1(), inst.f1(), c.mu, false) ||
        !plateau_ok(c.v2, inst.i2(), inst.f2(), c.mu, false)) {
        return false;
    }
    auto k1 = remainder(inst.i1(), c.u1, c.u2);
    auto k2 = remainder(inst.i2(), c.v1, c.v2);
    if (!k1 || !k2 || *k1 != c.k1 || *k2 != c.k2) {
        return false;
    }
    if (!is_closed_proper_subinterval(c.k1, inst.i1()) || !is_closed_proper_subinterval(c.k2, inst.i2())) {
        return false;
    }
    IntervalSet forced = unite(IntervalSet(half_sum(c.k1, inst.i2())), IntervalSet(half_sum(inst.i1(), c.k2)));
    return is_subset(forced, inst.zero_set());
}

bool verify_one_constant(const EquationInstance& inst, const OneConstant& c) {
    if (c.i != 1 && c.i != 2) {
        return false;
    }
    const PiecewiseConstant& fi = c.i == 1 ? inst.f1() : inst.f2();
    const PiecewiseConstant& fj = c.i == 1 ? inst.f2() : inst.f1();
    auto cj = fj.is_constant();
    if (!cj || *cj != c.lambda) {
        return false;
    }
    if (c.plateaus.is_empty()) {
        return false;
    }
    for (const Interval& u : c.plateaus.parts()) {
        if (!u.is_open() || !fi.domain().contains(u)) {
            return false;
        }
    }
    if (!is_subset(c.plateaus, fi.level_components(c.lambda))) {
        return false;
    }
    if (c.big_k != complement_within(c.plateaus, fi.domain())) {
        return false;
    }
    return is_subset(half_sum(c.big_k, fj.domain()), inst.zero_set());
}

Classification classify_two_sided(const EquationInstance& inst) {
    const PiecewiseConstant& f1 = inst.f1();
    const PiecewiseConstant& f2 = inst.f2();

    TwoSidedPlateaus c;
    if (f1.values().front() == f2.values().front()) {
        c.lambda = f1.values().front();
        c.u1 = Interval::open(inst.i1().lo(), f1.left_plateau_sup(*c.lambda));
        c.v1 = Interval::open(inst.i2().lo(), f2.left_plateau_sup(*c.lambda));
    }
    if (f1.values().back() == f2.values().back()) {
        c.mu = f1.values().back();
        c.u2 = Interval::open(f1.right_plateau_inf(*c.mu), inst.i1().hi());
        c.v2 = Interval::open(f2.right_plateau_inf(*c.mu), inst.i2().hi());
    }
    if (!c.lambda && !c.mu) {
        throw ImpossibleCase("non-extremal solution with non-constant f1, f2 has no common end plateau");
    }
    auto k1 = remainder(inst.i1(), c.u1, c.u2);
    auto k2 = remainder(inst.i2(), c.v1, c.v2);
    if (!k1 || !k2) {
        throw ImpossibleCase("end plateaus do not leave a single interval");
    }
    c.k1 = *k1;
    c.k2 = *k2;
    if (!verify_two_sided(inst, c)) {
        throw ImpossibleCase("zero set misses the region forced by the end plateaus");
    }
    return c;
}

Classification classify_one_constant(const EquationInstance& inst) {
    bool f1_constant = inst.f1().is_constant().has_value();
    OneConstant c;
    c.i = f1_constant ? 2 : 1;
    const PiecewiseConstant& fi = f1_constant ? inst.f2() : inst.f1();
    const PiecewiseConstant& fj = f1_constant ? inst.f1() : inst.f2();
    c.lambda = *fj.is_constant();
    c.plateaus = open_interiors(fi.level_components(c.lambda));
    c.big_k = complement_within(c.plateaus, fi.domain());
    if (!verify_one_constant(inst, c)) {
        throw ImpossibleCase("zero set misses the region forced by the lambda-plateaus");
    }
    return c;
}

}  // namespace

Classification classify(const EquationInstance& inst) {
    if (!is_zero_set_closed(inst)) {
        return ZeroSetNotClosed{};
    }
    Verdict verdict = check_exact(inst);
    if (!verdict.holds) {
        return NotASolution{*verdict.witness};
    }

    const IntervalSet d(inst.domain());
    if (inst.zero_set().has_empty_interior()) {
        auto lambda = common_constant(inst);
        if (!lambda) {
            throw ImpossibleCase("solution with nowhere-dense zero set is not extremal");
        }
        return Extremal{lambda};
    }
    if (inst.zero_set() == d) {
        return Extremal{common_constant(inst)};
    }
    if (auto lambda = common_constant(inst)) {
        return Extremal{lambda};
    }

    bool c1 = inst.f1().is_constant().has_value();
    bool c2 = inst.f2().is_constant().has_value();
    if (c1 && c2) {
        throw ImpossibleCase("distinct constants solve only when phi vanishes on D");
    }
    if (c1 || c2) {
        return classify_one_constant(inst);
    }
    return classify_two_sided(inst);
}

bool verify_classification(const EquationInstance& inst, const Classification& c) {
    if (!is_zero_set_closed(inst)) {
        return false;
    }
    return std::visit(overloaded{
                          [&](const Extremal& e) {
                              return e.lambda ? both_constant_equal_to(inst, *e.lambda)
                                              : inst.zero_set() == IntervalSet(inst.domain());
                          },
                          [&](const TwoSidedPlateaus& t) { return verify_two_sided(inst, t); },
                          [&](const OneConstant& o) { return verify_one_constant(inst, o); },
                          [](const NotASolution&) { return false; },
                          [](const ZeroSetNotClosed&) { return false; },
                      },
                      c);
}

std::string case_name(const Classification& c) {
    return std::visit(overloaded{
                          [](const Extremal&) { return std::string("Extremal"); },
                          [](const TwoSidedPlateaus&) { return std::string("TwoSidedPlateaus"); },
                          [](const OneConstant&) { return std::string("OneConstant"); },
                          [](const NotASolution&) { return std::string("NotASolution"); },
                          [](const ZeroSetNotClosed&) { return std::string("ZeroSetNotClosed"); },
                      },
                      c);
}

std::string clause_name(const Classification& c) {
    return std::visit(overloaded{
                          [](const Extremal&) { return std::string("case (i)"); },
                          [](const TwoSidedPlateaus&) { return std::string("case (ii)"); },
                          [](const OneConstant&) { return std::string("case (iii)"); },
                          [](const NotASolution&) { return std::string("not a solution"); },
                          [](const ZeroSetNotClosed&) { return std::string("zero set not closed"); },
                      },
                      c);
}

}  // namespace pexider
