#include "doctest.h"
#include "helpers.hpp"
#include "properties.hpp"

#include "pexider/error.hpp"

using namespace pexider;
using testing::fn;
using testing::iv;
using testing::q;
using testing::set;

namespace {

EquationInstance one_constant_example(IntervalSet zero) {
    return EquationInstance(fn("(0,2)", {{"(0,1)", "1"}, {"[1,2)", "7"}}), fn("(4,6)", {{"(4,6)", "1"}}),
                            std::move(zero));
}

}  // namespace

TEST_CASE("required zero region") {
    EquationInstance inst = one_constant_example(set({"[5/2,4)"}));
    // [1,2) + (4,6) halves to an open lower end.
    CHECK(required_zero_region(inst.f1(), inst.f2()) == set({"(5/2,4)"}));
    CHECK(required_zero_region(fn("(0,2)", {{"(0,2)", "3"}}), fn("(1,5)", {{"(1,5)", "3"}})).is_empty());
    CHECK(required_zero_region(fn("(0,2)", {{"(0,2)", "1"}}), fn("(0,2)", {{"(0,2)", "2"}})) == set({"(0,2)"}));
}

TEST_CASE("check_exact examples") {
    EquationInstance good = one_constant_example(set({"[5/2,4)"}));
    CHECK(check_exact(good).holds);
    CHECK(check_grid(good, iv("[-10,10]"), q("1/64")).holds);

    EquationInstance bad = good.with_zero_set(set({"(3,4)"}));
    Verdict v = check_exact(bad);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(bad.i1().contains(v.witness->x));
    CHECK(bad.i2().contains(v.witness->y));
    CHECK(is_violation(bad, v.witness->x, v.witness->y));
    CHECK(v.witness->midpoint() > q("5/2"));
    CHECK(v.witness->midpoint() <= 3);

    Verdict g = check_grid(bad, iv("[-10,10]"), q("1/64"));
    REQUIRE_FALSE(g.holds);
    CHECK(is_violation(bad, g.witness->x, g.witness->y));

    EquationInstance flat(fn("(-1,1)", {{"(-1,1)", "4"}}), fn("(2,3)", {{"(2,3)", "4"}}), IntervalSet{});
    CHECK(check_exact(flat).holds);
}

TEST_CASE("check_grid arguments") {
    EquationInstance inst = one_constant_example(set({"(3,4)"}));
    CHECK(check_grid(inst, iv("[10,20]"), q("1/64")).holds);
    CHECK(check_grid(inst, Interval::empty(), q("1/64")).holds);
    CHECK_THROWS_AS(check_grid(inst, iv("[0,1]"), q("0")), DomainError);
    CHECK_THROWS_AS(check_grid(inst, iv("(-inf,1)"), q("1/64")), DomainError);
    CHECK(default_window(inst) == iv("[-1,7]"));
}

TEST_CASE("zero set closedness") {
    EquationInstance inst = one_constant_example(set({"[5/2,4)"}));
    CHECK(is_zero_set_closed(inst));
    CHECK_FALSE(is_zero_set_closed(inst.with_zero_set(set({"(5/2,3)", "(3,7/2)"}))));
    CHECK(is_zero_set_closed(inst.with_zero_set(set({"(2,4)"}))));
}

TEST_CASE("instance validation") {
    PiecewiseConstant f1 = fn("(0,2)", {{"(0,2)", "1"}});
    PiecewiseConstant f2 = fn("(4,6)", {{"(4,6)", "1"}});
    CHECK_THROWS_AS(EquationInstance(f1, f2, set({"[1,3]"})), DomainError);
    CHECK_THROWS_AS(EquationInstance(iv("[0,2]"), iv("(4,6)"), IntervalSet{}, f1, f2), DomainError);
    CHECK_THROWS_AS(EquationInstance(iv("(0,3)"), iv("(4,6)"), IntervalSet{}, f1, f2), DomainError);
    CHECK(EquationInstance(f1, f2, IntervalSet{}).domain() == iv("(2,4)"));
}

TEST_CASE("exact checker agrees with the lattice oracle") {
    Sampler rng(21);
    for (int n = 0; n < 60; ++n) {
        EquationInstance inst = props::random_bounded_instance(rng);
        props::Failure f = props::checker_oracle(inst);
        CHECK_MESSAGE(!f, *f);
    }
}

TEST_CASE("extremal triples solve the equation") {
    Sampler rng(22);
    for (int n = 0; n < 100; ++n) {
        EquationInstance inst = props::random_bounded_instance(rng);
        CHECK(check_exact(inst.with_zero_set(IntervalSet(inst.domain()))).holds);
        Rational lambda(rng.between(-3, 3));
        EquationInstance flat(PiecewiseConstant::constant(inst.i1(), lambda),
                              PiecewiseConstant::constant(inst.i2(), lambda), inst.zero_set());
        CHECK(check_exact(flat).holds);
    }
}

TEST_CASE("enlarging the zero set keeps solutions") {
    Sampler rng(23);
    int holding = 0;
    for (int n = 0; n < 150; ++n) {
        EquationInstance inst = props::random_bounded_instance(rng);
        if (!check_exact(inst).holds) {
            continue;
        }
        ++holding;
        IntervalSet bigger = unite(inst.zero_set(), IntervalSet(rng.subinterval(inst.domain(), Interval::closed(-8, 8))));
        CHECK(check_exact(inst.with_zero_set(bigger)).holds);
    }
    CHECK(holding > 20);
}

TEST_CASE("zeros on half of I1 plus the complement of the lambda level set suffice") {
    // f1 == lambda; phi vanishes on (I1 + (I2 \ f2^-1(lambda))) / 2.
    Sampler rng(24);
    for (int n = 0; n < 100; ++n) {
        Interval i1 = rng.open_interval(props::default_bounds(), 20);
        Interval i2 = rng.open_interval(props::default_bounds(), 20);
        PiecewiseConstant f2 = props::random_step_function(rng, i2, 5, 3);
        Rational lambda = f2.values()[rng.below(f2.values().size())];
        IntervalSet outside = complement_within(f2.level_components(lambda), i2);
        IntervalSet zero = half_sum(outside, i1);
        EquationInstance inst(PiecewiseConstant::constant(i1, lambda), f2, zero);
        CHECK(check_exact(inst).holds);
    }
}
