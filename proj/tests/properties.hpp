#pragma once

// Randomized property checks shared by the unit suite (small counts) and the
// acceptance binary (full counts). Each check returns a description of the
// first violation, or nullopt.

#include "pexider/checker.hpp"
#include "pexider/classifier.hpp"
#include "pexider/error.hpp"
#include "pexider/generator.hpp"

#include <optional>
#include <string>

namespace props {

using namespace pexider;
using Failure = std::optional<std::string>;

inline const Interval& default_bounds() {
    static const Interval b = Interval::closed(-4, 4);
    return b;
}

inline Interval open_version(const Interval& i) {
    return i.is_empty() ? i : Interval::make(i.lo(), i.hi(), false, false);
}

inline std::string show(const Interval& s, const Interval& p, const Interval& q) {
    return "S=" + to_string(s) + " P=" + to_string(p) + " Q=" + to_string(q);
}

/// Monotonicity, mirror identity, openness and endpoint formulas for one
/// random bounded triple.
inline Failure reflection_laws(Sampler& rng) {
    const Interval& bounds = default_bounds();
    Interval s2 = rng.subinterval(bounds, bounds, 10);
    Interval p2 = rng.subinterval(bounds, bounds, 10);
    Interval q2 = rng.subinterval(bounds, bounds, 10);
    Interval s1 = rng.subinterval(s2, bounds, 10);
    Interval p1 = rng.subinterval(p2, bounds, 10);
    Interval q1 = rng.subinterval(q2, bounds, 10);

    if (!reflect(s2, p2, q2).contains(reflect(s1, p1, q1))) {
        return "monotonicity: " + show(s1, p1, q1) + " vs " + show(s2, p2, q2);
    }

    Interval forward = reflect(s2, p2, q2);
    if (reflect(forward, p2, s2) != reflect(q2, p2, s2)) {
        return "mirror identity: " + show(s2, p2, q2);
    }

    Interval q_open = open_version(q2);
    Interval p_open = open_version(p2);
    Interval s_open = open_version(s2);
    if (!reflect(s2, p_open, q_open).is_open() || !reflect(s_open, p2, q_open).is_open()) {
        return "openness: " + show(s2, p2, q2);
    }

    for (const auto& [s, p, q] : {std::tuple{s2, p2, q2}, std::tuple{s1, p1, q1}, std::tuple{s_open, p2, q_open}}) {
        Interval r = reflect(s, p, q);
        if (r.is_empty()) {
            continue;
        }
        if (r.lo() != max(q.lo(), p.lo().twice() - s.hi()) || r.hi() != min(q.hi(), p.hi().twice() - s.lo())) {
            return "endpoint formulas: " + show(s, p, q) + " -> " + to_string(r);
        }
    }
    return std::nullopt;
}

/// Reflections of I1, I2 through a nonempty H ⊆ D.
inline Failure reflections_through_domain(Sampler& rng) {
    const Interval& bounds = default_bounds();
    Interval i1 = rng.open_interval(bounds, 20);
    Interval i2 = rng.open_interval(bounds, 20);
    Interval d = half_sum(i1, i2);
    Interval h = rng.subinterval(d, Interval::closed(-8, 8), 20);
    const std::string where = "I1=" + to_string(i1) + " I2=" + to_string(i2) + " H=" + to_string(h);

    for (int order = 0; order < 2; ++order) {
        const Interval& ii = order == 0 ? i1 : i2;
        const Interval& ij = order == 0 ? i2 : i1;
        Interval r = reflect(ii, h, ij);
        if (r.is_empty() || !r.is_open() || !ij.contains(r)) {
            return "nonempty open subinterval: " + where + " -> " + to_string(r);
        }
        Interval back = reflect(ij, h, ii);
        if (r.lo().is_finite() && ij.contains(r.lo().value()) && back.hi() != ii.hi()) {
            return "dichotomy (i): " + where;
        }
        if (r.hi().is_finite() && ij.contains(r.hi().value()) && back.lo() != ii.lo()) {
            return "dichotomy (ii): " + where;
        }
    }
    return std::nullopt;
}

inline PiecewiseConstant random_step_function(Sampler& rng, const Interval& domain, int max_pieces, int palette) {
    int n = rng.between(1, max_pieces);
    std::vector<Rational> values;
    for (int k = 0; k < n; ++k) {
        values.emplace_back(rng.between(0, palette - 1));
    }
    std::vector<Rational> breakpoints =
        rng.sorted_inside(static_cast<std::size_t>(n - 1), domain.lo(), domain.hi(), Interval::closed(-6, 6));
    return PiecewiseConstant(domain, std::move(breakpoints), std::move(values));
}

/// Bounded instance whose zero set is, by turns, a superset of the forced
/// region, a damaged copy of it, or unrelated.
inline EquationInstance random_bounded_instance(Sampler& rng) {
    const Interval& bounds = default_bounds();
    Interval i1 = rng.open_interval(bounds);
    Interval i2 = rng.open_interval(bounds);
    Interval d = half_sum(i1, i2);
    PiecewiseConstant f1 = random_step_function(rng, i1, 4, 3);
    PiecewiseConstant f2 = random_step_function(rng, i2, 4, 3);
    IntervalSet required = required_zero_region(f1, f2);

    std::vector<Interval> extra;
    for (int k = rng.between(0, 2); k > 0; --k) {
        extra.push_back(rng.subinterval(d, bounds, 20));
    }
    IntervalSet zero;
    switch (rng.below(3)) {
    case 0:
        zero = unite(required, IntervalSet(extra));
        break;
    case 1:
        zero = required;
        if (!required.is_empty()) {
            const Interval& host = required.parts()[rng.below(required.size())];
            zero = difference(required, IntervalSet(rng.subinterval(host, bounds, 30)));
        }
        break;
    default:
        zero = IntervalSet(extra);
        break;
    }
    return EquationInstance(i1, i2, zero, f1, f2);
}

/// Exact verdict vs. lattice oracle at step 1/64 over the padded hull.
inline Failure checker_oracle(const EquationInstance& inst) {
    Verdict exact = check_exact(inst);
    Verdict grid = check_grid(inst, default_window(inst), Rational(1, 64));
    if (exact.holds && !grid.holds) {
        return "exact holds but grid fails at x=" + to_string(grid.witness->x) + " y=" + to_string(grid.witness->y);
    }
    if (!exact.holds && !is_violation(inst, exact.witness->x, exact.witness->y)) {
        return "exact witness does not violate the equation";
    }
    if (!grid.holds && !is_violation(inst, grid.witness->x, grid.witness->y)) {
        return "grid witness does not violate the equation";
    }
    return std::nullopt;
}

/// Zero sets made of finitely many points.
inline Failure point_zero_sets(Sampler& rng) {
    const Interval& bounds = default_bounds();
    Interval i1 = rng.open_interval(bounds, 20);
    Interval i2 = rng.open_interval(bounds, 20);
    Interval d = half_sum(i1, i2);
    std::vector<Interval> points;
    for (int k = rng.between(0, 3); k > 0; --k) {
        points.push_back(Interval::point(rng.inside(d.lo(), d.hi(), Interval::closed(-8, 8))));
    }
    PiecewiseConstant f1 = PiecewiseConstant::constant(i1, 0);
    PiecewiseConstant f2 = PiecewiseConstant::constant(i2, 0);
    switch (rng.below(4)) {
    case 0:
    case 1: {
        Rational lambda(rng.between(-2, 2));
        f1 = PiecewiseConstant::constant(i1, lambda);
        f2 = PiecewiseConstant::constant(i2, lambda);
        break;
    }
    case 2:
        f1 = PiecewiseConstant::constant(i1, 1);
        f2 = PiecewiseConstant::constant(i2, 2);
        break;
    default:
        f1 = random_step_function(rng, i1, 4, 2);
        f2 = random_step_function(rng, i2, 4, 2);
        break;
    }
    EquationInstance inst(i1, i2, IntervalSet(points), f1, f2);
    auto c1 = f1.is_constant();
    auto c2 = f2.is_constant();
    bool extremal = c1 && c2 && *c1 == *c2;

    Verdict v = check_exact(inst);
    if (v.holds) {
        Classification c = classify(inst);
        if (!std::holds_alternative<Extremal>(c)) {
            return "solution with point zero set classified " + case_name(c);
        }
    }
    if (!extremal && v.holds) {
        return "non-extremal instance with point zero set passes check_exact";
    }
    return std::nullopt;
}

inline bool intended(GenCase kind, const Classification& c) {
    switch (kind) {
    case GenCase::Extremal:
        return std::holds_alternative<Extremal>(c);
    case GenCase::TwoSided:
        return std::holds_alternative<TwoSidedPlateaus>(c);
    case GenCase::OneConstant:
        return std::holds_alternative<OneConstant>(c);
    case GenCase::Mutant:
        return std::holds_alternative<NotASolution>(c) || std::holds_alternative<ZeroSetNotClosed>(c);
    }
    return false;
}

inline Failure round_trip(GenCase kind, std::uint64_t seed) {
    GenSpec spec;
    spec.kind = kind;
    spec.seed = seed;
    const std::string where = to_string(kind) + " seed " + std::to_string(seed);
    EquationInstance inst = generate(spec);
    Classification c = classify(inst);
    if (!intended(kind, c)) {
        return where + ": classified " + case_name(c);
    }
    if (kind == GenCase::Mutant) {
        return std::nullopt;
    }
    if (!check_exact(inst).holds) {
        return where + ": check_exact fails";
    }
    if (!verify_classification(inst, c)) {
        return where + ": verify_classification rejects " + case_name(c);
    }
    return std::nullopt;
}

/// Symmetric instances: f constant, or end plateaus U (left) / V (right)
/// with phi vanishing on (I + I \ (U ∪ V)) / 2.
inline Failure symmetric_form(std::uint64_t seed) {
    GenSpec spec;
    spec.kind = seed % 2 == 0 ? GenCase::TwoSided : GenCase::Extremal;
    spec.seed = seed;
    spec.symmetric = true;
    EquationInstance inst = generate(spec);
    const std::string where = to_string(spec.kind) + " seed " + std::to_string(seed);
    if (inst.i1() != inst.i2() || inst.f1() != inst.f2()) {
        return where + ": generator broke symmetry";
    }
    const Interval& i = inst.i1();
    const PiecewiseConstant& f = inst.f1();
    Classification c = classify(inst);
    if (f.is_constant()) {
        return std::holds_alternative<Extremal>(c) ? Failure{} : where + ": constant f not extremal";
    }

    Interval u;
    Interval v;
    std::optional<Rational> lambda;
    std::optional<Rational> mu;
    if (const auto* t = std::get_if<TwoSidedPlateaus>(&c)) {
        if (t->u1 != t->v1 || t->u2 != t->v2 || t->k1 != t->k2) {
            return where + ": asymmetric plateaus for a symmetric instance";
        }
        u = t->u1;
        v = t->u2;
        lambda = t->lambda;
        mu = t->mu;
    } else if (std::holds_alternative<Extremal>(c) && inst.zero_set() == IntervalSet(inst.domain())) {
        lambda = f.values().front();
        u = Interval::open(i.lo(), f.left_plateau_sup(*lambda));
    } else {
        return where + ": unexpected " + case_name(c);
    }

    bool anchored = (!u.is_empty() && u.lo() == i.lo()) || (!v.is_empty() && v.hi() == i.hi());
    if (!anchored) {
        return where + ": neither inf U = inf I nor sup V = sup I";
    }
    if ((!u.is_empty() && !is_subset(IntervalSet(u), f.level_components(*lambda))) ||
        (!v.is_empty() && !is_subset(IntervalSet(v), f.level_components(*mu)))) {
        return where + ": f not constant on U or V";
    }
    IntervalSet rest = complement_within(IntervalSet{u, v}, i);
    if (!is_subset(half_sum(rest, i), inst.zero_set())) {
        return where + ": phi does not vanish on (I + I \\ (U u V))/2";
    }
    return std::nullopt;
}

/// A point of the open interior of `part`, dyadic when one fits.
inline Rational sample_inside(Sampler& rng, const Interval& part) {
    try {
        return rng.inside(part.lo(), part.hi(), Interval::closed(-8, 8));
    } catch (const DomainError&) {
        return midpoint(part.lo().value(), part.hi().value());
    }
}

/// f1 constant on (I2|p)_I1 and f2 on (I1|p)_I2 with equal values, for
/// sampled p in the closure of the complement of the zero set.
inline Failure reflection_constancy(const EquationInstance& inst, Sampler& rng, int samples) {
    IntervalSet support = closure_within(complement_within(inst.zero_set(), inst.domain()), inst.domain());
    if (support.is_empty()) {
        return std::nullopt;
    }
    for (int k = 0; k < samples; ++k) {
        const Interval& part = support.parts()[rng.below(support.size())];
        Rational p;
        if (part.is_point()) {
            p = part.lo().value();
        } else if (part.lo_closed() && rng.chance(20)) {
            p = part.lo().value();
        } else if (part.hi_closed() && rng.chance(20)) {
            p = part.hi().value();
        } else {
            p = sample_inside(rng, part);
        }
        Interval center = Interval::point(p);
        Interval a = reflect(inst.i2(), center, inst.i1());
        Interval b = reflect(inst.i1(), center, inst.i2());
        const Rational& value = inst.f1().evaluate(representative(a));
        bool f1_constant = is_subset(IntervalSet(a), inst.f1().level_components(value));
        bool f2_constant = is_subset(IntervalSet(b), inst.f2().level_components(value));
        if (!f1_constant || !f2_constant) {
            return "p=" + to_string(p) + ": f1 on " + to_string(a) + " / f2 on " + to_string(b) +
                   " not constant with a shared value";
        }
    }
    return std::nullopt;
}

}  // namespace props
