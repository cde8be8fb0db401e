#include "pexider/checker.hpp"

#include "pexider/error.hpp"

#include <algorithm>
#include <map>

namespace pexider {

IntervalSet required_zero_region(const PiecewiseConstant& f1, const PiecewiseConstant& f2) {
    std::vector<Interval> parts;
    for (const Piece& p : f1.pieces()) {
        for (const Piece& q : f2.pieces()) {
            if (p.value != q.value) {
                parts.push_back(half_sum(p.piece, q.piece));
            }
        }
    }
    return IntervalSet(std::move(parts));
}

Verdict check_exact(const EquationInstance& inst) {
    IntervalSet uncovered = difference(required_zero_region(inst.f1(), inst.f2()), inst.zero_set());
    if (uncovered.is_empty()) {
        return {};
    }

    const Interval* widest = &uncovered.parts().front();
    for (const Interval& part : uncovered.parts()) {
        if (diameter(*widest) < diameter(part)) {
            widest = &part;
        }
    }
    const Rational u = representative(*widest);
    const Interval center = Interval::point(u);

    for (const Piece& p : inst.f1().pieces()) {
        for (const Piece& q : inst.f2().pieces()) {
            if (p.value == q.value || !half_sum(p.piece, q.piece).contains(u)) {
                continue;
            }
            // x ranges over P ∩ (2u - Q); y is then its mirror image through u.
            Rational x = representative(reflect(q.piece, center, p.piece));
            Rational y = 2 * u - x;
            return {false, Witness{std::move(x), std::move(y)}};
        }
    }
    throw ImpossibleCase("uncovered point " + to_string(u) + " is not the midpoint of a differing piece pair");
}

namespace {

struct Lattice {
    mpz_class first;  // index of the first lattice point
    std::vector<Rational> points;
};

Lattice lattice_points(const Interval& range, const Rational& step) {
    Lattice out;
    if (range.is_empty()) {
        return out;
    }
    Rational lo_scaled = range.lo().value() / step;
    Rational hi_scaled = range.hi().value() / step;
    mpz_class k;
    mpz_class last;
    mpz_cdiv_q(k.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
    mpz_fdiv_q(last.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
    for (; k <= last; ++k) {
        Rational x = Rational(k) * step;
        if (!range.contains(x)) {
            continue;
        }
        if (out.points.empty()) {
            out.first = k;
        }
        out.points.push_back(std::move(x));
    }
    return out;
}

// Maps each grid point to a dense id of its function value.
std::vector<int> value_ids(const PiecewiseConstant& f, const std::vector<Rational>& points,
                           std::map<Rational, int>& ids) {
    std::vector<int> out;
    out.reserve(points.size());
    for (const Rational& x : points) {
        auto [it, inserted] = ids.try_emplace(f.evaluate(x), static_cast<int>(ids.size()));
        out.push_back(it->second);
    }
    return out;
}

}  // namespace

Verdict check_grid(const EquationInstance& inst, const Interval& window, const Rational& step) {
    if (step <= 0) {
        throw DomainError("grid step must be positive, got " + to_string(step));
    }
    if (!window.is_empty() && !window.is_bounded()) {
        throw DomainError("grid window must be bounded, got " + to_string(window));
    }
    Lattice xs = lattice_points(intersect(inst.i1(), window), step);
    Lattice ys = lattice_points(intersect(inst.i2(), window), step);
    if (xs.points.empty() || ys.points.empty()) {
        return {};
    }

    std::map<Rational, int> ids;
    std::vector<int> v1 = value_ids(inst.f1(), xs.points, ids);
    std::vector<int> v2 = value_ids(inst.f2(), ys.points, ids);

    // Midpoint of the i-th x and j-th y depends only on i + j.
    std::vector<char> vanishes(xs.points.size() + ys.points.size() - 1);
    mpz_class base = xs.first + ys.first;
    for (std::size_t s = 0; s < vanishes.size(); ++s) {
        Rational u = Rational(base + static_cast<unsigned long>(s)) * step / 2;
        vanishes[s] = inst.phi_vanishes(u) ? 1 : 0;
    }

    for (std::size_t i = 0; i < xs.points.size(); ++i) {
        for (std::size_t j = 0; j < ys.points.size(); ++j) {
            if (!vanishes[i + j] && v1[i] != v2[j]) {
                return {false, Witness{xs.points[i], ys.points[j]}};
            }
        }
    }
    return {};
}

Interval default_window(const EquationInstance& inst) {
    std::vector<Rational> finite;
    auto add = [&](const ExtReal& e) {
        if (e.is_finite()) {
            finite.push_back(e.value());
        }
    };
    auto add_interval = [&](const Interval& i) {
        if (!i.is_empty()) {
            add(i.lo());
            add(i.hi());
        }
    };
    add_interval(inst.i1());
    add_interval(inst.i2());
    for (const Interval& part : inst.zero_set().parts()) {
        add_interval(part);
    }
    for (const auto* f : {&inst.f1(), &inst.f2()}) {
        finite.insert(finite.end(), f->breakpoints().begin(), f->breakpoints().end());
    }
    if (finite.empty()) {
        return Interval::closed(Rational(-1), Rational(1));
    }
    Rational lo = *std::min_element(finite.begin(), finite.end());
    Rational hi = *std::max_element(finite.begin(), finite.end());
    return Interval::closed(Rational(lo - 1), Rational(hi + 1));
}

bool is_zero_set_closed(const EquationInstance& inst) {
    return is_closed_in(inst.zero_set(), inst.domain());
}

bool is_violation(const EquationInstance& inst, const Rational& x, const Rational& y) {
    if (!inst.i1().contains(x) || !inst.i2().contains(y)) {
        return false;
    }
    return !inst.phi_vanishes(midpoint(x, y)) && inst.f1().evaluate(x) != inst.f2().evaluate(y);
}

}  // namespace pexider
