#include "pexider/generator.hpp"

#include "pexider/checker.hpp"
#include "pexider/error.hpp"

#include <algorithm>
#include <set>

namespace pexider {

std::string to_string(GenCase c) {
    switch (c) {
    case GenCase::Extremal:
        return "extremal";
    case GenCase::TwoSided:
        return "two_sided";
    case GenCase::OneConstant:
        return "one_constant";
    case GenCase::Mutant:
        return "mutant";
    }
    return "?";
}

GenCase parse_gen_case(std::string_view name) {
    for (GenCase c : {GenCase::Extremal, GenCase::TwoSided, GenCase::OneConstant, GenCase::Mutant}) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw ParseError("unknown case '" + std::string(name) + "' (expected extremal, two_sided, one_constant, mutant)");
}

std::uint64_t Sampler::below(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("Sampler::below(0)");
    }
    // Rejection keeps the draw unbiased without relying on std distributions.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % n;
}

Rational Sampler::inside(const ExtReal& lo, const ExtReal& hi, const Interval& clamp) {
    Rational a = lo.is_finite() ? lo.value() : clamp.lo().value();
    Rational b = hi.is_finite() ? hi.value() : clamp.hi().value();
    if (!lo.is_finite() && b <= a) {
        a = b - 1;
    }
    if (!hi.is_finite() && b <= a) {
        b = a + 1;
    }
    int exponent = static_cast<int>(below(max_exponent + 1));
    for (; exponent <= max_exponent; ++exponent) {
        mpz_class scale = mpz_class(1) << exponent;
        Rational as = a * scale;
        Rational bs = b * scale;
        mpz_class kmin;
        mpz_class kmax;
        mpz_fdiv_q(kmin.get_mpz_t(), as.get_num_mpz_t(), as.get_den_mpz_t());
        kmin += 1;
        mpz_cdiv_q(kmax.get_mpz_t(), bs.get_num_mpz_t(), bs.get_den_mpz_t());
        kmax -= 1;
        if (kmin > kmax) {
            continue;
        }
        mpz_class span = kmax - kmin + 1;
        std::uint64_t width = span.fits_ulong_p() ? span.get_ui() : std::numeric_limits<std::uint64_t>::max();
        Rational q(kmin + mpz_class(static_cast<unsigned long>(below(width))), scale);
        q.canonicalize();
        return q;
    }
    throw DomainError("no dyadic rational with denominator <= 2^10 strictly inside (" + to_string(ExtReal(a)) + "," +
                      to_string(ExtReal(b)) + ")");
}

std::vector<Rational> Sampler::sorted_inside(std::size_t count, const ExtReal& lo, const ExtReal& hi,
                                             const Interval& clamp) {
    std::set<Rational> picked;
    for (int attempt = 0; picked.size() < count; ++attempt) {
        if (attempt > 200 + 50 * static_cast<int>(count)) {
            throw DomainError("cannot place " + std::to_string(count) + " distinct breakpoints inside (" +
                              to_string(lo) + "," + to_string(hi) + ")");
        }
        picked.insert(inside(lo, hi, clamp));
    }
    return {picked.begin(), picked.end()};
}

Interval Sampler::open_interval(const Interval& bounds, int unbounded_percent) {
    std::vector<Rational> ends = sorted_inside(2, bounds.lo(), bounds.hi(), bounds);
    ExtReal lo = chance(unbounded_percent) ? ExtReal::neg_inf() : ExtReal(ends[0]);
    ExtReal hi = chance(unbounded_percent) ? ExtReal::pos_inf() : ExtReal(ends[1]);
    return Interval::open(lo, hi);
}

Interval Sampler::subinterval(const Interval& host, const Interval& clamp, int point_percent) {
    if (chance(point_percent)) {
        if (host.is_point()) {
            return host;
        }
        return Interval::point(inside(host.lo(), host.hi(), clamp));
    }
    if (host.is_point()) {
        return host;
    }
    std::vector<Rational> ends = sorted_inside(2, host.lo(), host.hi(), clamp);
    ExtReal lo(ends[0]);
    ExtReal hi(ends[1]);
    bool lo_closed = chance(50);
    bool hi_closed = chance(50);
    // Occasionally reach the host's own endpoints, keeping their flags.
    if (chance(15)) {
        lo = host.lo();
        lo_closed = host.lo_closed();
    }
    if (chance(15)) {
        hi = host.hi();
        hi_closed = host.hi_closed();
    }
    return Interval::make(lo, hi, lo_closed, hi_closed);
}

namespace {

constexpr int max_attempts = 1000;

Rational draw_value(Sampler& rng) {
    return Rational(rng.between(-3, 6));
}

Rational draw_value_other_than(Sampler& rng, std::initializer_list<const Rational*> avoid) {
    for (;;) {
        Rational v = draw_value(rng);
        bool clash = std::any_of(avoid.begin(), avoid.end(), [&](const Rational* a) { return a && *a == v; });
        if (!clash) {
            return v;
        }
    }
}

// Interval bounds used to place points inside unbounded intervals.
Interval padded(const Interval& bounds) {
    return Interval::closed(Rational(bounds.lo().value() - 2), Rational(bounds.hi().value() + 2));
}

PiecewiseConstant random_function(Sampler& rng, const Interval& domain, std::vector<Rational> values,
                                  const Interval& bounds) {
    std::vector<Rational> breakpoints = rng.sorted_inside(values.size() - 1, domain.lo(), domain.hi(), bounds);
    return PiecewiseConstant(domain, std::move(breakpoints), std::move(values));
}

// Values with distinct neighbours; optional fixed first/last values.
std::vector<Rational> random_values(Sampler& rng, int count, const std::optional<Rational>& first,
                                    const std::optional<Rational>& last, const std::optional<Rational>& avoid = {}) {
    std::vector<Rational> values(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const Rational* prev = k > 0 ? &values[static_cast<std::size_t>(k - 1)] : nullptr;
        const Rational* next_fixed = (k + 2 == count && last) ? &*last : nullptr;
        const Rational* avoided = avoid ? &*avoid : nullptr;
        if (k == 0 && first) {
            values[0] = *first;
        } else if (k + 1 == count && last) {
            values[static_cast<std::size_t>(k)] = *last;
        } else {
            values[static_cast<std::size_t>(k)] = draw_value_other_than(rng, {prev, next_fixed, avoided});
        }
    }
    return values;
}

IntervalSet random_closed_subset(Sampler& rng, const Interval& d, const Interval& bounds, int max_parts) {
    std::vector<Interval> parts;
    int count = rng.between(0, max_parts);
    for (int k = 0; k < count; ++k) {
        parts.push_back(rng.subinterval(d, bounds));
    }
    return closure_within(IntervalSet(std::move(parts)), d);
}

IntervalSet random_point_set(Sampler& rng, const Interval& d, const Interval& bounds, int max_points) {
    std::vector<Interval> parts;
    int count = rng.between(0, max_points);
    for (int k = 0; k < count; ++k) {
        parts.push_back(Interval::point(rng.inside(d.lo(), d.hi(), bounds)));
    }
    return IntervalSet(std::move(parts));
}

EquationInstance make_instance(const Interval& i1, const Interval& i2, const IntervalSet& zero_set,
                               const PiecewiseConstant& f1, const PiecewiseConstant& f2) {
    return EquationInstance(i1, i2, zero_set, f1, f2);
}

EquationInstance generate_extremal(Sampler& rng, const GenSpec& spec) {
    const Interval wide = padded(spec.bounds);
    Interval i1 = rng.open_interval(spec.bounds, 20);
    Interval i2 = spec.symmetric ? i1 : rng.open_interval(spec.bounds, 20);
    Interval d = half_sum(i1, i2);

    if (rng.chance(50)) {
        auto draw_f = [&](const Interval& dom) {
            int n = rng.between(1, spec.max_pieces);
            return random_function(rng, dom, random_values(rng, n, std::nullopt, std::nullopt), wide);
        };
        PiecewiseConstant f1 = draw_f(i1);
        PiecewiseConstant f2 = spec.symmetric ? f1 : draw_f(i2);
        return make_instance(i1, i2, IntervalSet(d), f1, f2);
    }
    Rational lambda = draw_value(rng);
    IntervalSet zero = rng.chance(30) ? random_point_set(rng, d, wide, 3) : random_closed_subset(rng, d, wide, 3);
    return make_instance(i1, i2, zero, PiecewiseConstant::constant(i1, lambda), PiecewiseConstant::constant(i2, lambda));
}

// Keeps an end finite when a plateau sits there; otherwise it may be infinite.
Interval interval_with_finite_ends(Sampler& rng, const Interval& bounds, bool left_finite, bool right_finite) {
    Interval base = rng.open_interval(bounds);
    ExtReal lo = !left_finite && rng.chance(20) ? ExtReal::neg_inf() : base.lo();
    ExtReal hi = !right_finite && rng.chance(20) ? ExtReal::pos_inf() : base.hi();
    return Interval::open(lo, hi);
}

std::optional<EquationInstance> try_two_sided(Sampler& rng, const GenSpec& spec) {
    const Interval wide = padded(spec.bounds);
    int mode = static_cast<int>(rng.below(3));  // 0 left, 1 right, 2 both
    bool left = mode != 1;
    bool right = mode != 0;
    bool point_k = mode == 2 && rng.chance(10);

    Rational lambda = draw_value(rng);
    Rational mu = draw_value_other_than(rng, {&lambda});
    std::optional<Rational> first = left ? std::optional(lambda) : std::nullopt;
    std::optional<Rational> last = right ? std::optional(mu) : std::nullopt;

    auto piece_count = [&] {
        return point_k ? 2 : rng.between(2, std::max(2, spec.max_pieces));
    };

    Interval i1 = interval_with_finite_ends(rng, spec.bounds, left, right);
    Interval i2 = spec.symmetric ? i1 : interval_with_finite_ends(rng, spec.bounds, left, right);
    PiecewiseConstant f1 = random_function(rng, i1, random_values(rng, piece_count(), first, last), wide);
    PiecewiseConstant f2 =
        spec.symmetric ? f1 : random_function(rng, i2, random_values(rng, piece_count(), first, last), wide);
    if (f1.is_constant() || f2.is_constant()) {
        return std::nullopt;
    }

    Interval u1 = left ? Interval::open(i1.lo(), f1.left_plateau_sup(lambda)) : Interval::empty();
    Interval u2 = right ? Interval::open(f1.right_plateau_inf(mu), i1.hi()) : Interval::empty();
    Interval v1 = left ? Interval::open(i2.lo(), f2.left_plateau_sup(lambda)) : Interval::empty();
    Interval v2 = right ? Interval::open(f2.right_plateau_inf(mu), i2.hi()) : Interval::empty();
    IntervalSet k1 = complement_within(IntervalSet{u1, u2}, i1);
    IntervalSet k2 = complement_within(IntervalSet{v1, v2}, i2);

    Interval d = half_sum(i1, i2);
    IntervalSet zero = unite(half_sum(k1, i2), half_sum(k2, i1));
    if (rng.chance(40)) {
        zero = unite(zero, random_closed_subset(rng, d, wide, 2));
    }
    zero = closure_within(zero, d);
    if (zero == IntervalSet(d)) {
        return std::nullopt;
    }
    return make_instance(i1, i2, zero, f1, f2);
}

std::optional<EquationInstance> try_one_constant(Sampler& rng, const GenSpec& spec) {
    const Interval wide = padded(spec.bounds);
    bool first_is_varying = rng.chance(50);
    Rational lambda = draw_value(rng);

    int n = rng.between(2, std::max(2, spec.max_pieces));
    std::optional<Rational> first;
    std::optional<Rational> last;
    int end = static_cast<int>(rng.below(4));  // 0 none, 1 left, 2 right, 3 both
    if (end & 1) {
        first = lambda;
    }
    if ((end & 2) && !(n == 2 && first)) {
        last = lambda;
    }
    std::vector<Rational> values = random_values(rng, n, first, last);
    if (std::none_of(values.begin(), values.end(), [&](const Rational& v) { return v == lambda; })) {
        values[rng.below(values.size())] = lambda;
    }
    // Re-separate neighbours that collided with the forced lambda.
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] == lambda) {
            continue;
        }
        bool clash = (k > 0 && values[k - 1] == values[k]) || (k + 1 < values.size() && values[k + 1] == values[k]);
        if (clash) {
            const Rational* prev = k > 0 ? &values[k - 1] : nullptr;
            const Rational* next = k + 1 < values.size() ? &values[k + 1] : nullptr;
            values[k] = draw_value_other_than(rng, {prev, next, &lambda});
        }
    }
    if (std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == lambda; })) {
        return std::nullopt;
    }

    bool left_finite = first.has_value();
    bool right_finite = last.has_value();
    Interval varying_domain = interval_with_finite_ends(rng, spec.bounds, left_finite, right_finite);
    Interval constant_domain = interval_with_finite_ends(rng, spec.bounds, left_finite, right_finite);
    PiecewiseConstant fi = random_function(rng, varying_domain, std::move(values), wide);
    PiecewiseConstant fj = PiecewiseConstant::constant(constant_domain, lambda);
    if (fi.is_constant()) {
        return std::nullopt;
    }

    std::vector<Interval> plateaus;
    const IntervalSet level = fi.level_components(lambda);
    for (const Interval& part : level.parts()) {
        plateaus.push_back(Interval::make(part.lo(), part.hi(), false, false));
    }
    IntervalSet big_k = complement_within(IntervalSet(std::move(plateaus)), varying_domain);

    const Interval& i1 = first_is_varying ? varying_domain : constant_domain;
    const Interval& i2 = first_is_varying ? constant_domain : varying_domain;
    Interval d = half_sum(i1, i2);
    IntervalSet zero = half_sum(big_k, constant_domain);
    if (rng.chance(40)) {
        zero = unite(zero, random_closed_subset(rng, d, wide, 2));
    }
    zero = closure_within(zero, d);
    if (zero == IntervalSet(d)) {
        return std::nullopt;
    }
    return first_is_varying ? make_instance(i1, i2, zero, fi, fj) : make_instance(i1, i2, zero, fj, fi);
}

template <class Try>
EquationInstance redraw_until(Sampler& rng, const GenSpec& spec, Try attempt, const char* what) {
    for (int k = 0; k < max_attempts; ++k) {
        if (auto inst = attempt(rng, spec)) {
            return *inst;
        }
    }
    throw DomainError(std::string("could not draw a ") + what + " instance within the bounds");
}

std::optional<EquationInstance> try_mutant(Sampler& rng, const GenSpec& spec) {
    const Interval wide = padded(spec.bounds);
    GenSpec base_spec = spec;
    base_spec.symmetric = false;
    auto base = rng.chance(50) ? try_two_sided(rng, base_spec) : try_one_constant(rng, base_spec);
    if (!base) {
        return std::nullopt;
    }
    IntervalSet required = required_zero_region(base->f1(), base->f2());
    Interval host = required.parts()[rng.below(required.size())];
    if (!intersect(host, wide).is_empty()) {
        host = intersect(host, wide);
    }
    try {
        Interval removed = rng.subinterval(host, wide, 30);
        return base->with_zero_set(difference(base->zero_set(), IntervalSet(removed)));
    } catch (const DomainError&) {
        // Host too narrow for the dyadic grid; draw another base.
        return std::nullopt;
    }
}

void validate(const GenSpec& spec) {
    if (spec.bounds.is_empty() || !spec.bounds.is_bounded() || spec.bounds.is_point()) {
        throw DomainError("generator bounds must be a bounded interval of positive length, got " +
                          to_string(spec.bounds));
    }
    int minimum = spec.kind == GenCase::Extremal ? 1 : 2;
    if (spec.max_pieces < minimum) {
        throw DomainError("max_pieces must be at least " + std::to_string(minimum) + " for case " +
                          to_string(spec.kind));
    }
    if (spec.symmetric && (spec.kind == GenCase::OneConstant || spec.kind == GenCase::Mutant)) {
        throw DomainError("symmetric generation supports only extremal and two_sided");
    }
    // Room for two interval ends plus every breakpoint on the finest dyadic grid.
    Rational room = (spec.bounds.hi().value() - spec.bounds.lo().value()) * (1 << Sampler::max_exponent);
    if (room < 2 * spec.max_pieces + 4) {
        throw DomainError("bounds " + to_string(spec.bounds) + " are too small for " +
                          std::to_string(spec.max_pieces) + " pieces");
    }
}

}  // namespace

EquationInstance generate(const GenSpec& spec) {
    validate(spec);
    Sampler rng(spec.seed);
    switch (spec.kind) {
    case GenCase::Extremal:
        return generate_extremal(rng, spec);
    case GenCase::TwoSided:
        return redraw_until(rng, spec, try_two_sided, "two_sided");
    case GenCase::OneConstant:
        return redraw_until(rng, spec, try_one_constant, "one_constant");
    case GenCase::Mutant:
        return redraw_until(rng, spec, try_mutant, "mutant");
    }
    throw DomainError("unknown generator case");
}

}  // namespace pexider
