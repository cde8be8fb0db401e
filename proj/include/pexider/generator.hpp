#pragma once

#include "pexider/instance.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace pexider {

enum class GenCase { Extremal, TwoSided, OneConstant, Mutant };

std::string to_string(GenCase c);
/// `extremal`, `two_sided`, `one_constant`, `mutant`. Throws ParseError.
GenCase parse_gen_case(std::string_view name);

struct GenSpec {
    GenCase kind = GenCase::Extremal;
    std::uint64_t seed = 0;
    Interval bounds = Interval::closed(Rational(-4), Rational(4));
    int max_pieces = 4;
    /// I1 == I2 and f1 == f2 (extremal and two_sided only).
    bool symmetric = false;
};

/// Dyadic random draws (denominators up to 2^10) on top of mt19937_64.
/// The mapping from engine output to values is fixed here, so a seed
/// reproduces the same draws on every platform.
class Sampler {
public:
    static constexpr int max_exponent = 10;

    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n). n > 0.
    std::uint64_t below(std::uint64_t n);
    /// True with probability percent / 100.
    bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// Dyadic rational strictly inside (lo, hi); infinite ends are clamped to
    /// `clamp`. Throws DomainError if no dyadic with denominator <= 2^10 fits.
    Rational inside(const ExtReal& lo, const ExtReal& hi, const Interval& clamp);

    /// `count` distinct sorted dyadics strictly inside (lo, hi).
    std::vector<Rational> sorted_inside(std::size_t count, const ExtReal& lo, const ExtReal& hi, const Interval& clamp);

    /// Nonempty interval with endpoints in `bounds`; each side becomes
    /// infinite with probability `unbounded_percent`.
    Interval open_interval(const Interval& bounds, int unbounded_percent = 0);
    /// Arbitrary nonempty subinterval of `host` (random flags, points allowed).
    Interval subinterval(const Interval& host, const Interval& clamp, int point_percent = 10);

private:
    std::mt19937_64 engine_;
};

/// Deterministic in `spec`. Throws DomainError when the spec is invalid or
/// cannot be met inside its bounds.
EquationInstance generate(const GenSpec& spec);

}  // namespace pexider
