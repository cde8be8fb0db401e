#pragma once

#include "pexider/ext_real.hpp"

#include <string>
#include <string_view>

namespace pexider {

/// A possibly unbounded real interval with independent endpoint closedness.
///
/// Either Empty, or lo <= hi with: lo == hi only as the closed point [p,p],
/// and infinite endpoints always open. The public constructor rejects
/// anything else; `Interval::make` instead maps void combinations to Empty,
/// which is what set operations want.
class Interval {
public:
    /// Empty.
    Interval() = default;

    /// Throws DomainError unless the arguments describe a nonempty interval.
    Interval(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed);

    static Interval empty() { return Interval(); }
    static Interval make(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed);
    static Interval open(ExtReal lo, ExtReal hi) { return Interval(std::move(lo), std::move(hi), false, false); }
    static Interval closed(ExtReal lo, ExtReal hi) { return Interval(std::move(lo), std::move(hi), true, true); }
    static Interval point(const Rational& p) { return Interval(p, p, true, true); }
    static Interval whole() { return open(ExtReal::neg_inf(), ExtReal::pos_inf()); }

    bool is_empty() const noexcept { return empty_; }

    // Endpoint accessors throw DomainError on Empty.
    const ExtReal& lo() const;
    const ExtReal& hi() const;
    bool lo_closed() const;
    bool hi_closed() const;

    /// Open as a subset of the real line. Empty counts as open.
    bool is_open() const noexcept { return empty_ || (!lo_closed_ && !hi_closed_); }
    bool is_point() const noexcept { return !empty_ && lo_ == hi_; }
    bool is_bounded() const noexcept { return !empty_ && lo_.is_finite() && hi_.is_finite(); }

    bool contains(const Rational& x) const;
    /// Setwise inclusion of `other` in `*this`.
    bool contains(const Interval& other) const;

    friend bool operator==(const Interval& a, const Interval& b);

private:
    bool empty_ = true;
    ExtReal lo_;
    ExtReal hi_;
    bool lo_closed_ = false;
    bool hi_closed_ = false;
};

Interval intersect(const Interval& a, const Interval& b);

/// The reflection of `s` through the centers `p`, restricted to `q`: (2p - s) ∩ q.
Interval reflect(const Interval& s, const Interval& p, const Interval& q);

/// Minkowski mean {(x + y) / 2 : x ∈ a, y ∈ b}.
Interval half_sum(const Interval& a, const Interval& b);

/// hi - lo, +inf when unbounded. Throws DomainError on Empty.
ExtReal diameter(const Interval& a);

/// Deterministic rational member of a nonempty interval: the midpoint when
/// bounded, one unit inside the finite endpoint otherwise, 0 for the line.
Rational representative(const Interval& a);

/// `(0,2)`, `[1,3/2]`, `(-inf,5)`, `[2,2]`, `empty`.
std::string to_string(const Interval& a);
Interval parse_interval(std::string_view text);

}  // namespace pexider
