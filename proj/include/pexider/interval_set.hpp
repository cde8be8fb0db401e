#pragma once

#include "pexider/interval.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace pexider {

/// A finite union of intervals kept in normal form: parts sorted, pairwise
/// disjoint, and no two of them mergeable into a single interval.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(const Interval& part);
    explicit IntervalSet(std::vector<Interval> parts);
    IntervalSet(std::initializer_list<Interval> parts) : IntervalSet(std::vector<Interval>(parts)) {}

    const std::vector<Interval>& parts() const noexcept { return parts_; }
    bool is_empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }

    bool contains(const Rational& x) const;

    /// True iff every part is a single point (or the set is empty).
    bool has_empty_interior() const;

    /// Smallest interval containing the set (Empty for the empty set).
    Interval hull() const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.parts_ == b.parts_; }

private:
    std::vector<Interval> parts_;
};

/// Normal form of an arbitrary list of intervals.
std::vector<Interval> normalize(std::vector<Interval> parts);

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const Interval& b);
/// a \ b.
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);
/// d \ a.
IntervalSet complement_within(const IntervalSet& a, const Interval& d);

bool is_subset(const IntervalSet& a, const IntervalSet& b);

/// Union of reflect(s_i, p_j, q) over all pairs of parts.
IntervalSet reflect_set(const IntervalSet& s, const IntervalSet& p, const Interval& q);

/// Union of half_sum(a_i, b) over the parts of `a`.
IntervalSet half_sum(const IntervalSet& a, const Interval& b);

/// Closure of `z` relative to the open interval `d`.
/// Throws DomainError if `d` is not a nonempty open interval or `z` ⊄ `d`.
IntervalSet closure_within(const IntervalSet& z, const Interval& d);
bool is_closed_in(const IntervalSet& z, const Interval& d);

/// `{(0,1),[2,3)}` or `{}`.
std::string to_string(const IntervalSet& s);

}  // namespace pexider
