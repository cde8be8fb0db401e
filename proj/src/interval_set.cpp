#include "pexider/interval_set.hpp"

#include "pexider/error.hpp"

#include <algorithm>

namespace pexider {

namespace {

// Parts sharing lo sort closed-first so the sweep keeps the larger one.
bool lo_before(const Interval& a, const Interval& b) {
    if (a.lo() != b.lo()) {
        return a.lo() < b.lo();
    }
    return a.lo_closed() && !b.lo_closed();
}

bool can_merge(const Interval& cur, const Interval& next) {
    return next.lo() < cur.hi() || (next.lo() == cur.hi() && (cur.hi_closed() || next.lo_closed()));
}

}  // namespace

std::vector<Interval> normalize(std::vector<Interval> parts) {
    std::erase_if(parts, [](const Interval& i) { return i.is_empty(); });
    std::sort(parts.begin(), parts.end(), lo_before);

    std::vector<Interval> out;
    for (const Interval& next : parts) {
        if (out.empty() || !can_merge(out.back(), next)) {
            out.push_back(next);
            continue;
        }
        const Interval& cur = out.back();
        if (next.hi() < cur.hi() || (next.hi() == cur.hi() && (cur.hi_closed() || !next.hi_closed()))) {
            continue;
        }
        out.back() = Interval(cur.lo(), next.hi(), cur.lo_closed(), next.hi_closed());
    }
    return out;
}

IntervalSet::IntervalSet(const Interval& part) {
    if (!part.is_empty()) {
        parts_.push_back(part);
    }
}

IntervalSet::IntervalSet(std::vector<Interval> parts) : parts_(normalize(std::move(parts))) {}

bool IntervalSet::contains(const Rational& x) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
}

bool IntervalSet::has_empty_interior() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const Interval& i) { return i.is_point(); });
}

Interval IntervalSet::hull() const {
    if (parts_.empty()) {
        return Interval::empty();
    }
    const Interval& first = parts_.front();
    const Interval& last = parts_.back();
    return Interval(first.lo(), last.hi(), first.lo_closed(), last.hi_closed());
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return IntervalSet(std::move(parts));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> parts;
    for (const Interval& x : a.parts()) {
        for (const Interval& y : b.parts()) {
            parts.push_back(intersect(x, y));
        }
    }
    return IntervalSet(std::move(parts));
}

IntervalSet intersect(const IntervalSet& a, const Interval& b) {
    return intersect(a, IntervalSet(b));
}

IntervalSet complement_within(const IntervalSet& a, const Interval& d) {
    if (d.is_empty()) {
        return {};
    }
    std::vector<Interval> gaps;
    ExtReal cursor = d.lo();
    bool cursor_closed = d.lo_closed();
    const IntervalSet inside = intersect(a, d);
    for (const Interval& part : inside.parts()) {
        gaps.push_back(Interval::make(cursor, part.lo(), cursor_closed, !part.lo_closed()));
        cursor = part.hi();
        cursor_closed = !part.hi_closed();
    }
    gaps.push_back(Interval::make(cursor, d.hi(), cursor_closed, d.hi_closed()));
    return IntervalSet(std::move(gaps));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
    return intersect(a, complement_within(b, Interval::whole()));
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
    return std::all_of(a.parts().begin(), a.parts().end(), [&](const Interval& part) {
        return std::any_of(b.parts().begin(), b.parts().end(),
                           [&](const Interval& host) { return host.contains(part); });
    });
}

IntervalSet reflect_set(const IntervalSet& s, const IntervalSet& p, const Interval& q) {
    std::vector<Interval> parts;
    for (const Interval& si : s.parts()) {
        for (const Interval& pj : p.parts()) {
            parts.push_back(reflect(si, pj, q));
        }
    }
    return IntervalSet(std::move(parts));
}

IntervalSet half_sum(const IntervalSet& a, const Interval& b) {
    std::vector<Interval> parts;
    for (const Interval& ai : a.parts()) {
        parts.push_back(half_sum(ai, b));
    }
    return IntervalSet(std::move(parts));
}

IntervalSet closure_within(const IntervalSet& z, const Interval& d) {
    if (d.is_empty() || !d.is_open()) {
        throw DomainError("closure_within needs a nonempty open ambient interval, got " + to_string(d));
    }
    if (!is_subset(z, IntervalSet(d))) {
        throw DomainError(to_string(z) + " is not a subset of " + to_string(d));
    }
    // Since d is open, a finite endpoint of a part lies in d unless it is an endpoint of d.
    std::vector<Interval> parts;
    for (const Interval& part : z.parts()) {
        bool lo_closed = part.lo().is_finite() && part.lo() != d.lo();
        bool hi_closed = part.hi().is_finite() && part.hi() != d.hi();
        parts.push_back(Interval::make(part.lo(), part.hi(), lo_closed, hi_closed));
    }
    return IntervalSet(std::move(parts));
}

bool is_closed_in(const IntervalSet& z, const Interval& d) {
    return closure_within(z, d) == z;
}

std::string to_string(const IntervalSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.parts().size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += to_string(s.parts()[i]);
    }
    out += '}';
    return out;
}

}  // namespace pexider
