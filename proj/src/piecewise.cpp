#include "pexider/piecewise.hpp"

#include "pexider/error.hpp"

#include <algorithm>

namespace pexider {

namespace {

void require_open_domain(const Interval& domain) {
    if (domain.is_empty() || !domain.is_open()) {
        throw DomainError("piecewise domain must be a nonempty open interval, got " + to_string(domain));
    }
}

}  // namespace

PiecewiseConstant::PiecewiseConstant(Interval domain, const std::vector<Piece>& pieces) : domain_(std::move(domain)) {
    require_open_domain(domain_);
    if (pieces.empty()) {
        throw DomainError("piecewise function needs at least one piece");
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Interval& p = pieces[i].piece;
        const std::string where = "piece " + std::to_string(i) + " " + to_string(p);
        if (p.is_empty() || p.is_point()) {
            throw DomainError(where + ": pieces must have positive length");
        }
        bool first = i == 0;
        bool last = i + 1 == pieces.size();
        if (first ? (p.lo() != domain_.lo() || p.lo_closed()) : !p.lo_closed()) {
            throw DomainError(where + (first ? ": first piece must start open at inf of the domain"
                                             : ": breakpoints belong to the right piece, so this piece must be left-closed"));
        }
        if (last ? p.hi() != domain_.hi() : p.hi_closed()) {
            throw DomainError(where + (last ? ": last piece must end at sup of the domain"
                                            : ": piece must be right-open"));
        }
        if (!last) {
            const Interval& next = pieces[i + 1].piece;
            if (next.is_empty() || next.lo() != p.hi()) {
                throw DomainError(where + ": next piece does not start where this one ends");
            }
            breakpoints_.push_back(p.hi().value());
        }
        values_.push_back(pieces[i].value);
    }
    canonicalize();
}

PiecewiseConstant::PiecewiseConstant(Interval domain, std::vector<Rational> breakpoints, std::vector<Rational> values)
    : domain_(std::move(domain)), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    require_open_domain(domain_);
    if (values_.size() != breakpoints_.size() + 1) {
        throw DomainError("piecewise function needs one more value than breakpoints");
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!domain_.contains(breakpoints_[i])) {
            throw DomainError("breakpoint " + to_string(breakpoints_[i]) + " outside " + to_string(domain_));
        }
        if (i > 0 && breakpoints_[i] <= breakpoints_[i - 1]) {
            throw DomainError("breakpoints must be strictly increasing");
        }
    }
    canonicalize();
}

PiecewiseConstant PiecewiseConstant::constant(Interval domain, Rational value) {
    return PiecewiseConstant(std::move(domain), {}, {std::move(value)});
}

void PiecewiseConstant::canonicalize() {
    std::vector<Rational> breakpoints;
    std::vector<Rational> values{values_.front()};
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (values_[i + 1] != values.back()) {
            breakpoints.push_back(breakpoints_[i]);
            values.push_back(values_[i + 1]);
        }
    }
    breakpoints_ = std::move(breakpoints);
    values_ = std::move(values);
}

Interval PiecewiseConstant::piece(std::size_t index) const {
    if (index >= values_.size()) {
        throw DomainError("piece index out of range");
    }
    bool first = index == 0;
    bool last = index + 1 == values_.size();
    ExtReal lo = first ? domain_.lo() : ExtReal(breakpoints_[index - 1]);
    ExtReal hi = last ? domain_.hi() : ExtReal(breakpoints_[index]);
    return Interval(lo, hi, !first, false);
}

std::vector<Piece> PiecewiseConstant::pieces() const {
    std::vector<Piece> out;
    out.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out.push_back({piece(i), values_[i]});
    }
    return out;
}

std::size_t PiecewiseConstant::piece_index(const Rational& x) const {
    if (!domain_.contains(x)) {
        throw DomainError(to_string(x) + " is outside the domain " + to_string(domain_));
    }
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return static_cast<std::size_t>(it - breakpoints_.begin());
}

ExtReal PiecewiseConstant::left_plateau_sup(const Rational& value) const {
    if (values_.front() != value) {
        return ExtReal::neg_inf();
    }
    return breakpoints_.empty() ? domain_.hi() : ExtReal(breakpoints_.front());
}

ExtReal PiecewiseConstant::right_plateau_inf(const Rational& value) const {
    if (values_.back() != value) {
        return ExtReal::pos_inf();
    }
    return breakpoints_.empty() ? domain_.lo() : ExtReal(breakpoints_.back());
}

std::optional<Rational> PiecewiseConstant::is_constant() const {
    if (values_.size() == 1) {
        return values_.front();
    }
    return std::nullopt;
}

IntervalSet PiecewiseConstant::level_components(const Rational& value) const {
    std::vector<Interval> parts;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == value) {
            parts.push_back(piece(i));
        }
    }
    return IntervalSet(std::move(parts));
}

}  // namespace pexider
