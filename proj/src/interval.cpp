#include "pexider/interval.hpp"

#include "pexider/error.hpp"

#include <cctype>

namespace pexider {

Interval::Interval(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed)
    : empty_(false), lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (hi_ < lo_) {
        throw DomainError("interval with lo > hi");
    }
    if ((lo_closed_ && !lo_.is_finite()) || (hi_closed_ && !hi_.is_finite())) {
        throw DomainError("infinite endpoint cannot be closed");
    }
    if (lo_ == hi_ && !(lo_closed_ && hi_closed_)) {
        throw DomainError("degenerate interval must be the closed point [p,p]");
    }
}

Interval Interval::make(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed) {
    lo_closed = lo_closed && lo.is_finite();
    hi_closed = hi_closed && hi.is_finite();
    if (hi < lo || (lo == hi && !(lo_closed && hi_closed))) {
        return empty();
    }
    return Interval(std::move(lo), std::move(hi), lo_closed, hi_closed);
}

const ExtReal& Interval::lo() const {
    if (empty_) {
        throw DomainError("lo() of an empty interval");
    }
    return lo_;
}

const ExtReal& Interval::hi() const {
    if (empty_) {
        throw DomainError("hi() of an empty interval");
    }
    return hi_;
}

bool Interval::lo_closed() const {
    if (empty_) {
        throw DomainError("lo_closed() of an empty interval");
    }
    return lo_closed_;
}

bool Interval::hi_closed() const {
    if (empty_) {
        throw DomainError("hi_closed() of an empty interval");
    }
    return hi_closed_;
}

bool Interval::contains(const Rational& x) const {
    if (empty_) {
        return false;
    }
    ExtReal v(x);
    bool above = lo_closed_ ? lo_ <= v : lo_ < v;
    bool below = hi_closed_ ? v <= hi_ : v < hi_;
    return above && below;
}

bool Interval::contains(const Interval& other) const {
    if (other.empty_) {
        return true;
    }
    if (empty_) {
        return false;
    }
    bool lo_ok = lo_ < other.lo_ || (lo_ == other.lo_ && (lo_closed_ || !other.lo_closed_));
    bool hi_ok = other.hi_ < hi_ || (hi_ == other.hi_ && (hi_closed_ || !other.hi_closed_));
    return lo_ok && hi_ok;
}

bool operator==(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) {
        return a.empty_ == b.empty_;
    }
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ && a.hi_closed_ == b.hi_closed_;
}

Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) {
        return Interval::empty();
    }
    ExtReal lo = max(a.lo(), b.lo());
    bool lo_closed = (a.lo() != lo || a.lo_closed()) && (b.lo() != lo || b.lo_closed());
    ExtReal hi = min(a.hi(), b.hi());
    bool hi_closed = (a.hi() != hi || a.hi_closed()) && (b.hi() != hi || b.hi_closed());
    return Interval::make(lo, hi, lo_closed, hi_closed);
}

Interval reflect(const Interval& s, const Interval& p, const Interval& q) {
    if (s.is_empty() || p.is_empty() || q.is_empty()) {
        return Interval::empty();
    }
    // 2p - s is an interval: [2 inf p - sup s, 2 sup p - inf s], each end
    // attained exactly when both contributing endpoints are.
    Interval mirrored = Interval::make(p.lo().twice() - s.hi(), p.hi().twice() - s.lo(),
                                       p.lo_closed() && s.hi_closed(), p.hi_closed() && s.lo_closed());
    return intersect(mirrored, q);
}

Interval half_sum(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) {
        return Interval::empty();
    }
    return Interval::make((a.lo() + b.lo()).half(), (a.hi() + b.hi()).half(),
                          a.lo_closed() && b.lo_closed(), a.hi_closed() && b.hi_closed());
}

ExtReal diameter(const Interval& a) {
    if (a.is_empty()) {
        throw DomainError("diameter of the empty interval");
    }
    return a.hi() - a.lo();
}

Rational representative(const Interval& a) {
    if (a.is_empty()) {
        throw DomainError("representative of the empty interval");
    }
    if (a.is_bounded()) {
        return midpoint(a.lo().value(), a.hi().value());
    }
    if (a.lo().is_finite()) {
        return a.lo().value() + 1;
    }
    if (a.hi().is_finite()) {
        return a.hi().value() - 1;
    }
    return Rational(0);
}

std::string to_string(const Interval& a) {
    if (a.is_empty()) {
        return "empty";
    }
    std::string out;
    out += a.lo_closed() ? '[' : '(';
    out += to_string(a.lo());
    out += ',';
    out += to_string(a.hi());
    out += a.hi_closed() ? ']' : ')';
    return out;
}

Interval parse_interval(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s == "empty" || s == "{}") {
        return Interval::empty();
    }
    if (s.size() < 5) {
        throw ParseError("invalid interval literal '" + std::string(text) + "'");
    }
    char open = s.front();
    char close = s.back();
    if ((open != '(' && open != '[') || (close != ')' && close != ']')) {
        throw ParseError("interval literal must start with '(' or '[' and end with ')' or ']': '" +
                         std::string(text) + "'");
    }
    std::string body = s.substr(1, s.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos) {
        throw ParseError("interval literal needs exactly one ',': '" + std::string(text) + "'");
    }
    ExtReal lo = parse_ext_real(body.substr(0, comma));
    ExtReal hi = parse_ext_real(body.substr(comma + 1));
    try {
        return Interval(lo, hi, open == '[', close == ']');
    } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
}

}  // namespace pexider
