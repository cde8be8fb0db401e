#pragma once

#include "pexider/interval_set.hpp"
#include "pexider/piecewise.hpp"

#include <string>
#include <utility>
#include <vector>

namespace testing {

inline pexider::Interval iv(const std::string& literal) {
    return pexider::parse_interval(literal);
}

inline pexider::Rational q(const std::string& literal) {
    return pexider::parse_rational(literal);
}

inline pexider::IntervalSet set(std::initializer_list<const char*> literals) {
    std::vector<pexider::Interval> parts;
    for (const char* l : literals) {
        parts.push_back(iv(l));
    }
    return pexider::IntervalSet(std::move(parts));
}

/// {"(0,1)", "5"}, {"[1,3)", "8"} on the given domain.
inline pexider::PiecewiseConstant fn(const std::string& domain,
                                     std::initializer_list<std::pair<const char*, const char*>> pieces) {
    std::vector<pexider::Piece> out;
    for (const auto& [piece, value] : pieces) {
        out.push_back({iv(piece), q(value)});
    }
    return pexider::PiecewiseConstant(iv(domain), out);
}

}  // namespace testing
