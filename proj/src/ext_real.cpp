#include "pexider/ext_real.hpp"

#include "pexider/error.hpp"

#include <algorithm>
#include <cctype>

namespace pexider {

ExtReal::ExtReal(Rational q) : kind_(Kind::Finite), value_(std::move(q)) {
    value_.canonicalize();
}

const Rational& ExtReal::value() const {
    if (!is_finite()) {
        throw DomainError("value() on an infinite extended real");
    }
    return value_;
}

ExtReal ExtReal::operator-() const {
    switch (kind_) {
    case Kind::NegInf:
        return pos_inf();
    case Kind::PosInf:
        return neg_inf();
    case Kind::Finite:
        break;
    }
    return ExtReal(Rational(-value_));
}

ExtReal ExtReal::twice() const {
    if (!is_finite()) {
        return *this;
    }
    return ExtReal(Rational(value_ * 2));
}

ExtReal ExtReal::half() const {
    if (!is_finite()) {
        return *this;
    }
    return ExtReal(Rational(value_ / 2));
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
        throw DomainError("undefined sum (+inf) + (-inf)");
    }
    if (!a.is_finite()) {
        return a;
    }
    if (!b.is_finite()) {
        return b;
    }
    return ExtReal(Rational(a.value_ + b.value_));
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_ || !a.is_finite()) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    int c = cmp(a.value_, b.value_);
    return c <=> 0;
}

const ExtReal& max(const ExtReal& a, const ExtReal& b) {
    return a < b ? b : a;
}

const ExtReal& min(const ExtReal& a, const ExtReal& b) {
    return b < a ? b : a;
}

std::string to_string(const ExtReal& x) {
    switch (x.kind()) {
    case ExtReal::Kind::NegInf:
        return "-inf";
    case ExtReal::Kind::PosInf:
        return "+inf";
    case ExtReal::Kind::Finite:
        break;
    }
    return to_string(x.value());
}

ExtReal parse_ext_real(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    if (s == "inf" || s == "+inf" || s == "infinity" || s == "+infinity") {
        return ExtReal::pos_inf();
    }
    if (s == "-inf" || s == "-infinity") {
        return ExtReal::neg_inf();
    }
    return ExtReal(parse_rational(s));
}

}  // namespace pexider
