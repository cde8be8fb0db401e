#include "pexider/rational.hpp"

#include "pexider/error.hpp"

#include <cctype>

namespace pexider {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) {
            throw ParseError("invalid exponent in number '" + std::string(original) + "'");
        }
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) {
            exponent = -exponent;
        }
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
        throw ParseError("invalid number '" + std::string(original) + "'");
    }
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        throw ParseError("invalid number '" + std::string(original) + "'");
    }

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class numerator(digits.empty() ? std::string("0") : digits, 10);
    exponent -= static_cast<long>(frac_part.size());

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(numerator, scale) : Rational(numerator * scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        throw ParseError("empty number");
    }
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = trim(s.substr(0, slash));
        std::string_view den = trim(s.substr(slash + 1));
        std::string_view num_digits = num;
        if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
            num_digits.remove_prefix(1);
        }
        if (!all_digits(num_digits) || !all_digits(den)) {
            throw ParseError("invalid rational '" + std::string(text) + "'");
        }
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        std::string n(num.front() == '+' ? num.substr(1) : num);
        Rational q(mpz_class(n, 10), d);
        q.canonicalize();
        return q;
    }
    return parse_decimal(s, text);
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational midpoint(const Rational& a, const Rational& b) {
    Rational m = (a + b) / 2;
    return m;
}

}  // namespace pexider
