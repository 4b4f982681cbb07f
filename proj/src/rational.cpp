#include "zmx/rational.hpp"

#include "zmx/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace zmx {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    return Rational(n, d);
}

std::string to_string(const Rational& q) {
    return q.str();
}

int sign(const Rational& q) {
    return q.sign();
}

Rational divide(const Rational& num, const Rational& den) {
    if (den == 0) {
        throw DivisionByZero();
    }
    return num / den;
}

Rational power(const Rational& q, int e) {
    if (e < 0) {
        return divide(Rational(1), power(q, -e));
    }
    Rational result(1);
    Rational base = q;
    for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
        if (k & 1U) {
            result *= base;
        }
        base *= base;
    }
    return result;
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace zmx
