#include "theta/rational.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "theta/error.hpp"

namespace theta {

Rational::Rational(long long n, long long d) {
    if (d == 0)
        throw Error(ErrorCode::parse_error, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, "bad rational literal: '" + text + "'");
    }
}

Rational Rational::mod2() const {
    long long two_den = 2 * den;
    long long r = num % two_den;
    if (r < 0)
        r += two_den;
    return Rational(r, den);
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

bool Rational::operator<(const Rational& o) const {
    return num * o.den < o.num * den;
}

std::string Rational::str() const {
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

int RootOfUnity::sign() const {
    if (!is_real())
        throw Error(ErrorCode::parse_error, "root of unity is not +-1: exp(i pi " + exponent.str() + ")");
    return exponent.num % 2 == 0 ? 1 : -1;
}

std::complex<double> RootOfUnity::value() const {
    // Exact values on the quarter-circle lattice; std::polar elsewhere.
    Rational q = exponent.mod2();
    if (q == Rational(0)) return {1.0, 0.0};
    if (q == Rational(1)) return {-1.0, 0.0};
    if (q == Rational(1, 2)) return {0.0, 1.0};
    if (q == Rational(3, 2)) return {0.0, -1.0};
    return std::polar(1.0, std::numbers::pi * q.to_double());
}

} // namespace theta
