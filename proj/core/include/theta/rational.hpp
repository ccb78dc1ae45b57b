#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace theta {

// Exact rational with 64-bit numerator and positive denominator, always in
// lowest terms. Characteristic entries and root-of-unity exponents are tiny
// (denominators are powers of two or small primes), so no overflow handling
// beyond asserts is needed.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);

    static Rational parse(const std::string& text); // "3", "-1/2"

    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Representative in [0, 2) differing from *this by an even integer.
    Rational mod2() const;

    Rational operator-() const { return Rational(-num, den); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator*(long long k) const { return *this * Rational(k); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    std::string str() const;
};

// exp(i*pi*exponent) with the exponent kept exact, reduced mod 2. Products of
// these are the only coefficients identities ever carry, so coefficient
// algebra stays exact end to end.
struct RootOfUnity {
    Rational exponent; // in [0, 2)

    static RootOfUnity one() { return {Rational(0)}; }
    static RootOfUnity minus_one() { return {Rational(1)}; }
    static RootOfUnity from_exponent(const Rational& q) { return {q.mod2()}; }
    static RootOfUnity from_sign(int s) { return s >= 0 ? one() : minus_one(); }

    RootOfUnity operator*(const RootOfUnity& o) const {
        return {(exponent + o.exponent).mod2()};
    }

    bool is_one() const { return exponent == Rational(0); }
    bool is_real() const { return exponent.is_integer(); }
    int sign() const; // +1 or -1; throws unless real

    std::complex<double> value() const;

    bool operator==(const RootOfUnity& o) const { return exponent == o.exponent; }
};

} // namespace theta
