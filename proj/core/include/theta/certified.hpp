#pragma once

#include <complex>

namespace theta {

// A complex value together with an absolute error bound |value - true| <= err.
// Sums and products propagate bounds conservatively; the bounds track series
// truncation plus a first-order rounding allowance, not worst-case FP error.
struct CertifiedComplex {
    std::complex<double> value{0.0, 0.0};
    double err = 0.0;
};

inline CertifiedComplex c_exact(std::complex<double> v) { return {v, 0.0}; }

inline CertifiedComplex c_add(const CertifiedComplex& a, const CertifiedComplex& b) {
    return {a.value + b.value, a.err + b.err};
}

inline CertifiedComplex c_sub(const CertifiedComplex& a, const CertifiedComplex& b) {
    return {a.value - b.value, a.err + b.err};
}

inline CertifiedComplex c_mul(const CertifiedComplex& a, const CertifiedComplex& b) {
    double ea = std::abs(a.value) * b.err + std::abs(b.value) * a.err + a.err * b.err;
    return {a.value * b.value, ea};
}

inline CertifiedComplex c_scale(std::complex<double> exact, const CertifiedComplex& a) {
    return {exact * a.value, std::abs(exact) * a.err};
}

inline CertifiedComplex c_pow(const CertifiedComplex& a, int n) {
    CertifiedComplex out = c_exact({1.0, 0.0});
    for (int i = 0; i < n; ++i)
        out = c_mul(out, a);
    return out;
}

// a/b; requires |b| to be certifiably nonzero (err < |value|).
CertifiedComplex c_div(const CertifiedComplex& a, const CertifiedComplex& b);

// Principal square root; requires err < |value|.
CertifiedComplex c_sqrt(const CertifiedComplex& a);

} // namespace theta
