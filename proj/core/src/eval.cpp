#include "theta/eval.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>

#include "theta/error.hpp"

namespace theta {

CertifiedComplex c_div(const CertifiedComplex& a, const CertifiedComplex& b) {
    double bm = std::abs(b.value);
    if (!(bm > b.err))
        throw Error(ErrorCode::branch_unresolvable, "division by a value not certified nonzero");
    double err = (a.err + std::abs(a.value / b.value) * b.err) / (bm - b.err);
    return {a.value / b.value, err};
}

CertifiedComplex c_sqrt(const CertifiedComplex& a) {
    double am = std::abs(a.value);
    if (!(am > a.err))
        throw Error(ErrorCode::branch_unresolvable, "sqrt of a value not certified nonzero");
    std::complex<double> r = std::sqrt(a.value);
    // |sqrt(w) - sqrt(v)| = |w - v| / |sqrt(w) + sqrt(v)| on the same branch
    double err = a.err / (std::sqrt(am - a.err) + std::sqrt(am));
    return {r, err};
}

namespace {

constexpr double k_pi = std::numbers::pi;

// Tail of the Gaussian lattice sum outside ||l + v||_inf <= R, bounded ring
// by ring: at most (2r+2)^g integer points within inf-distance r of any
// center, each term at most exp(-pi b r^2) on ring (r, r+1].
double ring_tail_bound(double b, int g, int radius) {
    double total = 0.0;
    for (int j = 0; j < 4000; ++j) {
        double r = static_cast<double>(radius + j);
        double count = std::pow(2.0 * r + 4.0, g);
        double term = count * std::exp(-k_pi * b * r * r);
        total += term;
        if (term < total * 1e-18 || term == 0.0)
            break;
    }
    return total;
}

struct KahanComplex {
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> comp{0.0, 0.0};

    void add(std::complex<double> x) {
        std::complex<double> y = x - comp;
        std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace

CertifiedComplex theta(const Characteristic& ch, const std::vector<std::complex<double>>& z,
                       const SiegelMatrix& tau, const EvalParams& params) {
    const int g = tau.dim();
    if (ch.genus() != g || static_cast<int>(z.size()) != g)
        throw Error(ErrorCode::dimension_mismatch, "characteristic, z and tau dimensions disagree");
    if (!(params.tol > 0.0))
        throw Error(ErrorCode::parse_error, "evaluation tolerance must be positive");

    Eigen::MatrixXd im_tau(g, g);
    Eigen::VectorXd im_z(g);
    for (int i = 0; i < g; ++i) {
        im_z(i) = z[i].imag();
        for (int j = 0; j < g; ++j)
            im_tau(i, j) = tau.at(i, j).imag();
    }
    Eigen::LLT<Eigen::MatrixXd> llt(im_tau);
    Eigen::VectorXd c = llt.solve(im_z);

    // exp(pi c^T Im(tau) c): uniform growth factor of term magnitudes at z != 0
    double growth = std::exp(k_pi * c.dot(im_tau * c));

    std::vector<double> half_top(g), half_bottom(g), center(g);
    double shift = 0.0, c_inf = 0.0;
    for (int j = 0; j < g; ++j) {
        half_top[j] = 0.5 * ch.top[j].to_double();
        half_bottom[j] = 0.5 * ch.bottom[j].to_double();
        center[j] = half_top[j] + c(j);
        shift = std::max(shift, std::abs(half_top[j]));
        c_inf = std::max(c_inf, std::abs(c(j)));
    }
    shift += c_inf;

    const double b = tau.im_min_eig_lb();
    int radius = 0;
    while (true) {
        double d = std::max(0.0, static_cast<double>(radius) - shift);
        if (std::pow(2.0 * radius + 3.0, g) * std::exp(-k_pi * b * d * d) < params.tol)
            break;
        if (++radius > params.max_radius)
            throw Error(ErrorCode::radius_cap_exceeded,
                        "truncation radius above cap " + std::to_string(params.max_radius) +
                            " for tol " + std::to_string(params.tol));
    }
    // Certify against half the budget; the other half absorbs the rounding
    // allowance added after accumulation.
    while (growth * ring_tail_bound(b, g, radius) >= 0.5 * params.tol) {
        if (++radius > params.max_radius)
            throw Error(ErrorCode::radius_cap_exceeded,
                        "truncation radius above cap " + std::to_string(params.max_radius) +
                            " for tol " + std::to_string(params.tol));
    }

    std::vector<long long> lo(g), hi(g), idx(g);
    for (int j = 0; j < g; ++j) {
        lo[j] = static_cast<long long>(std::ceil(-radius - center[j]));
        hi[j] = static_cast<long long>(std::floor(radius - center[j]));
        idx[j] = lo[j];
    }

    std::complex<double> plain_sum{0.0, 0.0};
    KahanComplex comp_sum;
    double abs_acc = 0.0;
    std::vector<double> w(g);
    bool done = false;
    for (int j = 0; j < g; ++j)
        if (lo[j] > hi[j])
            done = true; // empty box cannot happen for radius >= 1, but stay safe
    while (!done) {
        for (int j = 0; j < g; ++j)
            w[j] = static_cast<double>(idx[j]) + half_top[j];

        std::complex<double> quad{0.0, 0.0};
        for (int a = 0; a < g; ++a) {
            std::complex<double> row{0.0, 0.0};
            for (int bcol = 0; bcol < g; ++bcol)
                row += tau.at(a, bcol) * w[bcol];
            quad += w[a] * row;
        }
        std::complex<double> lin{0.0, 0.0};
        for (int a = 0; a < g; ++a)
            lin += w[a] * (z[a] + half_bottom[a]);

        std::complex<double> arg = std::complex<double>(0.0, 2.0 * k_pi) * (0.5 * quad + lin);
        std::complex<double> term = std::exp(arg);
        abs_acc += std::abs(term);
        if (params.compensated)
            comp_sum.add(term);
        else
            plain_sum += term;

        // lexicographic odometer, last coordinate fastest
        int j = g - 1;
        while (j >= 0 && ++idx[j] > hi[j]) {
            idx[j] = lo[j];
            --j;
        }
        if (j < 0)
            done = true;
    }

    CertifiedComplex out;
    out.value = params.compensated ? comp_sum.sum : plain_sum;
    double round_allowance = 2.0 * std::numeric_limits<double>::epsilon() * abs_acc;
    out.err = growth * ring_tail_bound(b, g, radius) + round_allowance;
    if (!(out.err < params.tol))
        throw Error(ErrorCode::radius_cap_exceeded,
                    "requested tol " + std::to_string(params.tol) +
                        " is below the certifiable floor " + std::to_string(out.err));
    return out;
}

CertifiedComplex theta_constant(const Characteristic& ch, const SiegelMatrix& tau,
                                const EvalParams& params) {
    if (ch.is_integral() && parity(reduce_characteristic(ch).ch) == Parity::odd)
        return {std::complex<double>{0.0, 0.0}, 0.0};
    return theta(ch, std::vector<std::complex<double>>(tau.dim(), {0.0, 0.0}), tau, params);
}

std::complex<double> quasi_period_factor(const Characteristic& ch,
                                         const std::vector<std::complex<double>>& z,
                                         const std::vector<int>& n, const std::vector<int>& m,
                                         const SiegelMatrix& tau) {
    const int g = tau.dim();
    if (ch.genus() != g || static_cast<int>(z.size()) != g || static_cast<int>(n.size()) != g ||
        static_cast<int>(m.size()) != g)
        throw Error(ErrorCode::dimension_mismatch, "quasi_period_factor dimensions disagree");

    std::complex<double> e{0.0, 0.0};
    for (int j = 0; j < g; ++j) {
        e += 0.5 * (n[j] * ch.top[j].to_double() - m[j] * ch.bottom[j].to_double());
        e -= static_cast<double>(m[j]) * z[j];
    }
    std::complex<double> quad{0.0, 0.0};
    for (int a = 0; a < g; ++a)
        for (int bcol = 0; bcol < g; ++bcol)
            quad += static_cast<double>(m[a]) * tau.at(a, bcol) * static_cast<double>(m[bcol]);
    e -= 0.5 * quad;
    return std::exp(std::complex<double>(0.0, 2.0 * k_pi) * e);
}

} // namespace theta
