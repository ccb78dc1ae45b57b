#pragma once

#include <complex>
#include <string>
#include <vector>

namespace theta {

// A period matrix tau in the Siegel upper half space H_g: complex symmetric
// g x g with positive definite imaginary part. Immutable after validation;
// carries a certified lower bound on the smallest eigenvalue of Im(tau),
// which drives the series truncation radius.
class SiegelMatrix {
  public:
    // Symmetrizes (raw + raw^T)/2 after checking max asymmetry <= sym_tol,
    // then requires a successful Cholesky factorization of the imaginary
    // part. Throws not_symmetric / not_positive_definite.
    static SiegelMatrix validate(const std::vector<std::complex<double>>& raw_row_major,
                                 int g, double sym_tol = 1e-12);

    int dim() const { return dim_; }
    const std::complex<double>& at(int i, int j) const { return entries_[i * dim_ + j]; }
    const std::vector<std::complex<double>>& entries() const { return entries_; }

    // Cached bound 0 < b <= lambda_min(Im tau), from 1/||(Im tau)^{-1}||_1
    // computed off the Cholesky factors.
    double im_min_eig_lb() const { return im_min_eig_lb_; }

    // Entrywise m*tau; the eigenvalue bound scales exactly by m.
    SiegelMatrix scaled(int m) const;

  private:
    SiegelMatrix(int dim, std::vector<std::complex<double>> entries, double lb)
        : dim_(dim), entries_(std::move(entries)), im_min_eig_lb_(lb) {}

    int dim_;
    std::vector<std::complex<double>> entries_;
    double im_min_eig_lb_;
};

double min_eig_lower_bound(const SiegelMatrix& tau);

// JSON matrix format shared with the CLI:
//   {"g": n, "re": [[...]], "im": [[...]]}, row-major decimal literals.
SiegelMatrix tau_from_json(const std::string& text);
std::string tau_to_json(const SiegelMatrix& tau);

} // namespace theta
