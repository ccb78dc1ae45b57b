#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "theta/eval.hpp"
#include "theta/identity.hpp"

namespace theta {

struct VerifyOptions {
    EvalParams eval;
    double rel_tol = 1e-8;
    std::uint64_t tau_seed = 0; // recorded in the report
    int sample = 0;
};

// Evaluates every factor at tau_scale * tau (memoized per characteristic and
// scale), forms sum(coeff * product), and reports |sum| against the
// normalizer max |term|. PASS iff |sum| <= max(tol, rel_tol * normalizer).
ResidualReport verify_identity(const Identity& id, const SiegelMatrix& tau,
                               const VerifyOptions& opts = {});

// Duplication formula for theta constants, any rational characteristic:
//   Theta^2[eps; eps1](0, tau)
//     = sum over a in {0,1}^g of Theta[eps+a; 2 eps1](0, 2 tau)
//                                * Theta[a; 0](0, 2 tau).
ResidualReport duplication_check(const std::vector<Rational>& eps,
                                 const std::vector<Rational>& eps1, const SiegelMatrix& tau,
                                 const EvalParams& params = {}, double rel_tol = 1e-8);

// Character-sum expansion of a null value into quarter-period constants:
//   Theta[0; d](0, tau) = sum over b in {0,1}^g of exp(i pi d.b)
//                         * Theta[b; 0](0, 4 tau).
ResidualReport four_tau_expansion_check(const std::vector<int>& delta, const SiegelMatrix& tau,
                                        const EvalParams& params = {}, double rel_tol = 1e-8);

// Inverse transform (character orthogonality gives the 2^{-g}):
//   Theta[b; 0](0, 4 tau) = 2^{-g} sum over d of exp(-i pi d.b)
//                           * Theta[0; d](0, tau).
ResidualReport four_tau_inversion_check(const std::vector<int>& beta, const SiegelMatrix& tau,
                                        const EvalParams& params = {}, double rel_tol = 1e-8);

// Squared constant at 2 tau as a bilinear combination at tau (eps1 integral):
//   Theta^2[eps; eps1](0, 2 tau) = 2^{-g} sum over d of exp(i pi eps.d)
//       * Theta[0; d](0, tau) * Theta[0; eps1 - d](0, tau),
// with eps1 - d reduced mod 2. The 2^{-g} comes from applying the inversion
// above twice and summing the character.
ResidualReport two_tau_square_check(const std::vector<int>& eps, const std::vector<int>& eps1,
                                    const SiegelMatrix& tau, const EvalParams& params = {},
                                    double rel_tol = 1e-8);

// Theta[eps; eps1](0, tau) for eps integral and eps1 with power-of-two
// denominators, computed only from integral-characteristic constants:
// duplication raises to doubled denominators at 2 tau, the squared-2tau
// identity descends back to tau, and each square root picks its branch
// against a low-precision direct evaluation. Throws branch_unresolvable when
// the sign oracle magnitude is below 10x its own error.
CertifiedComplex construct_half_characteristics(const std::vector<int>& eps,
                                                const std::vector<Rational>& eps1,
                                                const SiegelMatrix& tau,
                                                const EvalParams& params = {});

// Fixed 3x3 grid of two-digit labels encoding the ten even g=2
// characteristics (digits 0..3 are the columns [0;0],[1;0],[0;1],[1;1]);
// the label 00 is kept outside the grid. The grid is reproduced verbatim
// from its source, including the repeated 22 entry; identities drawn from
// selections through that cell are expected to fail verification and are
// flagged, not dropped.
struct EvenCharTable {
    static const std::array<std::array<int, 3>, 3>& labels();
    static Characteristic decode(int label);
    static std::string label_text(int label); // zero-padded, e.g. "01"
};

enum class CatalogKind { type_one, type_two };

// The g=2 catalog. Type I: the distinguished 00 against each generalized
// diagonal (all 6 permutation selections) of the grid. Type II: the two
// diagonals of each 2x2 submatrix (9 row/column pairs) against each other.
// Every selection is emitted in both the quartic single-tau form and the
// bilinear tau/3tau form; numeric verification adjudicates which hold.
std::vector<Identity> catalog_identities(CatalogKind kind);
std::vector<Identity> catalog_identities(); // both kinds

// Quartic Jacobi relation at g=1: Theta^4[0;0] = Theta^4[1;0] + Theta^4[0;1].
Identity jacobi_quartic_identity();

} // namespace theta
