#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "theta/characteristic.hpp"
#include "theta/rational.hpp"

namespace theta {

// One theta-constant factor: Theta[ch](0, tau_scale * tau)^exponent.
struct Factor {
    Characteristic ch;
    int tau_scale = 1;
    int exponent = 1;
};

// coeff * product of factors, coeff an exact root of unity.
struct Term {
    RootOfUnity coeff;
    std::vector<Factor> factors;
};

// A formal identity: sum of terms == 0 for every tau in H_g. The semantic
// contract is checked numerically, never assumed. `pruned` records terms
// dropped at construction because their characteristic is integral odd
// (identically zero factors).
struct Identity {
    std::string name;
    std::vector<Term> terms;
    std::vector<std::string> pruned;

    int genus() const;
};

// Verification record for one identity at one tau sample.
struct ResidualReport {
    std::string identity;
    std::uint64_t tau_seed = 0;
    int sample = 0;
    double residual = 0.0;
    double normalizer = 0.0;
    double tol = 0.0; // effective threshold used for the verdict
    bool pass = false;
};

// JSON wire formats (shared with the CLI):
//   identity: {"name": s, "terms": [{"coeff_exp_over_pi_i": "p/q",
//              "factors": [{"char": "a;b", "tau_scale": m, "power": e}]}]}
//   report:   {"identity": s, "tau_seed": u64, "sample": n, "residual": x,
//              "normalizer": x, "tol": x, "pass": b}
std::string identity_to_json(const Identity& id);
Identity identity_from_json(const std::string& text);
std::string identities_to_json(const std::vector<Identity>& ids);
std::vector<Identity> identities_from_json(const std::string& text);
std::string report_to_json(const ResidualReport& r);

} // namespace theta
