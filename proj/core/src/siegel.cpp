#include "theta/siegel.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <json.hpp>

#include "theta/error.hpp"

namespace theta {

SiegelMatrix SiegelMatrix::validate(const std::vector<std::complex<double>>& raw, int g,
                                    double sym_tol) {
    if (g < 1 || raw.size() != static_cast<size_t>(g) * g)
        throw Error(ErrorCode::dimension_mismatch, "tau must be a nonempty square matrix");

    double max_asym = 0.0;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            if (!std::isfinite(raw[i * g + j].real()) || !std::isfinite(raw[i * g + j].imag()))
                throw Error(ErrorCode::not_positive_definite, "tau has non-finite entries");
            max_asym = std::max(max_asym, std::abs(raw[i * g + j] - raw[j * g + i]));
        }
    if (!(max_asym <= sym_tol))
        throw Error(ErrorCode::not_symmetric,
                    "tau asymmetry " + std::to_string(max_asym) + " exceeds tolerance");

    std::vector<std::complex<double>> sym(static_cast<size_t>(g) * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            sym[i * g + j] = (raw[i * g + j] + raw[j * g + i]) * 0.5;

    Eigen::MatrixXd im(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            im(i, j) = sym[i * g + j].imag();

    Eigen::LLT<Eigen::MatrixXd> llt(im);
    if (llt.info() != Eigen::Success)
        throw Error(ErrorCode::not_positive_definite, "Im(tau) is not positive definite");

    // lambda_min(M) = 1/||M^{-1}||_2 >= 1/||M^{-1}||_1 for symmetric M.
    Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(g, g));
    double inv_norm1 = 0.0;
    for (int j = 0; j < g; ++j) {
        double col = 0.0;
        for (int i = 0; i < g; ++i)
            col += std::abs(inv(i, j));
        inv_norm1 = std::max(inv_norm1, col);
    }
    if (!(inv_norm1 > 0.0) || !std::isfinite(inv_norm1))
        throw Error(ErrorCode::not_positive_definite, "Im(tau) inverse norm is degenerate");

    // Deflate slightly so floating error in the solve cannot push the bound
    // above the true eigenvalue.
    double lb = (1.0 / inv_norm1) * (1.0 - 1e-10);
    return SiegelMatrix(g, std::move(sym), lb);
}

SiegelMatrix SiegelMatrix::scaled(int m) const {
    if (m < 1)
        throw Error(ErrorCode::dimension_mismatch, "tau scale factor must be >= 1");
    std::vector<std::complex<double>> e(entries_);
    for (auto& x : e)
        x *= static_cast<double>(m);
    return SiegelMatrix(dim_, std::move(e), im_min_eig_lb_ * m);
}

double min_eig_lower_bound(const SiegelMatrix& tau) { return tau.im_min_eig_lb(); }

SiegelMatrix tau_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("bad tau JSON: ") + e.what());
    }
    if (!j.contains("g") || !j.contains("re") || !j.contains("im"))
        throw Error(ErrorCode::parse_error, "tau JSON needs fields g, re, im");
    int g = j["g"].get<int>();
    auto re = j["re"];
    auto im = j["im"];
    if (g < 1 || static_cast<int>(re.size()) != g || static_cast<int>(im.size()) != g)
        throw Error(ErrorCode::parse_error, "tau JSON dimensions inconsistent with g");
    std::vector<std::complex<double>> raw(static_cast<size_t>(g) * g);
    for (int i = 0; i < g; ++i) {
        if (static_cast<int>(re[i].size()) != g || static_cast<int>(im[i].size()) != g)
            throw Error(ErrorCode::parse_error, "tau JSON rows must have length g");
        for (int k = 0; k < g; ++k)
            raw[i * g + k] = {re[i][k].get<double>(), im[i][k].get<double>()};
    }
    return SiegelMatrix::validate(raw, g);
}

std::string tau_to_json(const SiegelMatrix& tau) {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (int i = 0; i < tau.dim(); ++i) {
        nlohmann::json rrow = nlohmann::json::array(), irow = nlohmann::json::array();
        for (int j = 0; j < tau.dim(); ++j) {
            rrow.push_back(tau.at(i, j).real());
            irow.push_back(tau.at(i, j).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    nlohmann::json j{{"g", tau.dim()}, {"re", re}, {"im", im}};
    return j.dump();
}

} // namespace theta
