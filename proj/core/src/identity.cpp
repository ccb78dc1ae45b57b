#include "theta/identity.hpp"

#include <json.hpp>

#include "theta/error.hpp"

namespace theta {

int Identity::genus() const {
    for (const auto& t : terms)
        for (const auto& f : t.factors)
            return f.ch.genus();
    return 0;
}

namespace {

nlohmann::json identity_json(const Identity& id) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : id.terms) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& f : t.factors)
            factors.push_back({{"char", f.ch.str()}, {"tau_scale", f.tau_scale}, {"power", f.exponent}});
        terms.push_back({{"coeff_exp_over_pi_i", t.coeff.exponent.str()}, {"factors", factors}});
    }
    nlohmann::json j{{"name", id.name}, {"terms", terms}};
    if (!id.pruned.empty())
        j["pruned"] = id.pruned;
    return j;
}

Identity identity_from(const nlohmann::json& j) {
    Identity id;
    id.name = j.at("name").get<std::string>();
    for (const auto& jt : j.at("terms")) {
        Term t;
        t.coeff = RootOfUnity::from_exponent(Rational::parse(jt.at("coeff_exp_over_pi_i").get<std::string>()));
        for (const auto& jf : jt.at("factors")) {
            Factor f;
            f.ch = Characteristic::parse(jf.at("char").get<std::string>());
            f.tau_scale = jf.at("tau_scale").get<int>();
            f.exponent = jf.at("power").get<int>();
            if (f.tau_scale < 1 || f.exponent < 1)
                throw Error(ErrorCode::parse_error, "factor tau_scale and power must be >= 1");
            t.factors.push_back(std::move(f));
        }
        id.terms.push_back(std::move(t));
    }
    if (j.contains("pruned"))
        id.pruned = j["pruned"].get<std::vector<std::string>>();
    return id;
}

} // namespace

std::string identity_to_json(const Identity& id) { return identity_json(id).dump(); }

Identity identity_from_json(const std::string& text) {
    try {
        return identity_from(nlohmann::json::parse(text));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("bad identity JSON: ") + e.what());
    }
}

std::string identities_to_json(const std::vector<Identity>& ids) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& id : ids)
        arr.push_back(identity_json(id));
    return arr.dump();
}

std::vector<Identity> identities_from_json(const std::string& text) {
    try {
        nlohmann::json arr = nlohmann::json::parse(text);
        std::vector<Identity> out;
        for (const auto& j : arr)
            out.push_back(identity_from(j));
        return out;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("bad identity JSON array: ") + e.what());
    }
}

std::string report_to_json(const ResidualReport& r) {
    nlohmann::json j{{"identity", r.identity}, {"tau_seed", r.tau_seed}, {"sample", r.sample},
                     {"residual", r.residual}, {"normalizer", r.normalizer}, {"tol", r.tol},
                     {"pass", r.pass}};
    return j.dump();
}

} // namespace theta
