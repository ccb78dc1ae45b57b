#include "theta/characteristic.hpp"

#include <sstream>

#include "theta/error.hpp"

namespace theta {

Characteristic::Characteristic(std::vector<Rational> t, std::vector<Rational> b)
    : top(std::move(t)), bottom(std::move(b)) {
    if (top.empty() || top.size() != bottom.size())
        throw Error(ErrorCode::dimension_mismatch, "characteristic vectors must be nonempty and equal length");
}

Characteristic Characteristic::zeros(int g) {
    return Characteristic(std::vector<Rational>(g), std::vector<Rational>(g));
}

Characteristic Characteristic::from_ints(const std::vector<int>& t, const std::vector<int>& b) {
    std::vector<Rational> rt(t.begin(), t.end()), rb(b.begin(), b.end());
    return Characteristic(std::move(rt), std::move(rb));
}

namespace {

std::vector<Rational> parse_vector(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Rational::parse(item));
    if (out.empty())
        throw Error(ErrorCode::parse_error, "empty characteristic vector");
    return out;
}

} // namespace

Characteristic Characteristic::parse(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw Error(ErrorCode::parse_error, "characteristic needs ';' between top and bottom: '" + text + "'");
    return Characteristic(parse_vector(text.substr(0, semi)), parse_vector(text.substr(semi + 1)));
}

std::string Characteristic::str() const {
    std::string s;
    for (int j = 0; j < genus(); ++j)
        s += (j ? "," : "") + top[j].str();
    s += ";";
    for (int j = 0; j < genus(); ++j)
        s += (j ? "," : "") + bottom[j].str();
    return s;
}

bool Characteristic::is_integral() const {
    for (const auto& r : top)
        if (!r.is_integer()) return false;
    for (const auto& r : bottom)
        if (!r.is_integer()) return false;
    return true;
}

bool Characteristic::is_reduced() const {
    if (!is_integral()) return false;
    for (const auto& r : top)
        if (r.num != 0 && r.num != 1) return false;
    for (const auto& r : bottom)
        if (r.num != 0 && r.num != 1) return false;
    return true;
}

ReducedCharacteristic reduce_mod2(const Characteristic& ch) {
    const int g = ch.genus();
    std::vector<Rational> top_red(g), bot_red(g), bot_shift(g);
    for (int j = 0; j < g; ++j) {
        top_red[j] = ch.top[j].mod2();
        bot_red[j] = ch.bottom[j].mod2();
        // bottom shift e with bottom = bot_red + 2e; e is integral by construction
        Rational e = (ch.bottom[j] - bot_red[j]) * Rational(1, 2);
        bot_shift[j] = e;
    }
    Rational q(0);
    for (int j = 0; j < g; ++j)
        q = q + top_red[j] * bot_shift[j];
    return {Characteristic(std::move(top_red), std::move(bot_red)), RootOfUnity::from_exponent(q)};
}

ReducedCharacteristic reduce_characteristic(const Characteristic& ch) {
    if (!ch.is_integral())
        throw Error(ErrorCode::not_integral, "reduce_characteristic requires an integral characteristic: " + ch.str());
    return reduce_mod2(ch);
}

ReducedCharacteristic canonical_null_form(const Characteristic& ch) {
    ReducedCharacteristic direct = reduce_mod2(ch);
    std::vector<Rational> negated(ch.genus());
    for (int j = 0; j < ch.genus(); ++j)
        negated[j] = -direct.ch.bottom[j];
    ReducedCharacteristic flipped = reduce_mod2(Characteristic(direct.ch.top, std::move(negated)));
    flipped.phase = flipped.phase * direct.phase;
    if (flipped.ch.bottom < direct.ch.bottom)
        return flipped;
    return direct;
}

Parity parity(const Characteristic& ch) {
    if (!ch.is_reduced())
        throw Error(ErrorCode::not_reduced, "parity requires a reduced integral characteristic: " + ch.str());
    long long dot = 0;
    for (int j = 0; j < ch.genus(); ++j)
        dot += ch.bottom[j].num * ch.top[j].num;
    return dot % 2 == 0 ? Parity::even : Parity::odd;
}

} // namespace theta
