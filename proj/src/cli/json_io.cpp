#include "normord/cli/json_io.hpp"

#include "normord/errors.hpp"

namespace normord::cli {

json coeffToJson(const CoeffPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        json alpha = json::array();
        for (std::size_t i = 1; i < e.size(); ++i) alpha.push_back(e[i]);
        arr.push_back({{"q", e[0]}, {"alpha", alpha}, {"c", c.get_str()}});
    }
    return arr;
}

CoeffPoly coeffFromJson(const json& j, int s) {
    if (!j.is_array()) throw ConfigError("coefficient must be a JSON array");
    CoeffPoly p(s);
    for (const auto& mono : j) {
        const auto& alpha = mono.at("alpha");
        if (alpha.size() != static_cast<std::size_t>(s) + 1) throw ConfigError("alpha exponent list has wrong length");
        Exponents e(static_cast<std::size_t>(s) + 2, 0);
        e[0] = mono.at("q").get<std::uint32_t>();
        for (std::size_t i = 0; i < alpha.size(); ++i) e[i + 1] = alpha[i].get<std::uint32_t>();
        p.addTerm(e, mpz_class(mono.at("c").get<std::string>()));
    }
    return p;
}

json normalFormToJson(const NormalForm& nf, const std::string& word) {
    json terms = json::array();
    for (const auto& [key, coeff] : nf.terms()) {
        terms.push_back({{"y", key.first}, {"x", key.second}, {"coeff", coeffToJson(coeff)}});
    }
    return {{"word", word}, {"s", nf.ringS()}, {"terms", terms}};
}

NormalForm normalFormFromJson(const json& j) {
    const int s = j.at("s").get<int>();
    NormalForm nf(s);
    for (const auto& t : j.at("terms")) {
        nf.addTerm(t.at("y").get<int>(), t.at("x").get<int>(), coeffFromJson(t.at("coeff"), s));
    }
    return nf;
}

json boardToJson(const Board& b) {
    return {{"heights", b.heights()}};
}

Board boardFromJson(const json& j) {
    return Board(j.at("heights").get<std::vector<int>>());
}

}  // namespace normord::cli
