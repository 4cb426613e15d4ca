#pragma once

#include <json.hpp>

#include "fockjack/jack.hpp"
#include "fockjack/screening.hpp"
#include "fockjack/virchar.hpp"
#include "fockjack/walgebra.hpp"

namespace fockjack {

using json = nlohmann::json;

inline json to_json(const Rational& x) { return rat_str(x); }

inline json to_json(const QuadScalar& x) {
    return json{{"a", rat_str(x.a())},
                {"b", rat_str(x.b())},
                {"D", x.has_root() ? rat_str(x.discriminant()) : "0"}};
}

inline json to_json(const KappaFunction& f) {
    json num = json::array(), den = json::array();
    for (long k = 0; k <= f.num().degree(); ++k)
        num.push_back(rat_str(f.num().coeff(static_cast<std::size_t>(k))));
    for (long k = 0; k <= f.den().degree(); ++k)
        den.push_back(rat_str(f.den().coeff(static_cast<std::size_t>(k))));
    if (f.num().is_zero()) num.push_back("0");
    return json{{"num", num}, {"den", den}};
}

template <class S>
json to_json(const EpsSeries<S>& x) {
    json eps = json::array();
    for (std::size_t k = 0; k < x.order(); ++k) eps.push_back(to_json(x.coeff(k)));
    return json{{"eps", eps}, {"K", x.order()}};
}

inline json to_json(const Partition& lam) {
    json a = json::array();
    for (int p : lam.parts()) a.push_back(p);
    return a;
}

template <class S>
json to_json(const SymPoly<S>& f) {
    json terms = json::array();
    for (const auto& [lam, c] : f.terms())
        terms.push_back(json{{"part", to_json(lam)}, {"coef", to_json(c)}});
    return json{{"basis", f.basis() == Basis::power ? "p" : "m"}, {"terms", terms}};
}

template <class S>
json to_json(const JackPair<S>& jp) {
    return json{{"lambda", to_json(jp.lambda)},
                {"P", to_json(jp.P)},
                {"Q", to_json(jp.Q)},
                {"b", to_json(jp.b)}};
}

inline json to_json(const FockElement& v) {
    json terms = json::array();
    for (const auto& [lam, c] : v.terms)
        terms.push_back(json{{"part", to_json(lam)}, {"coef", to_json(c)}});
    return json{{"beta", to_json(v.beta)}, {"terms", terms}};
}

// labelled form: the weight as its (r,s,n) lattice label
inline json to_json_labeled(const FockElement& v, int r, int s, int n) {
    json j = to_json(v);
    j["beta"] = json{{"r", r}, {"s", s}, {"n", n}};
    return j;
}

inline json to_json(const CharSeries& c) {
    json coeffs = json::array();
    for (long long x : c.coeffs()) coeffs.push_back(x);
    return json{{"offset", rat_str(c.offset())}, {"coeffs", coeffs}};
}

inline json to_json(const SolitonLabel& w) {
    return json{{"sign", std::string(1, w.sign)}, {"r", w.r}, {"s", w.s}, {"n", w.n}, {"m", w.m}};
}

inline json to_json(const KacTable& t) {
    json classes = json::array();
    for (const auto& cls : t.classes)
        classes.push_back(json{{"rs", json::array({cls.r, cls.s})}, {"delta", rat_str(cls.delta)}});
    return json{{"classes", classes}};
}

inline json to_json(const HPoly& f) {
    json coeffs = json::array();
    for (long k = 0; k <= f.degree(); ++k)
        coeffs.push_back(rat_str(f.coeff(static_cast<std::size_t>(k))));
    if (f.is_zero()) coeffs.push_back("0");
    return json{{"var", "h"}, {"coeffs", coeffs}};
}

inline json to_json(const BetaPoly& f) {
    json coeffs = json::array();
    for (long k = 0; k <= f.degree(); ++k)
        coeffs.push_back(to_json(f.coeff(static_cast<std::size_t>(k))));
    if (f.is_zero()) coeffs.push_back(to_json(QuadScalar(0)));
    return json{{"var", "beta"}, {"coeffs", coeffs}};
}

inline json to_json(const SimpleModuleDescriptor& d) {
    const char* kind = d.kind == SimpleKind::minimal ? "minimal"
                       : d.kind == SimpleKind::Xplus ? "Xplus"
                                                     : "Xminus";
    return json{{"kind", kind},
                {"r", d.r},
                {"s", d.s},
                {"delta", rat_str(d.delta)},
                {"lowest_dim", d.lowest_dim}};
}

// ---- parsing (round-trip side of the schemas)

inline Rational rational_from_json(const json& j) { return rat_parse(j.get<std::string>()); }

inline QuadScalar quad_from_json(const json& j) {
    return QuadScalar(rat_parse(j.at("a").get<std::string>()),
                      rat_parse(j.at("b").get<std::string>()),
                      rat_parse(j.at("D").get<std::string>()));
}

inline KappaFunction kappa_from_json(const json& j) {
    auto poly = [](const json& a) {
        std::vector<Rational> c;
        for (const auto& x : a) c.push_back(rat_parse(x.get<std::string>()));
        return RatPoly(std::move(c));
    };
    return KappaFunction(poly(j.at("num")), poly(j.at("den")));
}

inline Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

template <class S, class ParseCoef>
SymPoly<S> sympoly_from_json(const json& j, ParseCoef parse) {
    Basis b = j.at("basis").get<std::string>() == "p" ? Basis::power : Basis::monomial;
    SymPoly<S> f(b);
    for (const auto& t : j.at("terms"))
        f.add_term(partition_from_json(t.at("part")), parse(t.at("coef")));
    return f;
}

inline FockElement fock_from_json(const json& j) {
    FockElement v{quad_from_json(j.at("beta")), {}};
    for (const auto& t : j.at("terms"))
        v.add_term(partition_from_json(t.at("part")), quad_from_json(t.at("coef")));
    return v;
}

inline FockElement fock_from_json(const json& j, const ModelParams& m) {
    const json& b = j.at("beta");
    QuadScalar beta = b.contains("r")
                          ? m.beta_n(b.at("r").get<int>(), b.at("s").get<int>(), b.at("n").get<int>())
                          : quad_from_json(b);
    FockElement v{beta, {}};
    for (const auto& t : j.at("terms"))
        v.add_term(partition_from_json(t.at("part")), quad_from_json(t.at("coef")));
    return v;
}

inline CharSeries charseries_from_json(const json& j) {
    std::vector<long long> coeffs;
    for (const auto& x : j.at("coeffs")) coeffs.push_back(x.get<long long>());
    return CharSeries(rat_parse(j.at("offset").get<std::string>()), std::move(coeffs));
}

}  // namespace fockjack
