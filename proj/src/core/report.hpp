#ifndef BISHOP_CORE_REPORT_HPP
#define BISHOP_CORE_REPORT_HPP

#include "json.hpp"

#include "cyclotomic.hpp"
#include "holo2.hpp"
#include "numeric_scalar.hpp"
#include "surface_series.hpp"
#include "transform.hpp"

namespace bishop {

using json = nlohmann::ordered_json;

// Exact scalars serialize losslessly: plain rationals as "p/q" strings,
// Q(i) values as {re, im}, anything else by its cyclotomic coordinates.
inline json scalar_json(const Cyclo& v) {
    if (v.is_rational()) return rational_str(v.rational_value());
    Cyclo re = v.real_part(), im = v.imag_part();
    if (re.is_rational() && im.is_rational())
        return json{{"re", rational_str(re.rational_value())},
                    {"im", rational_str(im.rational_value())}};
    json coeffs = json::array();
    for (const auto& q : v.coeffs()) coeffs.push_back(rational_str(q));
    return json{{"conductor", v.field().conductor()}, {"coeffs", coeffs}};
}

inline json scalar_json(const NumScalar& v) {
    return json{{"numeric", true},
                {"re", v.re().str(36)},
                {"im", v.im().str(36)}};
}

inline Cyclo scalar_from_json(const json& j) {
    if (j.is_string()) return Cyclo(parse_rational(j.get<std::string>()));
    require(j.is_object(), ErrorKind::parse, "malformed scalar in report");
    if (j.contains("conductor")) {
        const CycloField& F = CycloField::get(j.at("conductor").get<int>());
        std::vector<mpq_class> c;
        for (const auto& e : j.at("coeffs")) c.push_back(parse_rational(e.get<std::string>()));
        require(static_cast<int>(c.size()) == F.degree(), ErrorKind::parse,
                "cyclotomic coefficient count mismatch");
        Cyclo out(0);
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            out = out * Cyclo::zeta(F.conductor()) + Cyclo(c[static_cast<size_t>(i)]);
        return out;
    }
    return Cyclo::gaussian(parse_rational(j.at("re").get<std::string>()),
                           parse_rational(j.at("im").get<std::string>()));
}

template <class S>
json surface_json(const SurfaceSeries<S>& H) {
    json terms = json::array();
    for (int d = 0; d <= H.degree(); ++d)
        for (int al = d; al >= 0; --al) {
            const S& v = H.at(al, d - al);
            if (!v.is_zero()) terms.push_back(json{{"alpha", al}, {"beta", d - al}, {"value", scalar_json(v)}});
        }
    return json{{"degree", H.degree()}, {"terms", terms}};
}

inline SurfaceSeries<Cyclo> surface_from_json(const json& j) {
    SurfaceSeries<Cyclo> H(j.at("degree").get<int>());
    for (const auto& t : j.at("terms"))
        H.at(t.at("alpha").get<int>(), t.at("beta").get<int>()) = scalar_from_json(t.at("value"));
    return H;
}

template <class S>
json holo2_json(const HoloSeries2<S>& h) {
    json terms = json::array();
    h.for_each_nonzero([&](int a, int b, const S& v) {
        terms.push_back(json{{"a", a}, {"b", b}, {"value", scalar_json(v)}});
    });
    return json{{"weight_bound", h.weight_bound()}, {"terms", terms}};
}

inline HoloSeries2<Cyclo> holo2_from_json(const json& j) {
    HoloSeries2<Cyclo> h(j.at("weight_bound").get<int>());
    for (const auto& t : j.at("terms"))
        h.at(t.at("a").get<int>(), t.at("b").get<int>()) = scalar_from_json(t.at("value"));
    return h;
}

template <class S>
json transform_json(const HoloTransform<S>& t) {
    return json{{"c", scalar_json(t.c)}, {"f", holo2_json(t.f)}, {"g", holo2_json(t.g)}};
}

inline HoloTransform<Cyclo> transform_from_json(const json& j) {
    return HoloTransform<Cyclo>(scalar_from_json(j.at("c")), holo2_from_json(j.at("f")),
                                holo2_from_json(j.at("g")));
}

} // namespace bishop

#endif
