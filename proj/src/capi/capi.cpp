#include "bishop.h"

#include <chrono>
#include <cstring>
#include <exception>
#include <string>

#include "core/branch.hpp"
#include "core/cyclotomic.hpp"
#include "core/invariants.hpp"
#include "core/normalizer.hpp"
#include "core/numeric_scalar.hpp"
#include "core/report.hpp"
#include "core/surface_io.hpp"

using namespace bishop;

struct bishop_surface {
    SurfaceSeries<Cyclo> H;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return 0;
    } catch (const Error& e) {
        g_last_error = e.what();
        return e.code();
    } catch (const std::exception& e) {
        g_last_error = std::string("unexpected: ") + e.what();
        return static_cast<int>(ErrorKind::internal);
    }
}

int effective_degree(const bishop_surface* s, int degree) {
    int D = s->H.degree();
    if (degree < 0) return D;
    require(degree >= 3, ErrorKind::argument, "working degree must be at least 3");
    require(degree <= D, ErrorKind::truncation,
            "requested degree exceeds the file's declared truncation");
    return degree;
}

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - t0_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point t0_ = clock::now();
};

template <class S>
json lambda_json(const NormalForm<S>& nf) {
    json out = json::array();
    for (const auto& e : nf.table)
        out.push_back(json{{"k", e.k}, {"j", e.j}, {"degree", e.degree(nf.s)}, {"value", scalar_json(e.value)}});
    return out;
}

json aut_json(const RotationSubgroup& g) {
    return json{{"s", g.s}, {"generator", g.d}, {"order", g.order()}};
}

NumScalar num_from_cyclo(const Cyclo& v) {
    int n = v.field().conductor();
    NumScalar out(0);
    for (size_t j = 0; j < v.coeffs().size(); ++j) {
        if (v.coeffs()[j] == 0) continue;
        out += NumScalar(v.coeffs()[j]) * NumScalar::root_of_unity(n, static_cast<long>(j));
    }
    return out;
}

// Rescale z -> rho e^{i theta} z, w -> rho^2 w so the leading harmonic
// coefficient becomes 1: a_{alpha beta} picks up rho^(2-alpha-beta)
// e^{-i theta (alpha - beta)}.
SurfaceSeries<NumScalar> numeric_rescaled(const SurfaceSeries<Cyclo>& H, const Cyclo& a_s, int s,
                                          NumReal* rho_out, NumReal* theta_out) {
    NumScalar a = num_from_cyclo(a_s);
    require(!a.is_zero(), ErrorKind::internal, "vanishing leading coefficient in rescale");
    NumReal r = sqrt(a.abs2());
    NumReal rho = pow(r, NumReal(1) / (s - 2));
    NumReal theta = atan2(a.im(), a.re()) / s;
    *rho_out = rho;
    *theta_out = theta;
    int D = H.degree();
    SurfaceSeries<NumScalar> out(D);
    for (int al = 0; al <= D; ++al)
        for (int be = 0; al + be <= D; ++be) {
            const Cyclo& v = H.at(al, be);
            if (v.is_zero()) continue;
            NumReal mag = pow(rho, 2 - al - be);
            NumReal ang = -theta * (al - be);
            out.at(al, be) = num_from_cyclo(v) * NumScalar(mag * cos(ang), mag * sin(ang));
        }
    return out;
}

// Detection alone (no unit-coefficient requirement): returns s and the
// surviving harmonic coefficient; s = 0 when the surface is the quadric to
// degree D.
std::pair<int, Cyclo> detect_with_coefficient(const SurfaceSeries<Cyclo>& H, int D) {
    SurfaceSeries<Cyclo> cur = H.truncated(D);
    require(cur.is_admissible() && cur.is_hermitian(), ErrorKind::admissibility,
            "surface is not an admissible Hermitian graph");
    for (int d = 3; d <= D; ++d) {
        Cyclo b = detail::eliminate_degree(cur, d);
        if (!b.is_zero()) return {d, b};
    }
    return {0, Cyclo(0)};
}

template <class S>
json normalize_report(const SurfaceSeries<S>& H, int D, bool numeric) {
    NormalForm<S> nf;
    NormalizationReport<S> rep = normal_form(H, D, &nf);
    json out;
    out["operation"] = "normalize";
    out["degree"] = D;
    out["numeric"] = numeric;
    out["s"] = nf.s;
    out["lambda"] = lambda_json(nf);
    out["aut"] = aut_json(automorphism_group(nf));
    out["transform"] = transform_json(rep.transform);
    out["surface_out"] = surface_json(rep.surface_out);
    out["residual_checked"] = rep.residual_checked;
    out["degrees_normalized"] = rep.degrees_normalized;
    return out;
}

} // namespace

extern "C" {

int bishop_surface_parse(const char* text, bishop_surface** out) {
    return guarded([&] {
        require(text && out, ErrorKind::argument, "null argument");
        *out = new bishop_surface{parse_surface(text)};
    });
}

int bishop_surface_read(const char* path, bishop_surface** out) {
    return guarded([&] {
        require(path && out, ErrorKind::argument, "null argument");
        *out = new bishop_surface{read_surface(path)};
    });
}

int bishop_surface_serialize(const bishop_surface* s, char** text_out) {
    return guarded([&] {
        require(s && text_out, ErrorKind::argument, "null argument");
        *text_out = dup_string(serialize_surface(s->H));
    });
}

void bishop_surface_free(bishop_surface* s) { delete s; }

int bishop_surface_degree(const bishop_surface* s) { return s ? s->H.degree() : -1; }

int bishop_generate_random(uint64_t seed, int s, int degree, int bound, char** text_out) {
    return guarded([&] {
        require(text_out, ErrorKind::argument, "null argument");
        *text_out = dup_string(generate_random(seed, s, degree, bound));
    });
}

int bishop_normalize(const bishop_surface* s, int degree, unsigned flags, char** json_out) {
    return guarded([&] {
        require(s && json_out, ErrorKind::argument, "null argument");
        Timer timer;
        int D = effective_degree(s, degree);
        json out;
        if (flags & BISHOP_FLAG_NUMERIC_SCALE) {
            auto [sdet, a_s] = detect_with_coefficient(s->H, D);
            require(sdet != 0, ErrorKind::admissibility,
                    "no surviving harmonic term to this degree (quadric-to-truncation)");
            NumReal rho, theta;
            SurfaceSeries<NumScalar> Hs = numeric_rescaled(s->H.truncated(D), a_s, sdet, &rho, &theta);
            out = normalize_report(Hs, D, true);
            out["scale"] = json{{"rho", rho.str(36)}, {"theta", theta.str(36)}};
        } else {
            out = normalize_report(s->H, D, false);
        }
        out["timing_ms"] = timer.ms();
        *json_out = dup_string(out.dump(2));
    });
}

int bishop_invariants(const bishop_surface* s, int degree, char** json_out) {
    return guarded([&] {
        require(s && json_out, ErrorKind::argument, "null argument");
        Timer timer;
        int D = effective_degree(s, degree);
        json out;
        out["operation"] = "invariants";
        out["degree"] = D;
        auto [sdet, a_s] = detect_with_coefficient(s->H, D);
        if (sdet == 0) {
            out["s"] = nullptr;
            out["quadric_to_degree"] = D;
        } else {
            NormalForm<Cyclo> nf;
            normal_form(s->H, D, &nf);
            out["s"] = nf.s;
            out["lambda"] = lambda_json(nf);
            out["aut"] = aut_json(automorphism_group(nf));
        }
        out["timing_ms"] = timer.ms();
        *json_out = dup_string(out.dump(2));
    });
}

int bishop_aut(const bishop_surface* s, int degree, char** json_out) {
    return guarded([&] {
        require(s && json_out, ErrorKind::argument, "null argument");
        Timer timer;
        int D = effective_degree(s, degree);
        NormalForm<Cyclo> nf;
        normal_form(s->H, D, &nf);
        json out;
        out["operation"] = "aut";
        out["degree"] = D;
        out["s"] = nf.s;
        out["aut"] = aut_json(automorphism_group(nf));
        out["timing_ms"] = timer.ms();
        *json_out = dup_string(out.dump(2));
    });
}

int bishop_equiv(const bishop_surface* a, const bishop_surface* b, int degree, char** json_out) {
    return guarded([&] {
        require(a && b && json_out, ErrorKind::argument, "null argument");
        Timer timer;
        int D = std::min(a->H.degree(), b->H.degree());
        if (degree >= 0) {
            require(degree <= D, ErrorKind::truncation,
                    "requested degree exceeds a file's declared truncation");
            D = degree;
        }
        NormalForm<Cyclo> nf1, nf2;
        normal_form(a->H, D, &nf1);
        normal_form(b->H, D, &nf2);
        auto l = equivalent(nf1, nf2);
        json out;
        out["operation"] = "equiv";
        out["degree"] = D;
        out["s1"] = nf1.s;
        out["s2"] = nf2.s;
        out["equivalent"] = l.has_value();
        if (l) out["l"] = *l;
        out["timing_ms"] = timer.ms();
        *json_out = dup_string(out.dump(2));
    });
}

int bishop_branch(const bishop_surface* s, int order, char** json_out) {
    return guarded([&] {
        require(s && json_out, ErrorKind::argument, "null argument");
        Timer timer;
        require(order >= 3, ErrorKind::argument, "order must be at least 3");
        ComplexifiedSurface<Cyclo> C = complexify(s->H);
        auto [h1, h2] = branch_curve(C, order);
        auto branches = branch_points(C, order);
        json out;
        out["operation"] = "branch";
        out["order"] = order;
        out["s"] = C.s;
        auto onevar_json = [](const OneVarSeries<Cyclo>& h) {
            json terms = json::array();
            for (int k = 0; k <= h.trunc(); ++k)
                if (!h.at(k).is_zero()) terms.push_back(json{{"exp", k}, {"value", scalar_json(h.at(k))}});
            return json{{"order", h.trunc()}, {"terms", terms}};
        };
        out["h1"] = onevar_json(h1);
        out["h2"] = onevar_json(h2);
        out["P"] = onevar_json(branches[0].P);
        json brs = json::array();
        for (const auto& br : branches) {
            auto mo = membership_order(C, br);
            brs.push_back(json{{"j", br.j},
                               {"omega", "zeta_" + std::to_string(2 * C.s) + "^" +
                                             std::to_string(2 * C.s - (2 * br.j + 1))},
                               {"membership_exponent",
                                std::to_string(mo.first) + "/" + std::to_string(mo.second)}});
        }
        out["branches"] = brs;
        json consts = json::array();
        for (int j = 1; j < C.s; ++j) {
            LeadingConstant lc = leading_hyperbolic_constant(C.s, j);
            consts.push_back(json{{"j", j},
                                  {"rational", rational_str(lc.rational)},
                                  {"radical_exponent", rational_str(lc.radical_exponent)},
                                  {"u_exponent", rational_str(lc.u_exponent)},
                                  {"value", lc.value}});
        }
        out["leading_constants"] = consts;
        out["timing_ms"] = timer.ms();
        *json_out = dup_string(out.dump(2));
    });
}

int bishop_verify(const bishop_surface* source, const char* report_json, char** json_out) {
    return guarded([&] {
        require(source && report_json && json_out, ErrorKind::argument, "null argument");
        Timer timer;
        json rep;
        try {
            rep = json::parse(report_json);
        } catch (const std::exception& e) {
            fail(ErrorKind::parse, std::string("bad report JSON: ") + e.what());
        }
        require(rep.contains("transform") && rep.contains("surface_out"), ErrorKind::parse,
                "report lacks a transform or an output surface");
        require(!rep.value("numeric", false), ErrorKind::argument,
                "numeric-mode reports cannot be re-verified exactly");
        HoloTransform<Cyclo> T = transform_from_json(rep.at("transform"));
        SurfaceSeries<Cyclo> out_surface = surface_from_json(rep.at("surface_out"));
        int D = out_surface.degree();
        require(source->H.degree() >= D, ErrorKind::truncation,
                "source surface truncated below the report's degree");
        SurfaceSeries<Cyclo> residual =
            pushforward_residual(source->H.truncated(D), T, out_surface);
        require(residual.is_zero(), ErrorKind::verification,
                "nonzero substitution residual: transform does not map source to output");
        json out;
        out["operation"] = "verify";
        out["degree"] = D;
        out["residual_zero"] = true;
        out["timing_ms"] = timer.ms();
        *json_out = dup_string(out.dump(2));
    });
}

const char* bishop_last_error(void) { return g_last_error.c_str(); }

void bishop_string_free(char* s) { delete[] s; }

} // extern "C"
