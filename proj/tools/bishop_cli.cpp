// Command-line front end; talks to the engine exclusively through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bishop.h"
#include "json.hpp"

namespace {

using nlohmann::json;

int fail_with(int code) {
    std::cerr << "error: " << bishop_last_error() << "\n";
    return code;
}

int load(const std::string& path, bishop_surface** out) {
    return bishop_surface_read(path.c_str(), out);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    bishop_string_free(s);
    return out;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object() && v.contains("re")) {
        std::string re = v.at("re").get<std::string>();
        std::string im = v.at("im").get<std::string>();
        if (im == "0") return re;
        return re + (im[0] == '-' ? "" : "+") + im + "i";
    }
    return v.dump();
}

void print_lambda(const json& rep) {
    std::cout << "s = " << rep.at("s") << "\n";
    const auto& table = rep.at("lambda");
    if (table.empty()) {
        std::cout << "lambda table: empty to degree " << rep.at("degree") << "\n";
        return;
    }
    std::cout << "lambda table (to degree " << rep.at("degree") << "):\n";
    for (const auto& e : table)
        std::cout << "  lambda_" << e.at("degree") << " (k=" << e.at("k") << ", j=" << e.at("j")
                  << ") = " << scalar_text(e.at("value")) << "\n";
}

void print_aut(const json& a) {
    std::cout << "automorphism group: order " << a.at("order") << " (subgroup of Z_" << a.at("s")
              << " generated by rotation index " << a.at("generator") << ")\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact normal forms and invariants for Bishop surfaces with vanishing Bishop invariant"};
    app.require_subcommand(1);

    std::string path, path_b, out_path, report_path;
    std::string field = "gaussian";
    int degree = -1, order = 20, gen_s = 3, gen_degree = 12, bound = 9;
    std::uint64_t seed = 1;
    bool as_json = false, numeric_scale = false;

    auto add_common = [&](CLI::App* cmd, bool with_degree = true) {
        cmd->add_flag("--json", as_json, "emit the full JSON report");
        if (with_degree)
            cmd->add_option("--degree", degree, "working truncation degree (default: the file's)");
        cmd->add_option("--field", field, "coefficient field label: gaussian|cyclotomic")
            ->check(CLI::IsMember({"gaussian", "cyclotomic"}));
    };

    auto* c_norm = app.add_subcommand("normalize", "reduce a surface to its normal form");
    c_norm->add_option("file", path)->required();
    add_common(c_norm);
    c_norm->add_flag("--numeric-scale", numeric_scale,
                     "rescale a non-unit leading coefficient in high-precision floats");

    auto* c_inv = app.add_subcommand("invariants", "detected s, lambda table, automorphism group");
    c_inv->add_option("file", path)->required();
    add_common(c_inv);

    auto* c_equiv = app.add_subcommand("equiv", "decide formal equivalence of two surfaces");
    c_equiv->add_option("file_a", path)->required();
    c_equiv->add_option("file_b", path_b)->required();
    add_common(c_equiv);

    auto* c_aut = app.add_subcommand("aut", "automorphism group of the normal form");
    c_aut->add_option("file", path)->required();
    add_common(c_aut);

    auto* c_branch = app.add_subcommand("branch", "branch curve and Puiseux branch points");
    c_branch->add_option("file", path)->required();
    c_branch->add_option("--order", order, "series order for the branch expansion");
    c_branch->add_flag("--json", as_json, "emit the full JSON report");

    auto* c_verify = app.add_subcommand("verify", "re-run the substitution oracle on a report");
    c_verify->add_option("file", path)->required();
    c_verify->add_option("report", report_path)->required();
    c_verify->add_flag("--json", as_json, "emit the full JSON report");

    auto* c_gen = app.add_subcommand("generate", "deterministic random admissible surface");
    c_gen->add_option("--seed", seed);
    c_gen->add_option("--s", gen_s, "leading harmonic degree");
    c_gen->add_option("--degree", gen_degree, "truncation degree");
    c_gen->add_option("--bound", bound, "coefficient numerator/denominator bound");
    c_gen->add_option("-o,--output", out_path, "write to a file instead of standard output");

    CLI11_PARSE(app, argc, argv);

    bishop_surface* A = nullptr;
    bishop_surface* B = nullptr;
    char* raw = nullptr;
    int rc = 0;

    if (c_gen->parsed()) {
        rc = bishop_generate_random(seed, gen_s, gen_degree, bound, &raw);
        if (rc) return fail_with(rc);
        std::string text = take(raw);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path);
            f << text;
        }
        return 0;
    }

    rc = load(path, &A);
    if (rc) return fail_with(rc);

    if (c_norm->parsed()) {
        unsigned flags = numeric_scale ? BISHOP_FLAG_NUMERIC_SCALE : 0;
        rc = bishop_normalize(A, degree, flags, &raw);
    } else if (c_inv->parsed()) {
        rc = bishop_invariants(A, degree, &raw);
    } else if (c_aut->parsed()) {
        rc = bishop_aut(A, degree, &raw);
    } else if (c_equiv->parsed()) {
        rc = load(path_b, &B);
        if (rc == 0) rc = bishop_equiv(A, B, degree, &raw);
    } else if (c_branch->parsed()) {
        rc = bishop_branch(A, order, &raw);
    } else if (c_verify->parsed()) {
        std::ifstream f(report_path);
        if (!f.good()) {
            std::cerr << "error: cannot open '" << report_path << "'\n";
            bishop_surface_free(A);
            return 2;
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        rc = bishop_verify(A, buf.str().c_str(), &raw);
    }

    bishop_surface_free(A);
    bishop_surface_free(B);
    if (rc) return fail_with(rc);

    std::string text = take(raw);
    if (as_json) {
        std::cout << text << "\n";
        return 0;
    }

    json rep = json::parse(text);
    std::string op = rep.at("operation");
    if (op == "normalize" || op == "invariants") {
        if (rep.contains("quadric_to_degree")) {
            std::cout << "quadric to degree " << rep.at("quadric_to_degree") << "\n";
            return 0;
        }
        print_lambda(rep);
        if (rep.contains("aut")) print_aut(rep.at("aut"));
        if (op == "normalize")
            std::cout << "residual checked: " << (rep.at("residual_checked").get<bool>() ? "yes" : "no")
                      << "\n";
    } else if (op == "aut") {
        std::cout << "s = " << rep.at("s") << "\n";
        print_aut(rep.at("aut"));
    } else if (op == "equiv") {
        if (rep.at("equivalent").get<bool>())
            std::cout << "equivalent to degree " << rep.at("degree") << ", l = " << rep.at("l") << "\n";
        else
            std::cout << "inequivalent to degree " << rep.at("degree") << " (s1=" << rep.at("s1")
                      << ", s2=" << rep.at("s2") << ")\n";
    } else if (op == "branch") {
        std::cout << "s = " << rep.at("s") << ", branches: " << rep.at("branches").size() << "\n";
        for (const auto& br : rep.at("branches"))
            std::cout << "  j=" << br.at("j") << "  omega=" << br.at("omega").get<std::string>()
                      << "  membership exponent " << br.at("membership_exponent").get<std::string>()
                      << "\n";
        for (const auto& lc : rep.at("leading_constants"))
            std::cout << "  L_1" << (lc.at("j").get<int>() + 1) << " leading constant "
                      << lc.at("value").get<double>() << "  (u-exponent "
                      << lc.at("u_exponent").get<std::string>() << ")\n";
    } else if (op == "verify") {
        std::cout << "residual zero to degree " << rep.at("degree") << "\n";
    }
    return 0;
}
