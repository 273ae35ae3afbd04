#include "surface_io.hpp"

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "error.hpp"
#include "rat.hpp"

namespace bishop {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + msg);
}

void check_admissible(const SurfaceSeries<Cyclo>& H) {
    require(H.at(0, 0).is_zero() && H.at(1, 0).is_zero(), ErrorKind::admissibility,
            "not a complex-tangent graph: constant or linear term present");
    require(H.at(1, 1).is_one(), ErrorKind::admissibility,
            "not a complex-tangent graph: z zbar coefficient must be 1");
    require(H.at(2, 0).is_zero(), ErrorKind::admissibility,
            "nonzero Bishop invariant: z^2 + zbar^2 term present");
}

} // namespace

SurfaceSeries<Cyclo> parse_surface(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::optional<SurfaceSeries<Cyclo>> H;
    std::vector<char> seen;
    int D = -1;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!H) {
            if (first != "degree") parse_fail(lineno, "expected header 'degree D'");
            if (!(ls >> D) || D < 2) parse_fail(lineno, "bad truncation degree");
            std::string extra;
            if (ls >> extra) parse_fail(lineno, "trailing tokens after header");
            H.emplace(D);
            seen.assign(static_cast<size_t>(D + 1) * (D + 1), 0);
            continue;
        }
        int alpha, beta;
        std::string re_s, im_s, extra;
        std::istringstream ts(line);
        if (!(ts >> alpha >> beta >> re_s >> im_s)) parse_fail(lineno, "expected 'alpha beta re im'");
        if (ts >> extra) parse_fail(lineno, "trailing tokens after term");
        if (alpha < 0 || beta < 0) parse_fail(lineno, "negative exponent");
        if (alpha + beta > D) parse_fail(lineno, "term exceeds declared degree");
        if (alpha < beta) parse_fail(lineno, "only alpha >= beta may be listed; conjugate is implied");
        mpq_class re, im;
        try {
            re = parse_rational(re_s);
            im = parse_rational(im_s);
        } catch (const Error& e) {
            parse_fail(lineno, e.what());
        }
        if (alpha == beta && im != 0)
            parse_fail(lineno, "imaginary diagonal term breaks the Hermitian convention");
        char& mark = seen[static_cast<size_t>(alpha) * (D + 1) + beta];
        if (mark) parse_fail(lineno, "duplicate term");
        mark = 1;
        H->at(alpha, beta) = Cyclo::gaussian(re, im);
        if (alpha != beta) H->at(beta, alpha) = Cyclo::gaussian(re, -im);
    }
    require(H.has_value(), ErrorKind::parse, "empty surface file");
    check_admissible(*H);
    return *H;
}

SurfaceSeries<Cyclo> read_surface(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), ErrorKind::parse, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_surface(buf.str());
}

std::string serialize_surface(const SurfaceSeries<Cyclo>& H) {
    std::ostringstream out;
    out << "degree " << H.degree() << "\n";
    for (int d = 2; d <= H.degree(); ++d)
        for (int alpha = d; 2 * alpha >= d; --alpha) {
            int beta = d - alpha;
            const Cyclo& v = H.at(alpha, beta);
            if (v.is_zero()) continue;
            Cyclo re = v.real_part();
            Cyclo im = v.imag_part();
            require(re.is_rational() && im.is_rational(), ErrorKind::argument,
                    "coefficient outside Q(i) has no file representation");
            out << alpha << " " << beta << " " << rational_str(re.rational_value()) << " "
                << rational_str(im.rational_value()) << "\n";
        }
    return out.str();
}

std::string generate_random(std::uint64_t seed, int s, int D, int bound) {
    require(s >= 3, ErrorKind::argument, "need s >= 3");
    require(D >= s, ErrorKind::argument, "need D >= s");
    require(bound >= 1, ErrorKind::argument, "coefficient bound must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    std::ostringstream out;
    out << "# random admissible surface: seed " << seed << ", s " << s << ", bound " << bound
        << "\n";
    out << "degree " << D << "\n";
    out << "1 1 1 0\n";
    out << s << " 0 1 0\n";
    for (int d = s + 1; d <= D; ++d)
        for (int alpha = d; 2 * alpha >= d; --alpha) {
            int beta = d - alpha;
            mpq_class re = rat(num(rng), den(rng));
            mpq_class im = (alpha == beta) ? mpq_class(0) : rat(num(rng), den(rng));
            if (re == 0 && im == 0) continue;
            out << alpha << " " << beta << " " << rational_str(re) << " " << rational_str(im)
                << "\n";
        }
    return out.str();
}

} // namespace bishop
