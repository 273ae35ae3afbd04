#ifndef BISHOP_CORE_RAT_HPP
#define BISHOP_CORE_RAT_HPP

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace bishop {

// "p/q" or "p", with optional sign. Used by the surface file parser and JSON I/O.
inline mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        fail(ErrorKind::parse, "malformed rational '" + text + "'");
    if (q.get_den() == 0)
        fail(ErrorKind::parse, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

inline mpq_class rat(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace bishop

#endif
