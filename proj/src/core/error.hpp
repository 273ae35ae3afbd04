#ifndef BISHOP_CORE_ERROR_HPP
#define BISHOP_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bishop {

// Error categories map 1:1 onto the C API / CLI exit codes.
enum class ErrorKind {
    parse = 2,
    admissibility = 3,
    truncation = 4,
    verification = 5,
    argument = 6,
    internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    int code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

// Invariants that can only break through a bug in this library.
inline void hard_assert(bool cond, const std::string& msg) {
    if (!cond) fail(ErrorKind::internal, "internal invariant violated: " + msg);
}

} // namespace bishop

#endif
