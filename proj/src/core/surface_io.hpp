#ifndef BISHOP_CORE_SURFACE_IO_HPP
#define BISHOP_CORE_SURFACE_IO_HPP

#include <cstdint>
#include <string>

#include "cyclotomic.hpp"
#include "surface_series.hpp"

namespace bishop {

// Text format, line oriented:
//   # comment
//   degree D
//   alpha beta re im        (re, im exact rationals "p/q" or integers)
// Only alpha >= beta may be listed; the conjugate term is implied.  Diagonal
// terms must have im = 0.  Admissibility (vanishing Bishop invariant) is
// enforced here, with distinct diagnostics for a nonzero Bishop invariant
// versus data that is not a complex-tangent graph at all.
SurfaceSeries<Cyclo> parse_surface(const std::string& text);
SurfaceSeries<Cyclo> read_surface(const std::string& path);

// Canonical serialization; parse(serialize(H)) == H.  Requires every
// coefficient to lie in Q(i).
std::string serialize_surface(const SurfaceSeries<Cyclo>& H);

// Deterministic random admissible surface: quadric + z^s + zbar^s + random
// Hermitian terms of degrees s+1..D with numerators and denominators bounded
// by `bound`.  Same arguments -> byte-identical text.
std::string generate_random(std::uint64_t seed, int s, int D, int bound);

} // namespace bishop

#endif
