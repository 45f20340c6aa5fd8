#pragma once

#include <vector>

#include "biqlat/matrix.hpp"

namespace biqlat {

// Result of naive enumeration over the coefficient box [-radius, radius]^n:
// the smallest positive norm attained in the box and every vector attaining
// it (one representative per +-pair, first nonzero coordinate positive,
// sorted lexicographically).  Deliberately independent of the
// Fincke-Pohst path; this is the oracle the fast enumeration is checked
// against.
struct BoxResult {
    Rat min_norm;
    std::vector<std::vector<Int>> vectors;
};

BoxResult box_enumerate_serial(const GramMatrix& g, int radius);
BoxResult box_enumerate_parallel(const GramMatrix& g, int radius);

// Dispatches to the OpenMP kernel when compiled with OpenMP and the box is
// large enough to matter; both kernels return identical results.
BoxResult box_enumerate(const GramMatrix& g, int radius);

}  // namespace biqlat
