#pragma once

#include "rmtsf/partition.hpp"
#include "rmtsf/polynomial.hpp"

namespace rmtsf {

enum class WickConvention { unrescaled, rescaled };

// Brute-force GUE trace moment: sum over all (|mu|-1)!! pairings of the
// letters of the trace word, each contributing N^{#faces}. Faces are cycles
// of (word rotation) o (pairing). The unrescaled convention uses the
// standard weight exp(-x^2/2); rescaled multiplies by (4N)^{-|mu|/2}.
LaurentPolyN wick_trace_moment(const Partition& mu, WickConvention convention);

// Same sum restricted to pairings whose gluing connects all trace vertices;
// rescaled convention.
LaurentPolyN wick_connected(const Partition& mu);

}  // namespace rmtsf
