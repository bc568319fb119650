#pragma once

#include "septic/poly.hpp"

namespace septic {

/// Dedekind criterion: true iff p divides the index (Z_K : Z[alpha]) for
/// alpha a root of the monic polynomial f.
bool dedekind_divides_index(const PolyZ& f, long p);

} // namespace septic
