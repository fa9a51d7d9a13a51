#pragma once

// Truncated Cech cohomology on P^{nvars-1}. Each localization S[1/x_i, i in I]
// is cut down to Laurent monomials with every exponent >= -B; the truncation
// is a subcomplex of the total complex of (Cech ⊗ presentation), and for
// B >= max over terms of (-a - twist - 2) the discarded part has no
// cohomology, so the truncated total complex is exact from the start value
// below on. The engine still checks that B and B+1 agree before answering.

#include "minusplit/sheafcoh.hpp"

namespace minusplit {

/// Start value max |term twist| + |twist| + 3.
int initial_cutoff(const FreeComplex& c, int twist);

/// Hypercohomology of the total complex truncated at cutoff B.
CohomologyDims cech_truncated(const FreeComplex& c, int twist, int cutoff);

/// Runs B, B+1 from initial_cutoff, doubling B until they agree; throws
/// CutoffExhausted when B+1 would exceed max_cutoff.
CohomologyResult cech_cohomology(const FreeComplex& c, int twist, int max_cutoff = 64);

}  // namespace minusplit
