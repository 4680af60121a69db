#pragma once

#include "zetalab/rational.hpp"

namespace zetalab {

// Exact binomial coefficient; zero when j > n.
BigInt binomial(unsigned long n, unsigned long j);

// Even-index Bernoulli number B_{2k} with the B_2 = 1/6, B_4 = -1/30
// convention. k = 0 gives B_0 = 1. Values come from the defining recurrence
//   sum_{j=0}^{n} C(n+1, j) B_j = 0
// solved exactly in rationals and cached; the cache takes a lock, so
// concurrent readers are fine.
BigRational bernoulli_even(unsigned k);

// Eagerly fill the cache through B_{2k} (optional; handy before fanning out
// worker threads).
void bernoulli_warm_cache(unsigned k);

} // namespace zetalab
