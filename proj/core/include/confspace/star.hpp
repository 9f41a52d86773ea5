#pragma once

#include "confspace/integer.hpp"

namespace confspace {

// C(n, k); zero when k < 0, k > n or n < 0.
Integer binomial(long n, long k);

// Number of independent n-particle cycles on the star with E edges and no subdivision.
Integer gamma_star(int n, int E);

// (-1)^k C(E-1, k)
Integer alpha_star(int k, int E);
// gamma minus the lower-order alternating corrections, defined recursively
Integer alpha_star_recursive(int k, int E);
// Alternating sum over removed edges.
Integer alpha_star_sum(int k, int E);

Integer beta_star(int n, int E);
// Sum over (n, m)-cycles with inclusion-exclusion over fixed particles.
Integer beta_star_inclusion_exclusion(int n, int E);
// Sum over k of C(n-k+E-1, E-1) alpha_k.
Integer beta_star_alpha_sum(int n, int E);

}  // namespace confspace
