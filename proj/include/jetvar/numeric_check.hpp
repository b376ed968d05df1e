#pragma once

#include "jetvar/variational.hpp"

namespace jetvar {

/// Finite-difference oracle for the Euler-Lagrange operator on a periodic
/// 1-d grid. The action S_h = h sum_k L(x_k, u_k, stencils) uses iterated
/// centered first differences for the jet values; each probe compares the
/// centered directional derivative (S_h[u+eps v] - S_h[u-eps v]) / (2 eps)
/// against h sum_k E(L)(x_k, ...) v_k with E(L) evaluated through the same
/// stencils. Returns the max relative discrepancy over all probes, the
/// denominator floored at unit scale so zero-gradient cases stay meaningful.
///
/// Requires one base coordinate and jet order <= 2.
double numeric_crosscheck(const LocalFunctional& functional, const BundleSignature& sig,
                          int grid_size, int probe_count, double epsilon = 1e-6,
                          unsigned long seed = 20240901);

}  // namespace jetvar
