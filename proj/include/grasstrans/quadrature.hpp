#pragma once

#include <functional>
#include <vector>

#include "grasstrans/root_system.hpp"

namespace grasstrans {

using Integrand = std::function<double(const std::vector<double>&)>;

// Gauss-Legendre rule on (0,1).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// integral over [0,pi]^r of f(t) * density(t) dt, for f invariant under
// signed permutations and under t_j -> pi - t_j.  Folds onto the closed
// alcove pi/2 >= t_1 >= ... >= t_r >= 0 via the substitution
// t_j = (pi/2) u_1 ... u_j, which pushes all density zeros to cube faces.
double integrate_density(const RootSystemBC& rs, const Integrand& f, int order);

// Same integral without any symmetry assumption on f; tensor-product panels
// split at pi/2 per axis.  Intended for rank <= 2.
double integrate_density_cube(const RootSystemBC& rs, const Integrand& f, int order);

// Max normalized |<phi_lam, phi_mu>| over distinct dominant even weights of
// total degree <= degree_bound.
double gram_check(const RootSystemBC& rs, int degree_bound, int order);

}  // namespace grasstrans
