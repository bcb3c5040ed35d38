#pragma once

#include <complex>
#include <map>
#include <vector>

#include "grasstrans/common.hpp"
#include "grasstrans/laurent.hpp"
#include "grasstrans/root_system.hpp"

namespace grasstrans {

// W-invariant trigonometric polynomial sum_lambda c_lambda M_lambda with
// M_lambda the signed-permutation orbit sum of e^{i<lambda,t>}.  Coefficients
// are exact rationals over dominant representatives; normalized to value 1 at
// t = 0 unless stated otherwise.
struct SymTrigPoly {
    RootSystemBC rs;
    IVec weight;
    std::map<IVec, Rat> coeffs;
};

// Triangular eigen-solve for the invariant operator sum_j H_j^2 on the cone
// of dominant weights below m; monic in M_m, then rescaled to value 1 at 0.
SymTrigPoly jacobi_polynomial(const RootSystemBC& rs, const IVec& m);

LaurentPoly expand(const SymTrigPoly& p);

double evaluate(const SymTrigPoly& p, const std::vector<double>& t);

// Exact value at t = (pi/2, ..., pi/2); real because orbit sums take integer
// values at quarter periods.
Rat half_pi_value(const SymTrigPoly& p);

// Lemma-style dispatcher: for types C and D returns prod_j i^{m_j} (real for
// even weights) without constructing phi_m; otherwise solves and evaluates.
Rat value_at_half_pi(const RootSystemBC& rs, const IVec& m);

// Orbit-sum value at t, as sum over distinct permutations of per-entry
// factors (1 for zero parts, 2 cos(v t_j) otherwise).
double orbit_sum_value(const IVec& lambda, const std::vector<double>& t);
long orbit_size(const IVec& lambda);

// Exact classical Jacobi polynomial P_k^{(alpha,beta)}(x) via three-term
// recurrence, rational alpha/beta/x.
Rat classical_jacobi(const Rat& alpha, const Rat& beta, int k, const Rat& x);

// Normalized off-diagonal Gram maximum over pairs of distinct dominant
// weights with |m| <= degree_bound, integrated against the torus measure.
double gram_check(const RootSystemBC& rs, int degree_bound, int quadrature_order);

}  // namespace grasstrans
