#pragma once

#include "grasstrans/laurent.hpp"
#include "grasstrans/root_system.hpp"

namespace grasstrans {

// The operators D_j act on trigonometric Laurent polynomials.  Each D_j
// factors as i * H_j where H_j preserves rational coefficients; difference
// quotients telescope along root directions, so everything stays exact.
//
// H_j e_lam = (lam_j - rho_j) e_lam
//   - a  sum_{k<j}  T[2(e_k - e_j), swap_{kj}]
//   + a  sum_{k>j}  T[2(e_j - e_k), swap_{jk}]
//   + a  sum_{k!=j} T[2(e_j + e_k), swapneg_{jk}]
//   + 2 iota T[4 e_j, neg_j] + 2b T[2 e_j, neg_j]
// with T[beta, s](e_lam) = (e_lam - e_{s lam}) / (1 - e_{-beta}) expanded as a
// finite geometric sum.  Throws ParityError when the quotient does not
// telescope over Z^rank and the matching multiplicity is nonzero.
LaurentPoly apply_H(const RootSystemBC& rs, int j, const LaurentPoly& p);

struct CLaurent {
    LaurentPoly re, im;
    explicit CLaurent(int rank) : re(rank), im(rank) {}
    CLaurent(LaurentPoly r, LaurentPoly i) : re(std::move(r)), im(std::move(i)) {}
};

// D_j = i H_j on complexified polynomials.
CLaurent apply_D(const RootSystemBC& rs, int j, const CLaurent& p);

// sum_j D_j^2 = - sum_j H_j^2
LaurentPoly apply_L(const RootSystemBC& rs, const LaurentPoly& p);

// prod_j ((delta + rho_1)^2 + D_j^2) = prod_j ((delta + rho_1)^2 - H_j^2)
LaurentPoly apply_M(const RootSystemBC& rs, const Rat& delta, const LaurentPoly& p);

}  // namespace grasstrans
