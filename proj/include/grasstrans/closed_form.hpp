#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "grasstrans/common.hpp"
#include "grasstrans/root_system.hpp"
#include "grasstrans/spectra.hpp"

namespace grasstrans {

// One closed-form term
//   coef * prod_j sin(t_j)^{SB + s_j} cos(t_j)^{CB + c_j} e^{i phase_j t_j}
//        / prod_beta (1 - e^{-i<beta,t>})^{n_beta}
// over the open region 0 < t_r < ... < t_1 < pi/2 where both bases are
// positive.  Bases are reflection-even with real exponents; the integer
// offsets and phases transform honestly under signed permutations, which is
// what makes difference quotients computable without dividing symbolically.
struct VerifyTerm {
    std::complex<double> coef;
    IVec s_off, c_off, phase;
    std::map<IVec, int> denom;
};

struct VerifyState {
    RootSystemBC rs;
    double sin_base = 0.0;
    double cos_base = 0.0;
    // factor picked up by the sin-base on each sign-flipped coordinate;
    // 1 encodes the even |sin|^SB reading, exp(-i pi SB) a branch rule
    std::complex<double> base_reflect{1.0, 0.0};
    std::vector<VerifyTerm> terms;
};

VerifyState power_state(const RootSystemBC& rs, Kind k, double delta);

// multiply every term by sin^ds cos^dc e^{i dphase t} at coordinate j (1-based)
void shift_coordinate(VerifyState& st, int j, int ds, int dc, int dphase);

VerifyState apply_D_engine(const VerifyState& st, int j);

// (sign * i * D_j + c) applied to st
VerifyState apply_factor(const VerifyState& st, int j, int sign, double c);

std::complex<double> eval_state(const VerifyState& st, const std::vector<double>& t);

// Deterministic generic points in the open alcove, distinct coordinates.
std::vector<std::vector<double>> generic_points(int rank, int count);

// max over the supplied points of the relative defect of
//   prod_j (D_j^2 + (delta+rho_1)^2) K^delta = K_const * K^{delta-2},
// K the cosine or sine product.
double verify_bs(const RootSystemBC& rs, Kind k, double delta,
                 const std::vector<std::vector<double>>& pts);

// Step-by-step first-order factorization ladder: ascending factors
// (-iD_j + delta + rho_1) clear one phase each, descending factors
// (+iD_j + delta + rho_1) lower the base power.  Returns the max relative
// residual over all 2r steps and points.
double verify_factor_chain(const RootSystemBC& rs, Kind k, double delta,
                           const std::vector<std::vector<double>>& pts);

}  // namespace grasstrans
