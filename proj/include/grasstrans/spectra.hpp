#pragma once

#include <utility>
#include <vector>

#include "grasstrans/common.hpp"
#include "grasstrans/gamma_ladder.hpp"
#include "grasstrans/root_system.hpp"

namespace grasstrans {

enum class Kind { Cosine, Sine };

Kind parse_kind(const std::string& s);

// Total mass of |Cos|^{2nu} resp. |Sin|^{2nu} against the torus measure,
// in closed form via Gindikin Gamma ladders.
LogSigned norm_const(const RootSystemBC& rs, Kind k, const Rat& nu);

struct SpectralSymbol {
    LogSigned value;      // full symbol, norm constant included
    Rat ratio;            // symbol / norm constant, exact (0 when exact_zero)
    bool exact_zero;
    IVec zero_positions;  // 1-based j whose numerator factor vanishes
};

// Eigenvalue of the cosine / sine kernel transform on the eigenspace of m.
SpectralSymbol spectral_symbol(const RootSystemBC& rs, Kind k, const Rat& nu,
                               const IVec& m);

// prod_j ((2nu+2+rho_1)^2 - (m_j+rho_j)^2), the eigenvalue of the
// Bernstein-Sato operator at delta = 2nu+2 on the eigenspace of m.
Rat eigenvalue_of_M(const RootSystemBC& rs, const Rat& nu, const IVec& m);

// ratio(nu) - prod_j (1 - (m_j/2)/(nu+1+(a/2)(j-1)))
//                    (1 + (m_j/2)/(nu+1+b+iota+a(r-1)-(a/2)(j-1))) * ratio(nu+1),
// exact; zero when the one-step recursion holds.
Rat symbol_recursion_gap(const RootSystemBC& rs, Kind k, const Rat& nu, const IVec& m);

// Per-entry cutoff set: m_j/2 < nu+1+(a/2)(j-1) whenever that bound is an
// integer.
bool in_L_nu(const RootSystemBC& rs, const Rat& nu, const IVec& m);

// m_j = 0 for j > min(r, r'); `strict` keeps that reading (a variant with
// j >= min is plausible from the source but inconsistent for r = r').
bool in_L_rr(const IVec& m, int r, int rprime, bool strict = true);

struct ImageMembership {
    bool in_image;
    bool lrr_ok;
    bool lnu_ok;
    bool lnu_active;  // whether any per-entry cutoff was an integer bound
};
ImageMembership image_membership(Field f, int n, int r, int rprime, const Rat& nu,
                                 const IVec& m);

// Intertwining eigenvalue at parameter t on rank-r weights, n = 2r; the
// normalized form (ratio) is the eigenvalue divided by the sine norm
// constant and is exact.
Rat knapp_stein_ratio(Field f, int r, const Rat& t, const IVec& m);
LogSigned knapp_stein_symbol(Field f, int r, const Rat& t, const IVec& m);

struct SteinViolation {
    Rat t;
    IVec m;
    Rat ratio;
};
// Signs of the normalized intertwining eigenvalues over even dominant
// weights |m| <= degree_bound at each scan point.
std::vector<SteinViolation> stein_positivity_scan(Field f, int r,
                                                  const std::vector<Rat>& ts,
                                                  int degree_bound);

// Eigenvalue of the composed transform between ranks r and r'; the factor
// carried by the intermediate projection is supplied by the caller.
LogSigned composite_symbol(const LogSigned& radon_factor, Field f, int n, int r,
                           int rprime, Kind k, const Rat& nu, const IVec& m);

// Weights appearing in the rank-`rank` holomorphic branching at integer
// parameter alpha; real case nu = alpha/2, quaternionic nu = alpha.
std::vector<IVec> branching_list(Field f, int rank, int alpha, int degree_bound);

// Ratio integral(K^{2nu} phi_m d mu) / integral(K^{2nu} d mu) by folded
// quadrature, with an internal two-resolution consistency escalation.
double quadrature_symbol(const RootSystemBC& rs, Kind k, const Rat& nu,
                         const IVec& m, int order);

// integral(K^{2nu}) / integral(K^{2nu_ref}) by quadrature; comparable against
// exp(log N_nu - log N_ref).
double norm_const_quad_ratio(const RootSystemBC& rs, Kind k, const Rat& nu,
                             const Rat& nu_ref, int order);

}  // namespace grasstrans
