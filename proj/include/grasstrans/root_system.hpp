#pragma once

#include <optional>
#include <vector>

#include "grasstrans/common.hpp"

namespace grasstrans {

enum class RSType { BC, B, C, D };

struct GrassmannPreset {
    Field field;
    int n;
    int r;
};

// Rank-r root system of type BC with roots 2(e_j +- e_k), 2e_k, 4e_k and
// multiplicities (a, 2b, iota).  Degenerate multiplicities give types B, C, D.
struct RootSystemBC {
    int rank;
    Rat a;      // multiplicity of 2(e_j +- e_k)
    Rat b2;     // multiplicity of 2e_k, equals 2b
    Rat iota;   // multiplicity of 4e_k
    std::optional<GrassmannPreset> preset;

    Rat b() const { return b2 / 2; }
    RSType type() const;

    // Half sum of positive roots in the density normalization:
    // rho_j = iota + b + a(rank - j), 1-based j.
    std::vector<Rat> rho() const;
    Rat rho1() const { return rho().front(); }
};

RootSystemBC make_root_system(int rank, const Rat& a, const Rat& mult_short, const Rat& mult_long);

// Compact Grassmannian G_{n,r}(K), 2r <= n.  Multiplicities (a, a(n-2r), a-1)
// with a = dim_R K.
RootSystemBC grassmannian_preset(Field f, int n, int r);

struct WeylDescription {
    RSType type;
    long order;                  // |W| for the reduced Weyl group of the type
    long orbit_group_order;      // signed-permutation group used for orbits
};
WeylDescription weyl_group(const RootSystemBC& rs);

// Density of the torus measure at t:
//   prod_{j<k} |2 sin(t_j - t_k)|^a |2 sin(t_j + t_k)|^a
//   * prod_j |2 sin t_j|^{2b} |2 sin 2t_j|^{iota}
double measure_density(const RootSystemBC& rs, const std::vector<double>& t);

bool is_dominant(const IVec& lambda);

// Distinct images of a dominant weight under signed permutations.
std::vector<IVec> signed_orbit(const IVec& lambda);

// Dominant weights lam <= m in the root-lattice dominance order:
// componentwise parity match, partial sums bounded by those of m, and when
// 2b = 0 additionally sum(m - lam) = 0 mod 4.  Includes m itself.
std::vector<IVec> dominance_cone(const RootSystemBC& rs, const IVec& m);

// Dominant weights with all entries even, |m| <= degree_cap, sorted by
// (|m|, lexicographic).
std::vector<IVec> even_dominant_weights(int rank, int degree_cap);

}  // namespace grasstrans
