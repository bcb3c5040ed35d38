#pragma once

#include <complex>
#include <unordered_map>
#include <vector>

#include "grasstrans/common.hpp"
#include "grasstrans/root_system.hpp"

namespace grasstrans {

// Trigonometric Laurent polynomial sum_lambda c_lambda e^{i<lambda,t>} with
// exact rational coefficients, lambda in Z^rank.
class LaurentPoly {
  public:
    using Map = std::unordered_map<IVec, Rat, IVecHash>;

    explicit LaurentPoly(int rank) : rank_(rank) {}
    static LaurentPoly monomial(IVec lambda, Rat c = 1);
    static LaurentPoly constant(int rank, Rat c);
    // Sum over the distinct signed-permutation images of a dominant weight,
    // coefficient 1 each.
    static LaurentPoly orbit_sum(const IVec& lambda);

    int rank() const { return rank_; }
    const Map& terms() const { return c_; }
    bool empty() const { return c_.empty(); }

    void add(const IVec& lambda, const Rat& coeff);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& s);
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(LaurentPoly x, const Rat& s) { return x *= s; }
    bool operator==(const LaurentPoly& o) const;

    Rat coeff(const IVec& lambda) const;
    std::complex<double> eval(const std::vector<double>& t) const;
    // Exact value at t = (pi/2, ..., pi/2).
    GaussRat eval_half_pi() const;
    // True when invariant under every signed permutation of coordinates.
    bool is_symmetric() const;

  private:
    int rank_;
    Map c_;
};

}  // namespace grasstrans
