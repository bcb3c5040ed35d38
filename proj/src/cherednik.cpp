#include "grasstrans/cherednik.hpp"

#include <utility>

namespace grasstrans {

namespace {

// (e_lam - e_{s lam}) / (1 - e_{-beta}) where lam - s(lam) = kappa * beta.
void add_telescoped(LaurentPoly& out, const IVec& lam, const Rat& coeff,
                    const IVec& beta, const IVec& slam) {
    int idx = 0;
    const int r = static_cast<int>(lam.size());
    while (idx < r && beta[idx] == 0) ++idx;
    const int diff = lam[idx] - slam[idx];
    if (diff % beta[idx] != 0)
        throw ParityError("difference quotient does not telescope for this weight");
    const int kappa = diff / beta[idx];
    for (int k = 0; k < r; ++k) {
        if (lam[k] - slam[k] != kappa * beta[k])
            throw GtError("reflection image inconsistent with root direction");
    }
    if (kappa == 0) return;
    IVec mu = lam;
    if (kappa > 0) {
        for (int l = 0; l < kappa; ++l) {
            out.add(mu, coeff);
            for (int k = 0; k < r; ++k) mu[k] -= beta[k];
        }
    } else {
        for (int l = 0; l < -kappa; ++l) {
            for (int k = 0; k < r; ++k) mu[k] += beta[k];
            out.add(mu, -coeff);
        }
    }
}

}  // namespace

LaurentPoly apply_H(const RootSystemBC& rs, int j, const LaurentPoly& p) {
    const int r = rs.rank;
    if (j < 1 || j > r) throw GtError("operator index out of range");
    if (p.rank() != r) throw GtError("polynomial rank mismatch");
    const Rat rho_j = rs.rho()[j - 1];
    const int jj = j - 1;
    LaurentPoly out(r);

    for (const auto& [lam, co] : p.terms()) {
        out.add(lam, co * (Rat(lam[jj]) - rho_j));

        if (rs.a != 0) {
            for (int k = 0; k < r; ++k) {
                if (k == jj) continue;
                IVec beta(r, 0), slam = lam;
                if (k < jj) {
                    beta[k] = 2;
                    beta[jj] = -2;
                    std::swap(slam[k], slam[jj]);
                    add_telescoped(out, lam, -rs.a * co, beta, slam);
                } else {
                    beta[jj] = 2;
                    beta[k] = -2;
                    std::swap(slam[k], slam[jj]);
                    add_telescoped(out, lam, rs.a * co, beta, slam);
                }
                IVec betap(r, 0), slam2 = lam;
                betap[jj] = 2;
                betap[k] = 2;
                slam2[jj] = -lam[k];
                slam2[k] = -lam[jj];
                add_telescoped(out, lam, rs.a * co, betap, slam2);
            }
        }
        if (rs.iota != 0) {
            IVec beta(r, 0), slam = lam;
            beta[jj] = 4;
            slam[jj] = -lam[jj];
            add_telescoped(out, lam, 2 * rs.iota * co, beta, slam);
        }
        if (rs.b2 != 0) {
            IVec beta(r, 0), slam = lam;
            beta[jj] = 2;
            slam[jj] = -lam[jj];
            add_telescoped(out, lam, rs.b2 * co, beta, slam);
        }
    }
    return out;
}

CLaurent apply_D(const RootSystemBC& rs, int j, const CLaurent& p) {
    return {apply_H(rs, j, p.im) * Rat(-1), apply_H(rs, j, p.re)};
}

LaurentPoly apply_L(const RootSystemBC& rs, const LaurentPoly& p) {
    LaurentPoly acc(rs.rank);
    for (int j = 1; j <= rs.rank; ++j) acc -= apply_H(rs, j, apply_H(rs, j, p));
    return acc;
}

LaurentPoly apply_M(const RootSystemBC& rs, const Rat& delta, const LaurentPoly& p) {
    const Rat c = delta + rs.rho1();
    LaurentPoly acc = p;
    for (int j = 1; j <= rs.rank; ++j) {
        LaurentPoly h2 = apply_H(rs, j, apply_H(rs, j, acc));
        acc *= c * c;
        acc -= h2;
    }
    return acc;
}

}  // namespace grasstrans
