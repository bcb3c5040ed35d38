#include "grasstrans/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "grasstrans/cherednik.hpp"

namespace grasstrans {

namespace {

// sum_j (lambda_j + rho_j)^{2p}, the eigenvalue of sum_j H_j^{2p} on the
// invariant eigenfunction attached to lambda.
Rat power_sum_eigenvalue(const RootSystemBC& rs, const IVec& lambda, int p) {
    const std::vector<Rat> rho = rs.rho();
    Rat acc = 0;
    for (int j = 0; j < rs.rank; ++j) {
        Rat base = Rat(lambda[j]) + rho[j];
        Rat sq = base * base;
        Rat term = sq;
        for (int q = 1; q < p; ++q) term *= sq;
        acc += term;
    }
    return acc;
}

LaurentPoly apply_power_op(const RootSystemBC& rs, const LaurentPoly& f, int p) {
    LaurentPoly acc(rs.rank);
    for (int j = 1; j <= rs.rank; ++j) {
        LaurentPoly g = f;
        for (int q = 0; q < 2 * p; ++q) g = apply_H(rs, j, g);
        acc += g;
    }
    return acc;
}

IVec dominant_rep(const IVec& v) {
    IVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = std::abs(v[i]);
    std::sort(w.begin(), w.end(), std::greater<int>());
    return w;
}

// Column lambda of the operator matrix in the orbit-sum basis over the cone.
std::map<IVec, Rat> operator_column(const RootSystemBC& rs, const IVec& lambda,
                                    int p) {
    LaurentPoly image = apply_power_op(rs, LaurentPoly::orbit_sum(lambda), p);
    std::map<IVec, Rat> col;
    for (const auto& [mono, coeff] : image.terms()) {
        if (mono == dominant_rep(mono)) col[mono] = coeff;
    }
    return col;
}

}  // namespace

long orbit_size(const IVec& lambda) {
    IVec sorted = dominant_rep(lambda);
    long perms = 1;
    for (long i = 2; i <= static_cast<long>(sorted.size()); ++i) perms *= i;
    long run = 1;
    for (size_t i = 1; i <= sorted.size(); ++i) {
        if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
            ++run;
        } else {
            for (long q = 2; q <= run; ++q) perms /= q;
            run = 1;
        }
    }
    long signs = 1;
    for (int v : sorted)
        if (v != 0) signs *= 2;
    return perms * signs;
}

SymTrigPoly jacobi_polynomial(const RootSystemBC& rs, const IVec& m) {
    if (static_cast<int>(m.size()) != rs.rank)
        throw GtError("jacobi_polynomial: weight rank mismatch");
    if (!is_dominant(m)) throw GtError("jacobi_polynomial: weight not dominant");

    const std::vector<IVec> cone = dominance_cone(rs, m);
    // Ascending (degree, lex) order; m is the final entry.
    if (cone.empty() || cone.back() != m)
        throw GtError("jacobi_polynomial: cone does not terminate at m");

    const Rat dm = power_sum_eigenvalue(rs, m, 1);
    const Rat dm2 = power_sum_eigenvalue(rs, m, 2);

    std::map<IVec, std::map<IVec, Rat>> col1, col2;

    std::map<IVec, Rat> c;
    c[m] = 1;
    for (auto it = cone.rbegin(); it != cone.rend(); ++it) {
        const IVec& mu = *it;
        if (mu == m) continue;
        int p = 1;
        Rat gap = dm - power_sum_eigenvalue(rs, mu, 1);
        if (gap == 0) {
            p = 2;
            gap = dm2 - power_sum_eigenvalue(rs, mu, 2);
            if (gap == 0)
                throw GtError("jacobi_polynomial: eigenvalue collision persists");
        }
        Rat rhs = 0;
        for (const auto& [lam, clam] : c) {
            if (lam == mu) continue;
            auto& cols = (p == 1) ? col1 : col2;
            auto found = cols.find(lam);
            if (found == cols.end())
                found = cols.emplace(lam, operator_column(rs, lam, p)).first;
            auto entry = found->second.find(mu);
            if (entry != found->second.end()) rhs += entry->second * clam;
        }
        if (rhs != 0) c[mu] = rhs / gap;
    }

    Rat at_zero = 0;
    for (const auto& [lam, clam] : c) at_zero += clam * orbit_size(lam);
    if (at_zero == 0) throw GtError("jacobi_polynomial: vanishing value at 0");

    SymTrigPoly out;
    out.rs = rs;
    out.weight = m;
    for (auto& [lam, clam] : c) {
        Rat v = clam / at_zero;
        if (v != 0) out.coeffs[lam] = v;
    }
    return out;
}

LaurentPoly expand(const SymTrigPoly& p) {
    LaurentPoly acc(p.rs.rank);
    for (const auto& [lam, coeff] : p.coeffs) {
        LaurentPoly orb = LaurentPoly::orbit_sum(lam);
        orb *= coeff;
        acc += orb;
    }
    return acc;
}

double orbit_sum_value(const IVec& lambda, const std::vector<double>& t) {
    IVec sorted = dominant_rep(lambda);
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    double acc = 0.0;
    // prev_permutation over the descending-sorted multiset hits each distinct
    // arrangement exactly once.
    IVec perm = sorted;
    do {
        double prod = 1.0;
        for (size_t j = 0; j < perm.size(); ++j) {
            if (perm[j] != 0) prod *= 2.0 * std::cos(perm[j] * t[j]);
        }
        acc += prod;
    } while (std::prev_permutation(perm.begin(), perm.end()));
    return acc;
}

double evaluate(const SymTrigPoly& p, const std::vector<double>& t) {
    if (static_cast<int>(t.size()) != p.rs.rank)
        throw GtError("evaluate: point rank mismatch");
    double acc = 0.0;
    for (const auto& [lam, coeff] : p.coeffs)
        acc += to_double(coeff) * orbit_sum_value(lam, t);
    return acc;
}

Rat half_pi_value(const SymTrigPoly& p) {
    Rat acc = 0;
    for (const auto& [lam, coeff] : p.coeffs) {
        long perms = orbit_size(lam);
        Rat factor = 1;
        for (int v : lam) {
            if (v == 0) continue;
            perms /= 2;  // undo the sign multiplicity; cos collapses signs
            if (v % 2 != 0) {
                factor = 0;
                break;
            }
            factor *= ((v / 2) % 2 == 0) ? 2 : -2;
        }
        acc += coeff * factor * perms;
    }
    return acc;
}

Rat value_at_half_pi(const RootSystemBC& rs, const IVec& m) {
    const RSType ty = rs.type();
    if (ty == RSType::C || ty == RSType::D) {
        bool even = true;
        for (int v : m)
            if (v % 2 != 0) even = false;
        if (even) {
            long s = 0;
            for (int v : m) s += v / 2;
            return (s % 2 == 0) ? Rat(1) : Rat(-1);
        }
    }
    return half_pi_value(jacobi_polynomial(rs, m));
}

Rat classical_jacobi(const Rat& alpha, const Rat& beta, int k, const Rat& x) {
    if (k < 0) throw GtError("classical_jacobi: negative degree");
    Rat p0 = 1;
    if (k == 0) return p0;
    Rat p1 = (alpha - beta) / 2 + (alpha + beta + 2) / 2 * x;
    for (int n = 2; n <= k; ++n) {
        Rat ab = alpha + beta;
        Rat c0 = Rat(2 * n) * (Rat(n) + ab) * (Rat(2 * n) + ab - 2);
        Rat c1 = (Rat(2 * n) + ab - 1) *
                 ((Rat(2 * n) + ab) * (Rat(2 * n) + ab - 2) * x +
                  alpha * alpha - beta * beta);
        Rat c2 = Rat(2) * (Rat(n) + alpha - 1) * (Rat(n) + beta - 1) *
                 (Rat(2 * n) + ab);
        Rat p2 = (c1 * p1 - c2 * p0) / c0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

}  // namespace grasstrans
