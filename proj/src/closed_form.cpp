#include "grasstrans/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace grasstrans {

namespace {

using Cplx = std::complex<double>;
constexpr Cplx kI{0.0, 1.0};

IVec merge_key(const VerifyTerm& t) {
    IVec key;
    key.reserve(3 * t.s_off.size() + 8 * t.denom.size());
    key.insert(key.end(), t.s_off.begin(), t.s_off.end());
    key.insert(key.end(), t.c_off.begin(), t.c_off.end());
    key.insert(key.end(), t.phase.begin(), t.phase.end());
    for (const auto& [beta, n] : t.denom) {
        key.insert(key.end(), beta.begin(), beta.end());
        key.push_back(n);
    }
    return key;
}

void merge_terms(VerifyState& st) {
    std::unordered_map<IVec, VerifyTerm, IVecHash> acc;
    for (VerifyTerm& t : st.terms) {
        IVec key = merge_key(t);
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(std::move(key), std::move(t));
        } else {
            it->second.coef += t.coef;
        }
    }
    st.terms.clear();
    for (auto& [key, t] : acc) {
        if (std::abs(t.coef) > 1e-300) st.terms.push_back(std::move(t));
    }
}

// involution: swap coordinates j,k (0-based, j==k allowed) and negate the
// listed coordinates afterwards
VerifyTerm reflect_term(const VerifyState& st, const VerifyTerm& t, int j, int k,
                        bool negate) {
    VerifyTerm out = t;
    std::swap(out.s_off[j], out.s_off[k]);
    std::swap(out.c_off[j], out.c_off[k]);
    std::swap(out.phase[j], out.phase[k]);
    if (negate) {
        for (int m : {j, k}) {
            out.phase[m] = -out.phase[m];
            if (out.s_off[m] % 2 != 0) out.coef = -out.coef;
            out.coef *= st.base_reflect;
            if (m == j && j == k) break;  // single-coordinate flip
        }
    }
    // transform denominators and renormalize to a positive leading entry
    std::map<IVec, int> denom;
    for (const auto& [beta, n] : t.denom) {
        IVec b = beta;
        std::swap(b[j], b[k]);
        if (negate) {
            b[j] = -b[j];
            if (k != j) b[k] = -b[k];
        }
        int lead = 0;
        for (int v : b)
            if (v != 0) {
                lead = v;
                break;
            }
        if (lead < 0) {
            // 1/(1-e_{+gamma})^n = (-1)^n e_{-n gamma} / (1-e_{-gamma})^n
            for (int& v : b) v = -v;
            if (n % 2 != 0) out.coef = -out.coef;
            for (size_t q = 0; q < b.size(); ++q) out.phase[q] -= n * b[q];
        }
        denom[b] += n;
    }
    out.denom = std::move(denom);
    return out;
}

void push_derivative(const VerifyState& st, const VerifyTerm& t, int j,
                     std::vector<VerifyTerm>& out) {
    const double sexp = st.sin_base + t.s_off[j];
    if (sexp != 0.0) {
        VerifyTerm p = t;
        p.coef *= sexp;
        p.s_off[j] -= 1;
        p.c_off[j] += 1;
        out.push_back(std::move(p));
    }
    const double cexp = st.cos_base + t.c_off[j];
    if (cexp != 0.0) {
        VerifyTerm p = t;
        p.coef *= -cexp;
        p.c_off[j] -= 1;
        p.s_off[j] += 1;
        out.push_back(std::move(p));
    }
    if (t.phase[j] != 0) {
        VerifyTerm p = t;
        p.coef *= kI * static_cast<double>(t.phase[j]);
        out.push_back(std::move(p));
    }
    for (const auto& [beta, n] : t.denom) {
        if (beta[j] == 0) continue;
        VerifyTerm p = t;
        p.coef *= -kI * static_cast<double>(n) * static_cast<double>(beta[j]);
        p.denom[beta] += 1;
        for (size_t q = 0; q < beta.size(); ++q) p.phase[q] -= beta[q];
        out.push_back(std::move(p));
    }
}

// difference part coef * (T - wT) / (1 - e_{-beta})
void push_difference(const VerifyState& st, const VerifyTerm& t, const Cplx& coef,
                     const IVec& beta, int j, int k, bool negate,
                     std::vector<VerifyTerm>& out) {
    VerifyTerm plus = t;
    plus.coef *= coef;
    plus.denom[beta] += 1;
    out.push_back(std::move(plus));

    VerifyTerm minus = reflect_term(st, t, j, k, negate);
    minus.coef *= -coef;
    minus.denom[beta] += 1;
    out.push_back(std::move(minus));
}

}  // namespace

VerifyState power_state(const RootSystemBC& rs, Kind k, double delta) {
    VerifyState st;
    st.rs = rs;
    if (k == Kind::Cosine)
        st.cos_base = delta;
    else
        st.sin_base = delta;
    VerifyTerm t;
    t.coef = 1.0;
    t.s_off.assign(rs.rank, 0);
    t.c_off.assign(rs.rank, 0);
    t.phase.assign(rs.rank, 0);
    st.terms.push_back(std::move(t));
    return st;
}

void shift_coordinate(VerifyState& st, int j, int ds, int dc, int dphase) {
    for (VerifyTerm& t : st.terms) {
        t.s_off[j - 1] += ds;
        t.c_off[j - 1] += dc;
        t.phase[j - 1] += dphase;
    }
}

VerifyState apply_D_engine(const VerifyState& st, int j1) {
    const int r = st.rs.rank;
    const int j = j1 - 1;
    const double a = to_double(st.rs.a);
    const double b2 = to_double(st.rs.b2);
    const double io = to_double(st.rs.iota);
    const double rho_j = to_double(st.rs.rho()[j]);

    VerifyState out;
    out.rs = st.rs;
    out.sin_base = st.sin_base;
    out.cos_base = st.cos_base;
    out.base_reflect = st.base_reflect;
    out.terms.reserve(st.terms.size() * (4 + 2 * r));

    for (const VerifyTerm& t : st.terms) {
        push_derivative(st, t, j, out.terms);
        {
            VerifyTerm p = t;
            p.coef *= -kI * rho_j;
            out.terms.push_back(std::move(p));
        }
        if (a != 0.0) {
            for (int k = 0; k < r; ++k) {
                if (k == j) continue;
                IVec beta(r, 0);
                if (k < j) {
                    beta[k] = 2;
                    beta[j] = -2;
                    push_difference(st, t, -kI * a, beta, k, j, false, out.terms);
                } else {
                    beta[j] = 2;
                    beta[k] = -2;
                    push_difference(st, t, kI * a, beta, j, k, false, out.terms);
                }
                IVec betap(r, 0);
                betap[j] = 2;
                betap[k] = 2;
                push_difference(st, t, kI * a, betap, j, k, true, out.terms);
            }
        }
        if (io != 0.0) {
            IVec beta(r, 0);
            beta[j] = 4;
            push_difference(st, t, 2.0 * kI * io, beta, j, j, true, out.terms);
        }
        if (b2 != 0.0) {
            IVec beta(r, 0);
            beta[j] = 2;
            push_difference(st, t, kI * b2, beta, j, j, true, out.terms);
        }
    }
    merge_terms(out);
    return out;
}

VerifyState apply_factor(const VerifyState& st, int j, int sign, double c) {
    VerifyState out = apply_D_engine(st, j);
    const Cplx mul = kI * static_cast<double>(sign);
    for (VerifyTerm& t : out.terms) t.coef *= mul;
    out.terms.reserve(out.terms.size() + st.terms.size());
    for (const VerifyTerm& t : st.terms) {
        VerifyTerm p = t;
        p.coef *= c;
        out.terms.push_back(std::move(p));
    }
    merge_terms(out);
    return out;
}

std::complex<double> eval_state(const VerifyState& st, const std::vector<double>& t) {
    const int r = st.rs.rank;
    Cplx acc = 0.0;
    for (const VerifyTerm& term : st.terms) {
        double logmag = 0.0;
        double arg = 0.0;
        for (int j = 0; j < r; ++j) {
            const double s = std::sin(t[j]);
            const double cc = std::cos(t[j]);
            logmag += (st.sin_base + term.s_off[j]) * std::log(s);
            logmag += (st.cos_base + term.c_off[j]) * std::log(cc);
            arg += term.phase[j] * t[j];
        }
        Cplx v = term.coef * std::exp(Cplx(logmag, arg));
        for (const auto& [beta, n] : term.denom) {
            double bt = 0.0;
            for (int j = 0; j < r; ++j) bt += beta[j] * t[j];
            const Cplx den = 1.0 - std::exp(Cplx(0.0, -bt));
            for (int q = 0; q < n; ++q) v /= den;
        }
        acc += v;
    }
    return acc;
}

std::vector<std::vector<double>> generic_points(int rank, int count) {
    // quasi-random irrational spacings, sorted into the open alcove
    static const double mults[] = {0.6180339887498949, 0.7548776662466927,
                                   0.8191725133961645, 0.5698402909980532};
    std::vector<std::vector<double>> pts;
    pts.reserve(count);
    const double lo = 0.12, hi = std::numbers::pi / 2 - 0.12;
    for (long seq = 1; static_cast<int>(pts.size()) < count; ++seq) {
        std::vector<double> t(rank);
        for (int j = 0; j < rank; ++j) {
            double x = std::fmod(0.37 + seq * mults[j % 4] + 0.11 * j, 1.0);
            t[j] = lo + x * (hi - lo);
        }
        std::sort(t.begin(), t.end(), std::greater<double>());
        bool ok = true;
        for (int j = 0; j + 1 < rank; ++j)
            if (t[j] - t[j + 1] < 0.05) ok = false;
        if (ok) pts.push_back(std::move(t));
    }
    return pts;
}

double verify_bs(const RootSystemBC& rs, Kind k, double delta,
                 const std::vector<std::vector<double>>& pts) {
    const int r = rs.rank;
    const double a = to_double(rs.a);
    const double b2 = to_double(rs.b2);
    const double io = to_double(rs.iota);
    const double c = delta + to_double(rs.rho1());

    VerifyState st = power_state(rs, k, delta);
    for (int j = 1; j <= r; ++j) st = apply_factor(st, j, -1, c);
    for (int j = 1; j <= r; ++j) st = apply_factor(st, j, +1, c);

    double expected = 1.0;
    for (int j = 1; j <= r; ++j) {
        expected *= delta + a * (j - 1);
        expected *= (k == Kind::Cosine) ? (delta + io - 1 + a * (r - j))
                                        : (delta + io + b2 - 1 + a * (r - j));
    }

    const VerifyState target = power_state(rs, k, delta - 2);
    double worst = 0.0;
    for (const auto& t : pts) {
        const Cplx got = eval_state(st, t);
        const Cplx want = expected * eval_state(target, t);
        const double scale = std::max(1.0, std::abs(want));
        worst = std::max(worst, std::abs(got - want) / scale);
    }
    return worst;
}

double verify_factor_chain(const RootSystemBC& rs, Kind k, double delta,
                           const std::vector<std::vector<double>>& pts) {
    const int r = rs.rank;
    const double a = to_double(rs.a);
    const double b2 = to_double(rs.b2);
    const double io = to_double(rs.iota);
    const double c = delta + to_double(rs.rho1());
    const bool cosine = (k == Kind::Cosine);

    double worst = 0.0;
    auto check = [&](const VerifyState& got, const VerifyState& want, Cplx factor) {
        for (const auto& t : pts) {
            const Cplx g = eval_state(got, t);
            const Cplx w = factor * eval_state(want, t);
            const double scale = std::max(1.0, std::abs(w));
            worst = std::max(worst, std::abs(g - w) / scale);
        }
    };

    VerifyState state = power_state(rs, k, delta);
    for (int j = 1; j <= r; ++j) {
        VerifyState applied = apply_factor(state, j, -1, c);
        VerifyState next = state;
        if (cosine)
            shift_coordinate(next, j, 0, -1, +1);
        else
            shift_coordinate(next, j, -1, 0, +1);
        const double cj = delta + a * (j - 1);
        const Cplx factor = cosine ? Cplx(cj, 0.0) : -kI * cj;
        check(applied, next, factor);
        state = std::move(next);
    }
    for (int j = r; j >= 1; --j) {
        VerifyState applied = apply_factor(state, j, +1, c);
        VerifyState next = state;
        if (cosine)
            shift_coordinate(next, j, 0, -1, -1);
        else
            shift_coordinate(next, j, -1, 0, -1);
        const double cj = cosine ? (delta - 1 + io + a * (r - j))
                                 : (delta - 1 + io + b2 + a * (r - j));
        const Cplx factor = cosine ? Cplx(cj, 0.0) : kI * cj;
        check(applied, next, factor);
        state = std::move(next);
    }
    return worst;
}

}  // namespace grasstrans
