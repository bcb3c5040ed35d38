#include "grasstrans/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "grasstrans/jacobi.hpp"
#include "grasstrans/quadrature.hpp"

namespace grasstrans {

namespace {

void require_even_dominant(const IVec& m) {
    if (!is_dominant(m)) throw GtError("weight must be dominant");
    for (int v : m)
        if (v % 2 != 0) throw GtError("weight must have even entries");
}

// shared pochhammer pieces of the cosine/sine symbols
struct SymbolFactors {
    Rat ratio;
    LogSigned ls;
    bool exact_zero;
    IVec zero_positions;
};

SymbolFactors symbol_factors(const RootSystemBC& rs, const Rat& nu, const IVec& m) {
    const Rat a = rs.a;
    const int r = rs.rank;
    const Rat tail = nu + 1 + rs.iota + rs.b() + a * (r - 1);
    SymbolFactors out{Rat(1), LogSigned{0.0, 1, 0}, false, {}};
    for (int j = 1; j <= r; ++j) {
        const long k = m[j - 1] / 2;
        const Rat num_arg = nu + 1 + a / 2 * (j - 1) - k;
        const Rat den_arg = tail - a / 2 * (j - 1);
        if (poch_is_zero(den_arg, k))
            throw GtError("spectral symbol: denominator pole");
        if (poch_is_zero(num_arg, k)) {
            out.exact_zero = true;
            out.zero_positions.push_back(j);
        }
        out.ls = out.ls * pochhammer_ls(num_arg, k) / pochhammer_ls(den_arg, k);
        out.ratio *= pochhammer_rat(num_arg, k) / pochhammer_rat(den_arg, k);
    }
    return out;
}

Rat ks_nu(const Rat& a, int r, const Rat& t) { return -a / 2 * (r - 2 * t); }

RootSystemBC ks_root_system(Field f, int r) {
    return grassmannian_preset(f, 2 * r, r);
}

}  // namespace

Kind parse_kind(const std::string& s) {
    if (s == "cosine" || s == "cos") return Kind::Cosine;
    if (s == "sine" || s == "sin") return Kind::Sine;
    throw GtError("unknown kind: " + s);
}

LogSigned norm_const(const RootSystemBC& rs, Kind k, const Rat& nu) {
    const Rat a = rs.a;
    const int r = rs.rank;
    const Rat b = rs.b();

    const Rat exponent = a * r * (r - 1) + Rat(r) * rs.b2 + 2 * r * rs.iota;
    LogSigned acc{to_double(exponent) * std::log(2.0), 1, 0};
    for (long j = 2; j <= r; ++j) acc.log_abs += std::log(static_cast<double>(j));
    for (int i = 1; i < r; ++i)
        for (int j = i + 1; j <= r; ++j)
            acc = acc * gamma_ls(a / 2 * (j - i + 1)) / gamma_ls(a / 2 * (j - i));

    const Rat half_iota = (rs.iota - 1) / 2;
    const Rat shift = a / 2 * (r - 1);
    if (k == Kind::Cosine) {
        acc = acc * gindikin_gamma(a, r, 1 + b + half_iota + shift);
        acc = acc * gindikin_gamma(a, r, nu + 1 + half_iota + shift);
    } else {
        acc = acc * gindikin_gamma(a, r, 1 + half_iota + shift);
        acc = acc * gindikin_gamma(a, r, nu + 1 + b + half_iota + shift);
    }
    acc = acc / gindikin_gamma(a, r, nu + 1 + b + rs.iota + a * (r - 1));
    return acc;
}

SpectralSymbol spectral_symbol(const RootSystemBC& rs, Kind k, const Rat& nu,
                               const IVec& m) {
    require_even_dominant(m);
    if (static_cast<int>(m.size()) != rs.rank)
        throw GtError("spectral symbol: weight rank mismatch");
    SymbolFactors f = symbol_factors(rs, nu, m);
    Rat ratio = f.ratio;
    LogSigned ls = f.ls;
    if (k == Kind::Sine) {
        const Rat at_half_pi = value_at_half_pi(rs, m);
        ratio *= at_half_pi;
        ls = ls * ls_from_rat(at_half_pi);
    }
    SpectralSymbol out;
    out.value = norm_const(rs, k, nu) * ls;
    out.ratio = f.exact_zero ? Rat(0) : ratio;
    out.exact_zero = f.exact_zero || out.ratio == 0;
    out.zero_positions = std::move(f.zero_positions);
    return out;
}

Rat eigenvalue_of_M(const RootSystemBC& rs, const Rat& nu, const IVec& m) {
    const std::vector<Rat> rho = rs.rho();
    const Rat c = 2 * nu + 2 + rs.rho1();
    Rat acc = 1;
    for (int j = 0; j < rs.rank; ++j) {
        const Rat mj = Rat(m[j]) + rho[j];
        acc *= c * c - mj * mj;
    }
    return acc;
}

Rat symbol_recursion_gap(const RootSystemBC& rs, Kind k, const Rat& nu, const IVec& m) {
    const Rat a = rs.a;
    const int r = rs.rank;
    Rat step = 1;
    for (int j = 1; j <= r; ++j) {
        const Rat kk = Rat(m[j - 1]) / 2;
        step *= 1 - kk / (nu + 1 + a / 2 * (j - 1));
        step *= 1 + kk / (nu + 1 + rs.b() + rs.iota + a * (r - 1) - a / 2 * (j - 1));
    }
    const Rat here = spectral_symbol(rs, k, nu, m).ratio;
    const Rat next = spectral_symbol(rs, k, nu + 1, m).ratio;
    return here - step * next;
}

bool in_L_nu(const RootSystemBC& rs, const Rat& nu, const IVec& m) {
    for (int j = 1; j <= static_cast<int>(m.size()); ++j) {
        const Rat bound = nu + 1 + rs.a / 2 * (j - 1);
        if (is_integer(bound) && !(Rat(m[j - 1]) / 2 < bound)) return false;
    }
    return true;
}

bool in_L_rr(const IVec& m, int r, int rprime, bool strict) {
    const int depth = std::min(r, rprime);
    const int cut = strict ? depth : depth - 1;
    for (int j = cut; j < static_cast<int>(m.size()); ++j)
        if (m[j] != 0) return false;
    return true;
}

ImageMembership image_membership(Field f, int n, int r, int rprime, const Rat& nu,
                                 const IVec& m) {
    const RootSystemBC rs_target = grassmannian_preset(f, n, std::min(rprime, n - rprime));
    ImageMembership out{};
    out.lrr_ok = in_L_rr(m, r, rprime);
    bool active = false;
    for (int j = 1; j <= static_cast<int>(m.size()); ++j) {
        const Rat bound = nu + 1 + rs_target.a / 2 * (j - 1);
        if (is_integer(bound)) active = true;
    }
    out.lnu_active = active;
    out.lnu_ok = in_L_nu(rs_target, nu, m);
    out.in_image = out.lrr_ok && out.lnu_ok;
    return out;
}

Rat knapp_stein_ratio(Field f, int r, const Rat& t, const IVec& m) {
    require_even_dominant(m);
    const Rat a = field_dim(f);
    Rat acc = 1;
    for (int j = 1; j <= r; ++j) {
        const long k = m[j - 1] / 2;
        const Rat num = a / 2 * (r + 1 - j - 2 * t);
        const Rat den = a / 2 * (r + 1 - j + 2 * t);
        if (poch_is_zero(den, k)) throw GtError("knapp-stein: denominator pole");
        acc *= pochhammer_rat(num, k) / pochhammer_rat(den, k);
    }
    return acc;
}

LogSigned knapp_stein_symbol(Field f, int r, const Rat& t, const IVec& m) {
    const RootSystemBC rs = ks_root_system(f, r);
    const Rat nu = ks_nu(rs.a, r, t);
    return norm_const(rs, Kind::Sine, nu) * ls_from_rat(knapp_stein_ratio(f, r, t, m));
}

std::vector<SteinViolation> stein_positivity_scan(Field f, int r,
                                                  const std::vector<Rat>& ts,
                                                  int degree_bound) {
    std::vector<SteinViolation> out;
    const std::vector<IVec> weights = even_dominant_weights(r, degree_bound);
    for (const Rat& t : ts) {
        for (const IVec& m : weights) {
            const Rat q = knapp_stein_ratio(f, r, t, m);
            if (q <= 0) out.push_back({t, m, q});
        }
    }
    return out;
}

LogSigned composite_symbol(const LogSigned& radon_factor, Field f, int n, int r,
                           int rprime, Kind k, const Rat& nu, const IVec& m) {
    const int depth = std::min({r, rprime, n - r, n - rprime});
    for (int j = depth; j < static_cast<int>(m.size()); ++j)
        if (m[j] != 0) throw GtError("composite symbol: weight too deep");
    auto padded = [&](int rank) {
        IVec w(rank, 0);
        for (int j = 0; j < std::min<int>(rank, m.size()); ++j) w[j] = m[j];
        return w;
    };
    const RootSystemBC rs1 = grassmannian_preset(f, n, std::min(r, n - r));
    const RootSystemBC rs2 = grassmannian_preset(f, n, std::min(rprime, n - rprime));
    const SpectralSymbol s1 = spectral_symbol(rs1, k, nu, padded(rs1.rank));
    const SpectralSymbol s2 = spectral_symbol(rs2, k, nu, padded(rs2.rank));
    return radon_factor * s1.value * s2.value;
}

std::vector<IVec> branching_list(Field f, int rank, int alpha, int degree_bound) {
    if (f == Field::Complex)
        throw GtError("branching list: real or quaternionic forms only");
    const Rat nu = (f == Field::Real) ? Rat(alpha) / 2 : Rat(alpha);
    const RootSystemBC probe = make_root_system(rank, field_dim(f), 0, 0);
    std::vector<IVec> out;
    for (const IVec& m : even_dominant_weights(rank, degree_bound))
        if (in_L_nu(probe, nu, m)) out.push_back(m);
    return out;
}

namespace {

double kernel_pow(Kind k, const Rat& nu, const std::vector<double>& t) {
    const double e = 2.0 * to_double(nu);
    double acc = 0.0;
    for (double x : t) {
        const double base = (k == Kind::Cosine) ? std::fabs(std::cos(x))
                                                : std::fabs(std::sin(x));
        if (base == 0.0) return 0.0;
        acc += e * std::log(base);
    }
    return std::exp(acc);
}

double symbol_ratio_at_order(const RootSystemBC& rs, Kind k, const Rat& nu,
                             const SymTrigPoly& phi, int order) {
    const double num = integrate_density(
        rs,
        [&](const std::vector<double>& t) {
            return kernel_pow(k, nu, t) * evaluate(phi, t);
        },
        order);
    const double den = integrate_density(
        rs, [&](const std::vector<double>& t) { return kernel_pow(k, nu, t); },
        order);
    return num / den;
}

}  // namespace

double quadrature_symbol(const RootSystemBC& rs, Kind k, const Rat& nu,
                         const IVec& m, int order) {
    require_even_dominant(m);
    const SymTrigPoly phi = jacobi_polynomial(rs, m);
    double v1 = symbol_ratio_at_order(rs, k, nu, phi, order);
    double v2 = symbol_ratio_at_order(rs, k, nu, phi, order + 16);
    if (std::fabs(v1 - v2) > 1e-8 * std::max(1.0, std::fabs(v2))) {
        v1 = v2;
        v2 = symbol_ratio_at_order(rs, k, nu, phi, order + 48);
        if (std::fabs(v1 - v2) > 1e-7 * std::max(1.0, std::fabs(v2)))
            throw GtError("quadrature symbol: resolutions disagree");
    }
    return v2;
}

double norm_const_quad_ratio(const RootSystemBC& rs, Kind k, const Rat& nu,
                             const Rat& nu_ref, int order) {
    const double num = integrate_density(
        rs, [&](const std::vector<double>& t) { return kernel_pow(k, nu, t); },
        order);
    const double den = integrate_density(
        rs,
        [&](const std::vector<double>& t) { return kernel_pow(k, nu_ref, t); },
        order);
    return num / den;
}

}  // namespace grasstrans
