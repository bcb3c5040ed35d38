#include "grasstrans/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "grasstrans/jacobi.hpp"

namespace grasstrans {

namespace {

constexpr double kPi = std::numbers::pi;

void legendre_rule(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

long factorial(int r) {
    long f = 1;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    legendre_rule(n, nodes, weights);
    for (int i = 0; i < n; ++i) {
        nodes[i] = 0.5 * (nodes[i] + 1.0);
        weights[i] *= 0.5;
    }
}

double integrate_density(const RootSystemBC& rs, const Integrand& f, int order) {
    const int r = rs.rank;
    std::vector<double> u, w;
    gauss_legendre(order, u, w);

    // fold factor: |W| copies of the alcove, times the alcove-to-cube Jacobian
    const double copies = static_cast<double>(factorial(r)) * std::pow(2.0, r);

    std::vector<int> idx(r, 0);
    std::vector<double> t(r);
    double acc = 0.0;
    double comp = 0.0;  // Kahan carry
    while (true) {
        // t_j = (pi/2) u_1...u_j with Jacobian prod_j (pi/2) u_1...u_{j-1}
        double weight = 1.0;
        double jac = 1.0;
        double prefix = 1.0;
        for (int j = 0; j < r; ++j) {
            weight *= w[idx[j]];
            jac *= (kPi / 2.0) * prefix;
            prefix *= u[idx[j]];
            t[j] = (kPi / 2.0) * prefix;
        }
        const double val = f(t) * measure_density(rs, t) * jac * weight;
        const double y = val - comp;
        const double s = acc + y;
        comp = (s - acc) - y;
        acc = s;

        int pos = r - 1;
        while (pos >= 0 && ++idx[pos] == order) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return copies * acc;
}

double integrate_density_cube(const RootSystemBC& rs, const Integrand& f, int order) {
    const int r = rs.rank;
    std::vector<double> u, w;
    gauss_legendre(order, u, w);

    // two panels per axis, [0, pi/2] and [pi/2, pi], so density zeros sit on
    // panel boundaries
    const int m = 2 * order;
    std::vector<double> nodes(m), weights(m);
    for (int i = 0; i < order; ++i) {
        nodes[i] = (kPi / 2.0) * u[i];
        weights[i] = (kPi / 2.0) * w[i];
        nodes[order + i] = (kPi / 2.0) * (1.0 + u[i]);
        weights[order + i] = (kPi / 2.0) * w[i];
    }

    std::vector<int> idx(r, 0);
    std::vector<double> t(r);
    double acc = 0.0;
    double comp = 0.0;
    while (true) {
        double weight = 1.0;
        for (int j = 0; j < r; ++j) {
            t[j] = nodes[idx[j]];
            weight *= weights[idx[j]];
        }
        const double val = f(t) * measure_density(rs, t) * weight;
        const double y = val - comp;
        const double s = acc + y;
        comp = (s - acc) - y;
        acc = s;

        int pos = r - 1;
        while (pos >= 0 && ++idx[pos] == m) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return acc;
}

double gram_check(const RootSystemBC& rs, int degree_bound, int order) {
    const std::vector<IVec> weights = even_dominant_weights(rs.rank, degree_bound);
    std::vector<SymTrigPoly> phis;
    phis.reserve(weights.size());
    for (const IVec& m : weights) phis.push_back(jacobi_polynomial(rs, m));

    std::vector<double> norms(phis.size());
    for (size_t i = 0; i < phis.size(); ++i) {
        const SymTrigPoly& p = phis[i];
        norms[i] = integrate_density(
            rs, [&](const std::vector<double>& t) {
                const double v = evaluate(p, t);
                return v * v;
            },
            order);
    }
    double worst = 0.0;
    for (size_t i = 0; i < phis.size(); ++i) {
        for (size_t j = i + 1; j < phis.size(); ++j) {
            const double ip = integrate_density(
                rs,
                [&](const std::vector<double>& t) {
                    return evaluate(phis[i], t) * evaluate(phis[j], t);
                },
                order);
            const double scaled = std::abs(ip) / std::sqrt(norms[i] * norms[j]);
            if (scaled > worst) worst = scaled;
        }
    }
    return worst;
}

}  // namespace grasstrans
