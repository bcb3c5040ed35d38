#include "grasstrans/grassgeo.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "grasstrans/jacobi.hpp"

namespace grasstrans {

namespace {

using Cplx = std::complex<double>;

// column-major quaternionic matrix
struct QuatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Quat> v;
    QuatMat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c) {}
    Quat& at(int i, int j) { return v[static_cast<size_t>(j) * rows + i]; }
    const Quat& at(int i, int j) const { return v[static_cast<size_t>(j) * rows + i]; }
};

Eigen::MatrixXcd embed_quat(const QuatMat& q) {
    Eigen::MatrixXcd e(2 * q.rows, 2 * q.cols);
    for (int j = 0; j < q.cols; ++j) {
        for (int i = 0; i < q.rows; ++i) {
            const Quat& x = q.at(i, j);
            e(2 * i, 2 * j) = x.a;
            e(2 * i, 2 * j + 1) = x.b;
            e(2 * i + 1, 2 * j) = -std::conj(x.b);
            e(2 * i + 1, 2 * j + 1) = std::conj(x.a);
        }
    }
    return e;
}

QuatMat gaussian_quat(Rng& rng, int rows, int cols) {
    QuatMat q(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            Quat& x = q.at(i, j);
            x.a = Cplx(rng.next_gaussian(), rng.next_gaussian());
            x.b = Cplx(rng.next_gaussian(), rng.next_gaussian());
        }
    }
    return q;
}

// modified Gram-Schmidt over H (right module), one re-orthogonalization pass
void mgs_quat(QuatMat& q) {
    for (int j = 0; j < q.cols; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                Quat c{};
                for (int i = 0; i < q.rows; ++i) c = c + q.at(i, k).conj() * q.at(i, j);
                for (int i = 0; i < q.rows; ++i) q.at(i, j) = q.at(i, j) - q.at(i, k) * c;
            }
        }
        double nrm2 = 0.0;
        for (int i = 0; i < q.rows; ++i) nrm2 += q.at(i, j).norm2();
        if (nrm2 <= 0.0) throw GtError("degenerate column in quaternionic Gram-Schmidt");
        double inv = 1.0 / std::sqrt(nrm2);
        for (int i = 0; i < q.rows; ++i) q.at(i, j) = q.at(i, j).scaled(inv);
    }
}

Eigen::MatrixXcd gaussian_embedded(Rng& rng, Field f, int rows, int cols) {
    if (f == Field::Quaternion) return embed_quat(gaussian_quat(rng, rows, cols));
    Eigen::MatrixXcd g(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            double re = rng.next_gaussian();
            double im = (f == Field::Complex) ? rng.next_gaussian() : 0.0;
            g(i, j) = Cplx(re, im);
        }
    }
    return g;
}

struct KahanSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

}  // namespace

Frame base_frame(Field f, int n, int r) {
    Frame x;
    x.field = f;
    x.n = n;
    x.r = r;
    int mul = (f == Field::Quaternion) ? 2 : 1;
    x.embed = Eigen::MatrixXcd::Zero(mul * n, mul * r);
    x.embed.topRows(mul * r).setIdentity();
    return x;
}

Frame haar_frame(Rng& rng, Field f, int n, int r) {
    Frame x;
    x.field = f;
    x.n = n;
    x.r = r;
    if (f == Field::Quaternion) {
        QuatMat g = gaussian_quat(rng, n, r);
        mgs_quat(g);
        x.embed = embed_quat(g);
        return x;
    }
    Eigen::MatrixXcd g = gaussian_embedded(rng, f, n, r);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, r);
    Eigen::MatrixXcd rm = qr.matrixQR().topRows(r);
    // rotate columns so the triangular factor has positive diagonal (exact Haar)
    for (int j = 0; j < r; ++j) {
        Cplx d = rm(j, j);
        double ad = std::abs(d);
        if (ad > 0.0) q.col(j) *= d / ad;
    }
    if (f == Field::Real) q = q.real().cast<Cplx>();
    x.embed = q;
    return x;
}

std::vector<double> principal_angles(const Frame& x, const Frame& y, double pair_tol,
                                     double* pair_defect) {
    if (x.field != y.field || x.n != y.n || x.r != y.r)
        throw GtError("principal_angles: mismatched frames");
    Eigen::MatrixXcd m = x.embed.adjoint() * y.embed;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    Eigen::VectorXd sv = svd.singularValues();  // sorted decreasing
    std::vector<double> sigma;
    if (x.field == Field::Quaternion) {
        double worst = 0.0;
        for (int k = 0; k + 1 < sv.size(); k += 2) {
            worst = std::max(worst, std::abs(sv(k) - sv(k + 1)));
            sigma.push_back(0.5 * (sv(k) + sv(k + 1)));
        }
        if (pair_defect) *pair_defect = worst;
        if (worst > pair_tol)
            throw GtError("principal_angles: embedded singular values fail to pair");
    } else {
        sigma.assign(sv.data(), sv.data() + sv.size());
        if (pair_defect) *pair_defect = 0.0;
    }
    std::vector<double> t(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i)
        t[i] = std::acos(std::clamp(sigma[i], 0.0, 1.0));
    std::sort(t.begin(), t.end(), std::greater<double>());
    return t;
}

double cos_product(const std::vector<double>& angles) {
    double p = 1.0;
    for (double t : angles) p *= std::cos(t);
    return p;
}

double sin_product(const std::vector<double>& angles) {
    double p = 1.0;
    for (double t : angles) p *= std::sin(t);
    return p;
}

double det_real(Field f, const Eigen::MatrixXcd& m) {
    Cplx d = m.determinant();
    switch (f) {
        case Field::Real:
            return d.real();
        case Field::Complex:
            return std::norm(d);
        case Field::Quaternion: {
            double scale = 1.0 + std::abs(d);
            if (std::abs(d.imag()) > 1e-8 * scale)
                throw GtError("det_real: embedded quaternionic determinant not real");
            if (d.real() < -1e-8 * scale)
                throw GtError("det_real: embedded quaternionic determinant negative");
            // the 2m x 2m complex embedding carries half the real multiplicity:
            // its determinant is the squared Dieudonne determinant, and the
            // real determinant is the fourth power
            return d.real() * d.real();
        }
    }
    throw GtError("det_real: bad field");
}

double frame_defect(const Frame& x) {
    Eigen::MatrixXcd g = x.embed.adjoint() * x.embed;
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff();
}

std::vector<std::vector<double>> sample_angle_sets(const RootSystemBC& rs, long nsamples,
                                                   std::uint64_t seed) {
    if (!rs.preset) throw GtError("sample_angle_sets: root system lacks a Grassmannian preset");
    Field f = rs.preset->field;
    int n = rs.preset->n;
    int r = rs.preset->r;
    Frame x0 = base_frame(f, n, r);
    Rng rng(seed);
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<size_t>(nsamples));
    for (long s = 0; s < nsamples; ++s) {
        Frame y = haar_frame(rng, f, n, r);
        out.push_back(principal_angles(x0, y));
    }
    return out;
}

McEstimate mc_symbol_ratio(const RootSystemBC& rs, Kind k, const Rat& nu, const IVec& m,
                           const std::vector<std::vector<double>>& angle_sets) {
    SymTrigPoly phi = jacobi_polynomial(rs, m);
    double expo = 2.0 * to_double(nu);
    KahanSum sw, sf, sww, sff, swf;
    for (const auto& t : angle_sets) {
        double kv = (k == Kind::Cosine) ? cos_product(t) : sin_product(t);
        double w = std::pow(std::abs(kv), expo);
        double wf = w * evaluate(phi, t);
        sw.add(w);
        sf.add(wf);
        sww.add(w * w);
        sff.add(wf * wf);
        swf.add(w * wf);
    }
    double n = static_cast<double>(angle_sets.size());
    if (n < 2) throw GtError("mc_symbol_ratio: need at least two samples");
    double mw = sw.s / n;
    double mf = sf.s / n;
    if (mw == 0.0) throw GtError("mc_symbol_ratio: vanishing weight mean");
    double ratio = mf / mw;
    // delta method on the ratio of means; sample (co)variances
    double vw = (sww.s - n * mw * mw) / (n - 1.0);
    double vf = (sff.s - n * mf * mf) / (n - 1.0);
    double cwf = (swf.s - n * mw * mf) / (n - 1.0);
    double var = (vf - 2.0 * ratio * cwf + ratio * ratio * vw) / (n * mw * mw);
    McEstimate est;
    est.value = ratio;
    est.stderr_ = std::sqrt(std::max(var, 0.0));
    est.n = static_cast<long>(angle_sets.size());
    return est;
}

KernelCheckResult knapp_stein_kernel_check(Field f, int r, long nsamples,
                                           std::uint64_t seed) {
    KernelCheckResult res;
    int a = field_dim(f);
    int mul = (f == Field::Quaternion) ? 2 : 1;
    Frame x0 = base_frame(f, 2 * r, r);
    Rng rng(seed);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(mul * r, mul * r);
    for (long s = 0; s < nsamples; ++s) {
        Eigen::MatrixXcd ey = gaussian_embedded(rng, f, r, r);
        Eigen::MatrixXcd w = id + ey.adjoint() * ey;

        // orthonormal frame spanning the graph of Y
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(w);
        Eigen::MatrixXcd winvhalf = es.operatorInverseSqrt();
        Frame y;
        y.field = f;
        y.n = 2 * r;
        y.r = r;
        y.embed.resize(2 * mul * r, mul * r);
        y.embed.topRows(mul * r) = id;
        y.embed.bottomRows(mul * r) = ey;
        y.embed = y.embed * winvhalf;

        double pair_defect = 0.0;
        std::vector<double> t = principal_angles(x0, y, 1e-6, &pair_defect);
        res.max_pair_defect = std::max(res.max_pair_defect, pair_defect);

        double lhs = std::pow(sin_product(t), a);
        double rhs = std::abs(det_real(f, ey)) / std::sqrt(det_real(f, w));
        res.max_kernel_defect = std::max(res.max_kernel_defect, std::abs(lhs - rhs));

        // triangular factor p of the unipotent graph matrix: p^* p = n_Y^* n_Y
        Eigen::LLT<Eigen::MatrixXcd> llt(w);
        Eigen::MatrixXcd lb = llt.matrixL();
        Eigen::MatrixXcd bb = lb.adjoint();  // B^* B = I + Y^* Y
        Eigen::MatrixXcd cb = lb.triangularView<Eigen::Lower>().solve(ey.adjoint());
        Eigen::MatrixXcd dsq = id - cb.adjoint() * cb;
        Eigen::LLT<Eigen::MatrixXcd> llt2(dsq);
        if (llt2.info() != Eigen::Success)
            throw GtError("knapp_stein_kernel_check: complement block not positive definite");
        Eigen::MatrixXcd db = Eigen::MatrixXcd(llt2.matrixL()).adjoint();

        double det_b = det_real(f, bb);
        double det_d = det_real(f, db);
        double det_w = det_real(f, w);
        double d1 = std::abs(det_b * det_b - det_w) / (1.0 + std::abs(det_w));
        double d2 = std::abs(det_b * det_d - 1.0);

        // assembled k = n_Y p^{-1} must be unitary
        int q = mul * r;
        Eigen::MatrixXcd ny = Eigen::MatrixXcd::Identity(2 * q, 2 * q);
        ny.block(q, 0, q, q) = ey;
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(2 * q, 2 * q);
        p.topLeftCorner(q, q) = bb;
        p.topRightCorner(q, q) = cb;
        p.bottomRightCorner(q, q) = db;
        Eigen::MatrixXcd kmat =
            p.transpose().triangularView<Eigen::Lower>().solve(ny.transpose()).transpose();
        Eigen::MatrixXcd gram = kmat.adjoint() * kmat;
        gram.diagonal().array() -= 1.0;
        double d3 = gram.cwiseAbs().maxCoeff();

        res.max_qr_defect = std::max({res.max_qr_defect, d1, d2, d3});
    }
    return res;
}

}  // namespace grasstrans
