#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "grasstrans/common.hpp"
#include "grasstrans/rng.hpp"
#include "grasstrans/root_system.hpp"
#include "grasstrans/spectra.hpp"

namespace grasstrans {

// Quaternion a + b j with complex components; j z = conj(z) j.
struct Quat {
    std::complex<double> a{0.0, 0.0};
    std::complex<double> b{0.0, 0.0};

    friend Quat operator+(const Quat& x, const Quat& y) { return {x.a + y.a, x.b + y.b}; }
    friend Quat operator-(const Quat& x, const Quat& y) { return {x.a - y.a, x.b - y.b}; }
    friend Quat operator*(const Quat& x, const Quat& y) {
        return {x.a * y.a - x.b * std::conj(y.b), x.a * y.b + x.b * std::conj(y.a)};
    }
    Quat conj() const { return {std::conj(a), -b}; }
    double norm2() const { return std::norm(a) + std::norm(b); }
    Quat scaled(double s) const { return {a * s, b * s}; }
};

// Orthonormal frame spanning a point of the Grassmannian, stored through its
// complex embedding: n x r for R and C, 2n x 2r for H.
struct Frame {
    Field field;
    int n = 0;
    int r = 0;
    Eigen::MatrixXcd embed;
};

Frame base_frame(Field f, int n, int r);
Frame haar_frame(Rng& rng, Field f, int n, int r);

// ascending singular values of x^* y as angles t_1 >= ... >= t_r; for H the
// embedded values come in pairs which must agree to pair_tol (worst pairing
// gap is reported through pair_defect when given)
std::vector<double> principal_angles(const Frame& x, const Frame& y,
                                     double pair_tol = 1e-8,
                                     double* pair_defect = nullptr);

double cos_product(const std::vector<double>& angles);
double sin_product(const std::vector<double>& angles);

// det over the reals carried by the complex embedding: plain determinant for
// R, |det|^2 for C, and for H the square of the (real, nonnegative) embedded
// determinant, i.e. the fourth power of the Dieudonne determinant
double det_real(Field f, const Eigen::MatrixXcd& embedded_square);

// frame unitarity defect |x^* x - I|_max
double frame_defect(const Frame& x);

std::vector<std::vector<double>> sample_angle_sets(const RootSystemBC& rs,
                                                   long nsamples,
                                                   std::uint64_t seed);

struct McEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    long n = 0;
};

// ratio estimate E[K^{2nu} phi_m] / E[K^{2nu}] over precomputed angle sets;
// converges to symbol/norm-const, standard error by the delta method
McEstimate mc_symbol_ratio(const RootSystemBC& rs, Kind k, const Rat& nu,
                           const IVec& m,
                           const std::vector<std::vector<double>>& angle_sets);

struct KernelCheckResult {
    double max_kernel_defect = 0.0;  // |Sin|^a vs det ratio formula
    double max_qr_defect = 0.0;      // triangular factor determinant relations
    double max_pair_defect = 0.0;    // embedded singular value pairing (H)
};

// Samples Gaussian Y in M_{r,r}(K), compares the sine of the angles between
// the base point and the graph of Y against the closed determinant ratio,
// and checks the determinant identities of the triangular factor of the
// unipotent graph matrix.  n = 2r throughout.
KernelCheckResult knapp_stein_kernel_check(Field f, int r, long nsamples,
                                           std::uint64_t seed);

}  // namespace grasstrans
