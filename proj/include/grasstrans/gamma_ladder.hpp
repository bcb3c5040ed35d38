#pragma once

#include <cmath>

#include "grasstrans/common.hpp"

namespace grasstrans {

// Signed log-scale value sign * exp(log_abs) * eps^order as eps -> 0+;
// order > 0 encodes a zero of that order, order < 0 a pole.  Signs and
// orders come from exact rational bookkeeping, magnitudes are doubles.
struct LogSigned {
    double log_abs = 0.0;
    int sign = 1;
    int order = 0;

    bool finite() const { return order <= 0 && sign != 0; }
    bool is_zero() const { return order > 0; }
    bool is_pole() const { return order < 0; }

    double value() const {
        if (order > 0) return 0.0;
        if (order < 0) throw GtError("LogSigned: evaluating a pole");
        return sign * std::exp(log_abs);
    }

    friend LogSigned operator*(const LogSigned& x, const LogSigned& y) {
        return {x.log_abs + y.log_abs, x.sign * y.sign, x.order + y.order};
    }
    friend LogSigned operator/(const LogSigned& x, const LogSigned& y) {
        return {x.log_abs - y.log_abs, x.sign * y.sign, x.order - y.order};
    }
};

LogSigned ls_from_rat(const Rat& q);
LogSigned ls_from_double(double v);

// Gamma(x) for rational x.  Nonpositive integers give a simple pole with the
// residue magnitude (-1)^n / n!; signs elsewhere by the exact floor parity.
LogSigned gamma_ls(const Rat& x);

// (x)_k = x (x+1) ... (x+k-1), exact zero detection per factor.
LogSigned pochhammer_ls(const Rat& x, long k);
Rat pochhammer_rat(const Rat& x, long k);
bool poch_is_zero(const Rat& x, long k);

// prod_{j=1}^{r} Gamma(alpha - (a/2)(j-1))
LogSigned gindikin_gamma(const Rat& a, int r, const Rat& alpha);

}  // namespace grasstrans
