#include "grasstrans/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace grasstrans {

LaurentPoly LaurentPoly::monomial(IVec lambda, Rat c) {
    LaurentPoly p(static_cast<int>(lambda.size()));
    p.add(lambda, c);
    return p;
}

LaurentPoly LaurentPoly::constant(int rank, Rat c) {
    return monomial(IVec(rank, 0), std::move(c));
}

LaurentPoly LaurentPoly::orbit_sum(const IVec& lambda) {
    LaurentPoly p(static_cast<int>(lambda.size()));
    for (const IVec& mu : signed_orbit(lambda)) p.add(mu, 1);
    return p;
}

void LaurentPoly::add(const IVec& lambda, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = c_.try_emplace(lambda, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [lam, co] : o.c_) add(lam, co);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [lam, co] : o.c_) add(lam, -co);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [lam, co] : c_) co *= s;
    return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (const auto& [lam, co] : c_) {
        auto it = o.c_.find(lam);
        if (it == o.c_.end() || it->second != co) return false;
    }
    return true;
}

Rat LaurentPoly::coeff(const IVec& lambda) const {
    auto it = c_.find(lambda);
    return it == c_.end() ? Rat(0) : it->second;
}

std::complex<double> LaurentPoly::eval(const std::vector<double>& t) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [lam, co] : c_) {
        double phase = 0.0;
        for (int j = 0; j < rank_; ++j) phase += lam[j] * t[j];
        acc += to_double(co) * std::complex<double>{std::cos(phase), std::sin(phase)};
    }
    return acc;
}

GaussRat LaurentPoly::eval_half_pi() const {
    GaussRat acc;
    for (const auto& [lam, co] : c_) {
        long s = 0;
        for (int v : lam) s += v;
        GaussRat u = unit_power(s);
        acc += GaussRat{co * u.re, co * u.im};
    }
    return acc;
}

bool LaurentPoly::is_symmetric() const {
    for (const auto& [lam, co] : c_) {
        IVec dom(lam.size());
        std::transform(lam.begin(), lam.end(), dom.begin(), [](int v) { return std::abs(v); });
        std::sort(dom.begin(), dom.end(), std::greater<int>());
        if (coeff(dom) != co) return false;
    }
    return true;
}

}  // namespace grasstrans
