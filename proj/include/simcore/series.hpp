#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "simcore/rational.hpp"

namespace simcore {

/* Power series truncated at a fixed order: coefficients c[0..order]. */
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(order + 1, Rational(0)) {
        if (order < 0) throw std::domain_error("PowerSeries: negative order");
    }
    PowerSeries(int order, std::vector<Rational> coeffs) : PowerSeries(order) {
        for (size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i)
            coeffs_[i] = coeffs[i];
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int n) const { return coeffs_.at(n); }
    Rational& operator[](int n) { return coeffs_.at(n); }

    PowerSeries& operator+=(const PowerSeries& o) {
        check_order(o);
        for (int n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        a.check_order(b);
        PowerSeries r(a.order());
        for (int n = 0; n <= a.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        return r;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.check_order(b);
        PowerSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    /* 1/this to the same truncation order; constant term must be nonzero.
     * b_0 = 1/a_0, b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}. */
    PowerSeries reciprocal() const {
        if (coeffs_[0].is_zero())
            throw std::domain_error("PowerSeries: reciprocal needs nonzero constant term");
        PowerSeries r(order());
        Rational inv0 = Rational(1) / coeffs_[0];
        r.coeffs_[0] = inv0;
        for (int n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (int k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
            r.coeffs_[n] = -inv0 * acc;
        }
        return r;
    }

    /* Substitute t -> c*t (coefficient n picks up c^n). */
    PowerSeries substitute_scaled(const Rational& c) const {
        PowerSeries r(order());
        Rational p(1);
        for (int n = 0; n <= order(); ++n) {
            r.coeffs_[n] = coeffs_[n] * p;
            p *= c;
        }
        return r;
    }

    PowerSeries scaled(const Rational& c) const {
        PowerSeries r(order());
        for (int n = 0; n <= order(); ++n) r.coeffs_[n] = coeffs_[n] * c;
        return r;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    std::string to_text(const std::string& var = "t") const;

private:
    void check_order(const PowerSeries& o) const {
        if (o.coeffs_.size() != coeffs_.size())
            throw std::domain_error("PowerSeries: mixed truncation orders");
    }

    std::vector<Rational> coeffs_;
};

}  // namespace simcore
