#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "simcore/rational.hpp"

namespace simcore {

/* Sparse polynomial in s and t with rational coefficients,
 * (s-degree, t-degree) -> nonzero coefficient. */
class BivariatePolynomial {
public:
    using Key = std::pair<long long, long long>;
    using Terms = std::map<Key, Rational>;

    BivariatePolynomial() = default;
    static BivariatePolynomial monomial(const Rational& c, long long sd, long long td) {
        BivariatePolynomial p;
        p.add_term(sd, td, c);
        return p;
    }
    static BivariatePolynomial constant(const Rational& c) { return monomial(c, 0, 0); }

    /* Parses expanded integer-coefficient text such as
     * "46*s^6*t^3+138*s^5*t^4-180*t^6+120"; "**" is accepted for "^",
     * whitespace and newlines are ignored. */
    static BivariatePolynomial parse(const std::string& text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long long sd, long long td, const Rational& c) {
        if (sd < 0 || td < 0)
            throw std::domain_error("BivariatePolynomial: negative degree");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(Key{sd, td}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a += b;
    }
    friend BivariatePolynomial operator-(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b) {
        BivariatePolynomial r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }

    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b) {
        BivariatePolynomial r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    BivariatePolynomial scaled(const Rational& c) const {
        BivariatePolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }

    Rational evaluate(const Rational& s, const Rational& t) const {
        Rational acc(0);
        for (const auto& [k, c] : terms_) acc += c * s.pow(k.first) * t.pow(k.second);
        return acc;
    }

    /* Substitute t = s + c; result is univariate in s (all t-degrees 0). */
    BivariatePolynomial substitute_t_s_plus(long long c) const {
        BivariatePolynomial r;
        const Rational cr(c);
        for (const auto& [k, coef] : terms_)
            for (long long j = 0; j <= k.second; ++j) {
                Rational bin = binomial(Integer(static_cast<long>(k.second)),
                                        static_cast<unsigned long>(j));
                r.add_term(k.first + j, 0, coef * bin * cr.pow(k.second - j));
            }
        return r;
    }

    long long degree_in_s() const {
        long long d = -1;
        for (const auto& [k, c] : terms_)
            if (k.first > d) d = k.first;
        return d;
    }
    /* Leading coefficient in s of a univariate-in-s polynomial. */
    Rational leading_coeff_in_s() const {
        long long d = degree_in_s();
        Rational lead(0);
        for (const auto& [k, c] : terms_)
            if (k.first == d) {
                if (k.second != 0)
                    throw std::domain_error("leading_coeff_in_s: polynomial not univariate");
                lead = c;
            }
        return lead;
    }

    bool is_symmetric() const {
        for (const auto& [k, c] : terms_) {
            auto it = terms_.find(Key{k.second, k.first});
            if (it == terms_.end() || it->second != c) return false;
        }
        return true;
    }

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return !(a == b);
    }

    std::string to_text() const;

private:
    Terms terms_;
};

}  // namespace simcore
