#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "simcore/rational.hpp"

namespace simcore {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("polynomial exponent overflow");
    return r;
}

/* Sparse Laurent polynomial in q: exponent -> nonzero coefficient. */
class QPolynomial {
public:
    using Terms = std::map<long long, Rational>;

    QPolynomial() = default;
    static QPolynomial monomial(const Rational& c, long long e) {
        QPolynomial p;
        p.add_term(e, c);
        return p;
    }
    static QPolynomial one() { return monomial(Rational(1), 0); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long min_exponent() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
        return terms_.begin()->first;
    }
    long long max_exponent() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
        return terms_.rbegin()->first;
    }

    Rational coefficient(long long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(long long e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }

    QPolynomial operator-() const {
        QPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(checked_add(ea, eb), ca * cb);
        return r;
    }

    QPolynomial scaled(const Rational& c) const {
        QPolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    Rational evaluate(const Rational& q) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += c * q.pow(e);
        return acc;
    }
    /* Sum of coefficients; always defined, also for Laurent terms. */
    Rational value_at_one() const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += c;
        return acc;
    }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

    /* Canonical text: terms in ascending exponent, e.g. "1 + q + 2*q^2 - q^-1". */
    std::string to_text() const { return render_text("q"); }
    std::string render_text(const std::string& var) const;

private:
    Terms terms_;
};

/* Sparse polynomial in q (Laurent) and w (ordinary): (q-exp, w-exp) -> coeff. */
class QWPolynomial {
public:
    using Key = std::pair<long long, long long>;
    using Terms = std::map<Key, Rational>;

    QWPolynomial() = default;
    static QWPolynomial monomial(const Rational& c, long long qe, long long we) {
        QWPolynomial p;
        p.add_term(qe, we, c);
        return p;
    }
    static QWPolynomial one() { return monomial(Rational(1), 0, 0); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long long qe, long long we, const Rational& c) {
        if (we < 0) throw std::domain_error("QWPolynomial: negative w exponent");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(Key{qe, we}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    QWPolynomial& operator+=(const QWPolynomial& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    friend QWPolynomial operator+(QWPolynomial a, const QWPolynomial& b) { return a += b; }

    friend QWPolynomial operator*(const QWPolynomial& a, const QWPolynomial& b) {
        QWPolynomial r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(checked_add(ka.first, kb.first),
                           checked_add(ka.second, kb.second), ca * cb);
        return r;
    }

    /* Multiply in place by the monomial c * q^qe * w^we. */
    void shift_scale(long long qe, long long we, const Rational& c) {
        Terms out;
        if (!c.is_zero())
            for (const auto& [k, v] : terms_)
                out.emplace(Key{checked_add(k.first, qe), checked_add(k.second, we)}, v * c);
        terms_ = std::move(out);
    }

    Rational evaluate(const Rational& q, const Rational& w) const {
        Rational acc(0);
        for (const auto& [k, c] : terms_) acc += c * q.pow(k.first) * w.pow(k.second);
        return acc;
    }

    long long max_w_degree() const {
        long long m = 0;
        for (const auto& [k, c] : terms_)
            if (k.second > m) m = k.second;
        return m;
    }

    friend bool operator==(const QWPolynomial& a, const QWPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QWPolynomial& a, const QWPolynomial& b) { return !(a == b); }

    std::string to_text() const;

private:
    Terms terms_;
};

}  // namespace simcore
