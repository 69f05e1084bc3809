#pragma once

#include <cmath>

#include "simcore/rational.hpp"

namespace simcore {

/* Exact value coeff * sqrt(radicand) with radicand a squarefree non-negative
 * integer.  radicand == 1 encodes a pure rational; coeff == 0 forces
 * radicand == 1, so equality is plain field comparison. */
class Radical {
public:
    Radical() : coeff_(0), radicand_(1) {}
    Radical(const Rational& r) : coeff_(r), radicand_(1) {}
    Radical(const Rational& coeff, const Integer& radicand_raw) : coeff_(coeff) {
        SquareSplit sp = split_square(radicand_raw);
        if (sp.squarefree_part == 0) {
            coeff_ = Rational(0);
            radicand_ = 1;
            return;
        }
        coeff_ *= Rational(sp.square_part);
        radicand_ = sp.squarefree_part;
        if (coeff_.is_zero()) radicand_ = 1;
    }

    const Rational& coeff() const { return coeff_; }
    const Integer& radicand() const { return radicand_; }
    bool is_rational() const { return radicand_ == 1; }

    Rational square() const { return coeff_ * coeff_ * Rational(radicand_); }

    friend bool operator==(const Radical& a, const Radical& b) {
        return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
    }
    friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

    Radical operator*(const Rational& r) const {
        Radical out;
        out.coeff_ = coeff_ * r;
        out.radicand_ = out.coeff_.is_zero() ? Integer(1) : radicand_;
        return out;
    }

    std::string to_string() const {
        if (is_rational()) return coeff_.to_string();
        if (coeff_ == Rational(1)) return "sqrt(" + radicand_.get_str() + ")";
        if (coeff_ == Rational(-1)) return "-sqrt(" + radicand_.get_str() + ")";
        return coeff_.to_string() + "*sqrt(" + radicand_.get_str() + ")";
    }
    double to_double() const {
        return coeff_.to_double() * std::sqrt(radicand_.get_d());
    }

    /* m_k / m_2^(k/2) as an exact radical; m_2 must be positive.  Even k stays
     * rational; odd k carries sqrt(squarefree part of num(m_2)*den(m_2)). */
    static Radical standardized(const Rational& mk, const Rational& m2, int k) {
        if (!(m2 > Rational(0)))
            throw std::domain_error("standardized moment needs positive variance");
        if (k % 2 == 0) return Radical(mk / m2.pow(k / 2));
        // 1/sqrt(m2) = sqrt(p*q)/p with m2 = p/q in lowest terms.
        Integer p = m2.numerator(), q = m2.denominator();
        Rational base = mk / m2.pow((k - 1) / 2) / Rational(p);
        return Radical(base, p * q);
    }

private:
    Rational coeff_;
    Integer radicand_;
};

}  // namespace simcore
