#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simcore {

using Integer = mpz_class;

/* Arbitrary-precision rational kept in lowest terms with a positive
 * denominator; zero is canonically 0/1.  Thin wrapper over mpq_class so the
 * invariants hold by construction and division by zero throws instead of
 * trapping. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long long num, long long den)
        : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    /* Accepts "n" or "n/d" in base 10. */
    explicit Rational(const std::string& s) {
        if (s.empty() || mpq_set_str(v_.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /* Integer exponent; negative exponents invert (error on zero base). */
    Rational pow(long long e) const {
        if (e == 0) return Rational(1);
        if (v_ == 0) {
            if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
            return Rational(0);
        }
        Rational base = *this;
        unsigned long long n = static_cast<unsigned long long>(e < 0 ? -e : e);
        Rational acc(1);
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        if (e < 0) return Rational(1) / acc;
        return acc;
    }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/* Binomial coefficient with arbitrary (possibly negative) integer top. */
inline Rational binomial(const Integer& n, unsigned long k) {
    Rational r(1);
    for (unsigned long i = 0; i < k; ++i)
        r *= Rational(n - static_cast<long>(i), Integer(static_cast<long>(i + 1)));
    return r;
}

inline Integer binomial_uu(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/* n = square_part^2 * squarefree_part, n >= 0.  Trial division; cofactors
 * beyond the small-prime range are accepted only if they are perfect squares
 * or plausibly squarefree (all values in scope are tiny). */
struct SquareSplit {
    Integer square_part;
    Integer squarefree_part;
};

inline SquareSplit split_square(Integer n) {
    if (n < 0) throw std::domain_error("split_square: negative argument");
    SquareSplit out{1, 1};
    if (n == 0) {
        out.squarefree_part = 0;
        return out;
    }
    Integer p = 2;
    const Integer limit = 1000000;
    while (p <= limit && p * p <= n) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            for (unsigned i = 0; i + 1 < e; i += 2) out.square_part *= p;
            if (e % 2) out.squarefree_part *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            out.square_part *= r;
        } else if (n > limit * limit) {
            throw std::domain_error("split_square: radicand too large to normalize");
        } else {
            out.squarefree_part *= n;  // below limit^2 with no small factor: squarefree
        }
    }
    return out;
}

}  // namespace simcore
