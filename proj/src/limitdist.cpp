#include "simcore/limitdist.hpp"

#include <stdexcept>

#include "simcore/moments.hpp"

namespace simcore {

PowerSeries chi_square_mgf_check(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    // Route one: E[(z^2)^r] = (2r)!/(2^r r!), packed as sum m_r t^r / r!.
    std::vector<Rational> via_moments(order + 1);
    for (int r = 0; r <= order; ++r) {
        Rational mr = Rational(factorial(2 * r)) /
                      (Rational(Integer(1) << r) * Rational(factorial(r)));
        via_moments[r] = mr / Rational(factorial(r));
    }
    // Route two: binomial series of (1-2t)^(-1/2).
    std::vector<Rational> via_binomial(order + 1);
    Rational running(1);  // C(-1/2, r) accumulated one factor at a time
    for (int r = 0; r <= order; ++r) {
        via_binomial[r] = running * Rational(-2).pow(r);
        running *= (Rational(-1, 2) - Rational(r)) / Rational(r + 1);
    }
    PowerSeries a(order, via_moments), b(order, via_binomial);
    if (!(a == b))
        throw std::logic_error("chi-square MGF cross-check failed: " + a.to_text() +
                               " vs " + b.to_text());
    return a;
}

PowerSeries z_mgf_series(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    // sin(x)/x with u = x^2: sum (-1)^n u^n / (2n+1)!.
    std::vector<Rational> c(order + 1);
    for (int n = 0; n <= order; ++n) {
        Rational term = Rational(1) / Rational(factorial(2 * n + 1));
        c[n] = (n % 2 == 0) ? term : -term;
    }
    PowerSeries sinc(order, c);
    return sinc.reciprocal().substitute_scaled(Rational(1, 2));
}

ZMoments z_moments(int max_order) {
    if (max_order < 2) throw std::invalid_argument("need at least two moments");
    PowerSeries mgf = z_mgf_series(max_order);
    ZMoments zm;
    zm.max_order = max_order;
    zm.raw.resize(max_order + 1);
    for (int k = 0; k <= max_order; ++k)
        zm.raw[k] = mgf[k] * Rational(factorial(k));
    zm.central = central_from_raw(zm.raw);
    zm.standardized.resize(max_order + 1);
    for (int k = 3; k <= max_order; ++k)
        zm.standardized[k] = Radical::standardized(zm.central[k], zm.central[2], k);
    return zm;
}

LimitComparison compare_limits(int max_order) {
    if (max_order < 3 || max_order > 9)
        throw std::invalid_argument(
            "limit comparison covers orders 3 through 9 only");
    ZMoments zm = z_moments(max_order);
    LimitComparison cmp;
    for (int r = 3; r <= max_order; ++r) {
        LimitComparisonRow row;
        row.r = r;
        row.combinatorial = limiting_standardized_moment(r, 1);
        row.distributional = zm.standardized[r];
        row.match = (row.combinatorial == row.distributional);
        cmp.all_match = cmp.all_match && row.match;
        cmp.rows.push_back(row);
    }
    return cmp;
}

}  // namespace simcore
