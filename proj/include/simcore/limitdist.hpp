#pragma once

#include <vector>

#include "simcore/radical.hpp"
#include "simcore/series.hpp"

namespace simcore {

/* Moments of the limit random variable Z = sum_k (z_k^2 + zbar_k^2) /
 * (4 pi^2 k^2) over independent standard normals, whose moment generating
 * function is sqrt(t/2)/sin(sqrt(t/2)). */

/* MGF of z^2 for one standard normal z, two ways to the same truncated
 * series: moments (2r)!/(2^r r!) assembled as sum m_r t^r / r!, and the
 * binomial expansion of (1-2t)^(-1/2).  Throws std::logic_error if the two
 * constructions ever disagree; returns the series. */
PowerSeries chi_square_mgf_check(int order);

/* sqrt(t/2)/sin(sqrt(t/2)) as a power series in t: the reciprocal of
 * sin(x)/x = sum (-1)^n x^(2n)/(2n+1)! with x^2 = t/2. */
PowerSeries z_mgf_series(int order);

struct ZMoments {
    int max_order = 0;
    std::vector<Rational> raw;      // raw[k] = E[Z^k] = k! * [t^k] MGF
    std::vector<Rational> central;
    std::vector<Radical> standardized;  // standardized[k] valid for k >= 3
};
ZMoments z_moments(int max_order);

struct LimitComparisonRow {
    int r = 0;
    Radical combinatorial;  // limit of alpha_r of the (s,s+1) size statistics
    Radical distributional; // alpha_r of Z
    bool match = false;
};
struct LimitComparison {
    std::vector<LimitComparisonRow> rows;  // r = 3..max_order
    bool all_match = true;
};

/* Exact comparison of the two alpha_r routes for r = 3..max_order;
 * max_order is capped at 9 (no closed forms beyond the ninth moment). */
LimitComparison compare_limits(int max_order);

}  // namespace simcore
