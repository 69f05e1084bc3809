#pragma once

#include <vector>

#include "simcore/bipoly.hpp"
#include "simcore/cores.hpp"
#include "simcore/pathdp.hpp"
#include "simcore/qpoly.hpp"
#include "simcore/radical.hpp"

namespace simcore {

/* Exact moment data of a finite size distribution. */
struct MomentSet {
    Integer count = 0;                // number of partitions
    std::vector<Rational> raw;        // raw[r] = E[X^r], r = 0..max_order
    std::vector<Rational> central;    // central[r] = E[(X-mean)^r]
    int max_order = 0;

    Rational mean() const { return raw.at(1); }
    Rational variance() const { return central.at(2); }
    /* alpha_k = central[k] / variance^(k/2), exact radical; needs k >= 3 and
     * positive variance. */
    Radical standardized(int k) const;
};

/* f scaled so the coefficients sum to 1; f must be nonzero. */
QPolynomial probability_generating_function(const QPolynomial& f);

/* Raw moments of the distribution with weight c_n at n: sum n^r c_n / sum c_n.
 * Equivalent to applying (q d/dq)^r and evaluating at q = 1. */
std::vector<Rational> raw_moments(const QPolynomial& f, int max_order);

/* central[k] = sum_i C(k,i) (-mean)^(k-i) raw[i]. */
std::vector<Rational> central_from_raw(const std::vector<Rational>& raw);

/* Inverse transform; round-trips with central_from_raw given the mean. */
std::vector<Rational> raw_from_central(const std::vector<Rational>& central,
                                       const Rational& mean);

enum class Engine { Full, Jet };

/* Moment data for the (s,t)-core size distribution.  Full builds the whole
 * generating polynomial; Jet uses the order-R expansion around q = 1. */
MomentSet core_moments(const CorePair& c, int max_order, Engine engine = Engine::Jet,
                       const Convention& conv = default_convention());

MomentSet moments_from_polynomial(const QPolynomial& f, int max_order);

/* Closed forms for the size statistics, id = 1..9: id 1 the mean, ids 2..6
 * the central moments m_2..m_6 as symmetric polynomials in (s,t), ids 7..9
 * the central moments m_7..m_9 of the (s,s+1) case as polynomials in s.
 * Built once from embedded factored text and self-checked against small
 * reference values before first use. */
const BivariatePolynomial& theorem_polynomial(int id);

Rational theorem_value(int id, const CorePair& c);

struct VerifyRow {
    CorePair pair;
    Rational expected;  // theorem value
    Rational actual;    // DP value
    bool match = false;
};
struct VerifyResult {
    int id = 0;
    std::vector<VerifyRow> rows;
    bool all_match = true;
};

/* Compares the DP moment (mean for id 1, central m_id otherwise) against the
 * closed form on each pair; ids 7..9 require t = s+1. */
VerifyResult verify_theorem(int id, const std::vector<CorePair>& pairs,
                            Engine engine = Engine::Jet);

/* lim_{s->inf} alpha_r along t = s + diff_c: the ratio of leading
 * coefficients L_r / L_2^(r/2) in s after substituting t = s + diff_c.
 * r = 3..6 for any diff_c >= 1; r = 7..9 only for diff_c = 1. */
Radical limiting_standardized_moment(int r, long long diff_c);

}  // namespace simcore
