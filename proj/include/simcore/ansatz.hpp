#pragma once

#include <cstddef>
#include <vector>

#include "simcore/bipoly.hpp"
#include "simcore/moments.hpp"

namespace simcore {

/* Rediscovery of the closed-form moment polynomials by exact interpolation:
 * postulate a polynomial ansatz of bounded total degree, evaluate the moment
 * on a deterministic schedule of pairs, and solve the exact linear system
 * with mandatory overdetermination (at least 5/4 of the basis size), so a
 * wrong degree bound surfaces as an inconsistent system instead of a bogus
 * fit. */

enum class FitMode {
    Bivariate,           // data on coprime (s,t), basis s^a t^b with a+b <= degree
    UnivariateTEqSPlus1  // data on (s,s+1), basis s^a with a <= degree
};

struct FitSpec {
    int r = 1;              // statistic: 1 = mean, k >= 2 = central moment m_k
    FitMode mode = FitMode::Bivariate;
    long long degree = 3;   // total degree bound of the ansatz
    bool symmetric = false; // restrict the bivariate basis to symmetric combinations
    std::size_t max_pairs = 0;  // 0 = exactly the required count; otherwise the
                                // schedule length (must cover the requirement)
    Engine engine = Engine::Jet;
};

/* First `count` data pairs in the canonical order: coprime s < t by
 * (s+t, s) ascending for Bivariate, (s, s+1) with s = 1, 2, ... for the
 * univariate mode. */
std::vector<CorePair> fit_pair_schedule(FitMode mode, std::size_t count);

/* The fitted statistic for one pair: mean for r = 1, central moment m_r
 * otherwise. */
Rational moment_statistic(int r, const CorePair& c, Engine engine = Engine::Jet);

std::size_t fit_basis_size(const FitSpec& spec);
/* ceil(5/4 * basis size): the minimum number of data points accepted. */
std::size_t fit_required_rows(const FitSpec& spec);

/* Too few points, or points that fail to pin down the basis (rank
 * deficiency — e.g. every supplied pair lies on one degree-D curve). */
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/* Consistent rank, but some data point is off every polynomial of the
 * postulated degree: the ansatz itself is wrong. */
struct AnsatzViolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FitOutcome {
    BivariatePolynomial polynomial;
    std::size_t rows = 0;       // data points used
    std::size_t columns = 0;    // basis size
    std::vector<CorePair> pairs;
    bool residuals_zero = false;  // explicit re-evaluation check
};

/* Fits values[i] = statistic at pairs[i].  Throws InsufficientDataError when
 * fewer than fit_required_rows points are supplied or the points leave the
 * basis underdetermined, AnsatzViolatedError (naming the offending pair)
 * when the system is inconsistent. */
FitOutcome fit_polynomial_with_data(const FitSpec& spec,
                                    const std::vector<CorePair>& pairs,
                                    const std::vector<Rational>& values);

/* Convenience driver: takes the canonical schedule and computes the
 * statistics itself.  With max_pairs = 0 it starts at the required minimum
 * and extends the schedule when the points happen to be rank-deficient (a
 * short prefix can lie on a single degree-D curve); an explicit max_pairs
 * pins the budget, so rank deficiency surfaces as InsufficientDataError. */
FitOutcome fit_polynomial(const FitSpec& spec);

}  // namespace simcore
