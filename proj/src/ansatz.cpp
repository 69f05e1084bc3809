#include "simcore/ansatz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "simcore/linsolve.hpp"

namespace simcore {

std::vector<CorePair> fit_pair_schedule(FitMode mode, std::size_t count) {
    std::vector<CorePair> out;
    if (mode == FitMode::UnivariateTEqSPlus1) {
        for (long long s = 1; out.size() < count; ++s) out.push_back({s, s + 1});
        return out;
    }
    for (long long n = 3; out.size() < count; ++n)
        for (long long s = 1; 2 * s < n && out.size() < count; ++s) {
            long long t = n - s;
            if (std::gcd(s, t) == 1) out.push_back({s, t});
        }
    return out;
}

Rational moment_statistic(int r, const CorePair& c, Engine engine) {
    if (r < 1) throw std::invalid_argument("moment order must be at least 1");
    MomentSet m = core_moments(c, r, engine);
    return r == 1 ? m.mean() : m.central.at(r);
}

namespace {

/* Basis monomials as (s-degree, t-degree, mirrored) with mirrored marking the
 * symmetrized companion term s^td t^sd. */
struct BasisElem {
    long long sd = 0;
    long long td = 0;
    bool mirrored = false;

    Rational evaluate(const CorePair& c) const {
        Rational v = Rational(c.s).pow(sd) * Rational(c.t).pow(td);
        if (mirrored) v += Rational(c.s).pow(td) * Rational(c.t).pow(sd);
        return v;
    }
};

std::vector<BasisElem> make_basis(const FitSpec& spec) {
    if (spec.degree < 0) throw std::invalid_argument("ansatz degree must be non-negative");
    std::vector<BasisElem> basis;
    if (spec.mode == FitMode::UnivariateTEqSPlus1) {
        for (long long a = 0; a <= spec.degree; ++a) basis.push_back({a, 0, false});
        return basis;
    }
    for (long long d = 0; d <= spec.degree; ++d)
        for (long long a = 0; a <= d; ++a) {
            long long b = d - a;
            if (spec.symmetric) {
                if (a > b) continue;
                basis.push_back({a, b, a != b});
            } else {
                basis.push_back({a, b, false});
            }
        }
    return basis;
}

}  // namespace

std::size_t fit_basis_size(const FitSpec& spec) { return make_basis(spec).size(); }

std::size_t fit_required_rows(const FitSpec& spec) {
    return (5 * fit_basis_size(spec) + 3) / 4;
}

FitOutcome fit_polynomial_with_data(const FitSpec& spec,
                                    const std::vector<CorePair>& pairs,
                                    const std::vector<Rational>& values) {
    if (pairs.size() != values.size())
        throw std::invalid_argument("fit: one value per pair required");
    if (spec.mode == FitMode::UnivariateTEqSPlus1)
        for (const CorePair& c : pairs)
            if (c.t != c.s + 1)
                throw std::invalid_argument("fit: univariate mode needs t = s + 1 pairs");

    std::vector<BasisElem> basis = make_basis(spec);
    const std::size_t cols = basis.size();
    const std::size_t required = (5 * cols + 3) / 4;
    if (pairs.size() < required)
        throw InsufficientDataError("insufficient data: degree " +
                                    std::to_string(spec.degree) + " needs " +
                                    std::to_string(required) + " pairs, got " +
                                    std::to_string(pairs.size()));

    FitOutcome out;
    out.pairs = pairs;
    out.rows = pairs.size();
    out.columns = cols;

    std::vector<std::vector<Rational>> matrix(out.rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < out.rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) matrix[i][j] = basis[j].evaluate(pairs[i]);

    LinearSolveResult sol;
    try {
        sol = solve_linear_exact(matrix, values);
    } catch (const std::domain_error&) {
        throw InsufficientDataError("insufficient data: the supplied pairs do not "
                                    "determine a degree " + std::to_string(spec.degree) +
                                    " ansatz (rank deficiency)");
    }
    if (sol.status == LinearSolveResult::Status::Inconsistent) {
        const CorePair& bad = pairs.at(sol.violated_row);
        throw AnsatzViolatedError("ansatz violated at degree bound " +
                                  std::to_string(spec.degree) + ": pair (" +
                                  std::to_string(bad.s) + "," + std::to_string(bad.t) +
                                  ") is off the fitted polynomial");
    }

    for (std::size_t j = 0; j < cols; ++j) {
        out.polynomial.add_term(basis[j].sd, basis[j].td, sol.solution[j]);
        if (basis[j].mirrored) out.polynomial.add_term(basis[j].td, basis[j].sd, sol.solution[j]);
    }

    out.residuals_zero = true;
    for (std::size_t i = 0; i < out.rows; ++i)
        if (out.polynomial.evaluate(Rational(pairs[i].s), Rational(pairs[i].t)) != values[i])
            out.residuals_zero = false;
    if (!out.residuals_zero)
        throw std::logic_error("fit residual check failed after a consistent solve");
    return out;
}

FitOutcome fit_polynomial(const FitSpec& spec) {
    const std::size_t required = fit_required_rows(spec);
    std::size_t rows = required;
    if (spec.max_pairs != 0) {
        if (spec.max_pairs < required)
            throw InsufficientDataError(
                "insufficient data: degree " + std::to_string(spec.degree) + " needs " +
                std::to_string(required) + " pairs, only " +
                std::to_string(spec.max_pairs) + " allowed");
        rows = spec.max_pairs;
    }
    std::vector<CorePair> pairs;
    std::vector<Rational> values;
    for (int attempt = 0;; ++attempt) {
        pairs = fit_pair_schedule(spec.mode, rows);
        for (std::size_t i = values.size(); i < pairs.size(); ++i)
            values.push_back(moment_statistic(spec.r, pairs[i], spec.engine));
        try {
            return fit_polynomial_with_data(spec, pairs, values);
        } catch (const InsufficientDataError&) {
            if (spec.max_pairs != 0 || attempt >= 8) throw;
            rows += std::max<std::size_t>(8, rows / 2);
        }
    }
}

}  // namespace simcore
