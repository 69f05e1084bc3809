#pragma once

#include <cstddef>
#include <vector>

#include "simcore/rational.hpp"

namespace simcore {

/* Outcome of solving an overdetermined exact linear system A x = b.
 * Inconsistent systems are a reportable result (not an exception) so callers
 * can surface which data point broke a fit; rank deficiency throws. */
struct LinearSolveResult {
    enum class Status { Solved, Inconsistent };
    Status status = Status::Solved;
    std::vector<Rational> solution;   // valid when Solved
    std::size_t violated_row = 0;     // original row index, valid when Inconsistent
};

/* Gaussian elimination over the rationals.  rows.size() >= columns; every row
 * (including the ones beyond the pivot set) is checked against the candidate
 * solution.  Pivots are chosen with the smallest numerator+denominator bit
 * size to limit coefficient growth; correctness does not depend on the
 * choice.  Throws std::domain_error when the column rank is deficient. */
LinearSolveResult solve_linear_exact(std::vector<std::vector<Rational>> rows,
                                     std::vector<Rational> rhs);

}  // namespace simcore
