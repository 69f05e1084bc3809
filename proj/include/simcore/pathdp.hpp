#pragma once

#include <map>
#include <string>
#include <vector>

#include "simcore/cores.hpp"
#include "simcore/qpoly.hpp"

namespace simcore {

/* The lattice-path model: paths from (0,0) to (u,v) with unit right/up steps,
 * staying weakly on or above the line u*y - v*x = 0.  A vertical step leaving
 * (i,j) carries the weight
 *     Wt(i,j) = q^E w^K,  over labels { u*j - v*i' - b : i' >= i, label > 0 },
 * E the label sum and K the label count.  The labels collected along a path
 * are the first-column hook lengths of the matching (s,t)-core, so after the
 * umbral shift w^k -> q^{-k(k-1)/2} the terminal polynomial enumerates cores
 * by size.
 *
 * The offset b and the axis roles are fixed empirically by
 * calibrate_conventions against the enumeration oracle. */

enum class Orientation { AsWritten, Transposed };

enum class OffsetExpr { Zero, One, S, T, SPlusT, SPlusTPlus1 };

struct Convention {
    OffsetExpr offset = OffsetExpr::T;
    Orientation orientation = Orientation::AsWritten;

    friend bool operator==(const Convention& a, const Convention& b) {
        return a.offset == b.offset && a.orientation == b.orientation;
    }
};

/* The calibrated convention used by every production entry point. */
Convention default_convention();

std::string offset_expr_name(OffsetExpr e);
std::string orientation_name(Orientation o);
long long offset_value(OffsetExpr e, const CorePair& c);

/* Per-pair resolved configuration: (u,v) are the axis lengths after applying
 * the orientation, offset_b the resolved integer offset. */
struct DPConfig {
    CorePair pair;
    long long u = 0;
    long long v = 0;
    long long offset_b = 0;
    Orientation orientation = Orientation::AsWritten;
};

DPConfig make_dp_config(const CorePair& c, const Convention& conv = default_convention());

/* Wt(i,j) of the model; pre: 0 <= i <= u, 0 <= j <= v. */
QWPolynomial step_weight(const DPConfig& cfg, long long i, long long j);

/* Terminal corner value F(u,v) of the weighted path recurrence
 * F(i,j) = F(i-1,j) + Wt(i,j-1) F(i,j-1), F(0,0) = 1, zero below the line. */
QWPolynomial weight_enumerator(const DPConfig& cfg);

/* Full table for inspection/tests (memory grows with the whole grid). */
struct DPTable {
    DPConfig config;
    std::map<std::pair<long long, long long>, QWPolynomial> cells;
};
DPTable weight_enumerator_table(const DPConfig& cfg);

/* w^k -> q^{-k(k-1)/2} applied termwise. */
QPolynomial umbral_substitute(const QWPolynomial& f);

/* Every term must satisfy q-exponent >= k(k-1)/2 for w-degree k, so the
 * umbral image is an honest polynomial (no negative exponents). */
bool umbral_polynomiality_ok(const QWPolynomial& f);

/* sum_n (#(s,t)-cores of size n) q^n via the path DP. */
QPolynomial size_generating_polynomial(const CorePair& c,
                                       const Convention& conv = default_convention());

/* Fast path for moment extraction: carries order-R jets around q = 1
 * (coefficients of (q-1)^0..(q-1)^R) per w-degree instead of whole
 * polynomials.  raw[r] = r-th raw moment of the size distribution; count is
 * the total number of cores.  Must be kept validated against the full
 * polynomial route (see tests) before being trusted at larger sizes. */
struct JetMoments {
    Integer count;
    std::vector<Rational> raw;  // indices 0..R, raw[0] = 1
};
JetMoments jet_moments(const CorePair& c, int max_order,
                       const Convention& conv = default_convention());

/* Calibration of the model conventions against the enumeration oracle. */
struct CalibrationResult {
    Convention convention;
    std::vector<CorePair> pairs_checked;
};

/* Tries every candidate offset with both orientations on all coprime pairs
 * with s < t <= max_t and returns the unique match.  Candidates must include
 * at least {0, 1, s, t, s+t, s+t+1}.  Matching configurations that are exact
 * mirror images of each other (axes relabeled, offset expression with s and t
 * exchanged) define the same polynomial for every pair and count as one; the
 * AsWritten representative is returned.  No match, or matches that are not
 * mirror-equivalent, throw std::runtime_error. */
CalibrationResult calibrate_conventions(
    const std::vector<OffsetExpr>& candidates = {OffsetExpr::Zero, OffsetExpr::One,
                                                 OffsetExpr::S, OffsetExpr::T,
                                                 OffsetExpr::SPlusT, OffsetExpr::SPlusTPlus1},
    long long max_t = 8);

}  // namespace simcore
