#include "simcore/pathdp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simcore {

Convention default_convention() { return Convention{OffsetExpr::T, Orientation::AsWritten}; }

std::string offset_expr_name(OffsetExpr e) {
    switch (e) {
        case OffsetExpr::Zero: return "0";
        case OffsetExpr::One: return "1";
        case OffsetExpr::S: return "s";
        case OffsetExpr::T: return "t";
        case OffsetExpr::SPlusT: return "s+t";
        case OffsetExpr::SPlusTPlus1: return "s+t+1";
    }
    throw std::logic_error("offset_expr_name: bad enum");
}

std::string orientation_name(Orientation o) {
    return o == Orientation::AsWritten ? "as_written" : "transposed";
}

long long offset_value(OffsetExpr e, const CorePair& c) {
    switch (e) {
        case OffsetExpr::Zero: return 0;
        case OffsetExpr::One: return 1;
        case OffsetExpr::S: return c.s;
        case OffsetExpr::T: return c.t;
        case OffsetExpr::SPlusT: return c.s + c.t;
        case OffsetExpr::SPlusTPlus1: return c.s + c.t + 1;
    }
    throw std::logic_error("offset_value: bad enum");
}

DPConfig make_dp_config(const CorePair& c, const Convention& conv) {
    require_valid(c);
    DPConfig cfg;
    cfg.pair = c;
    cfg.orientation = conv.orientation;
    cfg.offset_b = offset_value(conv.offset, c);
    if (conv.orientation == Orientation::AsWritten) {
        cfg.u = c.s;
        cfg.v = c.t;
    } else {
        cfg.u = c.t;
        cfg.v = c.s;
    }
    return cfg;
}

namespace {

/* Label run of Wt(i,j): labels u*j - v*i' - b for i' = i, i+1, ... while
 * positive.  Returns (E, K) = (label sum, label count). */
std::pair<long long, long long> step_exponents(const DPConfig& cfg, long long i, long long j) {
    const long long top = cfg.u * j - cfg.offset_b;  // label at i' = 0
    // positive labels need v*i' < top, i.e. i' <= ceil(top/v) - 1
    long long hi = (top <= 0) ? -1 : (top - 1) / cfg.v;  // largest i' with a positive label
    if (hi < i) return {0, 0};
    const long long k = hi - i + 1;
    // sum_{i'=i..hi} (top - v*i') = k*top - v*(i+hi)*k/2
    const long long e = k * top - cfg.v * (i + hi) * k / 2;
    return {e, k};
}

long long j_min(const DPConfig& cfg, long long i) {
    // smallest j with u*j - v*i >= 0
    return (cfg.v * i + cfg.u - 1) / cfg.u;
}

}  // namespace

QWPolynomial step_weight(const DPConfig& cfg, long long i, long long j) {
    if (i < 0 || i > cfg.u || j < 0 || j > cfg.v)
        throw std::invalid_argument("step_weight: point outside the grid");
    auto [e, k] = step_exponents(cfg, i, j);
    return QWPolynomial::monomial(Rational(1), e, k);
}

QWPolynomial weight_enumerator(const DPConfig& cfg) {
    /* March column by column keeping only the previous column (the frontier);
     * within a column only points on or above the boundary line exist. */
    std::vector<QWPolynomial> prev, cur;
    for (long long i = 0; i <= cfg.u; ++i) {
        cur.assign(cfg.v + 1, QWPolynomial{});
        const long long lo = j_min(cfg, i);
        for (long long j = lo; j <= cfg.v; ++j) {
            QWPolynomial cell;
            if (i == 0 && j == 0) cell = QWPolynomial::one();
            if (i > 0 && j >= j_min(cfg, i - 1)) cell += prev[j];
            if (j - 1 >= lo || (i == 0 && j - 1 >= 0)) {
                auto [e, k] = step_exponents(cfg, i, j - 1);
                QWPolynomial up = cur[j - 1];
                up.shift_scale(e, k, Rational(1));
                cell += up;
            }
            cur[j] = std::move(cell);
        }
        prev = std::move(cur);
    }
    return prev[cfg.v];
}

DPTable weight_enumerator_table(const DPConfig& cfg) {
    DPTable table;
    table.config = cfg;
    auto& cells = table.cells;
    for (long long i = 0; i <= cfg.u; ++i) {
        for (long long j = j_min(cfg, i); j <= cfg.v; ++j) {
            QWPolynomial cell;
            if (i == 0 && j == 0) cell = QWPolynomial::one();
            if (auto it = cells.find({i - 1, j}); it != cells.end()) cell += it->second;
            if (auto it = cells.find({i, j - 1}); it != cells.end()) {
                auto [e, k] = step_exponents(cfg, i, j - 1);
                QWPolynomial up = it->second;
                up.shift_scale(e, k, Rational(1));
                cell += up;
            }
            cells.emplace(std::make_pair(i, j), std::move(cell));
        }
    }
    return table;
}

QPolynomial umbral_substitute(const QWPolynomial& f) {
    QPolynomial out;
    for (const auto& [key, c] : f.terms()) {
        const long long k = key.second;
        out.add_term(checked_add(key.first, -(k * (k - 1) / 2)), c);
    }
    return out;
}

bool umbral_polynomiality_ok(const QWPolynomial& f) {
    for (const auto& [key, c] : f.terms())
        if (key.first < key.second * (key.second - 1) / 2) return false;
    return true;
}

QPolynomial size_generating_polynomial(const CorePair& c, const Convention& conv) {
    return umbral_substitute(weight_enumerator(make_dp_config(c, conv)));
}

namespace {

/* Truncated Taylor coefficients of (1+x)^n around x = 0: C(n, 0..R).
 * n may be negative (the umbral shift). */
std::vector<Integer> binomial_jet(long long n, int R) {
    std::vector<Integer> out(R + 1);
    Integer nn(static_cast<long>(n));
    for (int r = 0; r <= R; ++r) mpz_bin_ui(out[r].get_mpz_t(), nn.get_mpz_t(), r);
    return out;
}

using Jet = std::vector<Integer>;  // length R+1, may be empty meaning zero

void jet_add(Jet& a, const Jet& b) {
    if (b.empty()) return;
    if (a.empty()) {
        a = b;
        return;
    }
    for (size_t r = 0; r < a.size(); ++r) a[r] += b[r];
}

/* a += binjet * b (truncated product). */
void jet_add_mul(Jet& a, const std::vector<Integer>& binjet, const Jet& b, int R) {
    if (b.empty()) return;
    if (a.empty()) a.assign(R + 1, Integer(0));
    for (int p = 0; p <= R; ++p) {
        if (b[p] == 0) continue;
        for (int r = p; r <= R; ++r) a[r] += b[p] * binjet[r - p];
    }
    // binjet[0] is always 1, so the product is b shifted-and-scaled; indices
    // above use binjet[r-p] with r-p <= R by construction.
}

/* Stirling numbers of the second kind S(r, j) for r, j <= R. */
std::vector<std::vector<Integer>> stirling2(int R) {
    std::vector<std::vector<Integer>> S(R + 1, std::vector<Integer>(R + 1, Integer(0)));
    S[0][0] = 1;
    for (int r = 1; r <= R; ++r)
        for (int j = 1; j <= r; ++j)
            S[r][j] = Integer(static_cast<long>(j)) * S[r - 1][j] + S[r - 1][j - 1];
    return S;
}

}  // namespace

JetMoments jet_moments(const CorePair& c, int max_order, const Convention& conv) {
    if (max_order < 0) throw std::invalid_argument("jet_moments: negative order");
    const DPConfig cfg = make_dp_config(c, conv);
    const int R = max_order;

    /* Cell state: per w-degree k, the jet of the coefficient polynomial of
     * w^k around q = 1.  A right step copies the state; an up step multiplies
     * by q^E w^K, i.e. shifts k by K and multiplies jets by C(E, .). */
    using Cell = std::vector<Jet>;  // index = w-degree
    std::vector<Cell> prev, cur;
    for (long long i = 0; i <= cfg.u; ++i) {
        cur.assign(cfg.v + 1, Cell{});
        const long long lo = j_min(cfg, i);
        for (long long j = lo; j <= cfg.v; ++j) {
            Cell cell;
            if (i == 0 && j == 0) cell.assign(1, Jet(R + 1, Integer(0))), cell[0][0] = 1;
            if (i > 0 && j >= j_min(cfg, i - 1)) {
                const Cell& src = prev[j];
                if (cell.size() < src.size()) cell.resize(src.size());
                for (size_t k = 0; k < src.size(); ++k) jet_add(cell[k], src[k]);
            }
            if (j - 1 >= lo || (i == 0 && j - 1 >= 0)) {
                auto [e, k] = step_exponents(cfg, i, j - 1);
                const Cell& src = cur[j - 1];
                if (!src.empty()) {
                    const std::vector<Integer> binjet = binomial_jet(e, R);
                    if (cell.size() < src.size() + k) cell.resize(src.size() + k);
                    for (size_t kk = 0; kk < src.size(); ++kk)
                        jet_add_mul(cell[kk + k], binjet, src[kk], R);
                }
            }
            cur[j] = std::move(cell);
        }
        prev = std::move(cur);
    }

    /* Umbral shift per w-degree, then sum: jets of q^{-k(k-1)/2} are
     * C(-k(k-1)/2, .). */
    const Cell& terminal = prev[cfg.v];
    Jet total(R + 1, Integer(0));
    for (size_t k = 0; k < terminal.size(); ++k) {
        if (terminal[k].empty()) continue;
        const long long shift = -(static_cast<long long>(k) * (static_cast<long long>(k) - 1) / 2);
        const std::vector<Integer> binjet = binomial_jet(shift, R);
        Jet tmp;
        jet_add_mul(tmp, binjet, terminal[k], R);
        jet_add(total, tmp);
    }

    /* total[r] = sum_n c_n C(n, r); convert falling-factorial moments to raw
     * power moments with Stirling numbers: n^r = sum_j S(r,j) j! C(n,j). */
    JetMoments out;
    out.count = total[0];
    if (out.count == 0) throw std::logic_error("jet_moments: empty distribution");
    const auto S = stirling2(R);
    out.raw.assign(R + 1, Rational(0));
    for (int r = 0; r <= R; ++r) {
        Integer acc(0);
        for (int j = 0; j <= r; ++j) acc += S[r][j] * factorial(j) * total[j];
        out.raw[r] = Rational(acc, out.count);
    }
    return out;
}

namespace {

OffsetExpr mirror_offset(OffsetExpr e) {
    switch (e) {
        case OffsetExpr::S: return OffsetExpr::T;
        case OffsetExpr::T: return OffsetExpr::S;
        default: return e;
    }
}

Convention mirror(const Convention& c) {
    return Convention{mirror_offset(c.offset),
                      c.orientation == Orientation::AsWritten ? Orientation::Transposed
                                                              : Orientation::AsWritten};
}

std::string convention_name(const Convention& c) {
    return "offset_b=" + offset_expr_name(c.offset) + ", " + orientation_name(c.orientation);
}

}  // namespace

CalibrationResult calibrate_conventions(const std::vector<OffsetExpr>& candidates,
                                        long long max_t) {
    for (OffsetExpr required :
         {OffsetExpr::Zero, OffsetExpr::One, OffsetExpr::S, OffsetExpr::T, OffsetExpr::SPlusT,
          OffsetExpr::SPlusTPlus1})
        if (std::find(candidates.begin(), candidates.end(), required) == candidates.end())
            throw std::invalid_argument(
                "calibrate_conventions: candidate offsets must include 0, 1, s, t, s+t, s+t+1");

    std::vector<CorePair> pairs;
    for (long long s = 1; s <= max_t; ++s)
        for (long long t = s + 1; t <= max_t; ++t)
            if (std::gcd(s, t) == 1) pairs.push_back(CorePair{s, t});

    std::vector<std::pair<QPolynomial, CorePair>> oracle;
    oracle.reserve(pairs.size());
    for (const CorePair& p : pairs) oracle.emplace_back(oracle_generating_polynomial(p), p);

    std::vector<Convention> matches;
    std::string diff_report;
    for (OffsetExpr e : candidates) {
        for (Orientation o : {Orientation::AsWritten, Orientation::Transposed}) {
            const Convention conv{e, o};
            bool ok = true;
            for (const auto& [expected, p] : oracle) {
                QPolynomial got = size_generating_polynomial(p, conv);
                if (got != expected) {
                    diff_report += "  " + convention_name(conv) + ": first mismatch at (" +
                                   std::to_string(p.s) + "," + std::to_string(p.t) +
                                   "): got " + got.to_text() + ", expected " +
                                   expected.to_text() + "\n";
                    ok = false;
                    break;
                }
            }
            if (ok) matches.push_back(conv);
        }
    }

    if (matches.empty())
        throw std::runtime_error(
            "calibrate_conventions: no candidate convention reproduces the enumeration "
            "oracle; per-candidate diffs:\n" + diff_report);

    /* Collapse mirror images: they define the same polynomial for every pair
     * by relabeling the axes. */
    std::vector<Convention> classes;
    for (const Convention& m : matches) {
        bool seen = false;
        for (const Convention& c : classes)
            if (m == c || m == mirror(c)) seen = true;
        if (!seen) classes.push_back(m);
    }
    if (classes.size() > 1) {
        std::string names;
        for (const Convention& c : classes) names += "  " + convention_name(c) + "\n";
        throw std::runtime_error(
            "calibrate_conventions: multiple inequivalent conventions match all test "
            "pairs; enlarge the test range:\n" + names);
    }

    Convention canonical = classes[0];
    if (canonical.orientation == Orientation::Transposed) {
        const Convention m = mirror(canonical);
        if (std::find(matches.begin(), matches.end(), m) != matches.end()) canonical = m;
    }
    return CalibrationResult{canonical, pairs};
}

}  // namespace simcore
