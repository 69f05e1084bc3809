#include "simcore/cores.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simcore {

void require_valid(const CorePair& c) {
    if (c.s < 1 || c.t < 1)
        throw std::invalid_argument("core pair: s and t must be positive");
    if (c.s == c.t)
        throw std::invalid_argument("core pair: s and t must differ");
    long long g = std::gcd(c.s, c.t);
    if (g != 1)
        throw std::invalid_argument("core pair: s and t must be coprime (gcd(" +
                                    std::to_string(c.s) + "," + std::to_string(c.t) +
                                    ") = " + std::to_string(g) + ")");
}

bool is_st_core(const Partition& p, const CorePair& c) {
    require_valid(c);
    return is_core(p, c.s) && is_core(p, c.t);
}

std::vector<long long> numerical_gaps(const CorePair& c) {
    require_valid(c);
    std::vector<long long> gaps;
    if (c.s == 1 || c.t == 1) return gaps;
    const long long frob = c.s * c.t - c.s - c.t;
    std::vector<char> rep(frob + 1, 0);
    rep[0] = 1;
    for (long long n = 1; n <= frob; ++n)
        rep[n] = (n >= c.s && rep[n - c.s]) || (n >= c.t && rep[n - c.t]);
    for (long long n = 1; n <= frob; ++n)
        if (!rep[n]) gaps.push_back(n);
    return gaps;
}

Integer anderson_count(const CorePair& c) {
    require_valid(c);
    Integer num = factorial(static_cast<unsigned long>(c.s + c.t - 1));
    Integer den = factorial(static_cast<unsigned long>(c.s)) *
                  factorial(static_cast<unsigned long>(c.t));
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("anderson_count: non-integer result");
    return q;
}

std::vector<Partition> enumerate_cores(const CorePair& c) {
    const std::vector<long long> gaps = numerical_gaps(c);
    const size_t m = gaps.size();
    std::vector<long long> index_of(gaps.empty() ? 0 : gaps.back() + 1, -1);
    for (size_t i = 0; i < m; ++i) index_of[gaps[i]] = static_cast<long long>(i);
    auto gap_index = [&](long long x) -> long long {
        return (x >= 1 && x < static_cast<long long>(index_of.size())) ? index_of[x] : -1;
    };

    /* DFS over subsets of the gaps in ascending order.  A subset is
     * down-closed iff whenever x is chosen, x-s and x-t are chosen too
     * (whenever they are still positive; they are then automatically gaps). */
    std::vector<Partition> out;
    std::vector<char> chosen(m, 0);
    std::vector<long long> picked;
    auto emit = [&]() {
        std::vector<long long> labels(picked.rbegin(), picked.rend());
        out.push_back(partition_from_beta(BetaSet(std::move(labels))));
    };
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == m) {
            emit();
            return;
        }
        self(self, i + 1);  // exclude gaps[i]
        const long long x = gaps[i];
        for (long long pred : {x - c.s, x - c.t})
            if (pred >= 1 && !chosen[gap_index(pred)]) return;
        chosen[i] = 1;
        picked.push_back(x);
        self(self, i + 1);
        picked.pop_back();
        chosen[i] = 0;
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        long long sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return a.parts > b.parts;
    });
    return out;
}

std::map<long long, long long> size_multiset(const CorePair& c) {
    std::map<long long, long long> out;
    for (const Partition& p : enumerate_cores(c)) ++out[p.size()];
    return out;
}

namespace {

/* Visit all partitions of n with parts <= max_part as weakly decreasing
 * vectors. */
template <typename Visit>
void scan_partitions(long long n, long long max_part, std::vector<long long>& cur,
                     const Visit& visit) {
    if (n == 0) {
        visit(cur);
        return;
    }
    for (long long p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        scan_partitions(n - p, p, cur, visit);
        cur.pop_back();
    }
}

}  // namespace

std::map<long long, long long> naive_size_multiset(const CorePair& c, long long max_size) {
    require_valid(c);
    std::map<long long, long long> out;
    std::vector<long long> cur;
    for (long long n = 0; n <= max_size; ++n)
        scan_partitions(n, n == 0 ? 1 : n, cur, [&](const std::vector<long long>& parts) {
            Partition p;
            p.parts = parts;
            if (is_core(p, c.s) && is_core(p, c.t)) ++out[n];
        });
    return out;
}

QPolynomial oracle_generating_polynomial(const CorePair& c) {
    QPolynomial f;
    for (const auto& [size, count] : size_multiset(c)) f.add_term(size, Rational(count));
    return f;
}

}  // namespace simcore
