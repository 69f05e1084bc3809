#pragma once

#include <map>
#include <vector>

#include "simcore/partition.hpp"
#include "simcore/qpoly.hpp"
#include "simcore/rational.hpp"

namespace simcore {

/* An (s,t) pair for simultaneous core partitions.  Operations require
 * s, t >= 1, s != t, gcd(s,t) = 1; order is not constrained. */
struct CorePair {
    long long s = 0;
    long long t = 0;

    friend bool operator==(const CorePair& a, const CorePair& b) {
        return a.s == b.s && a.t == b.t;
    }
    friend bool operator<(const CorePair& a, const CorePair& b) {
        return a.s != b.s ? a.s < b.s : a.t < b.t;
    }
};

/* Throws std::invalid_argument (mentioning the witness gcd) when the pair is
 * unusable. */
void require_valid(const CorePair& c);

bool is_st_core(const Partition& p, const CorePair& c);

/* Positive integers not representable as a*s + b*t (a,b >= 0), ascending.
 * There are (s-1)(t-1)/2 of them; the largest is s*t - s - t. */
std::vector<long long> numerical_gaps(const CorePair& c);

/* Number of simultaneous (s,t)-cores: (s+t-1)! / (s! t!). */
Integer anderson_count(const CorePair& c);

/* All (s,t)-cores, enumerated as the down-closed subsets of the gap poset
 * (closed under subtracting s and t while positive); sorted by size, then by
 * descending part lists. */
std::vector<Partition> enumerate_cores(const CorePair& c);

/* size -> multiplicity over enumerate_cores. */
std::map<long long, long long> size_multiset(const CorePair& c);

/* Independent cross-check: scans every partition of every size up to
 * max_size and keeps the (s,t)-cores.  Exponential in max_size; intended for
 * small pairs only. */
std::map<long long, long long> naive_size_multiset(const CorePair& c, long long max_size);

/* sum_n (#cores of size n) q^n, from the enumeration (the brute-force side
 * of the lattice-path equivalence). */
QPolynomial oracle_generating_polynomial(const CorePair& c);

}  // namespace simcore
