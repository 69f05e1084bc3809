#pragma once

#include <string>
#include <vector>

#include "simcore/rational.hpp"

namespace simcore {

/* Integer partition: weakly decreasing positive parts; empty list = empty
 * partition. */
struct Partition {
    std::vector<long long> parts;

    Partition() = default;
    explicit Partition(std::vector<long long> p);

    long long size() const;  // sum of parts
    bool empty() const { return parts.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts == b.parts;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    /* "4211" when every part is a single digit, "12,3,1" otherwise,
     * "empty" for the empty partition. */
    std::string to_compact_string() const;
};

/* Strictly decreasing positive labels: the first-column hook lengths of a
 * partition (a beta-set). */
struct BetaSet {
    std::vector<long long> labels;

    BetaSet() = default;
    explicit BetaSet(std::vector<long long> l);

    friend bool operator==(const BetaSet& a, const BetaSet& b) {
        return a.labels == b.labels;
    }
};

Partition conjugate(const Partition& p);

/* Hook length of cell (i,j), 1-indexed: lambda_i - i + lambda'_j - j + 1. */
std::vector<std::vector<long long>> hook_lengths(const Partition& p);

/* A partition is an s-core iff no cell has hook length exactly s. */
bool is_core(const Partition& p, long long s);

BetaSet first_column_hooks(const Partition& p);

/* Inverse of first_column_hooks; the rebuilt partition has
 * size = sum(labels) - k(k-1)/2 for k labels. */
Partition partition_from_beta(const BetaSet& b);

}  // namespace simcore
