#include "simcore/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace simcore {

Partition::Partition(std::vector<long long> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    long long n = 0;
    for (long long p : parts) n += p;
    return n;
}

std::string Partition::to_compact_string() const {
    if (parts.empty()) return "empty";
    bool digits = std::all_of(parts.begin(), parts.end(), [](long long p) { return p <= 9; });
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!digits && i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out;
}

BetaSet::BetaSet(std::vector<long long> l) : labels(std::move(l)) {
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] <= 0)
            throw std::invalid_argument("BetaSet: labels must be positive");
        if (i > 0 && labels[i] >= labels[i - 1])
            throw std::invalid_argument("BetaSet: labels must be strictly decreasing");
    }
}

Partition conjugate(const Partition& p) {
    std::vector<long long> out;
    if (p.parts.empty()) return Partition{};
    out.reserve(p.parts[0]);
    for (long long col = 1; col <= p.parts[0]; ++col) {
        long long cnt = 0;
        for (long long part : p.parts) {
            if (part >= col)
                ++cnt;
            else
                break;
        }
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

std::vector<std::vector<long long>> hook_lengths(const Partition& p) {
    const Partition conj = conjugate(p);
    std::vector<std::vector<long long>> table(p.parts.size());
    for (size_t i = 0; i < p.parts.size(); ++i) {
        table[i].resize(p.parts[i]);
        for (long long j = 1; j <= p.parts[i]; ++j)
            table[i][j - 1] =
                p.parts[i] - static_cast<long long>(i + 1) + conj.parts[j - 1] - j + 1;
    }
    return table;
}

bool is_core(const Partition& p, long long s) {
    if (s <= 0) throw std::invalid_argument("is_core: s must be positive");
    for (const auto& row : hook_lengths(p))
        for (long long h : row)
            if (h == s) return false;
    return true;
}

BetaSet first_column_hooks(const Partition& p) {
    const long long k = static_cast<long long>(p.parts.size());
    std::vector<long long> labels(p.parts.size());
    for (long long i = 0; i < k; ++i) labels[i] = p.parts[i] + k - (i + 1);
    return BetaSet(std::move(labels));
}

Partition partition_from_beta(const BetaSet& b) {
    const long long k = static_cast<long long>(b.labels.size());
    std::vector<long long> parts(b.labels.size());
    for (long long i = 0; i < k; ++i) parts[i] = b.labels[i] - (k - (i + 1));
    return Partition(std::move(parts));
}

}  // namespace simcore
