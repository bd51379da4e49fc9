#pragma once

/**
 * @file multi_index.hpp
 * @brief Vectors of non-negative integers and subsets of {1,...,n}.
 */

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "mzv/errors.hpp"

namespace mzv {

/// A tuple of non-negative integers; the home of N, alpha and k.
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) { validate(); }
    MultiIndex(std::initializer_list<int> e) : entries(e) { validate(); }
    static MultiIndex zeros(int n) { return MultiIndex(std::vector<int>(static_cast<size_t>(n), 0)); }

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[static_cast<size_t>(i)]; }
    int& operator[](int i) { return entries[static_cast<size_t>(i)]; }

    /// |x| = x_1 + ... + x_n.
    long sum() const { return std::accumulate(entries.begin(), entries.end(), 0L); }

    /// x_j + ... + x_n, with j 1-based.
    long tail_sum(int j) const {
        long s = 0;
        for (int i = j - 1; i < size(); ++i) s += entries[static_cast<size_t>(i)];
        return s;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return std::lexicographical_compare_three_way(a.entries.begin(), a.entries.end(),
                                                      b.entries.begin(), b.entries.end());
    }

private:
    void validate() const {
        for (int e : entries)
            if (e < 0) throw DomainError("MultiIndex: negative entry");
    }
};

/// A subset of {1,...,n}, stored strictly increasing.
struct IndexSubset {
    int n = 0;
    std::vector<int> members;

    IndexSubset() = default;
    IndexSubset(int dim, std::vector<int> m) : n(dim), members(std::move(m)) {
        std::sort(members.begin(), members.end());
        for (size_t i = 0; i < members.size(); ++i) {
            if (members[i] < 1 || members[i] > n)
                throw DomainError("IndexSubset: member out of {1,...,n}");
            if (i > 0 && members[i] == members[i - 1])
                throw DomainError("IndexSubset: duplicate member");
        }
    }

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int j) const { return std::binary_search(members.begin(), members.end(), j); }

    friend bool operator==(const IndexSubset& a, const IndexSubset& b) = default;
};

} // namespace mzv
