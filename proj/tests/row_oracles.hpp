#pragma once

// brute-force triangle row oracles, independent of the recurrence code

#include <algorithm>
#include <numeric>
#include <vector>

#include "facet/bigint.hpp"

namespace facet_oracles {

using facet::Int;

// descent counts over all permutations of S_d
inline std::vector<Int> eulerian_row_oracle(int d) {
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Int> row(d, Int(0));
    do {
        int desc = 0;
        for (int i = 0; i + 1 < d; ++i)
            if (perm[i] > perm[i + 1]) ++desc;
        row[desc] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return row;
}

// set partitions of [d] by block count, via restricted growth strings
inline std::vector<Int> stirling_row_oracle(int d) {
    std::vector<Int> row(d, Int(0));
    std::vector<int> rgs(d, 0);
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        row[blocks - 1] += 1;
        int pos = d - 1;
        for (; pos >= 1; --pos) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + pos) + 1;
            if (rgs[pos] < cap) {
                ++rgs[pos];
                std::fill(rgs.begin() + pos + 1, rgs.end(), 0);
                break;
            }
        }
        if (pos == 0) break;
    }
    return row;
}

// derangements of [d+1] counted by exceedances; row entry k holds the
// number with k+1 exceedances (the triangle's index offset)
inline std::vector<Int> derangement_row_oracle(int d) {
    int n = d + 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Int> row(d, Int(0));
    do {
        bool derangement = true;
        int exc = 0;
        for (int i = 0; i < n; ++i) {
            if (perm[i] == i + 1) {
                derangement = false;
                break;
            }
            if (perm[i] > i + 1) ++exc;
        }
        if (derangement) row[exc - 1] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return row;
}

}  // namespace facet_oracles
