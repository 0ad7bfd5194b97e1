#pragma once

#include <cstddef>
#include <vector>

#include "facet/bigint.hpp"

namespace facet {

// Exact C(n, k) at integer arguments. Requires n >= 0; returns 0 when k > n.
Int binom_int(const Int& n, unsigned long k);

struct CascadeTerm {
    Int top;           // a_k
    unsigned long index;  // k
};

// The i-th binomial expansion m = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)
// with a_i > a_{i-1} > ... > a_j >= j >= 1. Unique for each positive m.
struct Cascade {
    std::vector<CascadeTerm> terms;  // indices strictly decreasing from i

    Int value() const;
    std::vector<Int> tops() const;
};

Cascade cascade(const Int& m, unsigned long i);

// mu_i(m) = sum C(a_k, k-1) over the cascade of m; mu_i(0) = 0.
Int mu(const Int& m, unsigned long i);

// kappa_i(m) = sum C(a_k - 1, k-1) over the cascade of m; kappa_i(0) = 0.
Int kappa(const Int& m, unsigned long i);

// Smallest integer c >= k-1 with C(c, k) >= y, for y >= 1. Equals
// ceil(x) for the real x >= k-1 solving C(x, k) = y.
Int min_ceil_binom(const Int& y, unsigned long k);

// First m k-subsets of {1, 2, ...} in colexicographic order, 1-based labels.
std::vector<std::vector<int>> colex_subsets(std::size_t m, unsigned k);

// Number of distinct (k-1)-subsets covered by the colex-initial segment of
// m k-subsets. Test oracle for mu; refuses m beyond the cap.
std::size_t shadow_size_oracle(std::size_t m, unsigned k,
                               std::size_t cap = 100000);

}  // namespace facet
