#pragma once

#include <vector>

#include "facet/bigint.hpp"
#include "facet/polynomial.hpp"

namespace facet {

// Exact rational evaluation of C(x, k) = x(x-1)...(x-k+1) / k!.
Rat binom_real(const Rat& x, unsigned long k);

// Certified enclosure of the unique real x >= k-1 with C(x, k) = y.
struct BinRepEntry {
    Int y;
    unsigned long k = 0;
    Rat lo, hi;   // lo <= x <= hi; lo == hi when exact
    Int ceil_x;   // min { m : C(m, k) >= y }, computed by integer comparisons
    bool exact = false;

    Rat width() const { return hi - lo; }
    // Halve the enclosure width `steps` times (no-op when exact).
    void refine(unsigned steps);
};

struct RealBinRep {
    std::vector<BinRepEntry> entries;  // entries[i-1] holds x_i
};

BinRepEntry solve_binrep(const Int& y, unsigned long k, const Rat& tol);

// Binomial representation (x_1, ..., x_d) of 1 + sum y_i t^i with y_i > 0.
RealBinRep binrep(const IntPolynomial& p, const Rat& tol = Rat(1, 1000000000));

enum class Tri { False, True, Indeterminate };

// x_1 >= x_2 >= ... >= x_d, decided by interval comparison with on-demand
// refinement. Indeterminate only when the budget is exhausted on a tie.
Tri check_monotone(RealBinRep rep, unsigned refine_budget = 120);

// x_{i-1} >= ceil(x_i) for i = 2..d, via the exact integer comparison
// f_{i-2} >= C(ceil(x_i), i-1).
bool check_ceiling_condition(const IntPolynomial& p);

}  // namespace facet
