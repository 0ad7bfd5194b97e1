#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "facet/bigint.hpp"

namespace facet {

// Candidate f-vector (1, f_0, ..., f_{d-1}); also used for candidate
// h-vectors under the Macaulay check.
struct FVector {
    std::vector<Int> entries;  // entries[0] == 1 for a well-formed vector

    bool operator==(const FVector& o) const { return entries == o.entries; }
};

FVector parse_fvector(const std::string& text);
std::string to_string(const FVector& f);

// Murai-style vector (0, 1, alpha_0, ..., alpha_{d-2}); may be shorter than
// the f-vector it is admissible to (missing entries read as 0).
using AdmissibleVector = std::vector<Int>;

struct PressureCheck {
    std::size_t i;  // condition index: mu_{i+1}(f_i) <= f_{i-1}
    Int pressure;
    Int bound;
    bool ok;
};

struct PressureReport {
    bool ok = true;
    std::vector<PressureCheck> checks;
};

// Kruskal-Katona: mu_{i+1}(f_i) <= f_{i-1} for 0 <= i <= d-1.
PressureReport check_kk(const FVector& f);

// Macaulay: kappa_{i+1}(f_i) <= f_{i-1} for 0 <= i <= d-1.
PressureReport check_macaulay(const FVector& f);

// h-vector of a candidate f-vector; entries may be negative.
std::vector<Int> f_to_h(const FVector& f);

// Every k-th entry: positions 0, k, 2k, ... of (1, f_0, ..., f_{d-1}).
FVector veronese_subsequence(const FVector& f, unsigned k);

// (1, 2f_0, 3f_1, ..., (d+1) f_{d-1}), the vector of f(t) + t f'(t).
FVector f_plus_tfprime_vector(const FVector& f);

// mu_{i+1}((i+2) f_i) <= (i+1) f_{i-1} for 1 <= i <= d-1.
bool check_cor_fvector(const FVector& f);

// (BA1) the truncation (1, alpha_0, ...) passes check_kk and
// (BA2) f_i >= alpha_i for the listed indices.
bool is_basic_admissible(const AdmissibleVector& alpha, const FVector& f);

struct ChainResult {
    bool ok = false;
    std::size_t failed_at = 0;  // index of the first failing beta when !ok
    FVector sum;                // f + sum of betas applied so far
};

// (A2): each beta must be basic admissible to the running sum.
ChainResult check_admissible_chain(const FVector& f,
                                   const std::vector<AdmissibleVector>& betas);

}  // namespace facet
