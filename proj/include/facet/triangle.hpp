#pragma once

#include <string>
#include <vector>

#include "facet/fvector.hpp"

namespace facet {

// Triangular array T_{d,k} driven by the recurrence
//   T_{d,k} = a1(d,k) T_{d-1,k} + a2(d,k) T_{d-1,k-1} + a3(d,k) T_{d-2,k-1}
// with a_i(d,k) = r_i d + s_i k + t_i, seed T_{1,0} = 1 and zeros outside
// 0 <= k <= d-1.
struct TriangleSpec {
    std::string name;
    long r[3] = {0, 0, 0};
    long s[3] = {0, 0, 0};
    long t[3] = {0, 0, 0};

    long a(int i, long d, long k) const { return r[i] * d + s[i] * k + t[i]; }
};

TriangleSpec eulerian_spec();
TriangleSpec stirling_spec();
TriangleSpec derangement_spec();

// Built-in spec by name, or empty optional-style lookup via throw.
TriangleSpec builtin_spec(const std::string& name);

// One spec per line: name followed by r1 s1 t1 r2 s2 t2 r3 s3 t3.
std::vector<TriangleSpec> parse_spec_file(std::istream& in);

struct SpecReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// The three coefficient conditions: r1 = 0 and t1 = 1; s_i <= t_i;
// a_i(d,k) >= 0 on the whole triangle. The last is decided symbolically
// from the linear form's corners and re-verified numerically up to d_max.
SpecReport validate_spec(const TriangleSpec& spec, long d_max = 64);

using TriangleRows = std::vector<std::vector<Int>>;  // rows[d-1] = T_{d,.}

TriangleRows rows(const TriangleSpec& spec, unsigned D);

struct RowCheck {
    unsigned d;
    bool kk_ok;
    bool claims_ok;  // per-term pressure bounds from the row-polynomial proof
};

// Every row polynomial (1, T_{d,1}, ...) must pass Kruskal-Katona; the
// claims verify mu_k of each recurrence term against its shifted bound.
std::vector<RowCheck> check_rows_kk(const TriangleSpec& spec, unsigned D);

}  // namespace facet
