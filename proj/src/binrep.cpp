#include "facet/binrep.hpp"

#include <stdexcept>

#include "facet/binomial.hpp"

namespace facet {

Rat binom_real(const Rat& x, unsigned long k) {
    Rat num = 1;
    for (unsigned long j = 0; j < k; ++j) num *= x - Int(j);
    Int fact = 1;
    for (unsigned long j = 2; j <= k; ++j) fact *= j;
    return num / fact;
}

void BinRepEntry::refine(unsigned steps) {
    for (unsigned s = 0; s < steps && !exact; ++s) {
        Rat mid = (lo + hi) / 2;
        Rat v = binom_real(mid, k);
        if (v == y) {
            lo = hi = mid;
            exact = true;  // rational root hit exactly
        } else if (v < y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

BinRepEntry solve_binrep(const Int& y, unsigned long k, const Rat& tol) {
    if (y < 1) throw std::invalid_argument("solve_binrep: y must be positive");
    if (k < 1) throw std::invalid_argument("solve_binrep: k must be positive");
    if (tol <= 0) throw std::invalid_argument("solve_binrep: tol must be positive");
    BinRepEntry e;
    e.y = y;
    e.k = k;
    e.ceil_x = min_ceil_binom(y, k);
    if (binom_int(e.ceil_x, k) == y) {
        e.lo = e.hi = Rat(e.ceil_x);
        e.exact = true;
        return e;
    }
    // C(ceil-1, k) < y < C(ceil, k), so x lies strictly between
    Rat floor_x = e.ceil_x - 1;
    if (floor_x < Int(k) - 1) floor_x = Int(k) - 1;
    e.lo = floor_x;
    e.hi = Rat(e.ceil_x);
    while (!e.exact && e.width() > tol) e.refine(1);
    return e;
}

RealBinRep binrep(const IntPolynomial& p, const Rat& tol) {
    if (p.is_zero() || p.coeffs[0] != 1)
        throw std::invalid_argument("binrep: constant term must be 1");
    RealBinRep rep;
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i] <= 0)
            throw std::invalid_argument("binrep: coefficient " + std::to_string(i) +
                                        " must be positive");
        rep.entries.push_back(solve_binrep(p.coeffs[i], i, tol));
    }
    return rep;
}

Tri check_monotone(RealBinRep rep, unsigned refine_budget) {
    for (std::size_t i = 1; i < rep.entries.size(); ++i) {
        BinRepEntry& a = rep.entries[i - 1];  // x_i
        BinRepEntry& b = rep.entries[i];      // x_{i+1}
        bool decided = false;
        for (unsigned round = 0; round <= refine_budget; ++round) {
            if (a.lo >= b.hi) {
                decided = true;  // a >= b certified
                break;
            }
            if (a.hi < b.lo) return Tri::False;
            if (a.exact && b.exact) return Tri::False;  // equal points handled above
            a.refine(1);
            b.refine(1);
        }
        if (!decided) return Tri::Indeterminate;
    }
    return Tri::True;
}

bool check_ceiling_condition(const IntPolynomial& p) {
    if (p.is_zero() || p.coeffs[0] != 1)
        throw std::invalid_argument("check_ceiling_condition: constant term must be 1");
    for (std::size_t i = 1; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] <= 0)
            throw std::invalid_argument("check_ceiling_condition: coefficients must be positive");
    // x_{i-1} >= ceil(x_i)  <=>  f_{i-2} >= C(ceil(x_i), i-1)
    for (std::size_t i = 2; i < p.coeffs.size(); ++i) {
        Int c = min_ceil_binom(p.coeffs[i], i);
        if (p.coeffs[i - 1] < binom_int(c, i - 1)) return false;
    }
    return true;
}

}  // namespace facet
