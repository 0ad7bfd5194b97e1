#pragma once

#include <string>
#include <vector>

#include "facet/bigint.hpp"

namespace facet {

// Integer polynomial with coefficients indexed by exponent. Trailing zeros
// are trimmed on construction; the zero polynomial has degree -1.
struct IntPolynomial {
    std::vector<Int> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> c);

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const Int& coeff(std::size_t i) const;

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
};

// Text format: ascending comma-separated coefficients, "1,4,5,2".
IntPolynomial parse_poly(const std::string& text);
std::string to_string(const IntPolynomial& p);

// True iff every complex root of p is real (multiplicities allowed).
// Sturm chain over exact rationals on the squarefree part.
bool is_real_rooted(const IntPolynomial& p);

// Number of distinct real roots, via the same Sturm chain.
unsigned long distinct_real_roots(const IntPolynomial& p);

// [a_i / C(d,i)]^2 >= a_{i-1} a_{i+1} / (C(d,i-1) C(d,i+1)) for 1 <= i <= d-1,
// checked by cross-multiplied integer comparisons. Requires non-negative
// coefficients and degree >= 1.
bool is_ultra_log_concave(const IntPolynomial& p);

IntPolynomial poly_product(const IntPolynomial& p, const IntPolynomial& q);

// Coefficientwise product, truncated at the smaller degree.
IntPolynomial poly_hadamard(const IntPolynomial& p, const IntPolynomial& q);

// p(ct): coefficient i scaled by c^i.
IntPolynomial poly_dilate(const IntPolynomial& p, unsigned long c);

// p(t) + t p'(t): coefficient i scaled by i+1.
IntPolynomial poly_add_tderiv(const IntPolynomial& p);

}  // namespace facet
