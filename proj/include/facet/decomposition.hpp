#pragma once

#include <utility>
#include <vector>

#include "facet/binomial.hpp"
#include "facet/polynomial.hpp"

namespace facet {

// Recursive decomposition f(t) = g(t) + t h(t), with g_i and h_{i-1} read
// off the i-th binomial expansion of f_{i-1} by decrementing the tops.
struct Decomposition {
    IntPolynomial g;
    IntPolynomial h;
    std::vector<Cascade> cascades;  // cascade of f_{i-1} at index i, i = 1..d
};

Decomposition recursive_decompose(const IntPolynomial& p);

// h_i <= g_i for 1 <= i <= d-1 (the second-approach conjecture's inequality).
bool check_conjecture_second(const IntPolynomial& p);

// (is_real_rooted(g), is_real_rooted(h)).
std::pair<bool, bool> check_question_second(const IntPolynomial& p);

}  // namespace facet
