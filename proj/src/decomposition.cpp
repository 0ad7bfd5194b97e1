#include "facet/decomposition.hpp"

#include <stdexcept>

namespace facet {

Decomposition recursive_decompose(const IntPolynomial& p) {
    if (p.is_zero() || p.coeffs[0] != 1)
        throw std::invalid_argument("recursive_decompose: constant term must be 1");
    for (std::size_t i = 1; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] <= 0)
            throw std::invalid_argument("recursive_decompose: coefficients must be positive");

    std::size_t d = p.coeffs.size() - 1;
    std::vector<Int> g(d + 1, Int(0)), h(d, Int(0));
    g[0] = 1;
    if (d >= 1) h[0] = 0;  // set below from the i = 1 cascade
    Decomposition dec;
    for (std::size_t i = 1; i <= d; ++i) {
        Cascade c = cascade(p.coeffs[i], i);
        Int gi = 0, him1 = 0;
        for (const auto& term : c.terms) {
            // terms with a_k - 1 < k contribute 0
            gi += binom_int(term.top - 1, term.index);
            him1 += binom_int(term.top - 1, term.index - 1);
        }
        g[i] = gi;
        h[i - 1] = him1;
        dec.cascades.push_back(std::move(c));
    }
    if (h.empty())
        h.push_back(1);  // degree-0 input: f = 1 = 1 + t*0; keep h = 1 by convention
    if (h[0] != 1) throw std::logic_error("recursive_decompose: h_0 != 1");
    dec.g = IntPolynomial(std::move(g));
    dec.h = IntPolynomial(std::move(h));
    // reconstruction identity f = g + t h on padded sequences
    for (std::size_t i = 0; i <= d; ++i) {
        Int lhs = p.coeff(i);
        Int rhs = dec.g.coeff(i) + (i >= 1 ? dec.h.coeff(i - 1) : Int(0));
        if (lhs != rhs) throw std::logic_error("recursive_decompose: f != g + t h");
    }
    return dec;
}

bool check_conjecture_second(const IntPolynomial& p) {
    Decomposition dec = recursive_decompose(p);
    std::size_t d = p.coeffs.size() - 1;
    for (std::size_t i = 1; i + 1 <= d; ++i)
        if (dec.h.coeff(i) > dec.g.coeff(i)) return false;
    return true;
}

std::pair<bool, bool> check_question_second(const IntPolynomial& p) {
    Decomposition dec = recursive_decompose(p);
    return {is_real_rooted(dec.g), is_real_rooted(dec.h)};
}

}  // namespace facet
