#include "facet/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "facet/binomial.hpp"

namespace facet {

IntPolynomial::IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    static const Int zero = 0;
    return i < coeffs.size() ? coeffs[i] : zero;
}

IntPolynomial parse_poly(const std::string& text) {
    std::vector<Int> c;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim spaces
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("parse_poly: empty coefficient in '" + text + "'");
        token = token.substr(b, e - b + 1);
        try {
            c.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("parse_poly: bad coefficient '" + token + "'");
        }
    }
    if (c.empty()) throw std::invalid_argument("parse_poly: no coefficients");
    return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i) out += ",";
        out += p.coeffs[i].get_str();
    }
    return out;
}

namespace {

using RatPoly = std::vector<Rat>;  // ascending, trailing zeros trimmed

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(i));
    return d;
}

// Remainder of a by b (deg b >= 0).
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RatPoly poly_div_exact(RatPoly a, const RatPoly& b) {
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    trim(q);
    return q;
}

void make_monic(RatPoly& p) {
    if (p.empty()) return;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

int sign_at_inf(const RatPoly& p, bool plus) {
    if (p.empty()) return 0;
    int s = sgn(p.back());
    if (!plus && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

// Distinct real roots of a squarefree polynomial via Sturm's theorem over
// the whole line.
unsigned long sturm_count(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(derivative(p));
    trim(chain.back());
    while (!chain.back().empty() && chain.back().size() > 1) {
        RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        trim(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool plus) {
        unsigned long v = 0;
        int prev = 0;
        for (const auto& q : chain) {
            int s = sign_at_inf(q, plus);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    unsigned long at_minus = variations(false);
    unsigned long at_plus = variations(true);
    return at_minus - at_plus;
}

RatPoly to_rat(const IntPolynomial& p) {
    RatPoly q;
    q.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) q.emplace_back(c);
    return q;
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.size() <= 2) return p;
    RatPoly g = poly_gcd(p, derivative(p));
    if (g.size() <= 1) return p;
    return poly_div_exact(p, g);
}

}  // namespace

unsigned long distinct_real_roots(const IntPolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("distinct_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    return sturm_count(squarefree_part(to_rat(p)));
}

bool is_real_rooted(const IntPolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("is_real_rooted: zero polynomial");
    if (p.degree() == 0) return true;
    RatPoly sf = squarefree_part(to_rat(p));
    return sturm_count(sf) == sf.size() - 1;
}

bool is_ultra_log_concave(const IntPolynomial& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("is_ultra_log_concave: degree must be >= 1");
    for (const auto& c : p.coeffs)
        if (c < 0)
            throw std::invalid_argument("is_ultra_log_concave: negative coefficient");
    unsigned long d = static_cast<unsigned long>(p.degree());
    for (unsigned long i = 1; i + 1 <= d; ++i) {
        // a_i^2 C(d,i-1) C(d,i+1) >= a_{i-1} a_{i+1} C(d,i)^2
        Int lhs = p.coeffs[i] * p.coeffs[i] * binom_int(d, i - 1) * binom_int(d, i + 1);
        Int rhs = p.coeffs[i - 1] * p.coeffs[i + 1] * binom_int(d, i) * binom_int(d, i);
        if (lhs < rhs) return false;
    }
    return true;
}

IntPolynomial poly_product(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return IntPolynomial{};
    std::vector<Int> c(p.coeffs.size() + q.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            c[i + j] += p.coeffs[i] * q.coeffs[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_hadamard(const IntPolynomial& p, const IntPolynomial& q) {
    std::size_t n = std::min(p.coeffs.size(), q.coeffs.size());
    std::vector<Int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = p.coeffs[i] * q.coeffs[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_dilate(const IntPolynomial& p, unsigned long c) {
    if (c < 1) throw std::invalid_argument("poly_dilate: c must be positive");
    std::vector<Int> out(p.coeffs.size());
    Int pw = 1;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        out[i] = p.coeffs[i] * pw;
        pw *= c;
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_add_tderiv(const IntPolynomial& p) {
    std::vector<Int> out(p.coeffs.size());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        out[i] = p.coeffs[i] * Int(i + 1);
    return IntPolynomial(std::move(out));
}

}  // namespace facet
