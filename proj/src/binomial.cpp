#include "facet/binomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace facet {

std::string to_decimal(const Rat& q, unsigned digits) {
    Rat v = q;
    v.canonicalize();
    std::string sign;
    if (v < 0) {
        sign = "-";
        v = -v;
    }
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int scaled = (v.get_num() * scale) / v.get_den();
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    std::ostringstream out;
    out << sign << ip.get_str();
    if (digits > 0) out << "." << frac;
    return out.str();
}

Int binom_int(const Int& n, unsigned long k) {
    if (n < 0) throw std::invalid_argument("binom_int: n must be non-negative");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Int Cascade::value() const {
    Int v = 0;
    for (const auto& t : terms) v += binom_int(t.top, t.index);
    return v;
}

std::vector<Int> Cascade::tops() const {
    std::vector<Int> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(t.top);
    return out;
}

namespace {

// Largest a >= k with C(a, k) <= rem (rem >= 1, so a = k always qualifies).
Int largest_top(const Int& rem, unsigned long k) {
    if (k == 1) return rem;
    Int lo = k, hi = k;
    while (binom_int(hi, k) <= rem) hi *= 2;
    // invariant: C(lo, k) <= rem < C(hi, k)
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (binom_int(mid, k) <= rem)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

Cascade cascade(const Int& m, unsigned long i) {
    if (m < 1) throw std::invalid_argument("cascade: m must be positive");
    if (i < 1) throw std::invalid_argument("cascade: i must be positive");
    Cascade c;
    Int rem = m;
    unsigned long k = i;
    while (rem > 0) {
        if (k < 1) throw std::logic_error("cascade: index underflow");
        Int a = largest_top(rem, k);
        if (!c.terms.empty() && a >= c.terms.back().top)
            throw std::logic_error("cascade: tops not strictly decreasing");
        rem -= binom_int(a, k);
        c.terms.push_back({std::move(a), k});
        --k;
    }
    return c;
}

Int mu(const Int& m, unsigned long i) {
    if (i < 1) throw std::invalid_argument("mu: i must be positive");
    if (m == 0) return 0;
    Int s = 0;
    for (const auto& t : cascade(m, i).terms)
        s += binom_int(t.top, t.index - 1);
    return s;
}

Int kappa(const Int& m, unsigned long i) {
    if (i < 1) throw std::invalid_argument("kappa: i must be positive");
    if (m == 0) return 0;
    Int s = 0;
    for (const auto& t : cascade(m, i).terms)
        s += binom_int(t.top - 1, t.index - 1);
    return s;
}

Int min_ceil_binom(const Int& y, unsigned long k) {
    if (y < 1) throw std::invalid_argument("min_ceil_binom: y must be positive");
    Int lo = Int(k) - 1;  // C(k-1, k) = 0 < y
    Int hi = k;
    while (binom_int(hi, k) < y) hi *= 2;
    // invariant: C(lo, k) < y <= C(hi, k)
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (binom_int(mid, k) < y)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

std::vector<std::vector<int>> colex_subsets(std::size_t m, unsigned k) {
    if (k < 1) throw std::invalid_argument("colex_subsets: k must be positive");
    std::vector<std::vector<int>> out;
    out.reserve(m);
    std::vector<int> cur(k);
    for (unsigned j = 0; j < k; ++j) cur[j] = static_cast<int>(j) + 1;
    for (std::size_t n = 0; n < m; ++n) {
        out.push_back(cur);
        // colex successor: bump the lowest position that has room
        unsigned t = 0;
        while (t + 1 < k && cur[t] + 1 == cur[t + 1]) ++t;
        ++cur[t];
        for (unsigned j = 0; j < t; ++j) cur[j] = static_cast<int>(j) + 1;
    }
    return out;
}

std::size_t shadow_size_oracle(std::size_t m, unsigned k, std::size_t cap) {
    if (m < 1) throw std::invalid_argument("shadow_size_oracle: m must be positive");
    if (k < 1) throw std::invalid_argument("shadow_size_oracle: k must be positive");
    if (m > cap)
        throw std::invalid_argument(
            "shadow_size_oracle: m exceeds enumeration cap (test oracle only)");
    std::set<std::vector<int>> shadow;
    for (const auto& s : colex_subsets(m, k)) {
        for (unsigned drop = 0; drop < k; ++drop) {
            std::vector<int> sub;
            sub.reserve(k - 1);
            for (unsigned j = 0; j < k; ++j)
                if (j != drop) sub.push_back(s[j]);
            shadow.insert(std::move(sub));
        }
    }
    return shadow.size();
}

}  // namespace facet
