#include "facet/fvector.hpp"

#include <sstream>
#include <stdexcept>

#include "facet/binomial.hpp"

namespace facet {

FVector parse_fvector(const std::string& text) {
    FVector f;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("parse_fvector: empty entry in '" + text + "'");
        token = token.substr(b, e - b + 1);
        try {
            f.entries.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("parse_fvector: bad entry '" + token + "'");
        }
    }
    if (f.entries.empty()) throw std::invalid_argument("parse_fvector: no entries");
    return f;
}

std::string to_string(const FVector& f) {
    std::string out;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        if (i) out += ",";
        out += f.entries[i].get_str();
    }
    return out;
}

namespace {

void require_fvector_shape(const FVector& f, const char* who) {
    if (f.entries.empty() || f.entries[0] != 1)
        throw std::invalid_argument(std::string(who) + ": leading entry must be 1");
    for (std::size_t i = 1; i < f.entries.size(); ++i)
        if (f.entries[i] <= 0)
            throw std::invalid_argument(std::string(who) + ": entries must be positive");
}

template <typename Pressure>
PressureReport pressure_report(const FVector& f, Pressure&& pressure, const char* who) {
    require_fvector_shape(f, who);
    PressureReport rep;
    // condition index i runs 0..d-1; f_i = entries[i+1], f_{i-1} = entries[i]
    for (std::size_t i = 0; i + 1 < f.entries.size(); ++i) {
        PressureCheck c;
        c.i = i;
        c.pressure = pressure(f.entries[i + 1], static_cast<unsigned long>(i + 1));
        c.bound = f.entries[i];
        c.ok = c.pressure <= c.bound;
        if (!c.ok) rep.ok = false;
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace

PressureReport check_kk(const FVector& f) {
    return pressure_report(f, [](const Int& m, unsigned long i) { return mu(m, i); },
                           "check_kk");
}

PressureReport check_macaulay(const FVector& f) {
    return pressure_report(f, [](const Int& m, unsigned long i) { return kappa(m, i); },
                           "check_macaulay");
}

std::vector<Int> f_to_h(const FVector& f) {
    if (f.entries.empty() || f.entries[0] != 1)
        throw std::invalid_argument("f_to_h: leading entry must be 1");
    // h(t) = (1-t)^{deg} f(t / (1-t)) with deg = d, computed as
    // h_i = sum_j (-1)^{i-j} C(deg - j, i - j) e_j
    std::size_t deg = f.entries.size() - 1;
    std::vector<Int> h(deg + 1, Int(0));
    for (std::size_t i = 0; i <= deg; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Int term = binom_int(Int(deg - j), i - j) * f.entries[j];
            if ((i - j) % 2)
                h[i] -= term;
            else
                h[i] += term;
        }
    }
    return h;
}

FVector veronese_subsequence(const FVector& f, unsigned k) {
    if (k < 1) throw std::invalid_argument("veronese_subsequence: k must be positive");
    FVector out;
    for (std::size_t pos = 0; pos < f.entries.size(); pos += k)
        out.entries.push_back(f.entries[pos]);
    return out;
}

FVector f_plus_tfprime_vector(const FVector& f) {
    FVector out;
    out.entries.reserve(f.entries.size());
    for (std::size_t i = 0; i < f.entries.size(); ++i)
        out.entries.push_back(f.entries[i] * Int(i + 1));
    return out;
}

bool check_cor_fvector(const FVector& f) {
    require_fvector_shape(f, "check_cor_fvector");
    for (std::size_t i = 1; i + 1 < f.entries.size(); ++i) {
        Int lhs = mu(f.entries[i + 1] * Int(i + 2), static_cast<unsigned long>(i + 1));
        Int rhs = f.entries[i] * Int(i + 1);
        if (lhs > rhs) return false;
    }
    return true;
}

bool is_basic_admissible(const AdmissibleVector& alpha, const FVector& f) {
    if (alpha.size() < 2 || alpha[0] != 0 || alpha[1] != 1)
        throw std::invalid_argument("is_basic_admissible: alpha must start (0, 1, ...)");
    if (alpha.size() > f.entries.size())
        throw std::invalid_argument("is_basic_admissible: alpha longer than f");
    // (BA1): (1, alpha_0, ..., alpha_{d-2}) is a KK-feasible f-vector
    FVector base;
    base.entries.assign(alpha.begin() + 1, alpha.end());
    while (base.entries.size() > 1 && base.entries.back() == 0)
        base.entries.pop_back();
    try {
        if (!check_kk(base).ok) return false;
    } catch (const std::invalid_argument&) {
        return false;  // malformed truncation is not an f-vector
    }
    // (BA2): f_i >= alpha_i, i.e. entries[i+1] >= alpha[i+2]
    for (std::size_t j = 2; j < alpha.size(); ++j)
        if (f.entries[j - 1] < alpha[j]) return false;
    return true;
}

ChainResult check_admissible_chain(const FVector& f,
                                   const std::vector<AdmissibleVector>& betas) {
    ChainResult res;
    res.sum = f;
    for (std::size_t b = 0; b < betas.size(); ++b) {
        bool ok;
        try {
            ok = is_basic_admissible(betas[b], res.sum);
        } catch (const std::invalid_argument&) {
            ok = false;
        }
        if (!ok) {
            res.failed_at = b;
            return res;
        }
        for (std::size_t j = 0; j < betas[b].size(); ++j)
            res.sum.entries[j] += betas[b][j];
    }
    res.ok = true;
    return res;
}

}  // namespace facet
