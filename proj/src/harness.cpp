#include "facet/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include "facet/binrep.hpp"
#include "facet/decomposition.hpp"
#include "facet/fvector.hpp"

namespace facet {

namespace {

void grid_corpus(const CorpusSpec& spec, std::vector<IntPolynomial>& out) {
    for (unsigned d = 1; d <= spec.max_degree; ++d) {
        std::vector<Int> c(d + 1, Int(1));
        while (true) {
            IntPolynomial p(c);
            if (is_real_rooted(p)) out.push_back(p);
            // odometer over coefficients 1..max_coeff at positions 1..d
            std::size_t pos = 1;
            while (pos <= d && c[pos] == spec.max_coeff) c[pos++] = 1;
            if (pos > d) break;
            c[pos] += 1;
        }
    }
}

void root_product_corpus(const CorpusSpec& spec, std::vector<IntPolynomial>& out) {
    std::set<std::vector<Int>> seen;
    // multisets r_1 <= ... <= r_d of roots in [1, max_coeff]
    std::function<void(const IntPolynomial&, unsigned, long)> rec =
        [&](const IntPolynomial& acc, unsigned depth, long min_root) {
            if (depth > 0 && seen.insert(acc.coeffs).second) out.push_back(acc);
            if (depth == spec.max_degree) return;
            for (long r = min_root; r <= spec.max_coeff; ++r) {
                IntPolynomial factor(std::vector<Int>{Int(1), Int(r)});
                rec(poly_product(acc, factor), depth + 1, r);
            }
        };
    rec(IntPolynomial(std::vector<Int>{Int(1)}), 0, 1);
}

FVector coefficient_vector(const IntPolynomial& p) {
    FVector f;
    f.entries = p.coeffs;
    return f;
}

// Per-element predicate: returns a finding description when the element
// violates the campaign's statement.
using Predicate = std::function<std::optional<Finding>(const IntPolynomial&)>;

Predicate make_predicate(const std::string& name) {
    if (name == "question-bs") {
        return [](const IntPolynomial& p) -> std::optional<Finding> {
            PressureReport rep = check_kk(coefficient_vector(p));
            if (rep.ok) return std::nullopt;
            for (const auto& c : rep.checks)
                if (!c.ok)
                    return Finding{"", "", "check_kk",
                                   "mu_" + std::to_string(c.i + 1) + " = " +
                                       c.pressure.get_str() + " > " + c.bound.get_str()};
            return Finding{"", "", "check_kk", "failed"};
        };
    }
    if (name == "conj-second") {
        return [](const IntPolynomial& p) -> std::optional<Finding> {
            if (check_conjecture_second(p)) return std::nullopt;
            return Finding{"", "", "check_conjecture_second", "h_i > g_i"};
        };
    }
    if (name == "que-second") {
        return [](const IntPolynomial& p) -> std::optional<Finding> {
            auto [g_ok, h_ok] = check_question_second(p);
            if (g_ok && h_ok) return std::nullopt;
            return Finding{"", "", "check_question_second",
                           std::string(g_ok ? "" : "g not real rooted; ") +
                               std::string(h_ok ? "" : "h not real rooted")};
        };
    }
    if (name == "thm-monotone") {
        return [](const IntPolynomial& p) -> std::optional<Finding> {
            Tri r = check_monotone(binrep(p));
            if (r == Tri::True) return std::nullopt;
            return Finding{"", "", "check_monotone",
                           r == Tri::False ? "x-sequence not decreasing"
                                           : "indeterminate after refinement budget"};
        };
    }
    if (name == "thm-ceiling-implies-kk") {
        return [](const IntPolynomial& p) -> std::optional<Finding> {
            if (!check_ceiling_condition(p)) return std::nullopt;  // hypothesis void
            if (check_kk(coefficient_vector(p)).ok) return std::nullopt;
            return Finding{"", "", "check_ceiling_condition=>check_kk",
                           "ceiling condition holds but KK fails"};
        };
    }
    if (name == "cor-hvector") {
        return [](const IntPolynomial& p) -> std::optional<Finding> {
            if (check_macaulay(coefficient_vector(p)).ok) return std::nullopt;
            return Finding{"", "", "check_macaulay", "Macaulay condition fails"};
        };
    }
    throw std::invalid_argument("unknown campaign '" + name + "'");
}

bool is_hard_campaign(const std::string& name) {
    return name == "thm-monotone" || name == "thm-ceiling-implies-kk" ||
           name == "cor-hvector";
}

}  // namespace

const std::vector<std::string> kCampaignNames = {
    "question-bs", "conj-second",          "que-second",
    "thm-monotone", "thm-ceiling-implies-kk", "cor-hvector"};

std::vector<IntPolynomial> generate_corpus(const CorpusSpec& spec) {
    if (spec.max_degree < 1 || spec.max_degree > CorpusSpec::kDegreeCap)
        throw std::invalid_argument("generate_corpus: max_degree out of range");
    if (spec.max_coeff < 1 || spec.max_coeff > CorpusSpec::kCoeffCap)
        throw std::invalid_argument("generate_corpus: max_coeff out of range");
    std::vector<IntPolynomial> out;
    if (spec.generator == Generator::Grid || spec.generator == Generator::Both)
        grid_corpus(spec, out);
    if (spec.generator == Generator::RootProduct || spec.generator == Generator::Both)
        root_product_corpus(spec, out);
    if (spec.generator == Generator::Both) {
        std::sort(out.begin(), out.end(),
                  [](const IntPolynomial& a, const IntPolynomial& b) {
                      return a.coeffs < b.coeffs;
                  });
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

CampaignReport run_campaign(const std::string& name,
                            const std::vector<IntPolynomial>& corpus,
                            unsigned jobs) {
    Predicate pred = make_predicate(name);
    CampaignReport rep;
    rep.campaign = name;
    rep.hard = is_hard_campaign(name);
    rep.tested = corpus.size();
    auto start = std::chrono::steady_clock::now();

    if (jobs < 1) jobs = 1;
    std::vector<std::vector<Finding>> partial(jobs);
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < corpus.size(); i += jobs) {
            if (auto f = pred(corpus[i])) {
                f->campaign = name;
                f->input = to_string(corpus[i]);
                partial[w].push_back(std::move(*f));
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    for (auto& part : partial)
        for (auto& f : part) rep.findings.push_back(std::move(f));
    std::sort(rep.findings.begin(), rep.findings.end(),
              [](const Finding& a, const Finding& b) {
                  return parse_poly(a.input).coeffs < parse_poly(b.input).coeffs;
              });
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

void write_report(std::ostream& out, const CampaignReport& report) {
    for (const auto& f : report.findings) {
        out << "{\"campaign\":\"" << f.campaign << "\",\"input\":\"" << f.input
            << "\",\"predicate\":\"" << f.predicate << "\",\"detail\":\"" << f.detail
            << "\"}\n";
    }
    out << "{\"campaign\":\"" << report.campaign << "\",\"tested\":" << report.tested
        << ",\"findings\":" << report.findings.size()
        << ",\"hard\":" << (report.hard ? "true" : "false")
        << ",\"wall_seconds\":" << report.wall_seconds << "}\n";
}

}  // namespace facet
