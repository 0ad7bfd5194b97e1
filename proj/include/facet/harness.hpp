#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "facet/polynomial.hpp"

namespace facet {

enum class Generator { Grid, RootProduct, Both };

struct CorpusSpec {
    unsigned max_degree = 4;
    long max_coeff = 20;  // grid: coefficient bound; root-product: root bound
    Generator generator = Generator::Grid;
    std::uint64_t seed = 0;  // reserved; both generators are exhaustive

    static constexpr unsigned kDegreeCap = 8;
    static constexpr long kCoeffCap = 64;
};

// Deterministic corpus of real-rooted polynomials 1 + f_0 t + ... with
// positive integer coefficients. Grid enumerates every coefficient vector
// within bounds and keeps the Sturm-certified real-rooted ones; root-product
// expands all products of (1 + r t) factors, which are real rooted by
// construction.
std::vector<IntPolynomial> generate_corpus(const CorpusSpec& spec);

struct Finding {
    std::string campaign;
    std::string input;      // coefficient text of the offending polynomial
    std::string predicate;
    std::string detail;
};

struct CampaignReport {
    std::string campaign;
    bool hard = false;  // theorem campaign: any finding falsifies paper or code
    std::size_t tested = 0;
    std::vector<Finding> findings;  // sorted by input coefficients
    double wall_seconds = 0.0;
};

extern const std::vector<std::string> kCampaignNames;

// Campaigns: question-bs, conj-second, que-second (open statements, findings
// reported), thm-monotone, thm-ceiling-implies-kk, cor-hvector (theorems,
// findings are hard failures).
CampaignReport run_campaign(const std::string& name,
                            const std::vector<IntPolynomial>& corpus,
                            unsigned jobs = 1);

// Line-delimited report: one object per finding with stable field order,
// then a summary line.
void write_report(std::ostream& out, const CampaignReport& report);

}  // namespace facet
