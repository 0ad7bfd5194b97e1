#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "facet/fvector.hpp"

namespace facet {

// Downward-closed family of subsets of an ordered ground set. Faces are
// stored as sorted vectors of ground indices; the ground order is the
// index order and is part of the state (the Hadamard construction uses it).
class SimplicialComplex {
  public:
    static SimplicialComplex from_facets(
        std::vector<std::string> ground,
        const std::vector<std::vector<std::string>>& facets);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::set<std::vector<int>>& faces() const { return faces_; }

    long dimension() const;  // -1 for {emptyset}
    FVector f_vector() const;
    bool has_face(const std::vector<std::string>& labels) const;

    SimplicialComplex link(const std::vector<std::string>& face) const;

    // Vertices in ground order (ground members that are actual 0-faces).
    std::vector<std::string> vertices() const;

    friend SimplicialComplex join(const SimplicialComplex&, const SimplicialComplex&);
    friend SimplicialComplex hadamard_complex(const SimplicialComplex&,
                                              const SimplicialComplex&);
    friend SimplicialComplex dilate_complex(const SimplicialComplex&, unsigned c);
    friend SimplicialComplex compressed_realize(const FVector&);

  private:
    SimplicialComplex() = default;
    std::vector<int> to_indices(const std::vector<std::string>& labels) const;
    void close_downward();
    void verify_closed() const;

    std::vector<std::string> ground_;
    std::set<std::vector<int>> faces_;  // always contains {}
};

// Facet-list text format: "1 2 3; 2 3 4". Ground set is the union of the
// listed labels in sorted order unless given explicitly.
SimplicialComplex parse_facets(const std::string& text);
std::string format_facets(const SimplicialComplex& c);

// Colex-initial realization of a KK-feasible vector; downward closure and
// the f-vector round-trip are verified after construction.
SimplicialComplex compressed_realize(const FVector& f);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex hadamard_complex(const SimplicialComplex& a,
                                   const SimplicialComplex& b);

// Ground set Omega x [c]; sigma is a face iff its projection is a face and
// is injective on sigma. The projection must be injective: without it the
// fibers over a single vertex would form higher faces, contradicting the
// c^{i+1} fiber count and the f(ct) identity.
SimplicialComplex dilate_complex(const SimplicialComplex& a, unsigned c);

struct LinkSumResult {
    std::vector<AdmissibleVector> betas;  // one per vertex, ground order
    FVector certified_sum;                // f + sum of betas
    bool ok = false;
};

// Vertex-link decomposition certifying f + t f' via the admissible chain.
LinkSumResult link_sum_decomposition(const SimplicialComplex& c);

// Deterministic random complex: downward closure of a seeded facet sample
// over n vertices; every vertex is always present. Subset S (|S| >= 2)
// becomes a facet with probability density^(|S|-1).
SimplicialComplex random_complex(int n, const Rat& density, std::uint64_t seed,
                                 int vertex_cap = 14);

}  // namespace facet
