#include "facet/complex.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "facet/binomial.hpp"

namespace facet {

namespace {

std::vector<std::vector<int>> subsets_of(const std::vector<int>& face) {
    std::vector<std::vector<int>> out;
    std::size_t n = face.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> s;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1ull << j)) s.push_back(face[j]);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<int> SimplicialComplex::to_indices(
    const std::vector<std::string>& labels) const {
    std::vector<int> idx;
    for (const auto& l : labels) {
        auto it = std::find(ground_.begin(), ground_.end(), l);
        if (it == ground_.end())
            throw std::invalid_argument("label '" + l + "' not in ground set");
        idx.push_back(static_cast<int>(it - ground_.begin()));
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("face has a repeated label");
    return idx;
}

void SimplicialComplex::close_downward() {
    std::set<std::vector<int>> closed;
    for (const auto& f : faces_)
        for (auto& s : subsets_of(f)) closed.insert(std::move(s));
    closed.insert(std::vector<int>{});
    faces_ = std::move(closed);
}

void SimplicialComplex::verify_closed() const {
    for (const auto& f : faces_) {
        if (f.empty()) continue;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != drop) sub.push_back(f[j]);
            if (!faces_.count(sub))
                throw std::logic_error("complex is not downward closed");
        }
    }
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> ground,
    const std::vector<std::vector<std::string>>& facets) {
    SimplicialComplex c;
    c.ground_ = std::move(ground);
    c.faces_.insert(std::vector<int>{});
    for (const auto& f : facets) c.faces_.insert(c.to_indices(f));
    c.close_downward();
    return c;
}

long SimplicialComplex::dimension() const {
    long d = -1;
    for (const auto& f : faces_) d = std::max(d, static_cast<long>(f.size()) - 1);
    return d;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    f.entries.assign(static_cast<std::size_t>(dimension()) + 2, Int(0));
    for (const auto& face : faces_) f.entries[face.size()] += 1;
    return f;
}

bool SimplicialComplex::has_face(const std::vector<std::string>& labels) const {
    return faces_.count(to_indices(labels)) > 0;
}

SimplicialComplex SimplicialComplex::link(
    const std::vector<std::string>& face) const {
    std::vector<int> f = to_indices(face);
    if (!faces_.count(f)) throw std::invalid_argument("link: not a face");
    SimplicialComplex out;
    std::vector<int> remap(ground_.size(), -1);
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (!std::binary_search(f.begin(), f.end(), static_cast<int>(i))) {
            remap[i] = static_cast<int>(out.ground_.size());
            out.ground_.push_back(ground_[i]);
        }
    }
    for (const auto& g : faces_) {
        std::vector<int> merged;
        std::set_intersection(g.begin(), g.end(), f.begin(), f.end(),
                              std::back_inserter(merged));
        if (!merged.empty()) continue;  // must be disjoint from F
        merged.clear();
        std::set_union(g.begin(), g.end(), f.begin(), f.end(),
                       std::back_inserter(merged));
        if (!faces_.count(merged)) continue;
        std::vector<int> relabeled;
        for (int v : g) relabeled.push_back(remap[v]);
        out.faces_.insert(std::move(relabeled));
    }
    out.faces_.insert(std::vector<int>{});
    return out;
}

std::vector<std::string> SimplicialComplex::vertices() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (faces_.count({static_cast<int>(i)})) out.push_back(ground_[i]);
    return out;
}

SimplicialComplex parse_facets(const std::string& text) {
    std::vector<std::vector<std::string>> facets;
    std::set<std::string> labels;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, ';')) {
        std::vector<std::string> face;
        std::istringstream fin(part);
        std::string l;
        while (fin >> l) {
            face.push_back(l);
            labels.insert(l);
        }
        if (!face.empty()) facets.push_back(std::move(face));
    }
    std::vector<std::string> ground(labels.begin(), labels.end());
    return SimplicialComplex::from_facets(std::move(ground), facets);
}

std::string format_facets(const SimplicialComplex& c) {
    // facets = faces not contained in any larger face
    std::vector<std::vector<int>> facets;
    for (const auto& f : c.faces()) {
        if (f.empty()) continue;
        bool maximal = true;
        for (const auto& g : c.faces()) {
            if (g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets.push_back(f);
    }
    std::string out;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < facets[i].size(); ++j) {
            if (j) out += " ";
            out += c.ground()[facets[i][j]];
        }
    }
    return out;
}

SimplicialComplex compressed_realize(const FVector& f) {
    PressureReport kk = check_kk(f);
    if (!kk.ok)
        throw std::invalid_argument("compressed_realize: vector fails Kruskal-Katona");
    SimplicialComplex out;
    int max_vertex = 0;
    out.faces_.insert(std::vector<int>{});
    for (std::size_t s = 1; s < f.entries.size(); ++s) {
        if (!f.entries[s].fits_ulong_p())
            throw std::invalid_argument("compressed_realize: entry too large to enumerate");
        for (const auto& subset :
             colex_subsets(f.entries[s].get_ui(), static_cast<unsigned>(s))) {
            max_vertex = std::max(max_vertex, subset.back());
            std::vector<int> face;
            for (int v : subset) face.push_back(v - 1);  // 0-based indices
            out.faces_.insert(std::move(face));
        }
    }
    for (int v = 1; v <= max_vertex; ++v) out.ground_.push_back(std::to_string(v));
    out.verify_closed();
    if (!(out.f_vector() == f))
        throw std::logic_error("compressed_realize: f-vector round-trip failed");
    return out;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    SimplicialComplex out;
    for (const auto& l : a.ground_) out.ground_.push_back("A:" + l);
    for (const auto& l : b.ground_) out.ground_.push_back("B:" + l);
    int offset = static_cast<int>(a.ground_.size());
    for (const auto& fa : a.faces_) {
        for (const auto& fb : b.faces_) {
            std::vector<int> face = fa;
            for (int v : fb) face.push_back(v + offset);
            out.faces_.insert(std::move(face));
        }
    }
    return out;
}

SimplicialComplex hadamard_complex(const SimplicialComplex& a,
                                   const SimplicialComplex& b) {
    SimplicialComplex out;
    std::size_t nb = b.ground_.size();
    for (const auto& la : a.ground_)
        for (const auto& lb : b.ground_) out.ground_.push_back("(" + la + "," + lb + ")");
    // diagonal pairing of equal-size faces, both taken in ground order
    for (const auto& fa : a.faces_) {
        for (const auto& fb : b.faces_) {
            if (fa.size() != fb.size()) continue;
            std::vector<int> face;
            for (std::size_t j = 0; j < fa.size(); ++j)
                face.push_back(fa[j] * static_cast<int>(nb) + fb[j]);
            std::sort(face.begin(), face.end());
            out.faces_.insert(std::move(face));
        }
    }
    return out;
}

SimplicialComplex dilate_complex(const SimplicialComplex& a, unsigned c) {
    if (c < 1) throw std::invalid_argument("dilate_complex: c must be positive");
    SimplicialComplex out;
    for (const auto& l : a.ground_)
        for (unsigned j = 1; j <= c; ++j)
            out.ground_.push_back("(" + l + "," + std::to_string(j) + ")");
    for (const auto& f : a.faces_) {
        // every assignment of a fiber copy to each vertex: c^{|f|} faces
        std::vector<unsigned> pick(f.size(), 0);
        while (true) {
            std::vector<int> face;
            for (std::size_t j = 0; j < f.size(); ++j)
                face.push_back(f[j] * static_cast<int>(c) + static_cast<int>(pick[j]));
            std::sort(face.begin(), face.end());
            out.faces_.insert(std::move(face));
            std::size_t pos = 0;
            while (pos < pick.size() && ++pick[pos] == c) pick[pos++] = 0;
            if (pos == pick.size()) break;
        }
    }
    out.faces_.insert(std::vector<int>{});
    return out;
}

LinkSumResult link_sum_decomposition(const SimplicialComplex& c) {
    LinkSumResult res;
    FVector f = c.f_vector();
    for (const auto& v : c.vertices()) {
        FVector lk = c.link({v}).f_vector();
        AdmissibleVector beta;
        beta.push_back(0);
        for (const auto& e : lk.entries) beta.push_back(e);
        res.betas.push_back(std::move(beta));
    }
    // each i-face contributes i+1 (i-1)-faces across vertex links, so the
    // beta total must be (0, f_0, 2 f_1, ..., (d+1) f_d)
    std::vector<Int> total(f.entries.size() + 1, Int(0));
    for (const auto& beta : res.betas)
        for (std::size_t j = 0; j < beta.size(); ++j) total[j] += beta[j];
    while (total.size() > f.entries.size() && total.back() == 0) total.pop_back();
    for (std::size_t j = 0; j < f.entries.size(); ++j)
        if (total[j] != f.entries[j] * Int(j) )
            throw std::logic_error("link_sum_decomposition: beta total mismatch");
    ChainResult chain = check_admissible_chain(f, res.betas);
    res.ok = chain.ok;
    res.certified_sum = chain.sum;
    if (res.ok && !(res.certified_sum == f_plus_tfprime_vector(f)))
        throw std::logic_error("link_sum_decomposition: certified sum mismatch");
    return res;
}

SimplicialComplex random_complex(int n, const Rat& density, std::uint64_t seed,
                                 int vertex_cap) {
    if (n < 1 || n > vertex_cap)
        throw std::invalid_argument("random_complex: vertex count out of range");
    if (density < 0 || density > 1)
        throw std::invalid_argument("random_complex: density must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::string> ground;
    std::vector<std::vector<std::string>> facets;
    for (int v = 1; v <= n; ++v) {
        ground.push_back(std::to_string(v));
        facets.push_back({std::to_string(v)});
    }
    Int two53 = Int(1) << 53;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        // u = 53 uniform bits as an exact rational in [0, 1)
        Rat u(Int(rng() >> 11), two53);
        u.canonicalize();
        Rat p = 1;
        for (int j = 1; j < __builtin_popcountll(mask); ++j) p *= density;
        if (u >= p) continue;
        std::vector<std::string> face;
        for (int v = 0; v < n; ++v)
            if (mask & (1ull << v)) face.push_back(std::to_string(v + 1));
        facets.push_back(std::move(face));
    }
    return SimplicialComplex::from_facets(std::move(ground), facets);
}

}  // namespace facet
