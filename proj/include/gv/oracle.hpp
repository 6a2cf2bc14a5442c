#pragma once

#include "gv/count.hpp"
#include "gv/params.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace gv::oracle {

// A word is a string of symbols in 0..q-1, most significant position first;
// lexicographic order on words is std::vector order.
using Word = std::vector<std::uint8_t>;

long hamming_distance(const Word& a, const Word& b);
long weight(const Word& a);

struct BuildBudget {
    std::size_t max_vertices = std::size_t(1) << 20;
};

// Explicit graph with per-vertex sorted neighbor lists. No self loops,
// adjacency symmetric, vertex order lexicographic by word.
struct ExplicitGraph {
    int n = 0;
    int q = 2;
    std::optional<int> w{};  // constant-weight vertex space when set
    int dist_lo = 1;
    int dist_hi = 0;
    std::vector<Word> labels;
    std::vector<std::vector<std::uint32_t>> adj;

    std::size_t vertex_count() const { return labels.size(); }
    std::size_t edge_count() const;
    bool adjacent(std::uint32_t a, std::uint32_t b) const;
};

// Full distance graph on all q^n words: edges 1 <= d(u,v) <= d-1.
ExplicitGraph gilbert_graph(const CodeParams& p, const BuildBudget& budget = {});

// Subgraph induced by the punctured ball around 0 (weights 1..d-1).
ExplicitGraph sphere_graph_explicit(const CodeParams& p, const BuildBudget& budget = {});

// Constant-weight space F2(n,w) with edges 2 <= d(u,v) <= 2(d-1); p.w required.
ExplicitGraph johnson_gilbert_graph(const CodeParams& p, const BuildBudget& budget = {});

// Neighborhood of the word 1^w 0^(n-w) in the graph above, induced.
ExplicitGraph johnson_sphere_graph(const CodeParams& p, const BuildBudget& budget = {});

struct SphereGraphStats {
    Count n_vertices;
    Count max_degree;
    Count neighborhood_edges_max;  // max over v of edges induced by N(v)
    Count triangle_count;
};

// Exact degree / neighborhood-edge / triangle statistics via sorted
// neighbor-list intersection, parallel over vertices.
SphereGraphStats graph_stats(const ExplicitGraph& g);

namespace serial_ref {
SphereGraphStats graph_stats(const ExplicitGraph& g);
}

// Exact maximum independent set by branch and bound (greedy incumbent,
// clique-cover pruning, max-degree branching). Deterministic. Throws
// BudgetExceeded above the vertex budget.
std::vector<std::uint32_t> exact_max_independent_set(const ExplicitGraph& g,
                                                     std::size_t max_vertices = 512);

// Count words x with d(x,u)=i, d(x,v)=j for canonical centers u = 0 and
// v = 1 on the first w coordinates, by full enumeration of q^n words.
Count brute_intersection_count(long n, long q, long w, long i, long j,
                               const BuildBudget& budget = {});

// Johnson-scheme counterpart on F2(n,w), centers at Johnson distance k.
Count brute_johnson_intersection_count(long n, long w, long i, long j, long k);

// Edge-list dump: header "n_vertices n_edges", then one "u v" line per edge.
void dump_edge_list(const ExplicitGraph& g, std::ostream& os);

}  // namespace gv::oracle
