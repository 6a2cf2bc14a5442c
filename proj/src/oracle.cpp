#include "gv/oracle.hpp"

#include "gv/detail/bitset.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gv::oracle {

long hamming_distance(const Word& a, const Word& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    long d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

long weight(const Word& a) {
    long w = 0;
    for (auto s : a) w += (s != 0);
    return w;
}

namespace {

std::uint64_t word_key(const Word& a, int q) {
    std::uint64_t k = 0;
    for (auto s : a) k = k * static_cast<std::uint64_t>(q) + s;
    return k;
}

// all q^n words in lexicographic order, filtered by weight range [wlo, whi]
std::vector<Word> enumerate_words(int n, int q, long wlo, long whi, std::size_t max_vertices) {
    std::vector<Word> out;
    Word cur(static_cast<std::size_t>(n), 0);
    long wt = 0;
    while (true) {
        if (wt >= wlo && wt <= whi) {
            if (out.size() >= max_vertices)
                throw BudgetExceeded("word enumeration exceeds vertex budget");
            out.push_back(cur);
        }
        int pos = n - 1;
        while (pos >= 0) {
            if (cur[pos] == 0) ++wt;
            if (++cur[pos] == q) {
                cur[pos] = 0;
                wt -= 1;
                --pos;
            } else {
                break;
            }
        }
        if (pos < 0) break;
    }
    return out;
}

// weight-w binary words in lexicographic order
std::vector<Word> enumerate_constant_weight(int n, int w, std::size_t max_vertices) {
    std::vector<Word> out;
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    std::fill(mask.end() - w, mask.end(), true);  // lexicographically first: 0...01...1
    do {
        if (out.size() >= max_vertices)
            throw BudgetExceeded("word enumeration exceeds vertex budget");
        Word word(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) word[i] = mask[i] ? 1 : 0;
        out.push_back(std::move(word));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

class NeighborEnumerator {
public:
    NeighborEnumerator(const std::vector<Word>& labels, int q)
        : labels_(labels), q_(q) {
        index_.reserve(labels.size() * 2);
        for (std::uint32_t i = 0; i < labels.size(); ++i)
            index_.emplace(word_key(labels[i], q), i);
    }

    // all vertices at Hamming distance in [lo, hi] from labels[u]
    std::vector<std::uint32_t> neighbors(std::uint32_t u, int lo, int hi) const {
        std::vector<std::uint32_t> out;
        Word scratch = labels_[u];
        std::vector<int> positions;
        for (int k = std::max(lo, 1); k <= hi; ++k) {
            positions.assign(static_cast<std::size_t>(k), 0);
            choose_positions(scratch, u, k, 0, 0, out);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void choose_positions(Word& word, std::uint32_t u, int remaining, int from,
                          int /*depth*/, std::vector<std::uint32_t>& out) const {
        if (remaining == 0) {
            auto it = index_.find(word_key(word, q_));
            if (it != index_.end() && it->second != u) out.push_back(it->second);
            return;
        }
        int n = static_cast<int>(word.size());
        for (int pos = from; pos + remaining <= n; ++pos) {
            std::uint8_t save = word[pos];
            for (int sym = 0; sym < q_; ++sym) {
                if (sym == save) continue;
                word[pos] = static_cast<std::uint8_t>(sym);
                choose_positions(word, u, remaining - 1, pos + 1, 0, out);
            }
            word[pos] = save;
        }
    }

    const std::vector<Word>& labels_;
    int q_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

ExplicitGraph assemble(std::vector<Word> labels, const CodeParams& p, int dist_lo,
                       int dist_hi, std::optional<int> w) {
    ExplicitGraph g;
    g.n = p.n;
    g.q = p.q;
    g.w = w;
    g.dist_lo = dist_lo;
    g.dist_hi = dist_hi;
    g.labels = std::move(labels);
    g.adj.resize(g.labels.size());
    if (dist_hi >= dist_lo && !g.labels.empty()) {
        NeighborEnumerator en(g.labels, p.q);
        const long nv = static_cast<long>(g.labels.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (long u = 0; u < nv; ++u)
            g.adj[static_cast<std::size_t>(u)] =
                en.neighbors(static_cast<std::uint32_t>(u), dist_lo, dist_hi);
    }
    return g;
}

}  // namespace

std::size_t ExplicitGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj) twice += a.size();
    if (twice % 2 != 0) throw std::logic_error("ExplicitGraph: odd degree sum");
    return twice / 2;
}

bool ExplicitGraph::adjacent(std::uint32_t a, std::uint32_t b) const {
    const auto& list = adj[a];
    return std::binary_search(list.begin(), list.end(), b);
}

ExplicitGraph gilbert_graph(const CodeParams& p, const BuildBudget& budget) {
    double space = std::pow(static_cast<double>(p.q), p.n);
    if (space > static_cast<double>(budget.max_vertices))
        throw BudgetExceeded("gilbert_graph: q^n exceeds vertex budget");
    auto labels = enumerate_words(p.n, p.q, 0, p.n, budget.max_vertices);
    return assemble(std::move(labels), p, 1, p.d_prime(), std::nullopt);
}

ExplicitGraph sphere_graph_explicit(const CodeParams& p, const BuildBudget& budget) {
    double space = std::pow(static_cast<double>(p.q), p.n);
    if (space > static_cast<double>(budget.max_vertices))
        throw BudgetExceeded("sphere_graph_explicit: q^n exceeds vertex budget");
    auto labels = enumerate_words(p.n, p.q, 1, p.d_prime(), budget.max_vertices);
    return assemble(std::move(labels), p, 1, p.d_prime(), std::nullopt);
}

ExplicitGraph johnson_gilbert_graph(const CodeParams& p, const BuildBudget& budget) {
    if (!p.w) throw std::invalid_argument("johnson_gilbert_graph: w required");
    auto labels = enumerate_constant_weight(p.n, *p.w, budget.max_vertices);
    return assemble(std::move(labels), p, 2, 2 * p.d_prime(), p.w);
}

ExplicitGraph johnson_sphere_graph(const CodeParams& p, const BuildBudget& budget) {
    if (!p.w) throw std::invalid_argument("johnson_sphere_graph: w required");
    Word center(static_cast<std::size_t>(p.n), 0);
    for (int i = 0; i < *p.w; ++i) center[static_cast<std::size_t>(i)] = 1;
    auto all = enumerate_constant_weight(p.n, *p.w, budget.max_vertices);
    std::vector<Word> labels;
    for (auto& word : all) {
        long d = hamming_distance(word, center);
        if (d >= 2 && d <= 2 * p.d_prime()) labels.push_back(std::move(word));
    }
    return assemble(std::move(labels), p, 2, 2 * p.d_prime(), p.w);
}

namespace {

// edges inside N(v), by two-pointer intersection of sorted lists
std::size_t neighborhood_edges(const ExplicitGraph& g, std::uint32_t v) {
    const auto& nv = g.adj[v];
    std::size_t twice = 0;
    for (auto u : nv) {
        const auto& nu = g.adj[u];
        std::size_t a = 0, b = 0;
        while (a < nu.size() && b < nv.size()) {
            if (nu[a] < nv[b])
                ++a;
            else if (nu[a] > nv[b])
                ++b;
            else {
                ++twice;
                ++a;
                ++b;
            }
        }
    }
    return twice / 2;
}

}  // namespace

SphereGraphStats graph_stats(const ExplicitGraph& g) {
    const long nv = static_cast<long>(g.vertex_count());
    std::size_t max_deg = 0, max_t = 0;
    unsigned long long t_sum = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(max : max_deg, max_t) reduction(+ : t_sum)
    for (long v = 0; v < nv; ++v) {
        max_deg = std::max(max_deg, g.adj[static_cast<std::size_t>(v)].size());
        std::size_t t = neighborhood_edges(g, static_cast<std::uint32_t>(v));
        max_t = std::max(max_t, t);
        t_sum += t;
    }
    SphereGraphStats s;
    s.n_vertices = Count(static_cast<unsigned long>(nv));
    s.max_degree = Count(static_cast<unsigned long>(max_deg));
    s.neighborhood_edges_max = Count(static_cast<unsigned long>(max_t));
    s.triangle_count = Count(static_cast<unsigned long>(t_sum)).exact_div(Count(3u));
    return s;
}

namespace serial_ref {

SphereGraphStats graph_stats(const ExplicitGraph& g) {
    std::size_t max_deg = 0, max_t = 0;
    unsigned long long t_sum = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        max_deg = std::max(max_deg, g.adj[v].size());
        std::size_t t = neighborhood_edges(g, v);
        max_t = std::max(max_t, t);
        t_sum += t;
    }
    SphereGraphStats s;
    s.n_vertices = Count(static_cast<unsigned long>(g.vertex_count()));
    s.max_degree = Count(static_cast<unsigned long>(max_deg));
    s.neighborhood_edges_max = Count(static_cast<unsigned long>(max_t));
    s.triangle_count = Count(static_cast<unsigned long>(t_sum)).exact_div(Count(3u));
    return s;
}

}  // namespace serial_ref

namespace {

using detail::VertexSet;

// Branch and bound over independent sets. Candidates are greedily packed
// into cliques; a vertex in the k-th clique caps any independent set drawn
// from the first k cliques at k, which drives both the processing order and
// the prune test (the usual coloring argument, on the complement).
class MisSolver {
public:
    explicit MisSolver(const ExplicitGraph& g) : nv_(g.vertex_count()) {
        nbr_.reserve(nv_);
        for (std::size_t v = 0; v < nv_; ++v) {
            VertexSet s(nv_);
            for (auto u : g.adj[v]) s.set(u);
            nbr_.push_back(std::move(s));
        }
    }

    std::vector<std::uint32_t> solve() {
        best_ = greedy_from(0);
        for (std::size_t start = 1; start < std::min<std::size_t>(nv_, 64); ++start) {
            auto cand = greedy_from(start);
            if (cand.size() > best_.size()) best_ = cand;
        }
        VertexSet all(nv_);
        for (std::size_t v = 0; v < nv_; ++v) all.set(v);
        cur_.clear();
        expand(all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // maximal set grown in index order from a rotated start
    std::vector<std::uint32_t> greedy_from(std::size_t start) {
        std::vector<std::uint32_t> out;
        VertexSet open(nv_);
        for (std::size_t v = 0; v < nv_; ++v) open.set(v);
        for (std::size_t k = 0; k < nv_; ++k) {
            std::size_t v = (start + k) % nv_;
            if (!open.test(v)) continue;
            out.push_back(static_cast<std::uint32_t>(v));
            open.clear(v);
            open.and_not(nbr_[v]);
        }
        return out;
    }

    // greedy clique cover of p: `order` lists clique 1, then clique 2, ...,
    // `number` carries each vertex's 1-based clique index
    void clique_cover(const VertexSet& p, std::vector<std::uint32_t>& order,
                      std::vector<std::uint32_t>& number) const {
        order.clear();
        number.clear();
        VertexSet work = p;
        std::uint32_t k = 0;
        while (!work.empty()) {
            ++k;
            long v = work.first();
            work.clear(static_cast<std::size_t>(v));
            order.push_back(static_cast<std::uint32_t>(v));
            number.push_back(k);
            VertexSet cand = work;
            cand.and_with(nbr_[static_cast<std::size_t>(v)]);
            while (!cand.empty()) {
                long u = cand.first();
                work.clear(static_cast<std::size_t>(u));
                cand.clear(static_cast<std::size_t>(u));
                cand.and_with(nbr_[static_cast<std::size_t>(u)]);
                order.push_back(static_cast<std::uint32_t>(u));
                number.push_back(k);
            }
        }
    }

    void expand(const VertexSet& p) {
        if (p.empty()) {
            if (cur_.size() > best_.size()) best_ = cur_;
            return;
        }
        std::vector<std::uint32_t> order, number;
        clique_cover(p, order, number);
        VertexSet rest = p;
        // highest clique index first; any independent set inside the first
        // number[i] cliques has at most number[i] vertices
        for (std::size_t i = order.size(); i-- > 0;) {
            if (cur_.size() + number[i] <= best_.size()) return;
            std::uint32_t v = order[i];
            rest.clear(v);
            VertexSet next = rest;
            next.and_not(nbr_[v]);
            cur_.push_back(v);
            expand(next);
            cur_.pop_back();
        }
    }

    std::size_t nv_;
    std::vector<VertexSet> nbr_;
    std::vector<std::uint32_t> best_;
    std::vector<std::uint32_t> cur_;
};

}  // namespace

std::vector<std::uint32_t> exact_max_independent_set(const ExplicitGraph& g,
                                                     std::size_t max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw BudgetExceeded("exact_max_independent_set: vertex budget exceeded");
    if (g.vertex_count() == 0) return {};
    return MisSolver(g).solve();
}

Count brute_intersection_count(long n, long q, long w, long i, long j,
                               const BuildBudget& budget) {
    if (q < 2 || n < 0 || w < 0 || w > n)
        throw std::invalid_argument("brute_intersection_count: bad arguments");
    double space = std::pow(static_cast<double>(q), static_cast<double>(n));
    if (space > static_cast<double>(budget.max_vertices))
        throw BudgetExceeded("brute_intersection_count: q^n exceeds budget");
    Word u(static_cast<std::size_t>(n), 0);
    Word v(static_cast<std::size_t>(n), 0);
    for (long t = 0; t < w; ++t) v[static_cast<std::size_t>(t)] = 1;
    unsigned long count = 0;
    Word x(static_cast<std::size_t>(n), 0);
    while (true) {
        if (hamming_distance(x, u) == i && hamming_distance(x, v) == j) ++count;
        long pos = n - 1;
        while (pos >= 0 && ++x[static_cast<std::size_t>(pos)] == q) {
            x[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return Count(count);
}

Count brute_johnson_intersection_count(long n, long w, long i, long j, long k) {
    if (n < 0 || w < 0 || w > n)
        throw std::invalid_argument("brute_johnson_intersection_count: bad arguments");
    if (k > w || k > n - w) return Count(0u);  // no pair of centers exists
    Word a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
    for (long t = 0; t < w; ++t) a[static_cast<std::size_t>(t)] = 1;
    // b: drop the last k of supp(a), add the first k outside
    for (long t = 0; t < w - k; ++t) b[static_cast<std::size_t>(t)] = 1;
    for (long t = w; t < w + k; ++t) b[static_cast<std::size_t>(t)] = 1;
    auto words = enumerate_constant_weight(static_cast<int>(n), static_cast<int>(w),
                                           std::size_t(1) << 22);
    unsigned long count = 0;
    for (const auto& x : words) {
        if (hamming_distance(x, a) == 2 * i && hamming_distance(x, b) == 2 * j) ++count;
    }
    return Count(count);
}

void dump_edge_list(const ExplicitGraph& g, std::ostream& os) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
        for (auto v : g.adj[u])
            if (v > u) os << u << ' ' << v << '\n';
}

}  // namespace gv::oracle
