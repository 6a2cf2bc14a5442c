#include "gv/construct.hpp"

#include "gv/combinatorics.hpp"
#include "gv/detail/bitset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace gv {

using oracle::Word;

namespace {

Word word_from_value(std::uint64_t value, int n, int q) {
    Word w(static_cast<std::size_t>(n), 0);
    for (int pos = n - 1; pos >= 0; --pos) {
        w[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(value % q);
        value /= static_cast<std::uint64_t>(q);
    }
    return w;
}

std::uint64_t value_of_word(const Word& w, int q) {
    std::uint64_t v = 0;
    for (auto s : w) v = v * static_cast<std::uint64_t>(q) + s;
    return v;
}

// mark every word within distance `radius` of `word` in `blocked`
void block_ball(const Word& word, int radius, int q, std::vector<bool>& blocked) {
    blocked[value_of_word(word, q)] = true;
    if (radius == 0) return;
    int n = static_cast<int>(word.size());
    Word scratch = word;
    // choose k positions to change, k = 1..radius
    std::vector<int> stack;
    auto recurse = [&](auto&& self, int remaining, int from) -> void {
        if (remaining == 0) {
            blocked[value_of_word(scratch, q)] = true;
            return;
        }
        for (int pos = from; pos + remaining <= n; ++pos) {
            std::uint8_t save = scratch[static_cast<std::size_t>(pos)];
            for (int sym = 0; sym < q; ++sym) {
                if (sym == save) continue;
                scratch[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(sym);
                self(self, remaining - 1, pos + 1);
            }
            scratch[static_cast<std::size_t>(pos)] = save;
        }
    };
    for (int k = 1; k <= radius; ++k) recurse(recurse, k, 0);
}

}  // namespace

Codebook greedy_lexicode(const CodeParams& p, std::size_t max_space) {
    double space_d = std::pow(static_cast<double>(p.q), p.n);
    if (space_d > static_cast<double>(max_space))
        throw BudgetExceeded("greedy_lexicode: q^n exceeds budget");
    std::uint64_t space = static_cast<std::uint64_t>(space_d + 0.5);
    std::vector<bool> blocked(space, false);
    Codebook book{p, {}, 0};
    for (std::uint64_t value = 0; value < space; ++value) {
        if (blocked[value]) continue;
        Word w = word_from_value(value, p.n, p.q);
        block_ball(w, p.d - 1, p.q, blocked);
        book.words.push_back(std::move(w));
    }
    verify_code(book);
    return book;
}

namespace {

using detail::VertexSet;

struct TriangleFreeReduction {
    VertexSet alive;
    std::vector<VertexSet> nbr;
};

TriangleFreeReduction remove_triangles(const oracle::ExplicitGraph& g) {
    const std::size_t nv = g.vertex_count();
    TriangleFreeReduction red{VertexSet(nv), {}};
    red.nbr.reserve(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        red.alive.set(v);
        VertexSet s(nv);
        for (auto u : g.adj[v]) s.set(u);
        red.nbr.push_back(std::move(s));
    }
    // triangles through each vertex
    std::vector<long> tri(nv, 0);
    long live_triangles = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        long t = 0;
        for (auto u : g.adj[v]) t += static_cast<long>(red.nbr[v].count_and(red.nbr[u]));
        tri[v] = t / 2;  // each triangle through v counted for both other corners
        live_triangles += tri[v];
    }
    live_triangles /= 3;
    while (live_triangles > 0) {
        std::size_t pick = nv;
        long best = -1;
        for (std::size_t v = 0; v < nv; ++v) {
            if (!red.alive.test(v)) continue;
            if (tri[v] > best) {
                best = tri[v];
                pick = v;
            }
        }
        if (best <= 0) break;
        red.alive.clear(pick);
        live_triangles -= tri[pick];
        tri[pick] = 0;
        // triangles (pick, x, y) vanish for every alive neighbor x
        VertexSet live_nbr = red.nbr[pick];
        live_nbr.and_with(red.alive);
        for (std::size_t x = 0; x < nv; ++x) {
            if (!live_nbr.test(x)) continue;
            VertexSet common = red.nbr[pick];
            common.and_with(red.nbr[x]);
            common.and_with(red.alive);
            tri[x] -= static_cast<long>(common.count());
        }
    }
    return red;
}

std::vector<std::uint32_t> random_greedy_set(const TriangleFreeReduction& red, std::size_t nv,
                                             std::mt19937_64& rng) {
    std::vector<std::uint32_t> chosen;
    VertexSet open = red.alive;
    std::vector<std::uint32_t> candidates;
    candidates.reserve(nv);
    for (std::size_t v = 0; v < nv; ++v)
        if (open.test(v)) candidates.push_back(static_cast<std::uint32_t>(v));
    while (!candidates.empty()) {
        std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
        std::uint32_t v = candidates[dist(rng)];
        chosen.push_back(v);
        open.clear(v);
        open.and_not(red.nbr[v]);
        std::vector<std::uint32_t> next;
        next.reserve(candidates.size());
        for (auto u : candidates)
            if (open.test(u)) next.push_back(u);
        candidates.swap(next);
    }
    return chosen;
}

}  // namespace

Codebook hl_independent_set(const oracle::ExplicitGraph& g, std::uint64_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("hl_independent_set: trials must be >= 1");
    const std::size_t nv = g.vertex_count();
    if (nv == 0) throw std::invalid_argument("hl_independent_set: empty graph");
    TriangleFreeReduction red = remove_triangles(g);

    std::vector<std::vector<std::uint32_t>> results(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1));
        auto set = random_greedy_set(red, nv, rng);
        // extend to a maximal independent set of the original graph
        VertexSet forbidden(nv);
        for (auto v : set) {
            forbidden.set(v);
            forbidden.or_with(red.nbr[v]);
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (forbidden.test(v)) continue;
            set.push_back(static_cast<std::uint32_t>(v));
            forbidden.set(v);
            forbidden.or_with(red.nbr[v]);
        }
        std::sort(set.begin(), set.end());
        results[static_cast<std::size_t>(t)] = std::move(set);
    }

    // best of: max size, ties by lexicographically smallest index list
    std::size_t win = 0;
    for (std::size_t t = 1; t < results.size(); ++t) {
        if (results[t].size() > results[win].size() ||
            (results[t].size() == results[win].size() && results[t] < results[win]))
            win = t;
    }
    const auto& set = results[win];

    // independence in the original graph
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (g.adjacent(set[a], set[b]))
                throw std::logic_error("hl_independent_set: output not independent");
    std::size_t max_deg = 0;
    for (const auto& l : g.adj) max_deg = std::max(max_deg, l.size());
    std::size_t floor = (nv + max_deg) / (max_deg + 1);  // ceil(nv / (Delta+1))
    if (set.size() < floor)
        throw std::logic_error("hl_independent_set: below the maximal-set floor");

    int d = g.w ? g.dist_hi / 2 + 1 : g.dist_hi + 1;
    CodeParams p(g.n, d, g.q, g.w);
    Codebook book{p, {}, 0};
    book.words.reserve(set.size());
    for (auto v : set) book.words.push_back(g.labels[v]);
    verify_code(book);
    return book;
}

int verify_code(Codebook& book) {
    const auto& p = book.params;
    for (const auto& w : book.words) {
        if (static_cast<int>(w.size()) != p.n)
            throw std::invalid_argument("verify_code: wrong word length");
        for (auto s : w)
            if (s >= p.q) throw std::invalid_argument("verify_code: symbol outside alphabet");
        if (p.w && oracle::weight(w) != *p.w)
            throw std::invalid_argument("verify_code: wrong constant weight");
    }
    if (book.words.size() < 2) {
        book.min_distance = p.n + 1;
        return book.min_distance;
    }
    long best = p.n + 1;
    if (p.q == 2 && p.n <= 64) {
        std::vector<std::uint64_t> packed;
        packed.reserve(book.words.size());
        for (const auto& w : book.words) {
            std::uint64_t v = 0;
            for (auto s : w) v = (v << 1) | s;
            packed.push_back(v);
        }
        for (std::size_t a = 0; a < packed.size(); ++a)
            for (std::size_t b = a + 1; b < packed.size(); ++b) {
                long d = std::popcount(packed[a] ^ packed[b]);
                if (d == 0) throw std::invalid_argument("verify_code: duplicate words");
                best = std::min(best, d);
            }
    } else {
        for (std::size_t a = 0; a < book.words.size(); ++a)
            for (std::size_t b = a + 1; b < book.words.size(); ++b) {
                long d = oracle::hamming_distance(book.words[a], book.words[b]);
                if (d == 0) throw std::invalid_argument("verify_code: duplicate words");
                best = std::min(best, d);
            }
    }
    book.min_distance = static_cast<int>(best);
    return book.min_distance;
}

Coloring greedy_distance_coloring(int n, int d, std::size_t max_space) {
    if (n < 1 || d < 1 || d > n)
        throw std::invalid_argument("greedy_distance_coloring: bad arguments");
    if (n >= 63 || (std::uint64_t(1) << n) > max_space)
        throw BudgetExceeded("greedy_distance_coloring: 2^n exceeds budget");
    const std::uint64_t space = std::uint64_t(1) << n;
    std::vector<std::uint32_t> colors(space, 0);
    std::uint32_t n_colors = 0;
    std::vector<std::uint64_t> ball;  // xor masks of weight 1..d
    for (std::uint64_t m = 1; m < space; ++m)
        if (std::popcount(m) <= d) ball.push_back(m);
    std::vector<bool> used;
    for (std::uint64_t x = 0; x < space; ++x) {
        used.assign(n_colors + 1, false);
        for (auto m : ball) {
            std::uint64_t y = x ^ m;
            if (y < x) used[colors[y]] = true;
        }
        std::uint32_t c = 0;
        while (c < used.size() && used[c]) ++c;
        colors[x] = c;
        n_colors = std::max(n_colors, c + 1);
    }
    Count cap = hamming_volume(n, d);
    if (Count(static_cast<unsigned long>(n_colors)) > cap)
        throw std::logic_error("greedy_distance_coloring: exceeded the V(n,d) color cap");
    return Coloring{n, d, std::move(colors), n_colors};
}

bool verify_coloring(const Coloring& c) {
    const std::uint64_t space = std::uint64_t(1) << c.n;
    for (std::uint64_t x = 0; x < space; ++x)
        for (std::uint64_t y = x + 1; y < space; ++y)
            if (std::popcount(x ^ y) <= c.d && c.colors[x] == c.colors[y]) return false;
    return true;
}

void write_codebook(const Codebook& book, std::ostream& os, std::optional<std::uint64_t> seed) {
    os << "# n=" << book.params.n << " d=" << book.params.d << " q=" << book.params.q;
    if (book.params.w) os << " w=" << *book.params.w;
    os << " size=" << book.words.size() << " mindist=" << book.min_distance << '\n';
    if (seed) os << "# seed=" << *seed << '\n';
    for (const auto& w : book.words) {
        for (auto s : w) os << static_cast<char>('0' + s);
        os << '\n';
    }
}

Codebook read_codebook(std::istream& is) {
    std::string line;
    std::optional<CodeParams> params;
    int mindist = 0;
    std::vector<Word> words;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (params) continue;  // metadata lines after the header
            int n = -1, d = -1, q = 2, w = -1;
            std::istringstream ls(line.substr(1));
            std::string tok;
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                std::string key = tok.substr(0, eq);
                long val = std::stol(tok.substr(eq + 1));
                if (key == "n") n = static_cast<int>(val);
                else if (key == "d") d = static_cast<int>(val);
                else if (key == "q") q = static_cast<int>(val);
                else if (key == "w") w = static_cast<int>(val);
                else if (key == "mindist") mindist = static_cast<int>(val);
            }
            if (n < 1 || d < 1) throw std::invalid_argument("read_codebook: bad header");
            params = CodeParams(n, d, q, w >= 0 ? std::optional<int>(w) : std::nullopt);
            continue;
        }
        if (!params) throw std::invalid_argument("read_codebook: missing header");
        Word w;
        w.reserve(line.size());
        for (char ch : line) {
            if (ch == '\r') continue;
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("read_codebook: bad symbol in word");
            w.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        words.push_back(std::move(w));
    }
    if (!params) throw std::invalid_argument("read_codebook: empty file");
    return Codebook{*params, std::move(words), mindist};
}

}  // namespace gv
