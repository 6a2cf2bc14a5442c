#pragma once

#include "gv/oracle.hpp"
#include "gv/params.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace gv {

// An explicit code with its verified minimum distance. min_distance is n+1
// (no pair exists) when the book holds fewer than two words.
struct Codebook {
    CodeParams params;
    std::vector<oracle::Word> words;
    int min_distance = 0;
};

// Greedy lexicographic construction: words admitted in lexicographic order
// whenever they are at distance >= d from everything admitted so far. The
// result is a maximal independent set of the distance graph, so its size is
// at least ceil(q^n / V_q(n,d-1)).
Codebook greedy_lexicode(const CodeParams& p, std::size_t max_space = std::size_t(1) << 20);

// Independent set via triangle removal plus randomized greedy:
//  1. delete the vertex in the most triangles (ties: lowest label) until the
//     remainder is triangle-free;
//  2. `trials` rounds of random maximal-set growth on the remainder, seeded
//     deterministically from `seed`;
//  3. extend the best set to a maximal independent set of the original
//     graph in label order (this secures the ceil(n/(Delta+1)) floor).
// Same seed, same output. Best-of: max size, ties by smallest word list.
Codebook hl_independent_set(const oracle::ExplicitGraph& g, std::uint64_t seed, int trials = 32);

// Exact pairwise minimum distance (plus alphabet/length/weight checks);
// updates book.min_distance and returns it. Throws on duplicate words.
int verify_code(Codebook& book);

// Proper coloring of the graph on binary words where vertices at Hamming
// distance <= d share no color. colors[x] indexes by word value.
struct Coloring {
    int n;
    int d;
    std::vector<std::uint32_t> colors;
    std::uint32_t n_colors;
};

// First-fit in lexicographic order. Uses at most V(n,d) colors.
Coloring greedy_distance_coloring(int n, int d, std::size_t max_space = std::size_t(1) << 20);

// exhaustive pair check
bool verify_coloring(const Coloring& c);

// "# n=<n> d=<d> q=<q> [w=<w>] size=<k> mindist=<v>", optional "# seed=<s>",
// then one word per line as digits over 0..q-1.
void write_codebook(const Codebook& book, std::ostream& os,
                    std::optional<std::uint64_t> seed = std::nullopt);
Codebook read_codebook(std::istream& is);

}  // namespace gv
