#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gv/combinatorics.hpp"
#include "gv/oracle.hpp"
#include "gv/sphere_graph.hpp"

#include <map>

using gv::CodeParams;
using gv::Count;
using gv::Rational;
using gv::SplitParams;

namespace {

// per-weight degrees of an explicit graph; every vertex of a weight class
// must have the same degree for the closed form to be meaningful
std::map<long, long> degrees_by_weight(const gv::oracle::ExplicitGraph& g) {
    std::map<long, long> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        long w = gv::oracle::weight(g.labels[v]);
        long deg = static_cast<long>(g.adj[v].size());
        auto it = out.find(w);
        if (it == out.end())
            out[w] = deg;
        else
            REQUIRE(it->second == deg);
    }
    return out;
}

}  // namespace

TEST_CASE("sphere degree: pinned values") {
    CHECK(gv::sphere_degree(CodeParams(3, 2), 1) == Count(0u));
    CHECK(gv::sphere_degree(CodeParams(4, 3), 1) == Count(6u));
    CHECK(gv::sphere_degree(CodeParams(4, 3), 2) == Count(6u));
    CHECK_THROWS_AS(gv::sphere_degree(CodeParams(4, 3), 0), std::invalid_argument);
    CHECK_THROWS_AS(gv::sphere_degree(CodeParams(4, 3), 3), std::invalid_argument);
}

TEST_CASE("sphere degrees and edge counts match enumeration (n <= 8)") {
    for (int n = 2; n <= 8; ++n)
        for (int d = 2; d <= n; ++d) {
            CodeParams p(n, d);
            auto g = gv::oracle::sphere_graph_explicit(p);
            auto by_weight = degrees_by_weight(g);
            for (auto [w, deg] : by_weight)
                CHECK(gv::sphere_degree(p, static_cast<int>(w)) ==
                      Count(static_cast<unsigned long>(deg)));
            CHECK(gv::sphere_edge_count(p) ==
                  Count(static_cast<unsigned long>(g.edge_count())));
        }
}

TEST_CASE("edge third: pinned values and identity with the edge count") {
    CHECK(gv::edge_third(4, 2) == Count(10u));
    CHECK(gv::edge_third(4, 2) == gv::sphere_edge_count(CodeParams(4, 3)).exact_div(Count(3u)));
    for (int n = 1; n <= 12; ++n) CHECK(gv::edge_third(n, 0) == Count(0u));
    // one third of the brute-force edge count
    auto g = gv::oracle::sphere_graph_explicit(CodeParams(6, 4));
    CHECK(gv::edge_third(6, 3) * Count(3u) ==
          Count(static_cast<unsigned long>(g.edge_count())));
    // the closed-form identity at every small size
    for (int n = 2; n <= 10; ++n)
        for (int d = 2; d <= n; ++d)
            CHECK(gv::edge_third(n, d - 1) * Count(3u) ==
                  gv::sphere_edge_count(CodeParams(n, d)));
}

TEST_CASE("parallel kernels agree with the serial references") {
    for (int n : {9, 17, 33})
        for (int d = 0; d <= n; d += 3)
            CHECK(gv::edge_third(n, d) == gv::serial_ref::edge_third(n, d));
    for (int q : {2, 3, 5})
        for (int n : {6, 11})
            for (int d = 0; d <= n; d += 2)
                CHECK(gv::edge_third_qary(n, d, q) == gv::serial_ref::edge_third_qary(n, d, q));
    for (int n : {8, 12})
        for (int w = 1; w <= n / 2; ++w)
            for (int d = 0; d <= w; ++d)
                CHECK(gv::edge_third_johnson(n, d, w) ==
                      gv::serial_ref::edge_third_johnson(n, d, w));
}

TEST_CASE("q-ary sphere degree: reduction and pinned values") {
    // q = 2 reduces exactly to the binary formula
    for (int n = 2; n <= 8; ++n)
        for (int d = 2; d <= n; ++d)
            for (int w = 1; w <= d - 1; ++w)
                CHECK(gv::qary_sphere_degree(CodeParams(n, d, 2), w) ==
                      gv::sphere_degree(CodeParams(n, d), w));
    CHECK(gv::qary_sphere_degree(CodeParams(3, 2, 3), 1) == Count(1u));
    // brute-force check at (4,3,q=3)
    CodeParams p(4, 3, 3);
    auto g = gv::oracle::sphere_graph_explicit(p);
    auto by_weight = degrees_by_weight(g);
    for (auto [w, deg] : by_weight)
        CHECK(gv::qary_sphere_degree(p, static_cast<int>(w)) ==
              Count(static_cast<unsigned long>(deg)));
}

TEST_CASE("q-ary degrees and edges match enumeration for q <= 4, n <= 5") {
    for (int q = 3; q <= 4; ++q)
        for (int n = 2; n <= 5; ++n)
            for (int d = 2; d <= n; ++d) {
                CodeParams p(n, d, q);
                auto g = gv::oracle::sphere_graph_explicit(p);
                auto by_weight = degrees_by_weight(g);
                for (auto [w, deg] : by_weight)
                    CHECK(gv::qary_sphere_degree(p, static_cast<int>(w)) ==
                          Count(static_cast<unsigned long>(deg)));
                CHECK(gv::sphere_edge_count(p) ==
                      Count(static_cast<unsigned long>(g.edge_count())));
            }
}

TEST_CASE("q-ary edge third") {
    CHECK(gv::edge_third_qary(3, 1, 3) == Rational(Count(1u)));
    // binary reduction is exact
    for (int n = 1; n <= 8; ++n)
        for (int d = 0; d <= n; ++d)
            CHECK(gv::edge_third_qary(n, d, 2) == Rational(gv::edge_third(n, d)));
    // brute-force thirds, including a case where the value is not integral
    auto g = gv::oracle::sphere_graph_explicit(CodeParams(4, 3, 4));
    CHECK(gv::edge_third_qary(4, 2, 4) * Rational(3, 1) ==
          Rational(Count(static_cast<unsigned long>(g.edge_count()))));
    CHECK(gv::edge_third_qary(2, 1, 3) == Rational(2, 3));
    auto g3 = gv::oracle::sphere_graph_explicit(CodeParams(2, 2, 3));
    CHECK(g3.edge_count() == 2);
}

TEST_CASE("johnson edge third and sphere edges") {
    // e(G_S) = 16 at (n=6, d=2, w=2); one third of it is not an integer
    CHECK(gv::edge_third_johnson(6, 1, 2) == Rational(16, 3));
    CHECK(gv::johnson_sphere_edge_count(6, 2, 2) == Count(16u));
    for (int n = 1; n <= 10; ++n)
        for (int w = 1; w <= n; ++w) CHECK(gv::edge_third_johnson(n, 0, w) == Rational(0, 1));
    // brute force across the small grid
    for (int n = 4; n <= 8; ++n)
        for (int w = 1; 2 * w <= n; ++w)
            for (int d = 1; d <= w; ++d) {
                CodeParams p(n, d, 2, w);
                auto g = gv::oracle::johnson_sphere_graph(p);
                Count edges(static_cast<unsigned long>(g.edge_count()));
                CHECK(gv::johnson_sphere_edge_count(n, d, w) == edges);
                CHECK(gv::edge_third_johnson(n, d - 1, w) * Rational(3, 1) ==
                      Rational(edges));
                // per-vertex degrees by distance class from the center
                gv::oracle::Word center(n, 0);
                for (int t = 0; t < w; ++t) center[t] = 1;
                for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                    long k = gv::oracle::hamming_distance(g.labels[v], center) / 2;
                    CHECK(gv::johnson_sphere_degree(n, d, w, k) ==
                          Count(static_cast<unsigned long>(g.adj[v].size())));
                }
            }
}

TEST_CASE("weight split: exact identity") {
    // e1 + e2 = 2 e(G_S) + sum_{i=1}^{d'} C(n,i)
    auto check_split = [](int n, int d, const char* lambda) {
        CodeParams p(n, d);
        SplitParams s = SplitParams::from_decimal(lambda, 1e-6);
        auto split = gv::split_e1_e2(p, s);
        Count rhs = gv::sphere_edge_count(p) * Count(2u);
        for (int i = 1; i <= d - 1; ++i) rhs += gv::binomial(n, i);
        CHECK(split.e1 + split.e2 == rhs);
    };
    check_split(10, 5, "0.75");
    for (int d = 2; d <= 4; ++d)
        for (const char* lam : {"0.7", "0.8", "0.9"}) check_split(9, d, lam);

    // boundary collapses to 1 when floor(lambda d') = 0: e1 is the empty sum
    CodeParams p(5, 2);
    auto split = gv::split_e1_e2(p, SplitParams::from_decimal("0.9", 1e-6));
    CHECK(split.e1 == Count(0u));
    CHECK(split.boundary == 1);

    // the boundary weight is decided exactly, not in floating point
    CHECK(SplitParams::from_decimal("0.7", 1e-6).boundary_weight(10) == 7);
}

TEST_CASE("entropy upper bounds dominate the exact split counts") {
    CodeParams p(20, 9);
    SplitParams s = SplitParams::from_decimal("0.75", 1e-6);
    auto split = gv::split_e1_e2(p, s);
    auto exps = gv::entropy_upper_bounds(p, s);
    CHECK(gv::log2_of(split.e1).log2 <= exps.e1_exponent + 1e-6);
    CHECK(gv::log2_of(split.e2).log2 <= exps.e2_exponent + 1e-6);
    // the boundary-weight degree is bounded by the h1 + h2 pieces
    Count deg = gv::sphere_degree(p, static_cast<int>(split.boundary)) + Count(1u);
    double bound = std::log2(std::exp2(exps.h1_exponent) + std::exp2(exps.h2_exponent));
    CHECK(gv::log2_of(deg).log2 <= bound + 1e-6);
    CHECK_THROWS_AS(gv::entropy_upper_bounds(CodeParams(10, 6), s), std::invalid_argument);
}

TEST_CASE("degree is non-increasing in the vertex weight") {
    for (int n = 2; n <= 20; ++n)
        for (int d = 2; 2 * d <= n; ++d) {
            CodeParams p(n, d);
            Count prev = gv::sphere_degree(p, 1);
            for (int w = 2; w <= d - 1; ++w) {
                Count cur = gv::sphere_degree(p, w);
                CHECK(cur <= prev);
                prev = cur;
            }
        }
}

TEST_CASE("heavy-weight degree floor") {
    CHECK(gv::heavy_weight_degree_floor(4) == Count(5u));
    CHECK(gv::heavy_weight_degree_floor(6) == Count(21u));
    CHECK(gv::heavy_weight_degree_floor(2) == Count(1u));
    CHECK_THROWS_AS(gv::heavy_weight_degree_floor(5), std::invalid_argument);
    // brute force: every vertex of weight n/2 in the d' = n/2 sphere graph
    // has deg(v) + 1 at least the floor
    for (int n = 4; n <= 10; n += 2) {
        CodeParams p(n, n / 2 + 1);
        auto g = gv::oracle::sphere_graph_explicit(p);
        Count floor = gv::heavy_weight_degree_floor(n);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (gv::oracle::weight(g.labels[v]) != n / 2) continue;
            Count deg_plus(static_cast<unsigned long>(g.adj[v].size() + 1));
            CHECK(deg_plus >= floor);
        }
    }
}
