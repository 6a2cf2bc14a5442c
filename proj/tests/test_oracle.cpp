#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gv/combinatorics.hpp"
#include "gv/oracle.hpp"
#include "gv/sphere_graph.hpp"

#include <sstream>

using gv::CodeParams;
using gv::Count;
using namespace gv::oracle;

TEST_CASE("full distance graph on the 3-cube with d=2 is the cube itself") {
    auto g = gilbert_graph(CodeParams(3, 2));
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    for (const auto& a : g.adj) CHECK(a.size() == 3);
}

TEST_CASE("distance graphs are Delta-regular with Delta = V(n,d-1) - 1") {
    for (int n = 2; n <= 8; ++n)
        for (int d = 2; d <= n; ++d) {
            auto g = gilbert_graph(CodeParams(n, d));
            Count delta = gv::hamming_volume(n, d - 1) - Count(1u);
            for (const auto& a : g.adj)
                CHECK(Count(static_cast<unsigned long>(a.size())) == delta);
        }
    // q-ary spot check
    auto g3 = gilbert_graph(CodeParams(4, 3, 3));
    Count delta3 = gv::qary_volume(4, 2, 3) - Count(1u);
    for (const auto& a : g3.adj)
        CHECK(Count(static_cast<unsigned long>(a.size())) == delta3);
}

TEST_CASE("sphere graph (4,3): 10 vertices, 30 edges") {
    auto g = sphere_graph_explicit(CodeParams(4, 3));
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 30);
}

TEST_CASE("q-ary sphere graph (3,2,q=3): 6 vertices, 3 edges") {
    auto g = sphere_graph_explicit(CodeParams(3, 2, 3));
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("graph statistics: triangles, neighborhood edges, transitivity") {
    // sphere graph with d=2 has no edges at all
    auto flat = sphere_graph_explicit(CodeParams(5, 2));
    auto fs = graph_stats(flat);
    CHECK(fs.triangle_count == Count(0u));
    CHECK(fs.max_degree == Count(0u));

    // full graph (4,3): every neighborhood induces e(G_S) = 30 edges
    auto g = gilbert_graph(CodeParams(4, 3));
    auto s = graph_stats(g);
    CHECK(s.n_vertices == Count(16u));
    CHECK(s.neighborhood_edges_max == Count(30u));
    // T = n(G) * t / 3 for the vertex-transitive case
    CHECK(s.triangle_count == Count(16u * 30u).exact_div(Count(3u)));

    // parallel and serial statistics agree
    for (int n = 4; n <= 7; ++n)
        for (int d = 2; d <= n; ++d) {
            auto graph = gilbert_graph(CodeParams(n, d));
            auto a = graph_stats(graph);
            auto b = serial_ref::graph_stats(graph);
            CHECK(a.max_degree == b.max_degree);
            CHECK(a.neighborhood_edges_max == b.neighborhood_edges_max);
            CHECK(a.triangle_count == b.triangle_count);
        }
}

TEST_CASE("triangle bound T <= n t / 3 on sphere graphs") {
    for (int n = 4; n <= 8; ++n)
        for (int d = 3; d <= n; ++d) {
            auto g = sphere_graph_explicit(CodeParams(n, d));
            auto s = graph_stats(g);
            mpz_class lhs = s.triangle_count.z() * 3;
            mpz_class rhs = s.n_vertices.z() * s.neighborhood_edges_max.z();
            CHECK(lhs <= rhs);
        }
}

TEST_CASE("exact maximum independent set: tiny graphs") {
    // edgeless graph: everything is independent
    auto flat = sphere_graph_explicit(CodeParams(5, 2));
    CHECK(exact_max_independent_set(flat).size() == flat.vertex_count());

    // complete graph: weights 1..2 of the 3-cube under distance <= 2
    auto complete = sphere_graph_explicit(CodeParams(3, 3));
    CHECK(complete.vertex_count() == 6);
    CHECK(exact_max_independent_set(complete).size() == 1);
}

TEST_CASE("exact maximum independent set equals the known optimum") {
    auto alpha = [](int n, int d) {
        auto g = gilbert_graph(CodeParams(n, d));
        return exact_max_independent_set(g).size();
    };
    CHECK(alpha(4, 3) == 2);
    CHECK(alpha(5, 3) == 4);
    CHECK(alpha(6, 3) == 8);
    CHECK(alpha(7, 3) == 16);
    CHECK(alpha(8, 3) == 20);
    CHECK(alpha(6, 4) == 4);
    CHECK(alpha(7, 4) == 8);
    CHECK(alpha(8, 4) == 16);
    CHECK(alpha(8, 5) == 4);
    CHECK(alpha(8, 6) == 2);
    CHECK(alpha(8, 2) == 128);
}

TEST_CASE("independent sets in the distance graph are codes") {
    auto g = gilbert_graph(CodeParams(5, 3));
    auto set = exact_max_independent_set(g);
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            CHECK(hamming_distance(g.labels[set[a]], g.labels[set[b]]) >= 3);
}

TEST_CASE("independent set budget is enforced") {
    auto g = gilbert_graph(CodeParams(8, 3));
    CHECK_THROWS_AS(exact_max_independent_set(g, 100), gv::BudgetExceeded);
}

TEST_CASE("johnson graphs") {
    // Johnson graph J(6,2): 15 vertices, degree w(n-w) = 8
    CodeParams p(6, 2, 2, 2);
    auto g = johnson_gilbert_graph(p);
    CHECK(g.vertex_count() == 15);
    for (const auto& a : g.adj) CHECK(a.size() == 8);

    // its punctured neighborhood: 8 vertices, 16 edges
    auto s = johnson_sphere_graph(p);
    CHECK(s.vertex_count() == 8);
    CHECK(s.edge_count() == 16);
    CHECK(Count(static_cast<unsigned long>(s.edge_count())) ==
          gv::johnson_sphere_edge_count(6, 2, 2));
}

TEST_CASE("brute-force intersection counts") {
    CHECK(brute_intersection_count(4, 2, 2, 1, 1) == Count(2u));
    for (int n = 2; n <= 5; ++n)
        for (int w = 0; w <= n; ++w)
            CHECK(brute_intersection_count(n, 2, w, 0, w) == Count(1u));
    CHECK_THROWS_AS(brute_intersection_count(40, 2, 1, 1, 1), gv::BudgetExceeded);
}

TEST_CASE("edge list dump format") {
    auto g = sphere_graph_explicit(CodeParams(3, 2));
    std::ostringstream os;
    dump_edge_list(g, os);
    std::istringstream is(os.str());
    std::size_t nv, ne;
    is >> nv >> ne;
    CHECK(nv == g.vertex_count());
    CHECK(ne == g.edge_count());
    std::size_t lines = 0;
    std::uint32_t a, b;
    while (is >> a >> b) {
        CHECK(a < b);
        CHECK(g.adjacent(a, b));
        ++lines;
    }
    CHECK(lines == ne);
}

TEST_CASE("vertex budget on construction") {
    CHECK_THROWS_AS(gilbert_graph(CodeParams(24, 3), BuildBudget{1u << 20}),
                    gv::BudgetExceeded);
}
