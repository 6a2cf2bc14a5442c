#pragma once

#include "gv/combinatorics.hpp"
#include "gv/params.hpp"

namespace gv {

// Degree of a weight-w vertex of the sphere graph: the subgraph of the
// distance graph induced by the punctured ball of radius d-1 around 0.
// Requires 1 <= w <= d-1.
Count sphere_degree(const CodeParams& p, int w);

// Same for a q-ary alphabet; reduces to sphere_degree at q=2.
Count qary_sphere_degree(const CodeParams& p, int w);

// Degree of a vertex at Johnson distance k from the puncture center, in the
// constant-weight sphere graph with half-distance parameter p.d.
Count johnson_sphere_degree(long n, long d, long w, long k);

// Exact number of edges of the sphere graph, assembled from per-weight
// degrees (binary or q-ary depending on p.q). The halving is asserted exact.
Count sphere_edge_count(const CodeParams& p);

// Edge count of the constant-weight sphere graph (vertices at Johnson
// distance 1..d-1 from a fixed weight-w word, adjacency 2 <= d_H <= 2(d-1)).
Count johnson_sphere_edge_count(long n, long d, long w);

// One third of the sphere-graph edge count, i.e. the per-vertex triangle
// count of the distance graph with radius parameter d. Computed by its own
// triple-sum kernel (OpenMP over the outer weight), independent of
// sphere_edge_count; the division by 6 is asserted exact.
Count edge_third(long n, long d);

// q-ary analogue. Not always an integer when 3 | q, so the value is exact
// rational; 3 * edge_third_qary equals the sphere-graph edge count.
Rational edge_third_qary(long n, long d, long q);

// Constant-weight analogue (Johnson scheme); exact rational for the same
// reason.
Rational edge_third_johnson(long n, long d, long w);

// Split of the degree-sum into light weights [1, floor(lambda d') - 1] and
// heavy weights [floor(lambda d'), d']. Satisfies exactly:
//   e1 + e2 = 2 * sphere_edge_count + sum_{i=1}^{d'} C(n,i)
struct SplitCounts {
    Count e1;
    Count e2;
    long boundary;  // first heavy weight
};
SplitCounts split_e1_e2(const CodeParams& p, const SplitParams& s);

// log2-domain upper bounds for the split pieces (entropy estimates).
struct EntropyExponents {
    double e1_exponent;  // n (H2(delta) + H2(lambda delta))
    double h1_exponent;  // light part of the boundary-weight degree
    double h2_exponent;  // heavy part, includes the n*lambda*delta prefactor
    double e2_exponent;  // combined bound on e2, prefactor n*lambda*delta + 1
};
EntropyExponents entropy_upper_bounds(const CodeParams& p, const SplitParams& s);

// ceil( (1/2) sum_{w=1}^{n/2} C(n,w) ): lower bound on deg(v)+1 for vertices
// of weight n/2 when d' = n/2. Requires n even.
Count heavy_weight_degree_floor(int n);

// Plain single-threaded counterparts of the OpenMP kernels, kept as
// references for the tests and the benchmark.
namespace serial_ref {
Count edge_third(long n, long d);
Rational edge_third_qary(long n, long d, long q);
Rational edge_third_johnson(long n, long d, long w);
}  // namespace serial_ref

}  // namespace gv
