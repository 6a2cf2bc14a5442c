#pragma once

#include "gv/count.hpp"

#include <vector>

namespace gv {

// C(n,k); 0 outside 0 <= k <= n, so sums may run over formally empty ranges.
Count binomial(long n, long k);

// V(n,d) = sum_{i=0}^{min(d,n)} C(n,i), the volume of a Hamming ball.
Count hamming_volume(long n, long d);

// V_q(n,d) = sum_{i=0}^{min(d,n)} C(n,i)(q-1)^i, q >= 2.
Count qary_volume(long n, long d, long q);

// V(n,d,w) = sum_{i=0}^{d} C(w,i) C(n-w,i), ball volume in the Johnson metric.
Count johnson_volume(long n, long d, long w);

// H2(x) = -x log2 x - (1-x) log2(1-x), with H2(0)=H2(1)=0.
double binary_entropy(double x);

// Number of words x with d(x,u)=i and d(x,v)=j over an alphabet of size q,
// given two centers u,v at distance w. Returns 0 for infeasible triples.
Count hamming_intersection_number(long n, long q, long w, long i, long j);

// Johnson-scheme analogue on weight-w binary words: number of X at Johnson
// distance i from A and j from B, where A and B are at Johnson distance k.
Count johnson_intersection_number(long n, long w, long i, long j, long k);

// |B(u,r) ∩ B(v,r)| for binary Hamming balls whose centers are `dist` apart,
// assembled from intersection numbers.
Count sphere_intersection_volume(long n, long r, long dist);

// Alternate closed form for the same intersection volume at radius d-w and
// center distance d, evaluated exactly as displayed in the literature. It
// disagrees with the enumerative definition (the binomials appear to use the
// wrong center weight); the tests report both values side by side.
Count sphere_intersection_volume_alt(long n, long w, long d);

// Dense Pascal triangle up to row n_max, for the inner loops of the counting
// kernels. Rows are immutable after construction and safe to share.
class BinomialTable {
public:
    explicit BinomialTable(long n_max);
    const mpz_class& operator()(long n, long k) const {
        static const mpz_class zero(0);
        if (k < 0 || n < 0 || k > n) return zero;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    long n_max() const { return n_max_; }

private:
    long n_max_;
    std::vector<std::vector<mpz_class>> rows_;
};

}  // namespace gv
