#include "gv/sphere_graph.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gv {

namespace {

// sum over i = 1..radius of the number of weight-i words within distance
// `radius` of a fixed weight-w word (the fixed word itself included once).
mpz_class degree_sum_with_self(long n, long radius, long w, const BinomialTable& bt) {
    mpz_class acc(0);
    long top = std::min(radius, n);
    for (long i = 1; i <= top; ++i) {
        long j_lo = ceil_plus(w + i - radius, 2);
        long j_hi = std::min(w, i);
        for (long j = j_lo; j <= j_hi; ++j)
            acc += bt(w, j) * bt(n - w, i - j);
    }
    return acc;
}

mpz_class qary_degree_sum_with_self(long n, long radius, long q, long w,
                                    const BinomialTable& bt,
                                    const std::vector<mpz_class>& pow_qm1,
                                    const std::vector<mpz_class>& pow_qm2) {
    mpz_class acc(0);
    long top = std::min(radius, n);
    for (long i = 1; i <= top; ++i) {
        long a = std::min(w, i);
        for (long j = 0; j <= a; ++j) {
            long b = std::max(0L, (w + i) - j - std::min(radius + j, n));
            for (long k = b; k <= a - j; ++k) {
                long c = j + k;
                if (i - c < 0 || i - c > n - w) continue;
                acc += bt(w, j) * bt(w - j, k) * bt(n - w, i - c) *
                       pow_qm2[static_cast<std::size_t>(k)] *
                       pow_qm1[static_cast<std::size_t>(i - c)];
            }
        }
    }
    return acc;
}

std::vector<mpz_class> powers(long base, long up_to) {
    std::vector<mpz_class> p(static_cast<std::size_t>(up_to) + 1);
    p[0] = 1;
    for (long e = 1; e <= up_to; ++e) p[static_cast<std::size_t>(e)] = p[e - 1] * base;
    return p;
}

}  // namespace

Count sphere_degree(const CodeParams& p, int w) {
    long dp = p.d_prime();
    if (w < 1 || w > dp)
        throw std::invalid_argument("sphere_degree: vertex weight outside [1, d-1]");
    BinomialTable bt(p.n);
    mpz_class s = degree_sum_with_self(p.n, dp, w, bt);
    return Count(mpz_class(s - 1));
}

Count qary_sphere_degree(const CodeParams& p, int w) {
    long dp = p.d_prime();
    if (w < 1 || w > dp)
        throw std::invalid_argument("qary_sphere_degree: vertex weight outside [1, d-1]");
    BinomialTable bt(p.n);
    auto pm1 = powers(p.q - 1, p.n);
    auto pm2 = powers(p.q - 2, p.n);
    mpz_class s = qary_degree_sum_with_self(p.n, dp, p.q, w, bt, pm1, pm2);
    return Count(mpz_class(s - 1));
}

Count johnson_sphere_degree(long n, long d, long w, long k) {
    long dp = d - 1;
    if (k < 1 || k > dp)
        throw std::invalid_argument("johnson_sphere_degree: vertex distance outside [1, d-1]");
    mpz_class acc(0);
    for (long i = 1; i <= dp; ++i)
        for (long j = 1; j <= dp; ++j)
            acc += johnson_intersection_number(n, w, i, j, k).z();
    return Count(std::move(acc));
}

Count sphere_edge_count(const CodeParams& p) {
    long dp = p.d_prime();
    if (dp == 0) return Count(0u);
    BinomialTable bt(p.n);
    mpz_class acc(0);
    if (p.q == 2) {
        for (long w = 1; w <= std::min<long>(dp, p.n); ++w)
            acc += bt(p.n, w) * (degree_sum_with_self(p.n, dp, w, bt) - 1);
    } else {
        auto pm1 = powers(p.q - 1, p.n);
        auto pm2 = powers(p.q - 2, p.n);
        for (long w = 1; w <= std::min<long>(dp, p.n); ++w)
            acc += bt(p.n, w) * pm1[static_cast<std::size_t>(w)] *
                   (qary_degree_sum_with_self(p.n, dp, p.q, w, bt, pm1, pm2) - 1);
    }
    return Count(std::move(acc)).exact_div(Count(2u));
}

Count johnson_sphere_edge_count(long n, long d, long w) {
    long dp = d - 1;
    if (w < 1 || w > n) throw std::invalid_argument("johnson_sphere_edge_count: bad w");
    mpz_class acc(0);
    for (long k = 1; k <= dp; ++k) {
        mpz_class deg(0);
        for (long i = 1; i <= dp; ++i)
            for (long j = 1; j <= dp; ++j)
                deg += johnson_intersection_number(n, w, i, j, k).z();
        acc += binomial(w, k).z() * binomial(n - w, k).z() * deg;
    }
    return Count(std::move(acc)).exact_div(Count(2u));
}

Count edge_third(long n, long d) {
    if (n < 1) throw std::invalid_argument("edge_third: n must be positive");
    if (d <= 0) return Count(0u);
    long top = std::min(d, n);
    BinomialTable bt(n);
    mpz_class total(0);
#pragma omp parallel
    {
        mpz_class local(0);
#pragma omp for schedule(dynamic) nowait
        for (long w = 1; w <= top; ++w) {
            mpz_class inner = degree_sum_with_self(n, d, w, bt) - 1;
            local += bt(n, w) * inner;
        }
#pragma omp critical
        total += local;
    }
    return Count(std::move(total)).exact_div(Count(6u));
}

Rational edge_third_qary(long n, long d, long q) {
    if (n < 1) throw std::invalid_argument("edge_third_qary: n must be positive");
    if (q < 2) throw std::invalid_argument("edge_third_qary: q must be >= 2");
    if (d <= 0) return Rational(Count(0u));
    long top = std::min(d, n);
    BinomialTable bt(n);
    auto pm1 = powers(q - 1, n);
    auto pm2 = powers(q - 2, n);
    mpz_class total(0);
#pragma omp parallel
    {
        mpz_class local(0);
#pragma omp for schedule(dynamic) nowait
        for (long w = 1; w <= top; ++w) {
            mpz_class inner = qary_degree_sum_with_self(n, d, q, w, bt, pm1, pm2) - 1;
            local += bt(n, w) * pm1[static_cast<std::size_t>(w)] * inner;
        }
#pragma omp critical
        total += local;
    }
    return Rational(Count(std::move(total)), Count(6u));
}

Rational edge_third_johnson(long n, long d, long w) {
    if (n < 1 || w < 1 || w > n) throw std::invalid_argument("edge_third_johnson: bad arguments");
    if (d <= 0) return Rational(Count(0u));
    mpz_class total(0);
#pragma omp parallel
    {
        mpz_class local(0);
#pragma omp for schedule(dynamic) nowait
        for (long k = 1; k <= d; ++k) {
            mpz_class deg(0);
            for (long i = 1; i <= d; ++i)
                for (long j = 1; j <= d; ++j)
                    deg += johnson_intersection_number(n, w, i, j, k).z();
            local += binomial(w, k).z() * binomial(n - w, k).z() * deg;
        }
#pragma omp critical
        total += local;
    }
    return Rational(Count(std::move(total)), Count(6u));
}

SplitCounts split_e1_e2(const CodeParams& p, const SplitParams& s) {
    long dp = p.d_prime();
    if (dp < 1) throw std::invalid_argument("split_e1_e2: need d >= 2");
    if (2 * dp >= p.n) throw std::invalid_argument("split_e1_e2: need d' < n/2");
    long b = std::max(1L, s.boundary_weight(p.d_prime()));
    BinomialTable bt(p.n);
    mpz_class e1(0), e2(0);
    for (long w = 1; w <= dp; ++w) {
        mpz_class term = bt(p.n, w) * degree_sum_with_self(p.n, dp, w, bt);
        if (w < b)
            e1 += term;
        else
            e2 += term;
    }
    return SplitCounts{Count(std::move(e1)), Count(std::move(e2)), b};
}

EntropyExponents entropy_upper_bounds(const CodeParams& p, const SplitParams& s) {
    long dp = p.d_prime();
    if (dp < 1) throw std::invalid_argument("entropy_upper_bounds: need d >= 2");
    if (2 * dp >= p.n) throw std::invalid_argument("entropy_upper_bounds: need d' < n/2");
    double n = p.n;
    double delta = p.delta();
    double lam = s.lambda_d();
    double mu = s.mu();
    double ld = lam * delta;
    double h_delta = binary_entropy(delta);
    EntropyExponents out{};
    out.e1_exponent = n * (h_delta + binary_entropy(ld));
    out.h1_exponent = n * ld * binary_entropy(mu / lam) +
                      n * (1.0 - ld) * binary_entropy(mu * delta / (1.0 - ld));
    double heavy_tail = (delta - lam * delta / 2.0) / (1.0 - ld);
    out.h2_exponent = std::log2(n * ld) + n * (ld + (1.0 - ld) * binary_entropy(heavy_tail));
    out.e2_exponent = std::log2(n * ld + 1.0) +
                      n * (h_delta + ld + (1.0 - ld) * binary_entropy(heavy_tail));
    return out;
}

Count heavy_weight_degree_floor(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("heavy_weight_degree_floor: n must be even and >= 2");
    mpz_class s(0);
    for (long w = 1; w <= n / 2; ++w) s += binomial(n, w).z();
    return Count(std::move(s)).ceil_div(Count(2u));
}

namespace serial_ref {

Count edge_third(long n, long d) {
    if (n < 1) throw std::invalid_argument("edge_third: n must be positive");
    mpz_class total(0);
    for (long w = 1; w <= std::min(d, n); ++w) {
        mpz_class inner(0);
        for (long i = 1; i <= std::min(d, n); ++i) {
            long j_lo = ceil_plus(w + i - d, 2);
            for (long j = j_lo; j <= std::min(w, i); ++j)
                inner += binomial(w, j).z() * binomial(n - w, i - j).z();
        }
        inner -= 1;
        total += binomial(n, w).z() * inner;
    }
    return Count(std::move(total)).exact_div(Count(6u));
}

Rational edge_third_qary(long n, long d, long q) {
    if (n < 1 || q < 2) throw std::invalid_argument("edge_third_qary: bad arguments");
    mpz_class total(0);
    mpz_class qm1(q - 1), qm2(q - 2);
    for (long w = 1; w <= std::min(d, n); ++w) {
        mpz_class inner(0);
        for (long i = 1; i <= std::min(d, n); ++i) {
            long a = std::min(w, i);
            for (long j = 0; j <= a; ++j) {
                long b = std::max(0L, (w + i) - j - std::min(d + j, n));
                for (long k = b; k <= a - j; ++k) {
                    long c = j + k;
                    if (i - c < 0 || i - c > n - w) continue;
                    mpz_class t = binomial(w, j).z() * binomial(w - j, k).z() *
                                  binomial(n - w, i - c).z();
                    mpz_class pw;
                    mpz_pow_ui(pw.get_mpz_t(), qm2.get_mpz_t(), k);
                    t *= pw;
                    mpz_pow_ui(pw.get_mpz_t(), qm1.get_mpz_t(), i - c);
                    t *= pw;
                    inner += t;
                }
            }
        }
        inner -= 1;
        mpz_class vw;
        mpz_pow_ui(vw.get_mpz_t(), qm1.get_mpz_t(), w);
        total += binomial(n, w).z() * vw * inner;
    }
    return Rational(Count(std::move(total)), Count(6u));
}

Rational edge_third_johnson(long n, long d, long w) {
    if (n < 1 || w < 1 || w > n) throw std::invalid_argument("edge_third_johnson: bad arguments");
    mpz_class total(0);
    for (long i = 1; i <= d; ++i)
        for (long j = 1; j <= d; ++j)
            for (long k = 1; k <= d; ++k)
                total += binomial(w, k).z() * binomial(n - w, k).z() *
                         johnson_intersection_number(n, w, i, j, k).z();
    return Rational(Count(std::move(total)), Count(6u));
}

}  // namespace serial_ref

}  // namespace gv
