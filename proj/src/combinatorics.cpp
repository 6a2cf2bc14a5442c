#include "gv/combinatorics.hpp"

#include <cmath>

namespace gv {

Count binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return Count(0u);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Count(std::move(z));
}

Count hamming_volume(long n, long d) {
    if (n < 0 || d < 0) throw std::invalid_argument("hamming_volume: negative argument");
    mpz_class acc(0);
    long top = std::min(d, n);
    for (long i = 0; i <= top; ++i) {
        mpz_class t;
        mpz_bin_uiui(t.get_mpz_t(), n, i);
        acc += t;
    }
    return Count(std::move(acc));
}

Count qary_volume(long n, long d, long q) {
    if (q < 2) throw std::invalid_argument("qary_volume: q must be >= 2");
    if (n < 0 || d < 0) throw std::invalid_argument("qary_volume: negative argument");
    mpz_class acc(0), pw(1);
    long top = std::min(d, n);
    for (long i = 0; i <= top; ++i) {
        mpz_class t;
        mpz_bin_uiui(t.get_mpz_t(), n, i);
        acc += t * pw;
        pw *= (q - 1);
    }
    return Count(std::move(acc));
}

Count johnson_volume(long n, long d, long w) {
    if (n < 0 || d < 0 || w < 0 || w > n)
        throw std::invalid_argument("johnson_volume: bad arguments");
    mpz_class acc(0);
    for (long i = 0; i <= d; ++i)
        acc += binomial(w, i).z() * binomial(n - w, i).z();
    return Count(std::move(acc));
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: x outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

Count hamming_intersection_number(long n, long q, long w, long i, long j) {
    if (q < 2) throw std::invalid_argument("hamming_intersection_number: q must be >= 2");
    if (n < 0 || w < 0 || w > n || i < 0 || j < 0)
        return Count(0u);
    if (i > n || j > n) return Count(0u);
    if (q == 2) {
        // x splits as s overlaps with the support of v and i-s flips outside;
        // then d(x,v) = w + i - 2s.
        long two_s = w + i - j;
        if (two_s < 0 || two_s % 2 != 0) return Count(0u);
        long s = two_s / 2;
        if (s > w || s > i || i - s > n - w) return Count(0u);
        return Count(mpz_class(binomial(w, s).z() * binomial(n - w, i - s).z()));
    }
    // q-ary: within supp(v), s positions agree with v, m positions hold one of
    // the other q-2 nonzero values; outside, b positions hold any of q-1 values.
    //   wt(x) = s + m + b = i,   d(x,v) = (w - s) + b = j.
    mpz_class acc(0);
    mpz_class qm1(q - 1), qm2(q - 2);
    for (long s = 0; s <= std::min(w, i); ++s) {
        long b = j - w + s;
        long m = w + i - j - 2 * s;
        if (b < 0 || b > n - w || m < 0 || m > w - s) continue;
        mpz_class term = binomial(w, s).z() * binomial(w - s, m).z() * binomial(n - w, b).z();
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), qm2.get_mpz_t(), static_cast<unsigned long>(m));
        term *= p;
        mpz_pow_ui(p.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(b));
        term *= p;
        acc += term;
    }
    return Count(std::move(acc));
}

Count johnson_intersection_number(long n, long w, long i, long j, long k) {
    if (n < 0 || w < 0 || w > n) return Count(0u);
    if (i < 0 || j < 0 || k < 0) return Count(0u);
    if (k > i + j) return Count(0u);
    long a = std::max({0L, i - k, j - k, i + j - w});
    long b = std::min({i, j, i + j - k, n - w - k});
    if (a > b) return Count(0u);
    mpz_class acc(0);
    for (long l = a; l <= b; ++l) {
        acc += binomial(n - w - k, l).z() * binomial(k, i - l).z() *
               binomial(k, j - l).z() * binomial(w - k, i + j - k - l).z();
    }
    return Count(std::move(acc));
}

Count sphere_intersection_volume(long n, long r, long dist) {
    if (n < 0 || r < 0 || dist < 0 || dist > n)
        throw std::invalid_argument("sphere_intersection_volume: bad arguments");
    mpz_class acc(0);
    for (long i = 0; i <= std::min(r, n); ++i)
        for (long j = 0; j <= std::min(r, n); ++j)
            acc += hamming_intersection_number(n, 2, dist, i, j).z();
    return Count(std::move(acc));
}

Count sphere_intersection_volume_alt(long n, long w, long d) {
    if (n < 0 || w < 0 || d < 0) throw std::invalid_argument("sphere_intersection_volume_alt: bad arguments");
    mpz_class acc(0);
    for (long i = w; i <= d - w; ++i) {
        long j_lo = (w + i + 1) / 2;  // ceil((w+i)/2)
        for (long j = j_lo; j <= i; ++j)
            acc += binomial(w, j).z() * binomial(n - w, i - j).z();
    }
    return Count(std::move(acc));
}

BinomialTable::BinomialTable(long n_max) : n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("BinomialTable: negative size");
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = 1;
        row[static_cast<std::size_t>(n)] = 1;
        for (long k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] =
                rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
}

}  // namespace gv
