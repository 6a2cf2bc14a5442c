#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gv/combinatorics.hpp"
#include "gv/oracle.hpp"

#include <cmath>
#include <random>
#include <vector>

using gv::binomial;
using gv::Count;
using gv::Rational;

namespace {

// independent tally of |{x : d(x,u)=i, d(x,v)=j}| over the whole q-ary cube,
// u = 0, v = 1 on the first w coordinates
std::vector<std::vector<unsigned long>> brute_intersection_matrix(int n, int q, int w) {
    std::vector<std::vector<unsigned long>> m(n + 1, std::vector<unsigned long>(n + 1, 0));
    std::vector<int> x(n, 0);
    while (true) {
        int du = 0, dv = 0;
        for (int t = 0; t < n; ++t) {
            du += (x[t] != 0);
            dv += (x[t] != (t < w ? 1 : 0));
        }
        ++m[du][dv];
        int pos = n - 1;
        while (pos >= 0 && ++x[pos] == q) x[pos--] = 0;
        if (pos < 0) break;
    }
    return m;
}

}  // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(5, 2) == Count(10u));
    CHECK(binomial(7, 0) == Count(1u));
    CHECK(binomial(4, 7) == Count(0u));
    CHECK(binomial(4, -1) == Count(0u));
    CHECK(binomial(60, 30) == Count::parse("118264581564861424"));
}

TEST_CASE("ceil_plus") {
    CHECK(gv::ceil_plus(-3, 2) == 0);
    CHECK(gv::ceil_plus(1, 2) == 1);
    CHECK(gv::ceil_plus(4, 2) == 2);
    CHECK(gv::ceil_plus(mpq_class(-3, 2)) == Count(0u));
    CHECK(gv::ceil_plus(mpq_class(1, 2)) == Count(1u));
    CHECK(gv::ceil_plus(mpq_class(2)) == Count(2u));
}

TEST_CASE("hamming volume") {
    CHECK(gv::hamming_volume(3, 1) == Count(4u));
    CHECK(gv::hamming_volume(4, 2) == Count(11u));
    for (int n = 0; n <= 16; ++n)
        CHECK(gv::hamming_volume(n, n) == Count::pow2(n));
    // radius beyond n saturates
    CHECK(gv::hamming_volume(5, 9) == Count(32u));
}

TEST_CASE("qary volume") {
    CHECK(gv::qary_volume(2, 1, 3) == Count(5u));
    CHECK(gv::qary_volume(3, 3, 3) == Count(27u));
    for (int n = 1; n <= 10; ++n)
        for (int d = 0; d <= n; ++d)
            CHECK(gv::qary_volume(n, d, 2) == gv::hamming_volume(n, d));
    CHECK_THROWS_AS(gv::qary_volume(3, 1, 1), std::invalid_argument);
}

TEST_CASE("binary entropy") {
    CHECK(gv::binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(gv::binary_entropy(0.0) == 0.0);
    CHECK(gv::binary_entropy(1.0) == 0.0);
    // direct evaluation of the defining expression
    double x = 0.11;
    double expect = -x * std::log2(x) - (1 - x) * std::log2(1 - x);
    CHECK(gv::binary_entropy(0.11) == doctest::Approx(expect));
    CHECK(expect == doctest::Approx(0.4999).epsilon(1e-3));
    CHECK_THROWS_AS(gv::binary_entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(gv::binary_entropy(1.1), std::domain_error);
}

TEST_CASE("hamming intersection numbers: pinned values") {
    CHECK(gv::hamming_intersection_number(4, 2, 2, 1, 1) == Count(2u));
    CHECK(gv::hamming_intersection_number(4, 2, 2, 1, 1) ==
          gv::oracle::brute_intersection_count(4, 2, 2, 1, 1));
    CHECK(gv::hamming_intersection_number(3, 3, 1, 1, 1) == Count(1u));  // q-2
    CHECK(gv::hamming_intersection_number(3, 3, 1, 1, 1) ==
          gv::oracle::brute_intersection_count(3, 3, 1, 1, 1));
    // zero-radius center forces x = u
    for (int n = 2; n <= 6; ++n)
        for (int w = 0; w <= n; ++w)
            for (int j = 0; j <= n; ++j)
                CHECK(gv::hamming_intersection_number(n, 2, w, 0, j) ==
                      Count(j == w ? 1u : 0u));
}

TEST_CASE("hamming intersection numbers match enumeration for n <= 6, q <= 4") {
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 6; ++n)
            for (int w = 0; w <= n; ++w) {
                auto m = brute_intersection_matrix(n, q, w);
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j)
                        CHECK(gv::hamming_intersection_number(n, q, w, i, j) ==
                              Count(m[i][j]));
            }
}

TEST_CASE("intersection row sums and symmetry") {
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 8; ++n)
            for (int w = 0; w <= n; ++w)
                for (int i = 0; i <= n; ++i) {
                    Count row(0u);
                    for (int j = 0; j <= n; ++j) {
                        Count pij = gv::hamming_intersection_number(n, q, w, i, j);
                        row += pij;
                        CHECK(pij == gv::hamming_intersection_number(n, q, w, j, i));
                    }
                    Count expect = binomial(n, i) * Count::pow(q - 1, i);
                    CHECK(row == expect);
                }
}

TEST_CASE("johnson intersection numbers: pinned and brute force") {
    // zero for k > i+j
    CHECK(gv::johnson_intersection_number(8, 3, 1, 1, 3) == Count(0u));
    // zero-radius center
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k)
            CHECK(gv::johnson_intersection_number(7, 3, 0, j, k) ==
                  Count(j == k ? 1u : 0u));
    CHECK(gv::johnson_intersection_number(5, 2, 1, 1, 1) ==
          gv::oracle::brute_johnson_intersection_count(5, 2, 1, 1, 1));
    for (int n = 2; n <= 7; ++n)
        for (int w = 1; w <= std::min(3, n); ++w)
            for (int i = 0; i <= w; ++i)
                for (int j = 0; j <= w; ++j)
                    for (int k = 0; k <= w; ++k)
                        CHECK(gv::johnson_intersection_number(n, w, i, j, k) ==
                              gv::oracle::brute_johnson_intersection_count(n, w, i, j, k));
}

TEST_CASE("sphere intersection volume") {
    CHECK(gv::sphere_intersection_volume(4, 1, 2) == Count(2u));
    for (int n = 2; n <= 8; ++n) {
        for (int dist = 1; dist <= n; ++dist)
            CHECK(gv::sphere_intersection_volume(n, 0, dist) == Count(0u));
        for (int dist = 0; dist <= n; ++dist)
            CHECK(gv::sphere_intersection_volume(n, n, dist) == Count::pow2(n));
    }
    // brute force: centers 0 and 1^dist, intersection of radius-r balls
    for (int n = 2; n <= 7; ++n)
        for (int dist = 1; dist <= n; ++dist)
            for (int r = 0; r <= n; ++r) {
                unsigned long cnt = 0;
                auto m = brute_intersection_matrix(n, 2, dist);
                for (int i = 0; i <= r && i <= n; ++i)
                    for (int j = 0; j <= r && j <= n; ++j) cnt += m[i][j];
                CHECK(gv::sphere_intersection_volume(n, r, dist) == Count(cnt));
            }
}

TEST_CASE("alternate intersection closed form disagrees; enumeration is authoritative") {
    // radius d-w at center distance d: the enumerative route is checked
    // against brute force above; the displayed closed form differs. Report
    // the comparison rather than hiding it.
    int differ = 0, total = 0;
    for (int n = 4; n <= 9; ++n)
        for (int d = 2; d <= n; ++d)
            for (int w = 1; w <= d / 2; ++w) {
                Count prose = gv::sphere_intersection_volume(n, d - w, d);
                Count alt = gv::sphere_intersection_volume_alt(n, w, d);
                ++total;
                if (prose != alt) ++differ;
            }
    MESSAGE("alternate closed form disagrees on ", differ, " of ", total,
            " (n,d,w) cases; the enumerative definition is the one used by the bounds");
    CHECK(differ > 0);
    // spot check for the record
    CHECK(gv::sphere_intersection_volume(4, 1, 2) == Count(2u));
    CHECK(gv::sphere_intersection_volume_alt(4, 1, 2) == Count(1u));
}

TEST_CASE("entropy sandwich for volumes (log2 domain)") {
    for (int n = 1; n <= 64; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            double mu = static_cast<double>(k) / n;
            double log_v = gv::log2_of(gv::hamming_volume(n, k)).log2;
            double upper = n * gv::binary_entropy(mu);
            double lower = upper - 0.5 * std::log2(8.0 * n * mu * (1.0 - mu));
            CHECK(log_v <= upper + 1e-9);
            CHECK(log_v >= lower - 1e-9);
        }
    }
}

TEST_CASE("rational round trip and ordering") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned long a = rng() % 1000000 + 1;
        unsigned long b = rng() % 1000000 + 1;
        Rational r{Count(a), Count(b)};
        CHECK(r * Rational(Count(b)) == Rational(Count(a)));
        CHECK(r.denominator() > Count(0u));
        // lowest terms
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.numerator().z().get_mpz_t(), r.denominator().z().get_mpz_t());
        CHECK(g == 1);
    }
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(16, 11).floor() == Count(1u));
    CHECK(Rational(16, 11).ceil() == Count(2u));
}

TEST_CASE("count arithmetic and log2 conversion") {
    CHECK_THROWS_AS(Count(3u) - Count(5u), std::underflow_error);
    CHECK_THROWS_AS(Count(10u).exact_div(Count(4u)), std::logic_error);
    CHECK(Count(30u).exact_div(Count(3u)) == Count(10u));
    for (unsigned long k : {1ul, 5ul, 64ul, 200ul, 1000ul}) {
        double l = gv::log2_of(Count::pow2(k)).log2;
        CHECK(l == doctest::Approx(static_cast<double>(k)).epsilon(1e-12));
    }
    CHECK(gv::log2_of(Count(3u)).log2 == doctest::Approx(1.5849625007211562));
    // relative error of the conversion stays within 2^-40
    Count big = Count::parse("123456789012345678901234567890123456789");
    double approx = gv::log2_of(big).log2;
    double via_bits = static_cast<double>(big.bit_length());
    CHECK(approx <= via_bits);
    CHECK(approx >= via_bits - 1.0);
    CHECK_THROWS_AS(gv::log2_of(Count(0u)), std::domain_error);
}

TEST_CASE("decimal rationals are exact") {
    CHECK(Rational::from_decimal("0.999") == Rational(999, 1000));
    CHECK(Rational::from_decimal("0.7") == Rational(7, 10));
    CHECK(Rational::from_decimal("2") == Rational(2, 1));
    CHECK_THROWS_AS(Rational::from_decimal("abc"), std::invalid_argument);
}
