#pragma once

#include "gv/count.hpp"

#include <optional>

namespace gv {

// Problem instance shared by every bound: length n, minimum distance d,
// alphabet size q, optional constant weight w.
struct CodeParams {
    int n;
    int d;
    int q = 2;
    std::optional<int> w{};

    CodeParams(int n_, int d_, int q_ = 2, std::optional<int> w_ = std::nullopt)
        : n(n_), d(d_), q(q_), w(w_) {
        if (n < 1) throw std::invalid_argument("CodeParams: n must be positive");
        if (d < 1 || d > n) throw std::invalid_argument("CodeParams: need 1 <= d <= n");
        if (q < 2) throw std::invalid_argument("CodeParams: q must be >= 2");
        if (w && (*w < d || *w > n))
            throw std::invalid_argument("CodeParams: need d <= w <= n");
    }

    int d_prime() const { return d - 1; }
    double delta() const { return static_cast<double>(d - 1) / n; }
    Rational delta_exact() const {
        return Rational(Count(static_cast<unsigned long>(d - 1)),
                        Count(static_cast<unsigned long>(n)));
    }
};

// Weight-split parameters (lambda, epsilon). lambda is kept as an exact
// rational so that the split boundary floor(lambda * d') is decided exactly.
class SplitParams {
public:
    SplitParams(Rational lambda, double epsilon) : lambda_(std::move(lambda)), epsilon_(epsilon) {
        if (!(Rational(2, 3) <= lambda_ && lambda_ < Rational(1, 1)))
            throw std::invalid_argument("SplitParams: need 2/3 <= lambda < 1");
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("SplitParams: need 0 < epsilon < 1");
    }

    static SplitParams from_decimal(const std::string& lambda, double epsilon) {
        return SplitParams(Rational::from_decimal(lambda), epsilon);
    }

    const Rational& lambda() const { return lambda_; }
    double lambda_d() const { return lambda_.to_double(); }
    double epsilon() const { return epsilon_; }
    double mu() const { return 1.0 - lambda_d(); }

    // floor(lambda * d'), the weight where the e1/e2 split changes over
    long boundary_weight(int d_prime) const {
        Rational r = lambda_ * Rational(Count(static_cast<unsigned long>(d_prime)));
        return static_cast<long>(r.floor().to_ulong());
    }

private:
    Rational lambda_;
    double epsilon_;
};

}  // namespace gv
