#include "gv/asymptotics.hpp"

#include "gv/combinatorics.hpp"
#include "gv/sphere_graph.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace gv::asym {

double f_func(double delta, const SplitParams& s) {
    if (!(delta > 0.0 && delta <= 0.5)) throw std::domain_error("f_func: delta outside (0, 0.5]");
    return (1.0 - s.epsilon()) * binary_entropy(delta) - binary_entropy(s.lambda_d() * delta);
}

double g_func(double delta, const SplitParams& s) {
    if (!(delta > 0.0 && delta <= 0.5)) throw std::domain_error("g_func: delta outside (0, 0.5]");
    double lam = s.lambda_d();
    double ld = lam * delta;
    if (!(ld < 1.0)) throw std::domain_error("g_func: lambda delta must be < 1");
    double inner = (delta - ld / 2.0) / (1.0 - ld);
    if (inner < 0.0 || inner > 1.0) throw std::domain_error("g_func: inner argument outside [0,1]");
    return (1.0 - s.epsilon()) * binary_entropy(delta) - ld -
           (1.0 - ld) * binary_entropy(inner);
}

bool conditions_hold(double delta, const SplitParams& s) {
    return f_func(delta, s) > 0.0 && g_func(delta, s) > 0.0;
}

std::string_view binding_name(Binding b) {
    switch (b) {
        case Binding::none: return "none";
        case Binding::f_condition: return "f";
        case Binding::g_condition: return "g";
        case Binding::both: return "both";
    }
    return "?";
}

ThresholdResult threshold_scan(const SplitParams& s, double grid_step, double refine_tol) {
    if (!(grid_step > 0.0 && grid_step <= 1e-4 + 1e-15))
        throw std::invalid_argument("threshold_scan: need 0 < grid_step <= 1e-4");
    if (!(refine_tol > 0.0 && refine_tol <= 1e-9 + 1e-24))
        throw std::invalid_argument("threshold_scan: need 0 < refine_tol <= 1e-9");
    long steps = static_cast<long>(std::floor(0.5 / grid_step + 1e-9));
    double last_hold = std::numeric_limits<double>::quiet_NaN();
    for (long k = 1; k <= steps; ++k) {
        double delta = std::min(0.5, k * grid_step);
        bool f_ok = f_func(delta, s) > 0.0;
        bool g_ok = g_func(delta, s) > 0.0;
        if (f_ok && g_ok) {
            last_hold = delta;
            continue;
        }
        if (std::isnan(last_hold))
            throw std::domain_error("threshold_scan: conditions never hold on the grid");
        Binding binding = !f_ok && !g_ok  ? Binding::both
                          : (!f_ok ? Binding::f_condition : Binding::g_condition);
        auto failing = [&](double x) {
            switch (binding) {
                case Binding::f_condition: return f_func(x, s);
                case Binding::g_condition: return g_func(x, s);
                default: return std::min(f_func(x, s), g_func(x, s));
            }
        };
        double lo = last_hold, hi = delta;
        while (hi - lo > refine_tol) {
            double mid = 0.5 * (lo + hi);
            if (failing(mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return ThresholdResult{lo, binding};
    }
    if (std::isnan(last_hold))
        throw std::domain_error("threshold_scan: conditions never hold on the grid");
    return ThresholdResult{last_hold, Binding::none};
}

double ratio_decay_check(const CodeParams& p, double epsilon) {
    Count edges = sphere_edge_count(p);
    if (edges.is_zero()) return -std::numeric_limits<double>::infinity();
    double log_e = log2_of(edges).log2;
    double log_v = log2_of(hamming_volume(p.n, p.d_prime())).log2;
    return log_e - (2.0 - epsilon) * log_v;
}

std::vector<CurvePoint> compute_curves(const SplitParams& s, double lo, double hi, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("compute_curves: step must be positive");
    if (!(lo > 0.0) || hi > 0.5 + 1e-12)
        throw std::invalid_argument("compute_curves: range must lie within (0, 0.5]");
    std::vector<CurvePoint> out;
    if (hi < lo) return out;
    long n_pts = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    out.resize(static_cast<std::size_t>(n_pts));
#pragma omp parallel for schedule(static)
    for (long k = 0; k < n_pts; ++k) {
        double delta = std::min(0.5, lo + k * step);
        double f = f_func(delta, s);
        double g = g_func(delta, s);
        out[static_cast<std::size_t>(k)] = CurvePoint{delta, f, g, f > 0.0 && g > 0.0};
    }
    return out;
}

void emit_curves(const SplitParams& s, double lo, double hi, double step, std::ostream& os) {
    os << "delta,f,g,holds\n";
    for (const auto& pt : compute_curves(s, lo, hi, step)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%d\n", pt.delta, pt.f, pt.g,
                      pt.holds ? 1 : 0);
        os << buf;
    }
}

}  // namespace gv::asym
