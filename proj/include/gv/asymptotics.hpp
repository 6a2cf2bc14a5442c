#pragma once

#include "gv/params.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace gv::asym {

// f(delta) = (1-eps) H2(delta) - H2(lambda delta); domain 0 < delta <= 0.5
double f_func(double delta, const SplitParams& s);

// g(delta) = (1-eps) H2(delta) - lambda delta
//            - (1 - lambda delta) H2((delta - lambda delta/2)/(1 - lambda delta))
double g_func(double delta, const SplitParams& s);

// both sparsity conditions hold strictly
bool conditions_hold(double delta, const SplitParams& s);

enum class Binding { none, f_condition, g_condition, both };
std::string_view binding_name(Binding b);

struct ThresholdResult {
    double delta_star;
    Binding binding;  // which condition fails first past the threshold
};

// Largest delta* <= 0.5 where the conditions hold on the grid and fail
// beyond, refined by bisection on the first failing curve.
ThresholdResult threshold_scan(const SplitParams& s, double grid_step = 1e-4,
                               double refine_tol = 1e-9);

// log2( e(G_S) / V(n,d')^(2-eps) ), exact counts underneath; -inf when the
// sphere graph is edgeless.
double ratio_decay_check(const CodeParams& p, double epsilon);

struct CurvePoint {
    double delta;
    double f;
    double g;
    bool holds;
};

std::vector<CurvePoint> compute_curves(const SplitParams& s, double lo, double hi, double step);

// CSV rows "delta,f,g,holds", 9 significant digits, ascending delta.
void emit_curves(const SplitParams& s, double lo, double hi, double step, std::ostream& os);

}  // namespace gv::asym
