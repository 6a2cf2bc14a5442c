// Times the OpenMP counting kernels against their single-threaded reference
// implementations on a few representative workloads.

#include "gv/oracle.hpp"
#include "gv/sphere_graph.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif

    {
        gv::Count a, b;
        double ts = time_ms([&] { a = gv::serial_ref::edge_third(160, 47); });
        double tp = time_ms([&] { b = gv::edge_third(160, 47); });
        report("edge_third(160,47)", ts, tp, a == b);
    }
    {
        gv::Count a, b;
        double ts = time_ms([&] { a = gv::serial_ref::edge_third(256, 100); });
        double tp = time_ms([&] { b = gv::edge_third(256, 100); });
        report("edge_third(256,100)", ts, tp, a == b);
    }
    {
        gv::Rational a, b;
        double ts = time_ms([&] { a = gv::serial_ref::edge_third_qary(96, 30, 4); });
        double tp = time_ms([&] { b = gv::edge_third_qary(96, 30, 4); });
        report("edge_third_qary(96,30,4)", ts, tp, a == b);
    }
    {
        gv::Rational a, b;
        double ts = time_ms([&] { a = gv::serial_ref::edge_third_johnson(64, 14, 28); });
        double tp = time_ms([&] { b = gv::edge_third_johnson(64, 14, 28); });
        report("edge_third_johnson(64,14,28)", ts, tp, a == b);
    }
    {
        gv::CodeParams p(14, 5);
        auto g = gv::oracle::sphere_graph_explicit(p, gv::oracle::BuildBudget{1u << 21});
        gv::oracle::SphereGraphStats a, b;
        double ts = time_ms([&] { a = gv::oracle::serial_ref::graph_stats(g); });
        double tp = time_ms([&] { b = gv::oracle::graph_stats(g); });
        report("graph_stats(sphere n=14 d=5)", ts, tp,
               a.triangle_count == b.triangle_count && a.max_degree == b.max_degree &&
                   a.neighborhood_edges_max == b.neighborhood_edges_max);
    }
    return 0;
}
