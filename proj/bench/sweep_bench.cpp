// Compares the serial reference path (jobs=1) against the OpenMP path on the
// heavier sweeps and confirms both produce identical results.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "springer/classify.hpp"
#include "springer/link_pattern.hpp"
#include "springer/oracle.hpp"
#include "springer/orbit.hpp"
#include "springer/sweep.hpp"

using namespace springer;
using clk = std::chrono::steady_clock;

namespace {

template <class F>
double timed(F&& f) {
    auto t0 = clk::now();
    f();
    return std::chrono::duration<double>(clk::now() - t0).count();
}

void row(const std::string& name, long long items, double serial, double parallel, bool equal) {
    std::cout << std::left << std::setw(38) << name << std::right << std::setw(8) << items
              << std::setw(12) << std::fixed << std::setprecision(3) << serial << std::setw(12)
              << parallel << std::setw(10) << std::setprecision(2)
              << (parallel > 0 ? serial / parallel : 0.0) << (equal ? "   yes" : "   NO") << "\n";
}

} // namespace

int main() {
    int jobs = 1;
#ifdef _OPENMP
    // at least two threads so the OpenMP path is exercised even on one core
    jobs = std::max(2, omp_get_max_threads());
#endif
    std::cout << "parallel jobs: " << jobs << "\n\n"
              << std::left << std::setw(38) << "sweep" << std::right << std::setw(8) << "items"
              << std::setw(12) << "serial s" << std::setw(12) << "parallel s" << std::setw(10)
              << "speedup" << "   match\n";

    {
        auto pats = enumerate_patterns(Partition::parse("3,3,2,1"));
        std::vector<OrbitAnalysis> a, b;
        double s = timed([&] {
            a = parallel_map(pats, 1, [](const LinkPattern& p) { return analyze_orbit(p); });
        });
        double p = timed([&] {
            b = parallel_map(pats, jobs, [](const LinkPattern& p) { return analyze_orbit(p); });
        });
        bool eq = a.size() == b.size();
        for (size_t i = 0; eq && i < a.size(); ++i)
            eq = a[i].stab_dim == b[i].stab_dim && a[i].dense == b[i].dense;
        row("orbit analysis, patterns of (3,3,2,1)", static_cast<long long>(pats.size()), s, p,
            eq);
    }

    {
        auto pats = enumerate_patterns(Partition::parse("2,2,2,1"));
        std::vector<dim_t> a, b;
        double s = timed([&] {
            a = parallel_map(pats, 1,
                             [](const LinkPattern& p) { return flag_stabilizer_dim(p); });
        });
        double p = timed([&] {
            b = parallel_map(pats, jobs,
                             [](const LinkPattern& p) { return flag_stabilizer_dim(p); });
        });
        row("exact flag stabilizers of (2,2,2,1)", static_cast<long long>(pats.size()), s, p,
            a == b);
    }

    {
        auto la = Partition::parse("4,3,2,1");
        ShapeAtlas one, many;
        double s = timed([&] { one = classify_shape(la, 1); });
        double p = timed([&] { many = classify_shape(la, jobs); });
        bool eq = one.reports.size() == many.reports.size() &&
                  one.summary.singular == many.summary.singular &&
                  one.summary.smooth == many.summary.smooth;
        for (size_t i = 0; eq && i < one.reports.size(); ++i)
            eq = one.reports[i].tableau == many.reports[i].tableau &&
                 one.reports[i].dim == many.reports[i].dim;
        row("classify all components of (4,3,2,1)",
            static_cast<long long>(one.reports.size()), s, p, eq);
    }

    return 0;
}
