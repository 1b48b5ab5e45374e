// Benchmark of the OpenMP sweep kernels against the serial reference path.
// Both paths run the identical per-cell code; the outputs are checked to be
// bitwise equal before timings are reported.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "powspec/sweep.hpp"

using namespace powspec;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_ms(Fn&& fn)
{
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace

int main()
{
    std::printf("sweep benchmark, %d thread(s)\n", threads());
    std::printf("%-28s %8s %12s %12s %9s\n", "kernel", "cells", "serial ms", "parallel ms",
                "speedup");

    int mismatches = 0;

    {
        sweep::SweepOptions ser{1e-8, false}, par{1e-8, true};
        std::vector<sweep::Table1Row> a, b;
        const double ts = time_ms([&] { a = sweep::table1(ser); });
        const double tp = time_ms([&] { b = sweep::table1(par); });
        for (std::size_t i = 0; i < a.size(); ++i) {
            mismatches += (a[i].P == b[i].P) ? 0 : 1;
        }
        std::printf("%-28s %8zu %12.1f %12.1f %8.2fx\n", "table1 (44 solves)", a.size(), ts, tp,
                    ts / tp);
    }

    {
        std::vector<double> qs;
        for (double q = -1.5; q <= 3.0001; q += 0.125) {
            qs.push_back(q == 0.0 ? 0.0 : q);
        }
        sweep::SweepOptions ser{1e-8, false}, par{1e-8, true};
        std::vector<sweep::PfunRow> a, b;
        const double ts = time_ms([&] { a = sweep::pfun(qs, 3, 2, 1, ser); });
        const double tp = time_ms([&] { b = sweep::pfun(qs, 3, 2, 1, par); });
        for (std::size_t i = 0; i < a.size(); ++i) {
            mismatches += (a[i].P == b[i].P && a[i].energy == b[i].energy) ? 0 : 1;
        }
        std::printf("%-28s %8zu %12.1f %12.1f %8.2fx\n", "pfun grid (N=3, n=2, l=1)", a.size(),
                    ts, tp, ts / tp);
    }

    {
        std::vector<int> Ns = {3, 4, 5, 6, 7, 8, 9, 10};
        std::vector<double> vs = {0.5, 1.0, 2.0, 5.0, 10.0};
        sweep::SweepOptions ser{1e-9, false}, par{1e-9, true};
        std::vector<bounds::Fig5Row> a, b;
        const double ts = time_ms([&] { a = sweep::figure5(Ns, vs, ser); });
        const double tp = time_ms([&] { b = sweep::figure5(Ns, vs, par); });
        for (std::size_t i = 0; i < a.size(); ++i) {
            mismatches += (a[i].EX == b[i].EX && a[i].ELQ == b[i].ELQ) ? 0 : 1;
        }
        std::printf("%-28s %8zu %12.1f %12.1f %8.2fx\n", "fig5 (8 dims x 5 couplings)", a.size(),
                    ts, tp, ts / tp);
    }

    {
        sweep::SweepOptions ser{1e-9, false}, par{1e-9, true};
        sweep::QMonotoneSuite a, b;
        const double ts = time_ms([&] { a = sweep::qmonotone_verify(ser); });
        const double tp = time_ms([&] { b = sweep::qmonotone_verify(par); });
        for (std::size_t i = 0; i < a.cells.size(); ++i) {
            mismatches += (a.cells[i].q_margin == b.cells[i].q_margin) ? 0 : 1;
        }
        std::printf("%-28s %8zu %12.1f %12.1f %8.2fx\n", "q-monotone grid", a.cells.size(), ts,
                    tp, ts / tp);
    }

    if (mismatches > 0) {
        std::printf("serial/parallel mismatch in %d cell(s)\n", mismatches);
        return 1;
    }
    std::printf("serial and parallel outputs identical\n");
    return 0;
}
