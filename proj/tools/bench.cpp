// Compares the serial and OpenMP brute-force facet enumerations on the dual
// cones of small cover monoids, with the double-description method as a third
// reference. All three must agree ray-for-ray; the table reports timings.
//
// Usage: bench [max-order]   (default 7; order 8 takes a few minutes)

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "covermonoid/cone.hpp"
#include "covermonoid/group.hpp"
#include "covermonoid/lattice.hpp"
#include "covermonoid/verify.hpp"

using namespace covermonoid;

int main(int argc, char** argv) {
    long max_order = argc > 1 ? std::atol(argv[1]) : 7;
    if (max_order < 2) {
        std::fprintf(stderr, "max order must be at least 2\n");
        return 2;
    }

    std::printf("%-12s %5s %5s %5s %12s %12s %9s %12s\n", "group", "gens", "rank", "rays",
                "serial ms", "openmp ms", "speedup", "dd ms");
    for (long n = 2; n <= max_order; ++n)
        for (const auto& fl : abelian_factor_lists(n)) {
            FiniteAbelianGroup M(fl);
            CoverLattice L(M);
            RationalCone C{L.ambient_rank(), L.generator_k_coords()};

            using clk = std::chrono::steady_clock;
            auto ms = [](clk::time_point a, clk::time_point b) {
                return std::chrono::duration<double, std::milli>(b - a).count();
            };

            auto t0 = clk::now();
            auto serial = dual_cone_extreme_rays_enumerated(C, false);
            auto t1 = clk::now();
            auto parallel = dual_cone_extreme_rays_enumerated(C, true);
            auto t2 = clk::now();
            auto dd = dual_cone_extreme_rays(C);
            auto t3 = clk::now();

            if (serial != parallel || serial != dd) {
                std::fprintf(stderr, "ray mismatch on %s\n", M.spec().c_str());
                return 1;
            }
            double ts = ms(t0, t1), tp = ms(t1, t2);
            std::printf("%-12s %5zu %5ld %5zu %12.2f %12.2f %9.2f %12.2f\n", M.spec().c_str(),
                        C.generators.size(), C.ambient_rank, serial.size(), ts, tp,
                        tp > 0 ? ts / tp : 0.0, ms(t2, t3));
        }
    return 0;
}
