// Benchmark comparing the serial reference kernels against the OpenMP ones:
// naive box enumeration over coefficient boxes and batch family verification.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "biqlat/boxenum.hpp"
#include "biqlat/constructions.hpp"
#include "biqlat/enumerate.hpp"
#include "biqlat/targets.hpp"

using namespace biqlat;

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void bench_box(const char* name, const GramMatrix& g, int radius) {
    double t0 = now();
    BoxResult serial = box_enumerate_serial(g, radius);
    double t1 = now();
    BoxResult parallel = box_enumerate_parallel(g, radius);
    double t2 = now();
    bool agree = serial.min_norm == parallel.min_norm && serial.vectors == parallel.vectors;
    std::printf("box %-10s r=%d   serial %8.3fs   openmp %8.3fs   speedup %5.2fx   agree %s\n",
                name, radius, t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1 > 0 ? t2 - t1 : 1e-9),
                agree ? "yes" : "NO");
}

void bench_svp(const char* name, const GramMatrix& g) {
    double t0 = now();
    ShortVectorSet sv = shortest_vectors(g);
    double t1 = now();
    std::printf("svp %-10s        min %s  kissing %zu  %8.3fs\n", name,
                rat_str(sv.min_norm).c_str(), sv.kissing, t1 - t0);
}

void bench_family(int qmax) {
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
    double t0 = now();
    auto serial = verify_family(qmax, TargetLattice::D4, false);
    double t1 = now();
    omp_set_num_threads(max_threads);
    double t2 = now();
    auto parallel = verify_family(qmax, TargetLattice::D4, false);
    double t3 = now();
    bool agree = serial.size() == parallel.size();
    for (std::size_t i = 0; agree && i < serial.size(); ++i)
        agree = serial[i].q == parallel[i].q && serial[i].verdict == parallel[i].verdict &&
                serial[i].gram_matrix == parallel[i].gram_matrix;
    std::printf("verify d4 q<=%-5d     serial %8.3fs   openmp %8.3fs (%d threads)   speedup %5.2fx   agree %s\n",
                qmax, t1 - t0, t3 - t2, max_threads, (t1 - t0) / (t3 - t2 > 0 ? t3 - t2 : 1e-9),
                agree ? "yes" : "NO");
#else
    double t0 = now();
    auto serial = verify_family(qmax, TargetLattice::D4, false);
    double t1 = now();
    std::printf("verify d4 q<=%-5d     serial %8.3fs   (built without OpenMP)\n", qmax, t1 - t0);
#endif
}

}  // namespace

int main(int argc, char** argv) {
    int radius = 4;
    int qmax = 200;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--radius" && i + 1 < argc) radius = std::atoi(argv[++i]);
        else if (a == "--q-max" && i + 1 < argc) qmax = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bench_enum [--radius N] [--q-max N]\n");
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels run serially\n\n");
#endif

    bench_box("E8", target_gram(TargetLattice::E8), radius);
    bench_box("D8", target_gram(TargetLattice::D8), radius);
    bench_box("D4+D4", target_gram(TargetLattice::D4D4), radius);
    std::printf("\n");
    bench_svp("E8", target_gram(TargetLattice::E8));
    bench_svp("D8", target_gram(TargetLattice::D8));
    std::printf("\n");
    bench_family(qmax);
    return 0;
}
