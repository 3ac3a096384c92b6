// Parallel vs serial F2 row reduction, on random matrices and on cobar differentials.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "motsq/cobar.hpp"
#include "motsq/f2.hpp"

using namespace motsq;
using clk = std::chrono::steady_clock;

namespace {

f2::BitMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937_64& rng) {
    f2::BitMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = clk::now();
        f();
        best = std::min(best, std::chrono::duration<double>(clk::now() - t0).count());
    }
    return best;
}

void run(const std::string& label, const f2::BitMatrix& m, int reps) {
    f2::Rref a, b;
    double ts = best_of(reps, [&] { b = f2::reference::rref(m); });
    double tp = best_of(reps, [&] { a = f2::rref(m); });
    std::printf("%-24s %6zux%-6zu rank %6zu  serial %9.4f s  openmp %9.4f s  x%.2f  %s\n", label.c_str(), m.rows(),
                m.cols(), a.rank(), ts, tp, ts / tp, a == b ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"f2 rref benchmark"};
    std::vector<std::size_t> sizes{256, 1024, 2048, 4096};
    std::vector<std::string> degrees{"2.12.4", "3.14.4", "3.17.8"};
    int reps = 3, threads = 0;
    double density = 0.5;
    app.add_option("--sizes", sizes, "square random matrix sizes");
    app.add_option("--degrees", degrees, "cobar tridegrees s.p.q");
    app.add_option("--reps", reps, "repetitions, best time kept")->check(CLI::PositiveNumber);
    app.add_option("--density", density)->check(CLI::Range(0.0, 1.0));
    app.add_option("--threads", threads, "OpenMP threads, 0 for the default");
    CLI11_PARSE(app, argc, argv);
    if (threads > 0) omp_set_num_threads(threads);

    std::printf("threads %d\n", omp_get_max_threads());
    std::mt19937_64 rng(1);
    for (auto n : sizes) run("random " + std::to_string(n), random_matrix(n, n, density, rng), reps);
    CobarComplex c;
    for (const auto& d : degrees) run("cobar d^T " + d, c.differential_transpose(TriDegree::parse(d)), reps);
}
