// Times the serial reference kernels against the OpenMP ones on the
// workloads that dominate real runs: exact rref over Q and F_p, axiom scans,
// and cocycle-system assembly. Results are checked for exact agreement
// before a row is reported.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#include "dialg/catalog.hpp"

using namespace dialg;

namespace {

template <typename Fn>
double time_best_ms(Fn&& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

Matrix random_matrix(const Field& F, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rng() % 3 == 0 ? F.sample(rng) : F.zero();
  return m;
}

// incidence-style system: a few +-1 entries per row, like the cocycle
// constraint rows the library actually eliminates
Matrix incidence_matrix(const Field& F, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (int e = 0; e < 4; ++e) m(i, rng() % cols) = F.from_int(rng() % 2 == 0 ? 1 : -1);
  return m;
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool agree) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial_ms << std::setw(10) << parallel_ms
            << std::setw(9) << std::setprecision(2) << serial_ms / parallel_ms
            << (agree ? "" : "   MISMATCH") << "\n";
}

void bench_rref(const std::string& name, const Matrix& m, const Field& F) {
  Matrix a, b;
  double ts = time_best_ms([&] { a = m; rref_inplace(F, a, Exec::Serial); });
  double tp = time_best_ms([&] { b = m; rref_inplace(F, b, Exec::Parallel); });
  row(name, ts, tp, a == b);
}

void bench_axioms(const std::string& name, const Algebra& L) {
  AxiomReport a, b;
  double ts = time_best_ms([&] { a = check_axioms(L, Exec::Serial); });
  double tp = time_best_ms([&] { b = check_axioms(L, Exec::Parallel); });
  row(name, ts, tp, a.ok == b.ok && a.violations.size() == b.violations.size());
}

void bench_cocycle_assembly(const std::string& name, const Algebra& L, std::size_t k) {
  Matrix a, b;
  double ts = time_best_ms([&] { a = cocycle_system(L, k, Exec::Serial); });
  double tp = time_best_ms([&] { b = cocycle_system(L, k, Exec::Parallel); });
  row(name, ts, tp, a == b);
}

void bench_multiplier(const std::string& name, const Algebra& L) {
  std::size_t da = 0, db = 0;
  double ts = time_best_ms([&] {
    set_default_exec(Exec::Serial);
    da = multiplier(L).h2_dim;
  }, 2);
  double tp = time_best_ms([&] {
    set_default_exec(Exec::Parallel);
    db = multiplier(L).h2_dim;
  }, 2);
  set_default_exec(Exec::Parallel);
  row(name, ts, tp, da == db);
}

}  // namespace

int main() {
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial"
            << std::setw(10) << "openmp" << std::setw(9) << "speedup" << "\n";

  Field Q = Field::rationals();
  Field F5 = Field::prime(5);

  bench_rref("rref Q incidence 2000x400", incidence_matrix(Q, 2000, 400, 7), Q);
  bench_rref("rref Q dense 120x80", random_matrix(Q, 120, 80, 42), Q);
  bench_rref("rref F5 dense 600x300", random_matrix(F5, 600, 300, 42), F5);
  bench_axioms("axiom scan m3d (dim 9)", catalog_algebra("m3d"));
  bench_cocycle_assembly("cocycle assembly m3d k=2", catalog_algebra("m3d"), 2);
  bench_multiplier("multiplier m3d end-to-end", catalog_algebra("m3d"));
  return 0;
}
