#include "dialg/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dialg {

namespace {
std::atomic<Exec> g_default_exec{Exec::Parallel};

// Parallelizing tiny eliminations costs more than it saves.
constexpr std::size_t kParallelRowThreshold = 16;
}  // namespace

Exec default_exec() { return g_default_exec.load(); }
void set_default_exec(Exec e) { g_default_exec.store(e); }

void parallel_for(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
  if (exec == Exec::Parallel && count >= 2) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(count); ++i) body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

std::vector<std::size_t> rref_inplace(const Field& F, Matrix& m, Exec exec) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  if (rows == 0 || cols == 0) return pivots;

  const bool par = exec == Exec::Parallel;
  std::vector<std::size_t> victims;
  victims.reserve(rows);

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!F.is_zero(m(i, col))) {
        pr = i;
        break;
      }
    }
    if (pr == rows) continue;
    m.swap_rows(r, pr);

    const bool prime = F.is_prime();
    const long p = prime ? static_cast<long>(F.modulus()) : 0;

    if (!F.eq(m(r, col), F.one())) {
      Scalar s = F.inv(m(r, col));
      for (std::size_t j = col; j < cols; ++j) {
        if (F.is_zero(m(r, j))) continue;
        if (prime) {
          long v = mpz_get_si(mpq_numref(m(r, j).get_mpq_t())) *
                   static_cast<long long>(mpz_get_si(mpq_numref(s.get_mpq_t()))) % p;
          mpq_set_si(m(r, j).get_mpq_t(), v, 1);
        } else {
          mpq_mul(m(r, j).get_mpq_t(), m(r, j).get_mpq_t(), s.get_mpq_t());
        }
      }
    }

    // rows that actually carry the pivot column; everything else is untouched
    victims.clear();
    for (std::size_t q = 0; q < rows; ++q)
      if (q != r && !F.is_zero(m(q, col))) victims.push_back(q);

    // Victim rows are independent; the pivot row itself is only read. All
    // updates mutate in place so limb storage is reused instead of
    // reallocated (threads would otherwise serialize on the allocator).
    auto eliminate = [&](std::size_t q, mpq_t tmp) {
      if (prime) {
        const long fac = mpz_get_si(mpq_numref(m(q, col).get_mpq_t()));
        for (std::size_t j = col + 1; j < cols; ++j) {
          if (F.is_zero(m(r, j))) continue;
          long v = (mpz_get_si(mpq_numref(m(q, j).get_mpq_t())) -
                    fac * static_cast<long long>(mpz_get_si(mpq_numref(m(r, j).get_mpq_t()))) % p) %
                   p;
          if (v < 0) v += p;
          mpq_set_si(m(q, j).get_mpq_t(), v, 1);
        }
      } else {
        mpq_srcptr fac = m(q, col).get_mpq_t();
        for (std::size_t j = col + 1; j < cols; ++j) {
          if (F.is_zero(m(r, j))) continue;
          mpq_mul(tmp, fac, m(r, j).get_mpq_t());
          mpq_sub(m(q, j).get_mpq_t(), m(q, j).get_mpq_t(), tmp);
        }
      }
      mpq_set_ui(m(q, col).get_mpq_t(), 0, 1);
    };
    if (par && victims.size() >= kParallelRowThreshold) {
#ifdef _OPENMP
#pragma omp parallel
      {
        mpq_t tmp;
        mpq_init(tmp);
#pragma omp for schedule(static)
        for (long v = 0; v < static_cast<long>(victims.size()); ++v)
          eliminate(victims[static_cast<std::size_t>(v)], tmp);
        mpq_clear(tmp);
      }
#else
      mpq_t tmp;
      mpq_init(tmp);
      for (std::size_t q : victims) eliminate(q, tmp);
      mpq_clear(tmp);
#endif
    } else {
      mpq_t tmp;
      mpq_init(tmp);
      for (std::size_t q : victims) eliminate(q, tmp);
      mpq_clear(tmp);
    }

    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_inplace(const Field& F, Matrix& m) {
  return rref_inplace(F, m, default_exec());
}

}  // namespace dialg
