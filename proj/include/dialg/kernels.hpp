#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dialg/matrix.hpp"

// Data-parallel inner loops of the library. Every kernel has a serial path
// (the reference) and an OpenMP path; both compute the same exact result,
// so tests compare them entry for entry and the benchmark tool times them.

namespace dialg {

enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec e);

// In-place reduced row echelon form. Deterministic pivoting: columns are
// scanned left to right, the pivot is the topmost not-yet-used row with a
// nonzero entry. Returns the pivot columns in increasing order.
std::vector<std::size_t> rref_inplace(const Field& F, Matrix& m, Exec exec);
std::vector<std::size_t> rref_inplace(const Field& F, Matrix& m);

// Runs body(i) for i in [0, count). The parallel path requires bodies that
// write to disjoint state; iteration order must not matter.
void parallel_for(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body);

}  // namespace dialg
