#pragma once
#include <cstdint>
#include <random>

#include "lagdesk/maslov.hpp"

namespace lagdesk::rnd {

// Deterministic random source drawing only through fixed integer arithmetic,
// so sequences match on every platform and stdlib (std distributions do not
// guarantee this). Used by the property suites and the test oracles.
class Rng {
public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  uint64_t u64() { return g_(); }
  long upto(long n);             // in [0, n)
  long range(long lo, long hi);  // in [lo, hi]
  Rat rat(long max_num = 6, long max_den = 3);
  bool coin() { return (u64() & 1) != 0; }

private:
  std::mt19937_64 g_;
};

Mat random_symmetric(Rng& rng, size_t n);
// Random element of Sp(2n, Q): product of shear and block-diagonal generators.
Mat random_symplectic(Rng& rng, size_t n, size_t moves = 6);
LagrangianFrame random_lagrangian(Rng& rng, const SymplecticSpace& s);
// Random lift based at the fiber with the given number of chart segments;
// chart references are random Lagrangians with exact transversality
// certificates, retried on failure.
PathLift random_path_lift(Rng& rng, const SymplecticSpace& s, size_t num_segments);

}  // namespace lagdesk::rnd
