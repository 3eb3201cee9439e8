#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "kspin/exact_linalg.hpp"

namespace kspin {

// Deterministic generator. Bounded draws use rejection on the raw 64-bit
// stream so results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Independent stream derived from (seed, name).
  static Rng split(std::uint64_t seed, std::string_view name);

  std::uint64_t next() { return eng_(); }
  long uniform(long lo, long hi);  // inclusive
  bool coin() { return (eng_() >> 63) != 0; }
  int sign() { return coin() ? 1 : -1; }

 private:
  std::mt19937_64 eng_;
};

IntVector random_vector(Rng& rng, std::size_t n, long bound);
// v ∈ V with Q(v) = q for q = ±1.
IntVector random_unit_V(Rng& rng, int q, long bound);
// u = (r, H, t) ∈ S⁺ with (u,u)_S = ±2.
IntVector random_root_S_plus(Rng& rng, int square, long bound);

}  // namespace kspin
