#include "kspin/sampling.hpp"

#include <stdexcept>

namespace kspin {

namespace {
std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

Rng Rng::split(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(splitmix(seed ^ splitmix(h)));
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = std::uint64_t(hi - lo) + 1;
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t(0) / span) * span;
  std::uint64_t x;
  do {
    x = eng_();
  } while (limit != 0 && x >= limit);
  return lo + long(span == 0 ? x : x % span);
}

IntVector random_vector(Rng& rng, std::size_t n, long bound) {
  IntVector v(n);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

IntVector random_unit_V(Rng& rng, int q, long bound) {
  if (q != 1 && q != -1) throw std::invalid_argument("q must be ±1");
  // Q(v) = Σ a_i b_i; choose a pivot index with a_j = ±1 and solve for b_j.
  IntVector v = random_vector(rng, 8, bound);
  const int j = int(rng.uniform(0, 3));
  v[j] = rng.sign();
  Int rest = 0;
  for (int i = 0; i < 4; ++i)
    if (i != j) rest += v[i] * v[i + 4];
  v[j + 4] = (Int(q) - rest) * v[j];  // v[j] = ±1 is its own inverse
  return v;
}

IntVector random_root_S_plus(Rng& rng, int square, long bound) {
  if (square != 2 && square != -2) throw std::invalid_argument("square must be ±2");
  // (u,u)_S = 2rt − ∫H², ∫H² = 2(h12 h34 − h13 h24 + h14 h23).
  IntVector u = random_vector(rng, 8, bound);
  u[0] = rng.sign();
  Int pf = u[1] * u[6] - u[2] * u[5] + u[3] * u[4];
  // 2 r t − 2 pf = square  ⇒  t = (square/2 + pf)·r
  u[7] = (Int(square / 2) + pf) * u[0];
  if (rng.coin()) std::swap(u[0], u[7]);
  return u;
}

}  // namespace kspin
