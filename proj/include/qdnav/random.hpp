#ifndef QDNAV_RANDOM_HPP
#define QDNAV_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace qdnav {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Child-stream derivation: mixes a base seed with a tag and an index.
// Position-based, so batch seeding is independent of execution schedule.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = fnv1a(tag, base ^ 0xcbf29ce484222325ULL);
  h ^= index + 0x9e3779b97f4a7c15ULL;
  return splitmix64(h);
}

// Deterministic RNG. The engine is std::mt19937_64 (its output sequence is
// pinned by the standard); all mappings to ranges are done here rather than
// through std distributions so that every drawn value is reproducible from
// this code alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // [lo, hi)
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // integers in [lo, hi], inclusive
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  // [0, n)
  std::size_t index(std::size_t n) { return engine_() % n; }

  bool coin() { return uniform() < 0.5; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qdnav

#endif  // QDNAV_RANDOM_HPP
