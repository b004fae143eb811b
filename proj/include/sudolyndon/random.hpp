#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace sudolyndon {

/// Seeded generator with a fully specified output sequence: std::mt19937_64
/// for raw bits, rejection sampling for bounded draws and a descending
/// Fisher-Yates shuffle. (std::uniform_int_distribution and std::shuffle are
/// implementation-defined, so they are avoided.)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sudolyndon
