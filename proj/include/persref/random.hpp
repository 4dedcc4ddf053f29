#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace persref {

// splitmix64. Used as the engine behind all synthetic randomness and as the
// mixer for seed derivation, so streams are identical across platforms and
// standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

// Seed derivation tree: every random stream is keyed by the parent seed and a
// path string ("gen/participant/12", "fit/nn/epoch/3", ...). Independent jobs
// draw from independent streams regardless of execution order, which is what
// makes parallel runs reproduce sequential ones exactly.
inline uint64_t derive_seed(uint64_t parent, std::string_view path) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the path bytes
  for (unsigned char c : path) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  SplitMix64 mix(parent ^ h);
  mix.next();
  return mix.next();
}

inline uint64_t derive_seed(uint64_t parent, std::string_view path, uint64_t index) {
  return derive_seed(parent, std::string(path) + "/" + std::to_string(index));
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_.next(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(engine_.next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // unbiased integer in [0, n)
  uint64_t uniform_int(uint64_t n) {
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = engine_.next();
      if (r >= threshold) return r % n;
    }
  }

  // standard normal via the polar method
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  double gaussian(double mean, double sd) { return mean + sd * gaussian(); }

  // Marsaglia-Tsang gamma sampler (any shape > 0), unit scale.
  double gamma(double shape, double scale) {
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = gaussian();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Fisher-Yates, spelled out so the permutation is engine-defined rather
  // than std::shuffle-implementation-defined.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  SplitMix64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace persref
