#pragma once

#include <cstdint>
#include <stdexcept>

#include "gp/matrix.hpp"

namespace gp {

/// Counter-based random stream (splitmix64). The state is seed + k*gamma
/// after k draws, so equal seeds give identical sequences on any platform;
/// there is no implementation-defined distribution machinery involved.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via the Marsaglia polar method; the rejection loop and
  /// the spare value are part of the stream state.
  double gauss01() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Derive an independent child seed; used to give experiment cells their own
/// streams regardless of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  RngStream s(base ^ (0xA0761D6478BD642FULL + tag * 0xE7037ED1A0B428DBULL));
  return s.next_u64();
}

enum class Dist { uniform01, gauss01 };

/// Fills row-major in index order; advances the stream.
inline Matrix sample_matrix(RngStream& rng, std::size_t rows, std::size_t cols,
                            Dist dist) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("sample_matrix: empty shape");
  Matrix m(rows, cols);
  if (dist == Dist::uniform01) {
    for (double& v : m.data) v = rng.uniform01();
  } else {
    for (double& v : m.data) v = rng.gauss01();
  }
  return m;
}

}  // namespace gp
