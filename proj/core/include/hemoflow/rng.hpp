#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hemoflow/common.hpp"

namespace hemoflow {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Deterministic RNG with explicitly pinned integer->double conversions.
/// std::uniform_real_distribution is implementation-defined, so all draws go
/// through the helpers below to keep outputs reproducible bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of mantissa.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller, one value per call.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = kTwoPi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  /// Uniformly random rotation matrix (random unit quaternion).
  Eigen::Matrix3d rotation() {
    Eigen::Vector4d q;
    for (int i = 0; i < 4; ++i) q[i] = normal();
    q.normalize();
    return Eigen::Quaterniond(q[0], q[1], q[2], q[3]).toRotationMatrix();
  }

  Vec3 vec3(double lo, double hi) {
    Vec3 v;
    for (int i = 0; i < 3; ++i) v[i] = uniform(lo, hi);
    return v;
  }

  Vec3 unit_vec3() {
    Vec3 v;
    do {
      for (int i = 0; i < 3; ++i) v[i] = normal();
    } while (v.norm() < 1e-12);
    return v.normalized();
  }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(engine_() % i);
      std::swap(xs[i - 1], xs[j]);
    }
  }

  /// Mix a base seed with a salt into an independent stream seed,
  /// e.g. one stream per dataset sample or per epoch.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + (salt + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hemoflow
