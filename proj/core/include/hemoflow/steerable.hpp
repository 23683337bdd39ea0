#pragma once

#include <string>
#include <vector>

#include "hemoflow/common.hpp"

namespace hemoflow {

enum class Parity : int { Even = +1, Odd = -1 };

inline Parity parity_product(Parity a, Parity b) {
  return static_cast<int>(a) * static_cast<int>(b) > 0 ? Parity::Even : Parity::Odd;
}

/// One irreducible O(3) representation block: degree l and a parity sign.
/// Block dimension is 2l+1. The spherical-harmonic embedding of degree l
/// carries parity (-1)^l.
struct Irrep {
  int l = 0;
  Parity parity = Parity::Even;

  int dim() const { return 2 * l + 1; }
  bool operator==(const Irrep& o) const { return l == o.l && parity == o.parity; }
};

/// Natural parity of the degree-l spherical harmonics.
inline Parity sh_parity(int l) { return (l % 2 == 0) ? Parity::Even : Parity::Odd; }

/// Ordered sequence of (multiplicity, irrep) entries. Order is significant:
/// coefficients of a SteerableTensor are stored entry by entry, each entry as
/// `multiplicity` consecutive blocks of 2l+1 coefficients.
///
/// Degree-1 blocks use the fixed component order (y, z, x), i.e. the real
/// spherical-harmonic order m = -1, 0, +1. A Cartesian vector v maps to the
/// block (v.y, v.z, v.x); this one permutation is used everywhere.
struct IrrepsLayout {
  struct Entry {
    int mult = 1;
    Irrep ir;
  };
  std::vector<Entry> entries;

  IrrepsLayout() = default;
  explicit IrrepsLayout(std::vector<Entry> e) : entries(std::move(e)) {}

  int total_dim() const {
    int d = 0;
    for (const auto& e : entries) d += e.mult * e.ir.dim();
    return d;
  }
  int num_entries() const { return static_cast<int>(entries.size()); }

  /// Coefficient offset of the first block of entry `i`.
  int entry_offset(int i) const {
    int off = 0;
    for (int k = 0; k < i; ++k) off += entries[k].mult * entries[k].ir.dim();
    return off;
  }

  int max_degree() const {
    int m = 0;
    for (const auto& e : entries) m = std::max(m, e.ir.l);
    return m;
  }

  bool operator==(const IrrepsLayout& o) const;

  /// e3nn-style notation, e.g. "16x0e+8x1o+4x2e".
  std::string to_string() const;
  static IrrepsLayout parse(const std::string& text);
};

/// Per-vertex feature vector decomposed into O(3) irrep blocks. Transforms
/// under a rotation by the block-diagonal Wigner-D action (rotate_steerable).
struct SteerableTensor {
  IrrepsLayout layout;
  Eigen::VectorXd coefficients;

  SteerableTensor() = default;
  SteerableTensor(IrrepsLayout lay, Eigen::VectorXd coeffs)
      : layout(std::move(lay)), coefficients(std::move(coeffs)) {
    require(coefficients.size() == layout.total_dim(),
            "SteerableTensor: coefficient length does not match layout");
  }

  static SteerableTensor zeros(const IrrepsLayout& lay) {
    return SteerableTensor(lay, Eigen::VectorXd::Zero(lay.total_dim()));
  }
};

/// Embed a Cartesian 3-vector as an l=1 block in (y, z, x) component order.
inline Eigen::Vector3d cartesian_to_l1(const Vec3& v) { return {v.y(), v.z(), v.x()}; }
inline Vec3 l1_to_cartesian(const Eigen::Vector3d& b) { return {b[2], b[0], b[1]}; }

}  // namespace hemoflow
