#pragma once

#include <vector>

#include "hemoflow/steerable.hpp"

namespace hemoflow {

/// Highest spherical-harmonic / Wigner-D degree the kernels support.
inline constexpr int kMaxDegree = 8;

/// Proper rotation: orthogonal 3x3 matrix with determinant +1
/// (both checked to 1e-12 at construction).
struct Rotation {
  Eigen::Matrix3d matrix = Eigen::Matrix3d::Identity();

  Rotation() = default;
  explicit Rotation(const Eigen::Matrix3d& m);

  static Rotation identity() { return Rotation(); }
  Rotation inverse() const;
  Rotation operator*(const Rotation& o) const;  // composition: this after o
};

/// Real spherical harmonics of a unit direction, degrees 0..l_max, in the
/// "component" normalization: the uniform-sphere second moment of every
/// component is 1, equivalently |Y_l(x)|^2 = 2l+1 for unit x. Output layout
/// is 1x0e + 1x1o + ... + 1x{l_max}{parity (-1)^l_max}; each degree block is
/// ordered m = -l..l, so degree 1 is (y, z, x).
SteerableTensor real_spherical_harmonics(const Vec3& direction, int l_max);

/// Degree block Y_l only, as a plain (2l+1)-vector.
Eigen::VectorXd sh_block(const Vec3& direction, int l);

/// Wigner-D matrix of degree l for the real spherical-harmonic basis:
/// orthogonal, D_l(r1 r2) = D_l(r1) D_l(r2), and Y_l(R x) = D_l(R) Y_l(x).
Eigen::MatrixXd wigner_d(int l, const Rotation& r);

/// Clebsch-Gordan coefficients coupling real irrep degrees (l1, l2) -> l3,
/// shape (2l1+1) x (2l2+1) x (2l3+1), flattened row-major as [a][b][c].
/// Zero unless |l1-l2| <= l3 <= l1+l2; otherwise normalized so that
/// sum of squares = 2l3+1, with a deterministic sign convention (the largest
/// magnitude entry, first in row-major order, is positive).
///
/// Coefficients are computed once per (l1,l2,l3) by solving the intertwining
/// identity over a fixed set of seeded random rotations (least-squares null
/// space), self-verified to 1e-9, then cached. The cache is write-once and
/// guarded by a mutex, so concurrent lookups are safe.
struct CgTensor {
  int l1 = 0, l2 = 0, l3 = 0;
  Eigen::VectorXd values;  // ((2l1+1)*(2l2+1)*(2l3+1)), row-major [a][b][c]

  struct Entry {
    int a, b, c;
    double v;
  };
  std::vector<Entry> nonzeros;  // |v| > 1e-12, for sparse contraction

  double at(int a, int b, int c) const {
    return values[(a * (2 * l2 + 1) + b) * (2 * l3 + 1) + c];
  }
};

const CgTensor& clebsch_gordan(int l1, int l2, int l3);

/// Apply the block-diagonal Wigner-D action of `r` to every irrep block.
/// Degree-0 blocks are unchanged.
SteerableTensor rotate_steerable(const SteerableTensor& t, const Rotation& r);

/// Same action on a feature batch (one steerable row per vertex/edge).
void rotate_rows(const IrrepsLayout& layout, const Rotation& r, RowMat& rows);

}  // namespace hemoflow
