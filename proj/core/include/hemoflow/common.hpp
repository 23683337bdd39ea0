#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace hemoflow {

inline constexpr const char* kVersion = "0.1.0";

/// Feature batches are row-major: one row per vertex/edge, contiguous rows.
using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// One 3-vector per vertex (prediction or ground truth), mm/s.
using VelocityField = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;

/// Vertex positions, one row per vertex, mm.
using Positions = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;

using Vec3 = Eigen::Vector3d;

/// Relative tolerance used to group near-equal squared distances into tie
/// classes before index tie-breaking. Grouping absorbs the rounding noise a
/// rigid motion introduces into otherwise exactly tied distances, which keeps
/// k-NN / FPS / nearest-point selection invariant under rigid motions even on
/// meshes with exact symmetries.
inline constexpr double kDistanceTieRel = 1e-9;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

}  // namespace hemoflow
