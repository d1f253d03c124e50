#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpvmax/types.hpp"

namespace lpvmax {

/// Discrete-time LPV state-space model in innovation form with affine,
/// static scheduling dependence:
///
///   x(t+1) = A(p_t) x(t) + B(p_t) u(t) + K(p_t) e(t)
///   y(t)   = C(p_t) x(t) + D(p_t) u(t) + e(t)
///
/// where every coefficient function is M(p) = M_0 + sum_i M_i p_i and
/// e(t) ~ N(0, Sigma_e).
struct LpvSsModel {
  int n_x = 0, n_u = 0, n_y = 0, n_p = 0;
  std::vector<Matrix> A, B, C, D, K;  // n_p + 1 blocks each, index 0 constant
  Matrix Sigma_e;

  void validate() const;  // throws std::invalid_argument on bad dimensions

  Matrix A_at(const Eigen::Ref<const Vector>& p_t) const;
  Matrix B_at(const Eigen::Ref<const Vector>& p_t) const;
  Matrix C_at(const Eigen::Ref<const Vector>& p_t) const;
  Matrix D_at(const Eigen::Ref<const Vector>& p_t) const;
  Matrix K_at(const Eigen::Ref<const Vector>& p_t) const;
};

/// blocks[0] + sum_i blocks[i] * p_t[i-1]
Matrix eval_coefficient(const std::vector<Matrix>& blocks,
                        const Eigen::Ref<const Vector>& p_t);

/// Aligned input/scheduling/output records, one row per sample.
struct DataSet {
  Matrix u;  // N x n_u
  Matrix p;  // N x n_p
  Matrix y;  // N x n_y

  int N() const { return static_cast<int>(y.rows()); }
  int n_u() const { return static_cast<int>(u.cols()); }
  int n_p() const { return static_cast<int>(p.cols()); }
  int n_y() const { return static_cast<int>(y.cols()); }
  void validate() const;
};

struct SimResult {
  Matrix y;  // N x n_y
  Matrix e;  // N x n_y, the realized innovation sequence (zero when disabled)
};

/// Simulates the model with an explicitly supplied innovation sequence.
/// Throws SimulationDiverged naming the first non-finite time step.
Matrix simulate_response(const LpvSsModel& model,
                         const Eigen::Ref<const Matrix>& u,
                         const Eigen::Ref<const Matrix>& p,
                         const Eigen::Ref<const Matrix>& e,
                         const Eigen::Ref<const Vector>& x0);

/// Simulates with e ~ N(0, Sigma_e) drawn from the given seed (via the
/// Cholesky factor of Sigma_e), or e = 0 when no seed is given.
SimResult simulate(const LpvSsModel& model, const Eigen::Ref<const Matrix>& u,
                   const Eigen::Ref<const Matrix>& p,
                   std::optional<std::uint64_t> noise_seed,
                   const Eigen::Ref<const Vector>& x0);

/// Zero initial state overload.
SimResult simulate(const LpvSsModel& model, const Eigen::Ref<const Matrix>& u,
                   const Eigen::Ref<const Matrix>& p,
                   std::optional<std::uint64_t> noise_seed = std::nullopt);

/// Largest spectral radius of A(p) over the vertices p in {-1, 1}^n_p.
double max_vertex_spectral_radius(const std::vector<Matrix>& A_blocks,
                                  int n_p);

/// Draws a random model whose frozen dynamics satisfy the vertex
/// spectral-radius proxy rho(A(p)) <= spectral_margin on {-1,1}^n_p,
/// with Sigma_e = I. Deterministic in the seed.
LpvSsModel random_stable_model(int n_x, int n_u, int n_y, int n_p,
                               std::uint64_t seed, double spectral_margin);

}  // namespace lpvmax
