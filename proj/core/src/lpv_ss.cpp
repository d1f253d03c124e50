#include "lpvmax/lpv_ss.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <stdexcept>

namespace lpvmax {

namespace {

void check_blocks(const std::vector<Matrix>& blocks, int n_p, int rows,
                  int cols, const char* name) {
  if (static_cast<int>(blocks.size()) != n_p + 1)
    throw std::invalid_argument(std::string(name) +
                                ": expected n_p+1 coefficient blocks");
  for (const Matrix& m : blocks) {
    if (m.rows() != rows || m.cols() != cols)
      throw std::invalid_argument(std::string(name) +
                                  ": block dimension mismatch");
  }
}

}  // namespace

void LpvSsModel::validate() const {
  if (n_x < 1 || n_u < 1 || n_y < 1 || n_p < 0)
    throw std::invalid_argument("LpvSsModel: invalid dimensions");
  check_blocks(A, n_p, n_x, n_x, "A");
  check_blocks(B, n_p, n_x, n_u, "B");
  check_blocks(C, n_p, n_y, n_x, "C");
  check_blocks(D, n_p, n_y, n_u, "D");
  check_blocks(K, n_p, n_x, n_y, "K");
  if (Sigma_e.rows() != n_y || Sigma_e.cols() != n_y)
    throw std::invalid_argument("Sigma_e: dimension mismatch");
  if (!Sigma_e.isApprox(Sigma_e.transpose(), 1e-12))
    throw std::invalid_argument("Sigma_e: not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> es(Sigma_e);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("Sigma_e: not positive definite");
}

Matrix eval_coefficient(const std::vector<Matrix>& blocks,
                        const Eigen::Ref<const Vector>& p_t) {
  if (blocks.empty()) throw std::invalid_argument("eval_coefficient: no blocks");
  if (static_cast<int>(blocks.size()) != p_t.size() + 1)
    throw std::invalid_argument(
        "eval_coefficient: scheduling dimension mismatch");
  Matrix out = blocks[0];
  for (int i = 1; i < static_cast<int>(blocks.size()); ++i) {
    if (blocks[i].rows() != out.rows() || blocks[i].cols() != out.cols())
      throw std::invalid_argument("eval_coefficient: block dimension mismatch");
    out += blocks[static_cast<std::size_t>(i)] * p_t(i - 1);
  }
  return out;
}

Matrix LpvSsModel::A_at(const Eigen::Ref<const Vector>& p_t) const {
  return eval_coefficient(A, p_t);
}
Matrix LpvSsModel::B_at(const Eigen::Ref<const Vector>& p_t) const {
  return eval_coefficient(B, p_t);
}
Matrix LpvSsModel::C_at(const Eigen::Ref<const Vector>& p_t) const {
  return eval_coefficient(C, p_t);
}
Matrix LpvSsModel::D_at(const Eigen::Ref<const Vector>& p_t) const {
  return eval_coefficient(D, p_t);
}
Matrix LpvSsModel::K_at(const Eigen::Ref<const Vector>& p_t) const {
  return eval_coefficient(K, p_t);
}

void DataSet::validate() const {
  if (y.rows() < 1) throw std::invalid_argument("DataSet: empty");
  if (u.rows() != y.rows() || p.rows() != y.rows())
    throw std::invalid_argument("DataSet: unequal sequence lengths");
}

Matrix simulate_response(const LpvSsModel& model,
                         const Eigen::Ref<const Matrix>& u,
                         const Eigen::Ref<const Matrix>& p,
                         const Eigen::Ref<const Matrix>& e,
                         const Eigen::Ref<const Vector>& x0) {
  const int N = static_cast<int>(u.rows());
  if (p.rows() != N || e.rows() != N)
    throw std::invalid_argument("simulate: unequal sequence lengths");
  if (u.cols() != model.n_u || p.cols() != model.n_p || e.cols() != model.n_y)
    throw std::invalid_argument("simulate: channel count mismatch");
  if (x0.size() != model.n_x)
    throw std::invalid_argument("simulate: x0 dimension mismatch");

  Matrix y(N, model.n_y);
  Vector x = x0;
  for (int t = 0; t < N; ++t) {
    const Vector p_t = p.row(t);
    const Vector u_t = u.row(t);
    const Vector e_t = e.row(t);
    const Vector y_t =
        model.C_at(p_t) * x + model.D_at(p_t) * u_t + e_t;
    x = model.A_at(p_t) * x + model.B_at(p_t) * u_t + model.K_at(p_t) * e_t;
    if (!y_t.allFinite() || !x.allFinite()) throw SimulationDiverged(t);
    y.row(t) = y_t;
  }
  return y;
}

SimResult simulate(const LpvSsModel& model, const Eigen::Ref<const Matrix>& u,
                   const Eigen::Ref<const Matrix>& p,
                   std::optional<std::uint64_t> noise_seed,
                   const Eigen::Ref<const Vector>& x0) {
  const int N = static_cast<int>(u.rows());
  Matrix e = Matrix::Zero(N, model.n_y);
  if (noise_seed) {
    Eigen::LLT<Matrix> llt(model.Sigma_e);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument("simulate: Sigma_e not positive definite");
    const Matrix L = llt.matrixL();
    std::mt19937_64 rng(*noise_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < N; ++t) {
      Vector w(model.n_y);
      for (int i = 0; i < model.n_y; ++i) w(i) = gauss(rng);
      e.row(t) = (L * w).transpose();
    }
  }
  SimResult out;
  out.y = simulate_response(model, u, p, e, x0);
  out.e = std::move(e);
  return out;
}

SimResult simulate(const LpvSsModel& model, const Eigen::Ref<const Matrix>& u,
                   const Eigen::Ref<const Matrix>& p,
                   std::optional<std::uint64_t> noise_seed) {
  return simulate(model, u, p, noise_seed, Vector::Zero(model.n_x));
}

double max_vertex_spectral_radius(const std::vector<Matrix>& A_blocks,
                                  int n_p) {
  double worst = 0.0;
  const int vertices = 1 << n_p;
  for (int v = 0; v < vertices; ++v) {
    Matrix a = A_blocks[0];
    for (int i = 1; i <= n_p; ++i)
      a += ((v >> (i - 1)) & 1 ? 1.0 : -1.0) * A_blocks[static_cast<std::size_t>(i)];
    const Eigen::VectorXcd eig = a.eigenvalues();
    worst = std::max(worst, eig.cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

std::vector<Matrix> sample_blocks(std::mt19937_64& rng, int n_p, int rows,
                                  int cols, double scale) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(n_p) + 1);
  for (int i = 0; i <= n_p; ++i) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = scale * gauss(rng);
    blocks.push_back(std::move(m));
  }
  return blocks;
}

// Spectral-radius proxy for the predictor dynamics A(p) - K(p)C(p): vertex
// grid plus a fixed batch of interior samples (the product is quadratic in
// p, so vertices alone do not bound it).
double predictor_radius_proxy(const LpvSsModel& m, std::mt19937_64& rng) {
  double worst = 0.0;
  const int vertices = 1 << m.n_p;
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto probe = [&](const Vector& p_t) {
    const Matrix acl = m.A_at(p_t) - m.K_at(p_t) * m.C_at(p_t);
    worst = std::max(worst, acl.eigenvalues().cwiseAbs().maxCoeff());
  };
  for (int v = 0; v < vertices; ++v) {
    Vector p_t(m.n_p);
    for (int i = 0; i < m.n_p; ++i) p_t(i) = ((v >> i) & 1) ? 1.0 : -1.0;
    probe(p_t);
  }
  for (int s = 0; s < 32; ++s) {
    Vector p_t(m.n_p);
    for (int i = 0; i < m.n_p; ++i) p_t(i) = unif(rng);
    probe(p_t);
  }
  return worst;
}

}  // namespace

LpvSsModel random_stable_model(int n_x, int n_u, int n_y, int n_p,
                               std::uint64_t seed, double spectral_margin) {
  if (n_x < 1 || n_u < 1 || n_y < 1 || n_p < 0)
    throw std::invalid_argument("random_stable_model: invalid dimensions");
  if (spectral_margin <= 0.0 || spectral_margin >= 1.0)
    throw std::invalid_argument("random_stable_model: margin outside (0,1)");

  std::mt19937_64 rng(seed);
  const double s = 1.0 / std::sqrt(static_cast<double>(n_x));

  LpvSsModel m;
  m.n_x = n_x;
  m.n_u = n_u;
  m.n_y = n_y;
  m.n_p = n_p;
  m.A = sample_blocks(rng, n_p, n_x, n_x, s);
  const double rho = max_vertex_spectral_radius(m.A, n_p);
  if (rho > 0.0) {
    const double shrink = spectral_margin / rho;
    for (Matrix& a : m.A) a *= shrink;
  }
  m.B = sample_blocks(rng, n_p, n_x, n_u, s);
  m.C = sample_blocks(rng, n_p, n_y, n_x, s);
  m.D = sample_blocks(rng, n_p, n_y, n_u, 0.5);
  m.K = sample_blocks(rng, n_p, n_x, n_y, 0.4 * s);
  m.Sigma_e = Matrix::Identity(n_y, n_y);

  // keep the innovation-form inverse well behaved
  while (predictor_radius_proxy(m, rng) > 0.95) {
    for (Matrix& k : m.K) k *= 0.7;
  }
  m.validate();
  return m;
}

}  // namespace lpvmax
