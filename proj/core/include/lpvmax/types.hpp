#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpvmax {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thrown when a simulated trajectory produces non-finite values.
class SimulationDiverged : public std::runtime_error {
 public:
  explicit SimulationDiverged(int t)
      : std::runtime_error("simulation diverged at t=" + std::to_string(t)),
        t_(t) {}
  int time_index() const { return t_; }

 private:
  int t_;
};

/// Thrown when the recursive one-step-ahead filter produces non-finite
/// residuals (unstable inverse noise filter).
class FilterDiverged : public std::runtime_error {
 public:
  FilterDiverged(int t, int iteration = -1)
      : std::runtime_error(
            "residual filter diverged at t=" + std::to_string(t) +
            (iteration >= 0 ? " (iteration " + std::to_string(iteration) + ")"
                            : "")),
        t_(t),
        iteration_(iteration) {}
  int time_index() const { return t_; }
  int iteration() const { return iteration_; }

 private:
  int t_;
  int iteration_;
};

/// Thrown when a Hankel block needs coefficient strings outside the
/// truncation range of the supplied tables and zero-fill is disabled.
class CoverageError : public std::runtime_error {
 public:
  CoverageError(const std::string& msg, std::vector<std::string> missing)
      : std::runtime_error(msg), missing_(std::move(missing)) {}
  const std::vector<std::string>& missing_strings() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

/// Thrown by the unregularized least-squares path on a rank-deficient
/// regressor.
class RankDeficiency : public std::runtime_error {
 public:
  RankDeficiency(int achieved, int required)
      : std::runtime_error("rank-deficient regressor: rank " +
                           std::to_string(achieved) + " of " +
                           std::to_string(required)),
        achieved_(achieved),
        required_(required) {}
  int achieved() const { return achieved_; }
  int required() const { return required_; }

 private:
  int achieved_;
  int required_;
};

/// SplitMix64 step; used to derive independent seed streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace lpvmax
