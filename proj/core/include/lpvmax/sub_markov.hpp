#pragma once

#include <map>
#include <vector>

#include "lpvmax/index_string.hpp"
#include "lpvmax/lpv_ss.hpp"
#include "lpvmax/types.hpp"

namespace lpvmax {

enum class FilterSide { process, noise };

/// Table of sub-Markov coefficient matrices keyed by index string. A string
/// of length m+1 belongs to the lag-m Markov coefficient. Entries absent
/// from the map are zero. Noise tables are monic: the lag-0 coefficient is
/// identically the identity and is never stored, so their strings have
/// length >= 2.
struct SubMarkovTable {
  int n_p = 0;
  int n_y = 0;
  int n_in = 0;  // n_u for process tables, n_y for noise tables
  int order = 0;
  bool monic_lag0 = false;
  std::map<IndexString, Matrix, LengthLexLess> entries;

  int min_len() const { return monic_lag0 ? 2 : 1; }
  int max_len() const { return order + 1; }

  const Matrix* find(const IndexString& eta) const;
  Matrix at_or_zero(const IndexString& eta) const;
  void insert(const IndexString& eta, Matrix value);

  /// Largest entry norm at the truncation lag; reported so users can judge
  /// whether the chosen order has settled.
  double tail_norm() const;
};

/// Makes an empty table of the given shape (a monic table with no entries
/// is the identity filter).
SubMarkovTable make_table(int n_p, int n_y, int n_in, int order, bool monic);

/// Sub-Markov parameters of an LPV-SS model up to the given lag:
/// process entries (i) = D_i and C A...A B products, noise entries with B
/// replaced by K and the lag-0 block fixed to the identity.
SubMarkovTable sub_markov_from_ss(const LpvSsModel& model, FilterSide side,
                                  int order);

/// Independent verification path: recovers the same matrices purely from
/// impulse simulations on elementary scheduling assignments, solving the
/// resulting disentangling system. Never touches sub_markov_from_ss.
Matrix impulse_oracle(const LpvSsModel& model, FilterSide side,
                      const IndexString& eta);

/// All strings of one length at once (the oracle shares one linear solve).
std::map<IndexString, Matrix, LengthLexLess> impulse_oracle_lag(
    const LpvSsModel& model, FilterSide side, int length);

/// Time-varying filter coefficient of q^{-lag} at time t, including the
/// implicit identity of a monic table at lag 0.
Matrix filter_coefficient(const SubMarkovTable& table, int lag,
                          const Eigen::Ref<const Matrix>& p, int t);

struct FirResult {
  Matrix y;           // N x n_y, zero-padded history before valid_from
  int valid_from = 0; // first index with full regressor history
};

/// Truncated impulse-response output
///   y(t) = sum_m B_m(p,t) u(t-m) + e(t) + sum_{m>=1} C_m(p,t) e(t-m)
/// with inputs before t = 0 taken as zero. Outputs before valid_from =
/// max(n_b, n_c) are burn-in.
FirResult fir_output(const SubMarkovTable& proc, const SubMarkovTable& noise,
                     const Eigen::Ref<const Matrix>& u,
                     const Eigen::Ref<const Matrix>& p,
                     const Eigen::Ref<const Matrix>& e);

enum class ModelClass { max, arx };

/// Parameter counts of the truncated model classes. For `max` the orders
/// are (n_b, n_c); for `arx` they are (n_a, n_d).
std::int64_t count_parameters(ModelClass kind, int n_u, int n_y, int n_p,
                              int order_u, int order_e);

}  // namespace lpvmax
