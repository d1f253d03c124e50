#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lpvmax/types.hpp"

namespace lpvmax {

/// A finite word over the scheduling alphabet {0, ..., n_p}.
///
/// Character 0 selects the constant channel (value 1 at every time),
/// character c >= 1 selects scheduling channel c. The j-th character of a
/// word carries time lag j-1 when the word is evaluated against a
/// scheduling trajectory.
class IndexString {
 public:
  IndexString() = default;
  IndexString(std::initializer_list<int> chars) : chars_(chars) { check(); }
  explicit IndexString(std::vector<int> chars) : chars_(std::move(chars)) {
    check();
  }

  int length() const { return static_cast<int>(chars_.size()); }
  bool empty() const { return chars_.empty(); }
  int operator[](int j) const { return chars_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& chars() const { return chars_; }

  bool operator==(const IndexString&) const = default;

 private:
  void check() const {
    for (int c : chars_) {
      if (c < 0) throw std::invalid_argument("index string character < 0");
    }
  }

  std::vector<int> chars_;
};

/// Canonical enumeration order: ascending length, then lexicographic.
bool length_lex_less(const IndexString& a, const IndexString& b);

struct LengthLexLess {
  bool operator()(const IndexString& a, const IndexString& b) const {
    return length_lex_less(a, b);
  }
};

/// Concatenation left . mid . right; the empty string is the identity.
IndexString concat(const IndexString& left, std::optional<int> mid,
                   const IndexString& right);

/// All strings over {0..n_p} with length in [min_len, max_len], in the
/// canonical order.
struct StringSet {
  int n_p = 0;
  int min_len = 0;
  int max_len = 0;
  std::vector<IndexString> strings;

  std::size_t size() const { return strings.size(); }
  auto begin() const { return strings.begin(); }
  auto end() const { return strings.end(); }
};

StringSet enumerate_strings(int n_p, int min_len, int max_len);

/// Product of scheduling samples selected by eta: character j (1-based)
/// contributes channel [eta]_j at time t-(j-1), with channel 0 identically 1.
/// p is laid out time-by-row. Only characters >= 1 read the trajectory, so
/// all-zero strings evaluate to 1 at any t.
double scheduling_product(const IndexString& eta,
                          const Eigen::Ref<const Matrix>& p, int t);

/// Compact form "102" for n_p <= 9, dash-separated "1-0-12" otherwise;
/// the empty string serializes as "e".
std::string to_string(const IndexString& eta, int n_p);
IndexString parse_index_string(const std::string& text);

/// Throws std::invalid_argument if any character exceeds n_p.
void validate_chars(const IndexString& eta, int n_p);

}  // namespace lpvmax
