#include "lpvmax/index_string.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpvmax {

bool length_lex_less(const IndexString& a, const IndexString& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare(a.chars().begin(), a.chars().end(),
                                      b.chars().begin(), b.chars().end());
}

IndexString concat(const IndexString& left, std::optional<int> mid,
                   const IndexString& right) {
  if (mid && *mid < 0) throw std::invalid_argument("concat: character < 0");
  std::vector<int> out;
  out.reserve(left.chars().size() + (mid ? 1 : 0) + right.chars().size());
  out.insert(out.end(), left.chars().begin(), left.chars().end());
  if (mid) out.push_back(*mid);
  out.insert(out.end(), right.chars().begin(), right.chars().end());
  return IndexString(std::move(out));
}

StringSet enumerate_strings(int n_p, int min_len, int max_len) {
  if (n_p < 0) throw std::invalid_argument("enumerate_strings: n_p < 0");
  if (min_len < 0 || min_len > max_len)
    throw std::invalid_argument("enumerate_strings: invalid length bounds");

  StringSet set;
  set.n_p = n_p;
  set.min_len = min_len;
  set.max_len = max_len;
  for (int len = min_len; len <= max_len; ++len) {
    // odometer over {0..n_p}^len, most significant character first
    std::vector<int> word(static_cast<std::size_t>(len), 0);
    while (true) {
      set.strings.emplace_back(word);
      int j = len - 1;
      while (j >= 0 && word[static_cast<std::size_t>(j)] == n_p) {
        word[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
      ++word[static_cast<std::size_t>(j)];
    }
  }
  return set;
}

double scheduling_product(const IndexString& eta,
                          const Eigen::Ref<const Matrix>& p, int t) {
  if (eta.empty())
    throw std::invalid_argument("scheduling_product: empty string");
  double prod = 1.0;
  for (int j = 0; j < eta.length(); ++j) {
    const int c = eta[j];
    if (c == 0) continue;
    const int time = t - j;
    if (time < 0 || time >= p.rows())
      throw std::out_of_range("scheduling_product: time index " +
                              std::to_string(time) + " outside trajectory");
    if (c > p.cols())
      throw std::invalid_argument("scheduling_product: channel " +
                                  std::to_string(c) + " exceeds n_p");
    prod *= p(time, c - 1);
  }
  return prod;
}

std::string to_string(const IndexString& eta, int n_p) {
  validate_chars(eta, n_p);
  if (eta.empty()) return "e";
  std::string out;
  if (n_p <= 9) {
    for (int c : eta.chars()) out += static_cast<char>('0' + c);
  } else {
    for (int j = 0; j < eta.length(); ++j) {
      if (j > 0) out += '-';
      out += std::to_string(eta[j]);
    }
  }
  return out;
}

IndexString parse_index_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty index string literal");
  if (text == "e") return IndexString{};
  std::vector<int> chars;
  if (text.find('-') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find('-', pos);
      if (next == std::string::npos) next = text.size();
      if (next == pos) throw std::invalid_argument("malformed index string");
      chars.push_back(std::stoi(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("malformed index string: " + text);
      chars.push_back(ch - '0');
    }
  }
  return IndexString(std::move(chars));
}

void validate_chars(const IndexString& eta, int n_p) {
  for (int c : eta.chars()) {
    if (c < 0 || c > n_p)
      throw std::invalid_argument("index string character " +
                                  std::to_string(c) + " outside [0, " +
                                  std::to_string(n_p) + "]");
  }
}

}  // namespace lpvmax
