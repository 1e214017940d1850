#pragma once

// Vertices of the Young-Fibonacci lattice: finite words over {1,2}, the
// cover relation in both directions, and levels of fixed rank.
//
// Digits are stored left to right exactly as the words are printed, so the
// rightmost digit is the "first" one; suffix always means rightmost digits.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace yf {

class Word {
 public:
  Word() = default;

  /// Throws std::invalid_argument on any character other than '1' or '2'.
  static Word parse(std::string_view text) {
    Word w;
    w.digits_.reserve(text.size());
    for (char c : text) {
      if (c != '1' && c != '2')
        throw std::invalid_argument("word may contain only '1' and '2': '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
    return w;
  }

  static Word ones(std::size_t count) {
    Word w;
    w.digits_.assign(count, '1');
    w.rank_ = count;
    return w;
  }

  /// Digit string; the empty word renders as "".
  const std::string& str() const noexcept { return digits_; }

  std::size_t length() const noexcept { return digits_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t twos() const noexcept { return rank_ - digits_.size(); }
  std::size_t ones() const noexcept { return 2 * digits_.size() - rank_; }
  bool empty() const noexcept { return digits_.empty(); }

  /// i-th digit from the left, as 1 or 2.
  int operator[](std::size_t i) const noexcept { return digits_[i] - '0'; }
  int back() const noexcept { return digits_.back() - '0'; }
  int front() const noexcept { return digits_.front() - '0'; }

  void push_back(int digit) {
    digits_.push_back(static_cast<char>('0' + digit));
    rank_ += static_cast<std::size_t>(digit);
  }
  void pop_back() {
    rank_ -= static_cast<std::size_t>(back());
    digits_.pop_back();
  }

  /// Rightmost `a` digits.
  Word suffix(std::size_t a) const {
    if (a > length()) throw std::out_of_range("suffix length exceeds word length");
    return from_chars(digits_.substr(length() - a));
  }
  /// Leftmost length-a digits, i.e. what remains after removing suffix(a).
  Word prefix(std::size_t a) const {
    if (a > length()) throw std::out_of_range("prefix cut exceeds word length");
    return from_chars(digits_.substr(0, length() - a));
  }

  friend Word operator+(const Word& a, const Word& b) {
    Word w;
    w.digits_ = a.digits_ + b.digits_;
    w.rank_ = a.rank_ + b.rank_;
    return w;
  }

  friend bool operator==(const Word& a, const Word& b) noexcept { return a.digits_ == b.digits_; }
  friend auto operator<=>(const Word& a, const Word& b) noexcept { return a.digits_ <=> b.digits_; }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << (w.empty() ? std::string_view{"eps"} : std::string_view{w.digits_});
  }

 private:
  static Word from_chars(std::string s) {
    Word w;
    for (char c : s) w.rank_ += static_cast<std::size_t>(c - '0');
    w.digits_ = std::move(s);
    return w;
  }

  std::string digits_;
  std::size_t rank_ = 0;
};

inline Word parse(std::string_view text) { return Word::parse(text); }

/// Text form used on the command line, where the empty word is "eps".
inline std::string render_cli(const Word& w) { return w.empty() ? std::string("eps") : w.str(); }
inline Word parse_cli(std::string_view text) { return text == "eps" ? Word{} : Word::parse(text); }

struct RankSplit {
  Word head;  // everything left of the cut
  Word tail;  // the suffix of the requested rank
};

/// Cuts v into head*tail with rank(tail) == y, if such a cut exists.
inline std::optional<RankSplit> split_by_rank(const Word& v, std::size_t y) {
  if (y > v.rank()) throw std::out_of_range("split rank exceeds word rank");
  std::size_t acc = 0;
  std::size_t a = 0;
  while (acc < y) acc += static_cast<std::size_t>(v[v.length() - 1 - a++]);
  if (acc != y) return std::nullopt;
  return RankSplit{v.prefix(a), v.suffix(a)};
}

/// Number of digits in the longest common suffix.
inline std::size_t common_suffix_len(const Word& x, const Word& y) noexcept {
  std::size_t h = 0;
  while (h < x.length() && h < y.length() && x[x.length() - 1 - h] == y[y.length() - 1 - h]) ++h;
  return h;
}

/// Digit sum of the longest common suffix.
inline std::size_t common_suffix_rank(const Word& x, const Word& y) noexcept {
  return x.suffix(common_suffix_len(x, y)).rank();
}

/// Covers of x one rank up, sorted.
inline std::vector<Word> up_neighbors(const Word& x) {
  const std::string& s = x.str();
  const auto leftmost_one = s.find('1');
  const std::size_t last_insert = leftmost_one == std::string::npos ? s.size() : leftmost_one;
  std::vector<Word> out;
  out.reserve(last_insert + 2);
  if (leftmost_one != std::string::npos) {
    std::string t = s;
    t[leftmost_one] = '2';
    out.push_back(Word::parse(t));
  }
  for (std::size_t pos = 0; pos <= last_insert; ++pos) {
    std::string t = s;
    t.insert(t.begin() + static_cast<std::ptrdiff_t>(pos), '1');
    out.push_back(Word::parse(t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Words covered by y one rank down, sorted.
inline std::vector<Word> down_neighbors(const Word& y) {
  const std::string& s = y.str();
  std::vector<Word> out;
  std::size_t lead = 0;
  while (lead < s.size() && s[lead] == '2') {
    std::string t = s;
    t[lead] = '1';
    out.push_back(Word::parse(t));
    ++lead;
  }
  if (lead < s.size()) {  // s[lead] is the leftmost 1
    std::string t = s;
    t.erase(lead, 1);
    out.push_back(Word::parse(t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Fib(1) = Fib(2) = 1.
inline std::uint64_t fibonacci(std::size_t k) {
  std::uint64_t a = 0, b = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const auto t = a + b;
    a = b;
    b = t;
  }
  return a;
}

struct Level {
  std::size_t n = 0;
  std::vector<Word> words;
};

/// All levels 0..max_rank. Level n lists 1*YF_{n-1} followed by 2*YF_{n-2}.
inline std::vector<Level> enumerate_levels(std::size_t max_rank) {
  std::vector<Level> levels(max_rank + 1);
  for (std::size_t n = 0; n <= max_rank; ++n) {
    levels[n].n = n;
    if (n == 0) {
      levels[0].words.emplace_back();
      continue;
    }
    auto& out = levels[n].words;
    out.reserve(fibonacci(n + 1));
    for (const auto& w : levels[n - 1].words) out.push_back(Word::parse("1") + w);
    if (n >= 2)
      for (const auto& w : levels[n - 2].words) out.push_back(Word::parse("2") + w);
  }
  return levels;
}

inline Level enumerate_level(std::size_t n) { return std::move(enumerate_levels(n)[n]); }

}  // namespace yf

template <>
struct std::hash<yf::Word> {
  std::size_t operator()(const yf::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};
