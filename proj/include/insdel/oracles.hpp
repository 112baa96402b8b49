#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "insdel/types.hpp"

namespace insdel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Symbol = std::uint8_t;

/// A q-ary string; every symbol is below q.
class Word {
public:
  static constexpr int kMaxAlphabet = 256;

  Word(AlphabetSize q, std::vector<Symbol> symbols);
  explicit Word(AlphabetSize q) : Word(q, {}) {}

  AlphabetSize q() const noexcept { return q_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const Word& a, const Word& b) { return a.symbols_ == b.symbols_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.symbols_.size() <=> b.symbols_.size(); c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

private:
  AlphabetSize q_;
  std::vector<Symbol> symbols_;
};

/// Base-36 digits for q <= 36, comma-separated integers otherwise.
Word parse_word(std::string_view text, AlphabetSize q);
std::string format_word(const Word& word);

/// Distinct equal-length codewords over one alphabet.
class SmallCode {
public:
  SmallCode(AlphabetSize q, std::vector<Word> codewords);

  AlphabetSize q() const noexcept { return q_; }
  std::size_t block_length() const noexcept { return n_; }
  const std::vector<Word>& codewords() const noexcept { return codewords_; }
  std::size_t size() const noexcept { return codewords_.size(); }

private:
  AlphabetSize q_;
  std::size_t n_;
  std::vector<Word> codewords_;
};

enum class LengthMode { ExactFinalLength, AllLengths };

struct BallSpec {
  Word center;
  int insertions = 0;
  int deletions = 0;
  LengthMode length_mode = LengthMode::AllLengths;
};

/// Default budget for exhaustive enumerations; INSDEL_ENUMERATION_CAP overrides it.
inline constexpr double kDefaultEnumerationCap = 1e7;
double enumeration_cap();

/// Longest common subsequence length.
std::size_t lcs(const Word& a, const Word& b);

/// Whether w can be obtained from x with at most max_del deletions and max_ins insertions.
///
/// An optimal edit keeps an LCS and needs |x| - lcs deletions and |w| - lcs insertions.
bool reachable(const Word& x, const Word& w, int max_del, int max_ins);

BigInt binomial(unsigned n, unsigned k);

/// Number of length-(n + t) q-ary supersequences of any fixed length-n word:
/// sum_{i=0}^{t} C(n + t, i) (q - 1)^i.
BigInt supersequence_count_exact_length(int n, int t, AlphabetSize q);

/// Number of q-ary supersequences of lengths n .. n + t.
BigInt supersequence_count_up_to_length(int n, int t, AlphabetSize q);

/// All words obtained from the center by up to `deletions` deletions followed by up to
/// `insertions` insertions; in ExactFinalLength mode only words of length n - t_d + t_i.
std::set<Word> enumerate_ball(const BallSpec& spec, double cap = enumeration_cap());

/// Probability that a uniform length-m word contains y as a subsequence, by a DP over the
/// greedy prefix-match state.
Rational containment_probability_dp(const Word& y, int m);

/// The same probability as a sum over the positions a_1 < ... < a_k of the leftmost
/// occurrence: each contributes (1/q)^k (1 - 1/q)^(a_k - k).
Rational containment_probability_leftmost(const Word& y, int m);

/// Both routes; throws std::logic_error if they ever disagree. Requires m >= |y|.
Rational containment_probability(const Word& y, int m);

struct ListDecodingVerdict {
  bool ok = true;
  std::optional<Word> witness;
  /// codewords reachable from the witness
  std::vector<Word> list;
  std::size_t words_checked = 0;
};

/// Checks every word of length n - floor(delta n) .. n + floor(gamma n) for lists longer than L.
ListDecodingVerdict check_list_decodable(const SmallCode& code, double gamma, double delta, int list_size,
                                         double cap = enumeration_cap());

/// Same check with integer error budgets.
ListDecodingVerdict check_list_decodable_counts(const SmallCode& code, int max_del, int max_ins, int list_size,
                                                double cap = enumeration_cap());

struct MaxListSize {
  std::size_t size = 0;
  std::optional<Word> witness;
  std::size_t words_checked = 0;
};

/// Largest decoding list over all received words.
MaxListSize max_list_size(const SmallCode& code, int max_del, int max_ins, double cap = enumeration_cap());

/// Drops every occurrence of the d least frequent symbols (ties: smaller symbol first),
/// then truncates to ceil(n (1 - d/q)).
Word alphabet_reduction(const Word& x, int d);

/// Symbols that survive alphabet_reduction(x, d), ascending.
std::vector<Symbol> surviving_alphabet(const Word& x, int d);

struct TwoSegmentReduction {
  Word word;
  std::vector<Symbol> first_alphabet;
  std::vector<Symbol> second_alphabet;
  std::size_t first_length = 0;
  std::size_t second_length = 0;
};

/// alphabet_reduction with d on the first ceil(alpha n) symbols and with d + 1 on the rest.
TwoSegmentReduction two_segment_reduction(const Word& x, int d, double alpha);

/// Calls f(word) for every word of length `length` in lexicographic order.
template <typename F>
void for_each_word(AlphabetSize q, std::size_t length, F&& f) {
  std::vector<Symbol> s(length, 0);
  const int qi = q.value();
  while (true) {
    f(Word(q, s));
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++s[i] < qi) break;
      s[i] = 0;
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

}  // namespace insdel
