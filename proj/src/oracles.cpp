#include "insdel/oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace insdel {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

void require_same_alphabet(const Word& a, const Word& b) {
  if (a.q() != b.q()) throw DomainError("words are over different alphabets");
}

double power(int base, std::size_t exponent) { return std::pow(static_cast<double>(base), static_cast<double>(exponent)); }

// Words of every length in [lo, hi]; the enumeration budget is checked up front.
template <typename F>
std::size_t for_each_word_in_lengths(AlphabetSize q, std::size_t lo, std::size_t hi, double cap, F&& f) {
  double total = 0.0;
  for (std::size_t len = lo; len <= hi; ++len) total += power(q.value(), len);
  if (total > cap) throw BudgetError("received-word enumeration exceeds the budget", total, cap);
  std::size_t count = 0;
  for (std::size_t len = lo; len <= hi; ++len) {
    for_each_word(q, len, [&](const Word& w) {
      ++count;
      f(w);
    });
  }
  return count;
}

std::set<Word> single_deletions(const std::set<Word>& words) {
  std::set<Word> out;
  for (const Word& w : words) {
    const auto& s = w.symbols();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0 && s[i] == s[i - 1]) continue;  // same result as deleting s[i-1]
      std::vector<Symbol> t;
      t.reserve(s.size() - 1);
      t.insert(t.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
      t.insert(t.end(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end());
      out.emplace(w.q(), std::move(t));
    }
  }
  return out;
}

std::set<Word> single_insertions(const std::set<Word>& words) {
  std::set<Word> out;
  for (const Word& w : words) {
    const auto& s = w.symbols();
    const int q = w.q().value();
    for (std::size_t i = 0; i <= s.size(); ++i) {
      for (int a = 0; a < q; ++a) {
        std::vector<Symbol> t;
        t.reserve(s.size() + 1);
        t.insert(t.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
        t.push_back(static_cast<Symbol>(a));
        t.insert(t.end(), s.begin() + static_cast<std::ptrdiff_t>(i), s.end());
        out.emplace(w.q(), std::move(t));
      }
    }
  }
  return out;
}

int floor_budget(double rate, std::size_t n) {
  if (!(rate >= 0.0)) throw DomainError("error rates must be nonnegative");
  return static_cast<int>(std::floor(rate * static_cast<double>(n) + 1e-9));
}

}  // namespace

Word::Word(AlphabetSize q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
  if (q.value() > kMaxAlphabet) throw DomainError("words support alphabets up to 256 symbols");
  for (Symbol s : symbols_)
    if (s >= q.value()) throw DomainError("symbol " + std::to_string(s) + " is outside the alphabet");
}

Word parse_word(std::string_view text, AlphabetSize q) {
  std::vector<Symbol> symbols;
  if (q.value() <= 36) {
    for (char c : text) {
      auto pos = kDigits.find(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      if (pos == std::string_view::npos || static_cast<int>(pos) >= q.value())
        throw DomainError(std::string("invalid symbol '") + c + "' for q = " + std::to_string(q.value()));
      symbols.push_back(static_cast<Symbol>(pos));
    }
  } else {
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      int v = 0;
      try {
        v = std::stoi(item);
      } catch (const std::exception&) {
        throw DomainError("invalid symbol '" + item + "'");
      }
      if (v < 0 || v >= q.value()) throw DomainError("symbol " + item + " is outside the alphabet");
      symbols.push_back(static_cast<Symbol>(v));
    }
  }
  return Word(q, std::move(symbols));
}

std::string format_word(const Word& word) {
  std::string out;
  if (word.q().value() <= 36) {
    for (Symbol s : word.symbols()) out.push_back(kDigits[s]);
    return out;
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(word[i]);
  }
  return out;
}

SmallCode::SmallCode(AlphabetSize q, std::vector<Word> codewords) : q_(q), n_(0), codewords_(std::move(codewords)) {
  if (codewords_.empty()) throw DomainError("a code needs at least one codeword");
  n_ = codewords_.front().size();
  for (const Word& w : codewords_) {
    if (w.q() != q) throw DomainError("codeword over a different alphabet");
    if (w.size() != n_) throw DomainError("codewords must have equal length");
  }
  std::vector<Word> sorted = codewords_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("codewords must be distinct");
}

double enumeration_cap() {
  if (const char* env = std::getenv("INSDEL_ENUMERATION_CAP")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return kDefaultEnumerationCap;
}

std::size_t lcs(const Word& a, const Word& b) {
  require_same_alphabet(a, b);
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

bool reachable(const Word& x, const Word& w, int max_del, int max_ins) {
  require_same_alphabet(x, w);
  if (max_del < 0 || max_ins < 0) return false;
  const std::size_t common = lcs(x, w);
  return x.size() - common <= static_cast<std::size_t>(max_del) && w.size() - common <= static_cast<std::size_t>(max_ins);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt supersequence_count_exact_length(int n, int t, AlphabetSize q) {
  if (n < 0 || t < 0) throw DomainError("lengths must be nonnegative");
  BigInt sum = 0;
  BigInt pw = 1;
  for (int i = 0; i <= t; ++i) {
    sum += binomial(static_cast<unsigned>(n + t), static_cast<unsigned>(i)) * pw;
    pw *= q.value() - 1;
  }
  return sum;
}

BigInt supersequence_count_up_to_length(int n, int t, AlphabetSize q) {
  BigInt sum = 0;
  for (int j = 0; j <= t; ++j) sum += supersequence_count_exact_length(n, j, q);
  return sum;
}

std::set<Word> enumerate_ball(const BallSpec& spec, double cap) {
  const Word& center = spec.center;
  if (spec.insertions < 0 || spec.deletions < 0) throw DomainError("ball radii must be nonnegative");
  if (static_cast<std::size_t>(spec.deletions) > center.size())
    throw DomainError("deletion radius exceeds the center length");
  const double required = power(center.q().value(), center.size() + static_cast<std::size_t>(spec.insertions));
  if (required > cap) throw BudgetError("ball enumeration exceeds the budget", required, cap);

  std::vector<std::set<Word>> by_deletions{{center}};
  for (int a = 1; a <= spec.deletions; ++a) by_deletions.push_back(single_deletions(by_deletions.back()));

  std::set<Word> out;
  for (int a = 0; a <= spec.deletions; ++a) {
    std::set<Word> level = by_deletions[static_cast<std::size_t>(a)];
    for (int b = 0; b <= spec.insertions; ++b) {
      if (b > 0) level = single_insertions(level);
      const bool keep = spec.length_mode == LengthMode::AllLengths || b - a == spec.insertions - spec.deletions;
      if (keep) out.insert(level.begin(), level.end());
    }
  }
  return out;
}

Rational containment_probability_dp(const Word& y, int m) {
  const std::size_t k = y.size();
  if (m < 0 || static_cast<std::size_t>(m) < k) throw DomainError("received length is shorter than the pattern");
  const int q = y.q().value();
  // counts[j]: words whose greedy left-to-right match has consumed j symbols of y
  std::vector<BigInt> counts(k + 1, 0);
  counts[0] = 1;
  for (int step = 0; step < m; ++step) {
    std::vector<BigInt> next(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
      next[j + 1] += counts[j];
      next[j] += counts[j] * (q - 1);
    }
    next[k] += counts[k] * q;
    counts = std::move(next);
  }
  BigInt total = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m));
  return Rational(counts[k], total);
}

Rational containment_probability_leftmost(const Word& y, int m) {
  const std::size_t k = y.size();
  if (m < 0 || static_cast<std::size_t>(m) < k) throw DomainError("received length is shorter than the pattern");
  if (k == 0) return Rational(1);
  const int q = y.q().value();
  using boost::multiprecision::pow;
  Rational sum = 0;
  // group position tuples by the last position a_k = l: C(l-1, k-1) tuples, each with
  // probability (1/q)^k (1 - 1/q)^(l - k) = (q-1)^(l-k) / q^l
  for (int l = static_cast<int>(k); l <= m; ++l) {
    const BigInt ways = binomial(static_cast<unsigned>(l - 1), static_cast<unsigned>(k - 1)) *
                        pow(BigInt(q - 1), static_cast<unsigned>(l - static_cast<int>(k)));
    sum += Rational(ways, pow(BigInt(q), static_cast<unsigned>(l)));
  }
  return sum;
}

Rational containment_probability(const Word& y, int m) {
  Rational dp = containment_probability_dp(y, m);
  Rational leftmost = containment_probability_leftmost(y, m);
  if (dp != leftmost) throw std::logic_error("containment probability routes disagree");
  return dp;
}

ListDecodingVerdict check_list_decodable_counts(const SmallCode& code, int max_del, int max_ins, int list_size,
                                                double cap) {
  const std::size_t n = code.block_length();
  if (max_del < 0 || max_ins < 0) throw DomainError("error budgets must be nonnegative");
  const std::size_t lo = n - std::min<std::size_t>(n, static_cast<std::size_t>(max_del));
  const std::size_t hi = n + static_cast<std::size_t>(max_ins);
  ListDecodingVerdict verdict;
  if (static_cast<std::size_t>(std::max(list_size, 0)) >= code.size()) {
    verdict.ok = true;
    return verdict;
  }
  std::size_t checked = 0;
  // enumerate lazily so the first violation stops the scan
  double total = 0.0;
  for (std::size_t len = lo; len <= hi; ++len) total += power(code.q().value(), len);
  if (total > cap) throw BudgetError("received-word enumeration exceeds the budget", total, cap);
  for (std::size_t len = lo; len <= hi && verdict.ok; ++len) {
    std::vector<Symbol> s(len, 0);
    const int qi = code.q().value();
    bool done = false;
    while (!done && verdict.ok) {
      Word w(code.q(), s);
      ++checked;
      std::vector<Word> list;
      for (const Word& x : code.codewords())
        if (reachable(x, w, max_del, max_ins)) list.push_back(x);
      if (list.size() > static_cast<std::size_t>(list_size)) {
        verdict.ok = false;
        verdict.witness = w;
        verdict.list = std::move(list);
      }
      std::size_t i = len;
      done = true;
      while (i > 0) {
        --i;
        if (++s[i] < qi) {
          done = false;
          break;
        }
        s[i] = 0;
      }
    }
  }
  verdict.words_checked = checked;
  return verdict;
}

ListDecodingVerdict check_list_decodable(const SmallCode& code, double gamma, double delta, int list_size, double cap) {
  const std::size_t n = code.block_length();
  return check_list_decodable_counts(code, floor_budget(delta, n), floor_budget(gamma, n), list_size, cap);
}

MaxListSize max_list_size(const SmallCode& code, int max_del, int max_ins, double cap) {
  const std::size_t n = code.block_length();
  if (max_del < 0 || max_ins < 0) throw DomainError("error budgets must be nonnegative");
  const std::size_t lo = n - std::min<std::size_t>(n, static_cast<std::size_t>(max_del));
  const std::size_t hi = n + static_cast<std::size_t>(max_ins);
  MaxListSize out;
  out.words_checked = for_each_word_in_lengths(code.q(), lo, hi, cap, [&](const Word& w) {
    std::size_t count = 0;
    for (const Word& x : code.codewords())
      if (reachable(x, w, max_del, max_ins)) ++count;
    if (count > out.size) {
      out.size = count;
      out.witness = w;
    }
  });
  return out;
}

std::vector<Symbol> surviving_alphabet(const Word& x, int d) {
  const int q = x.q().value();
  if (d < 0 || d > q) throw DomainError("number of removed symbols must lie in [0, q]");
  std::vector<std::size_t> freq(static_cast<std::size_t>(q), 0);
  for (Symbol s : x.symbols()) ++freq[s];
  std::vector<Symbol> order(static_cast<std::size_t>(q));
  std::iota(order.begin(), order.end(), Symbol{0});
  std::stable_sort(order.begin(), order.end(), [&](Symbol a, Symbol b) { return freq[a] < freq[b]; });
  std::vector<Symbol> kept(order.begin() + d, order.end());
  std::sort(kept.begin(), kept.end());
  return kept;
}

Word alphabet_reduction(const Word& x, int d) {
  const int q = x.q().value();
  const std::vector<Symbol> kept = surviving_alphabet(x, d);
  std::vector<bool> keep(static_cast<std::size_t>(q), false);
  for (Symbol s : kept) keep[s] = true;
  std::vector<Symbol> out;
  for (Symbol s : x.symbols())
    if (keep[s]) out.push_back(s);
  const std::size_t n = x.size();
  const std::size_t target = (n * static_cast<std::size_t>(q - d) + static_cast<std::size_t>(q) - 1) / static_cast<std::size_t>(q);
  if (out.size() > target) out.resize(target);
  return Word(x.q(), std::move(out));
}

TwoSegmentReduction two_segment_reduction(const Word& x, int d, double alpha) {
  const int q = x.q().value();
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  if (d < 0 || d + 1 > q) throw DomainError("two-segment reduction needs 0 <= d and d + 1 <= q");
  const std::size_t n = x.size();
  const auto split = std::min(n, static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n) - 1e-9)));
  const auto& s = x.symbols();
  Word head(x.q(), {s.begin(), s.begin() + static_cast<std::ptrdiff_t>(split)});
  Word tail(x.q(), {s.begin() + static_cast<std::ptrdiff_t>(split), s.end()});
  TwoSegmentReduction out{Word(x.q()), surviving_alphabet(head, d), surviving_alphabet(tail, d + 1), 0, 0};
  Word a = alphabet_reduction(head, d);
  Word b = alphabet_reduction(tail, d + 1);
  out.first_length = a.size();
  out.second_length = b.size();
  std::vector<Symbol> joined = a.symbols();
  joined.insert(joined.end(), b.symbols().begin(), b.symbols().end());
  out.word = Word(x.q(), std::move(joined));
  return out;
}

}  // namespace insdel
