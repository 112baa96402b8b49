#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace insdel {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A spoke whose reduced alphabet has at most one symbol was asked to absorb insertions.
class DegenerateSpokeError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Raised when an exhaustive enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& what, double required, double cap)
      : std::runtime_error(what), required_(required), cap_(cap) {}

  double required() const noexcept { return required_; }
  double cap() const noexcept { return cap_; }

private:
  double required_;
  double cap_;
};

class AlphabetSize {
public:
  explicit AlphabetSize(int q) : q_(q) {
    if (q < 2) throw DomainError("alphabet size must be at least 2, got " + std::to_string(q));
  }

  int value() const noexcept { return q_; }
  double as_double() const noexcept { return static_cast<double>(q_); }

  friend bool operator==(AlphabetSize, AlphabetSize) = default;

private:
  int q_;
};

/// (insertion rate, deletion rate) pair over a fixed alphabet.
///
/// Rates are per codeword symbol. Construction rejects points outside
/// 0 <= delta <= 1, 0 <= gamma <= q - 1.
class ErrorPoint {
public:
  ErrorPoint(AlphabetSize q, double gamma, double delta);

  AlphabetSize q() const noexcept { return q_; }
  double gamma() const noexcept { return gamma_; }
  double delta() const noexcept { return delta_; }

private:
  AlphabetSize q_;
  double gamma_;
  double delta_;
};

enum class BoundSource : std::uint8_t {
  InsertionOnly,
  DeletionOnly,
  Spoke,
  FValue,
  Inner,
  LinearOuter,
  InterpolatedOuter,
  CombinedOuter,
};

std::string_view to_string(BoundSource source);
/// Parses the kebab-case names produced by to_string; throws DomainError otherwise.
BoundSource parse_bound_source(std::string_view name);

/// A rate together with the bound that produced it.
///
/// `raw` is the unclamped formula value; it is empty where the formula has
/// no meaning (e.g. past the zero crossing of a spoke). `rate` is
/// max(0, raw) clamped to [0, 1], or 0 when raw is empty.
struct BoundValue {
  double rate = 0.0;
  bool feasible = false;
  BoundSource source = BoundSource::CombinedOuter;
  std::optional<double> raw;
};

}  // namespace insdel
