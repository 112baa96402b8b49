#include "insdel/types.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace insdel {

ErrorPoint::ErrorPoint(AlphabetSize q, double gamma, double delta) : q_(q), gamma_(gamma), delta_(delta) {
  if (!std::isfinite(gamma) || !std::isfinite(delta))
    throw DomainError("error rates must be finite");
  if (delta < 0.0 || delta > 1.0)
    throw DomainError("deletion rate must lie in [0, 1], got " + std::to_string(delta));
  if (gamma < 0.0 || gamma > q.as_double() - 1.0)
    throw DomainError("insertion rate must lie in [0, q-1], got " + std::to_string(gamma));
}

namespace {

constexpr std::array<std::pair<BoundSource, std::string_view>, 8> kSourceNames{{
    {BoundSource::InsertionOnly, "insertion-only"},
    {BoundSource::DeletionOnly, "deletion-only"},
    {BoundSource::Spoke, "spoke"},
    {BoundSource::FValue, "f"},
    {BoundSource::Inner, "inner"},
    {BoundSource::LinearOuter, "linear-outer"},
    {BoundSource::InterpolatedOuter, "interpolated-outer"},
    {BoundSource::CombinedOuter, "combined-outer"},
}};

}  // namespace

std::string_view to_string(BoundSource source) {
  for (const auto& [s, name] : kSourceNames)
    if (s == source) return name;
  return "unknown";
}

BoundSource parse_bound_source(std::string_view name) {
  for (const auto& [s, n] : kSourceNames)
    if (n == name) return s;
  throw DomainError("unknown bound source '" + std::string(name) + "'");
}

}  // namespace insdel
