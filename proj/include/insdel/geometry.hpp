#pragma once

#include <optional>
#include <vector>

#include "insdel/types.hpp"

namespace insdel {

struct PlanePoint {
  double gamma = 0.0;
  double delta = 0.0;
};

__extension__ typedef __int128 Int128;

/// Exact rational number num/den with den > 0, reduced.
struct ExactRatio {
  Int128 num = 0;
  Int128 den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Zero-rate region F_q of list-decodable q-ary insdel codes.
///
/// Vertices are (0,0) followed by (i(i-1)/q, (q-i)/q) for i = q, q-1, ..., 1,
/// i.e. counterclockwise starting along the gamma axis. Every vertex has
/// denominator q, so all predicates are evaluated exactly on integers scaled
/// by q * 10^12 (query points are snapped to the nearest point of that lattice).
///
/// The region is star-shaped around the origin: the polar angle of the
/// boundary chain from (q-1, 0) to (0, 1-1/q) is strictly monotone, so every
/// ray from the origin leaves through exactly one point of that chain.
class ResiliencePolygon {
public:
  static constexpr int kMaxAlphabet = 1000;

  explicit ResiliencePolygon(AlphabetSize q);

  AlphabetSize q() const noexcept { return q_; }
  /// q + 1 vertices, counterclockwise, starting at the origin.
  const std::vector<PlanePoint>& vertices() const noexcept { return vertices_; }

  /// Boundary value gamma*(delta) of the outer chain for 0 <= delta <= 1 - 1/q.
  double boundary_gamma(double delta) const;

private:
  friend struct PolygonAccess;

  AlphabetSize q_;
  std::vector<PlanePoint> vertices_;
  // vertex coordinates times q, exact
  std::vector<std::pair<long long, long long>> scaled_;
};

ResiliencePolygon build_polygon(AlphabetSize q);

struct ScalingResult {
  /// Ray parameter t at which t*(gamma, delta) meets the outer chain.
  ExactRatio alpha_exact;
  double alpha = 0.0;
  PlanePoint boundary_point;
  /// Index k of the chain edge hit, counting from the edge that starts at (q-1, 0).
  int edge = 0;
};

/// True for the origin, the half-open axis segments and the strict interior.
/// The outer chain (including its endpoints) is excluded.
bool contains(const ResiliencePolygon& poly, PlanePoint point);

/// Membership in the topological closure of F_q.
bool contains_closure(const ResiliencePolygon& poly, PlanePoint point);

/// Intersects the ray t*(gamma, delta), t > 0, with the outer chain.
/// Throws DomainError for the zero vector or negative coordinates.
ScalingResult scaling_alpha(const ResiliencePolygon& poly, PlanePoint point);

/// max(0, 1 - 1/alpha); the noiseless point (0, 0) has rate 1.
BoundValue linear_outer_bound(AlphabetSize q, double gamma, double delta);

}  // namespace insdel
