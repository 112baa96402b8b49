#include "insdel/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace insdel {

namespace {

using i128 = Int128;

constexpr long long kLattice = 1'000'000'000'000LL;  // query points snap to 1e-12
// coordinate * q must stay below this so the scaled lattice fits in 64 bits
constexpr double kMaxScaledCoordinate = 1e6;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExactRatio make_ratio(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

struct Lattice {
  i128 x;
  i128 y;
};

i128 cross(const Lattice& a, const Lattice& b) { return a.x * b.y - a.y * b.x; }

}  // namespace

struct PolygonAccess {
  // Vertices and query points in the common frame (coordinate * q * 1e12).
  static Lattice vertex(const ResiliencePolygon& poly, std::size_t i) {
    auto [x, y] = poly.scaled_[i];
    return {static_cast<i128>(x) * kLattice, static_cast<i128>(y) * kLattice};
  }

  static Lattice query(const ResiliencePolygon& poly, PlanePoint p) {
    if (!(p.gamma >= 0.0) || !(p.delta >= 0.0))
      throw DomainError("polygon queries need nonnegative coordinates");
    const double q = poly.q_.as_double();
    if (p.gamma * q > kMaxScaledCoordinate || p.delta * q > kMaxScaledCoordinate)
      throw DomainError("polygon query coordinate too large");
    // nearest point of the lattice (1 / (q * 1e12)) Z^2; vertices lie on it exactly
    const double scale = q * static_cast<double>(kLattice);
    return {static_cast<i128>(std::llround(p.gamma * scale)), static_cast<i128>(std::llround(p.delta * scale))};
  }

  static std::size_t size(const ResiliencePolygon& poly) { return poly.scaled_.size(); }
};

ResiliencePolygon::ResiliencePolygon(AlphabetSize q) : q_(q) {
  const int n = q.value();
  if (n > kMaxAlphabet) throw DomainError("resilience polygon supports q <= 1000");
  const double qd = q.as_double();
  vertices_.push_back({0.0, 0.0});
  scaled_.emplace_back(0, 0);
  for (int i = n; i >= 1; --i) {
    long long gx = static_cast<long long>(i) * (i - 1);
    long long dy = n - i;
    scaled_.emplace_back(gx, dy);
    vertices_.push_back({static_cast<double>(gx) / qd, static_cast<double>(dy) / qd});
  }
}

double ResiliencePolygon::boundary_gamma(double delta) const {
  const double top = vertices_.back().delta;
  if (!(delta >= 0.0 && delta <= top + 1e-12)) throw DomainError("delta outside the polygon's range");
  delta = std::min(delta, top);
  for (std::size_t k = 1; k + 1 < vertices_.size(); ++k) {
    const PlanePoint& a = vertices_[k];
    const PlanePoint& b = vertices_[k + 1];
    if (delta <= b.delta) {
      double s = (delta - a.delta) / (b.delta - a.delta);
      return a.gamma + s * (b.gamma - a.gamma);
    }
  }
  return 0.0;
}

ResiliencePolygon build_polygon(AlphabetSize q) { return ResiliencePolygon(q); }

namespace {

// Returns t and the edge index; p must be nonzero.
std::pair<ExactRatio, int> intersect_chain(const ResiliencePolygon& poly, const Lattice& p) {
  const std::size_t count = PolygonAccess::size(poly);
  // chain runs over vertices 1 .. count-1
  for (std::size_t k = 1; k + 1 < count; ++k) {
    Lattice a = PolygonAccess::vertex(poly, k);
    Lattice b = PolygonAccess::vertex(poly, k + 1);
    Lattice e{b.x - a.x, b.y - a.y};
    i128 den = cross(p, e);
    if (den == 0) continue;
    i128 t_num = cross(a, e);
    i128 s_num = cross(a, p);
    if (den < 0) {
      den = -den;
      t_num = -t_num;
      s_num = -s_num;
    }
    if (s_num < 0 || s_num > den) continue;
    return {make_ratio(t_num, den), static_cast<int>(k - 1)};
  }
  // Unreachable for nonnegative nonzero p: the chain spans every direction in the quadrant.
  throw DomainError("ray does not meet the resilience boundary");
}

}  // namespace

ScalingResult scaling_alpha(const ResiliencePolygon& poly, PlanePoint point) {
  Lattice p = PolygonAccess::query(poly, point);
  if (p.x == 0 && p.y == 0) throw DomainError("scaling factor is undefined for the zero vector");
  auto [t, edge] = intersect_chain(poly, p);
  ScalingResult out;
  out.alpha_exact = t;
  out.alpha = t.value();
  out.boundary_point = {point.gamma * out.alpha, point.delta * out.alpha};
  out.edge = edge;
  return out;
}

bool contains(const ResiliencePolygon& poly, PlanePoint point) {
  Lattice p = PolygonAccess::query(poly, point);
  if (p.x == 0 && p.y == 0) return true;
  auto [t, edge] = intersect_chain(poly, p);
  return t.num > t.den;
}

bool contains_closure(const ResiliencePolygon& poly, PlanePoint point) {
  Lattice p = PolygonAccess::query(poly, point);
  if (p.x == 0 && p.y == 0) return true;
  auto [t, edge] = intersect_chain(poly, p);
  return t.num >= t.den;
}

BoundValue linear_outer_bound(AlphabetSize q, double gamma, double delta) {
  ErrorPoint pt(q, gamma, delta);
  BoundValue out;
  out.source = BoundSource::LinearOuter;
  const double scale = q.as_double() * static_cast<double>(kLattice);
  if (std::llround(gamma * scale) == 0 && std::llround(delta * scale) == 0) {
    out.rate = 1.0;
    out.raw = 1.0;
    out.feasible = true;
    return out;
  }
  ResiliencePolygon poly(q);
  ScalingResult s = scaling_alpha(poly, {gamma, delta});
  // 1 - 1/t = (num - den) / num, evaluated on exact integers
  const ExactRatio r = make_ratio(s.alpha_exact.num - s.alpha_exact.den, s.alpha_exact.num);
  out.raw = r.value();
  out.rate = std::clamp(*out.raw, 0.0, 1.0);
  out.feasible = s.alpha_exact.num >= s.alpha_exact.den;
  return out;
}

}  // namespace insdel
