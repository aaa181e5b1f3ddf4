#include "truncgal/newton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace truncgal {

namespace {

// Cross product of (b - a) and (c - a); <= 0 means b is on or above segment a-c.
__int128 cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

std::vector<NewtonEdge> expected_shape(int r, unsigned e, i64 corner) {
  const LatticePoint left{0, e}, mid{corner, 0}, right{r, e};
  return {{left, mid, Slope::between(left, mid)}, {mid, right, Slope::between(mid, right)}};
}

}  // namespace

Slope Slope::between(const LatticePoint& a, const LatticePoint& b) {
  i64 num = b.y - a.y;
  i64 den = b.x - a.x;
  if (den == 0) throw std::invalid_argument("Slope: vertical segment");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = std::gcd(num, den);
  return {num / g, den / g};
}

std::vector<LatticePoint> valuations(const IntPolynomial& f, const mpz_class& p) {
  if (!is_prime(p)) throw std::invalid_argument("valuations: p is not prime");
  const int r = f.degree();
  if (r < 0 || f[0] == 0) throw std::invalid_argument("valuations: zero constant or leading coefficient");
  std::vector<LatticePoint> out;
  for (int j = 0; j <= r; ++j) {
    const mpz_class a = f[r - j];
    if (a == 0) continue;
    out.push_back({j, static_cast<i64>(valuation(a, p))});
  }
  return out;
}

NewtonPolygon lower_hull(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw std::invalid_argument("lower_hull: no points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].x <= points[i - 1].x) throw std::invalid_argument("lower_hull: x must strictly increase");
  }
  std::vector<LatticePoint> hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  NewtonPolygon np;
  np.prime = 0;
  np.points = points;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    np.edges.push_back({hull[i - 1], hull[i], Slope::between(hull[i - 1], hull[i])});
  }
  return np;
}

NewtonPolygon newton_polygon(const IntPolynomial& f, const mpz_class& p) {
  NewtonPolygon np = lower_hull(valuations(f, p));
  np.prime = p;
  return np;
}

std::vector<FactorDegreeConstraint> factor_degree_constraints(const NewtonPolygon& np) {
  std::vector<FactorDegreeConstraint> out;
  out.reserve(np.edges.size());
  for (const auto& e : np.edges) out.push_back({e, e.horizontal_length(), e.slope.den});
  return out;
}

std::optional<int> find_q_prime(int r) {
  for (int q = r / 2 + 1; q < r - 2; ++q) {
    if (2 * q > r && is_prime(static_cast<u64>(q))) return q;
  }
  return std::nullopt;
}

bool verify_hajir_certificate(const FamilyParams& params, const HajirCertificate& cert) {
  const int r = params.r();
  if (cert.q <= 0 || 2 * cert.q <= r || cert.q >= r - 2 || !is_prime(static_cast<u64>(cert.q))) return false;
  if (cert.p <= r || !is_prime(cert.p) || cert.e == 0 || cert.e % static_cast<unsigned>(cert.q) == 0) return false;

  const mpz_class t = static_cast<long>(params.t());
  const mpz_class target = cert.side == HajirSide::Lower ? mpz_class(t + r + 1 - cert.q) : mpz_class(t + 1 + cert.q);
  if (valuation(target, cert.p) != cert.e) return false;

  const NewtonPolygon np = newton_polygon(build_q_shifted(params), cert.p);
  const i64 corner = cert.side == HajirSide::Lower ? r - cert.q : cert.q;
  if (np.edges != expected_shape(r, cert.e, corner)) return false;
  const auto hit = std::find_if(np.edges.begin(), np.edges.end(),
                                [&](const NewtonEdge& e) { return e.slope.den % cert.q == 0; });
  return hit != np.edges.end() && *hit == cert.edge;
}

HajirOutcome find_hajir_certificate(const FamilyParams& params, const mpz_class& prime_search_bound) {
  const int r = params.r();
  HajirOutcome out;
  if (!find_q_prime(r)) {
    out.status = HajirStatus::NoQPrime;
    return out;
  }
  const mpz_class t = static_cast<long>(params.t());
  u64 trial_limit = prime_search_bound.fits_ulong_p() ? prime_search_bound.get_ui() : ~u64{0};
  trial_limit = std::min<u64>(trial_limit, u64{1} << 32);

  for (int q = r / 2 + 1; q < r - 2; ++q) {
    if (2 * q <= r || !is_prime(static_cast<u64>(q))) continue;
    std::optional<HajirCertificate> best;
    for (HajirSide side : {HajirSide::Lower, HajirSide::Upper}) {
      const mpz_class target = side == HajirSide::Lower ? mpz_class(t + r + 1 - q) : mpz_class(t + 1 + q);
      const Factorization fac = factor(target, trial_limit);
      for (const auto& [prime, e] : fac.factors) {
        if (prime <= r || prime > prime_search_bound || e % static_cast<unsigned>(q) == 0) continue;
        if (best && (prime > best->p || (prime == best->p && e >= best->e))) continue;
        HajirCertificate cert;
        cert.q = q;
        cert.p = prime;
        cert.e = e;
        cert.side = side;
        cert.polygon = newton_polygon(build_q_shifted(params), prime);
        const i64 corner = side == HajirSide::Lower ? r - q : q;
        if (cert.polygon.edges != expected_shape(r, e, corner)) continue;
        cert.edge = side == HajirSide::Lower ? cert.polygon.edges[1] : cert.polygon.edges[0];
        best = std::move(cert);
      }
    }
    if (best) {
      out.status = HajirStatus::Found;
      out.certificate = std::move(best);
      return out;
    }
  }
  return out;
}

}  // namespace truncgal
