#pragma once

#include <optional>
#include <vector>

#include "truncgal/family.hpp"
#include "truncgal/int_polynomial.hpp"

namespace truncgal {

struct LatticePoint {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Reduced fraction num/den with den > 0.
struct Slope {
  i64 num = 0;
  i64 den = 1;
  static Slope between(const LatticePoint& a, const LatticePoint& b);
  friend bool operator==(const Slope&, const Slope&) = default;
};

struct NewtonEdge {
  LatticePoint start;
  LatticePoint end;
  Slope slope;
  i64 horizontal_length() const { return end.x - start.x; }
  friend bool operator==(const NewtonEdge&, const NewtonEdge&) = default;
};

struct NewtonPolygon {
  mpz_class prime;
  std::vector<LatticePoint> points;
  std::vector<NewtonEdge> edges;
};

// Points (j, v_p(a_{r-j})) for every nonzero coefficient, j counted from the
// leading coefficient. Throws std::invalid_argument if a_0 or a_r is zero or
// p is not prime.
std::vector<LatticePoint> valuations(const IntPolynomial& f, const mpz_class& p);

// Lower convex hull by monotone chain; collinear runs collapse to one edge.
// Points must have strictly increasing x. The returned polygon has prime 0.
NewtonPolygon lower_hull(const std::vector<LatticePoint>& points);

NewtonPolygon newton_polygon(const IntPolynomial& f, const mpz_class& p);

struct FactorDegreeConstraint {
  NewtonEdge edge;
  // Degree of the p-adic factor attached to the edge.
  i64 factor_degree = 0;
  // Every irreducible p-adic factor of that factor has degree divisible by this.
  i64 irreducible_degree_multiple = 1;
};

std::vector<FactorDegreeConstraint> factor_degree_constraints(const NewtonPolygon& np);

// Smallest prime q with r/2 < q < r - 2.
std::optional<int> find_q_prime(int r);

enum class HajirSide {
  // p^e || t + r + 1 - q; polygon (0,e)-(r-q,0)-(r,e).
  Lower,
  // p^e || t + 1 + q; polygon (0,e)-(q,0)-(r,e).
  Upper,
};

struct HajirCertificate {
  int q = 0;
  mpz_class p;
  unsigned e = 0;
  HajirSide side = HajirSide::Lower;
  // The edge of the verified polygon whose slope denominator is divisible by q.
  NewtonEdge edge;
  NewtonPolygon polygon;
};

enum class HajirStatus { Found, NoQPrime, NotFound };

struct HajirOutcome {
  HajirStatus status = HajirStatus::NotFound;
  std::optional<HajirCertificate> certificate;
};

// Searches primes q in (r/2, r-2) ascending and, for each, primes r < p <= bound
// dividing t+r+1-q or t+1+q exactly to a power e with q not dividing e. The
// polygon of q_{r,n}(x-1) at p is recomputed from exact coefficients and must
// show the two-edge shape before a certificate is returned. Among candidates
// for one q the smaller p wins, then the smaller e.
HajirOutcome find_hajir_certificate(const FamilyParams& params, const mpz_class& prime_search_bound);

// Recomputes the polygon for a certificate and checks shape and slope.
bool verify_hajir_certificate(const FamilyParams& params, const HajirCertificate& cert);

}  // namespace truncgal
