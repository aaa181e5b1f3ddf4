#include "truncgal/disc.hpp"

#include <numeric>
#include <stdexcept>

namespace truncgal {

namespace {

mpz_class factorial(int r) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(r));
  return out;
}

mpz_class pow(const mpz_class& base, int e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

DiscriminantValue closed_form_discriminant(const FamilyParams& params) {
  const int r = params.r();
  if (r < 2) throw std::invalid_argument("closed_form_discriminant: need r >= 2");
  const mpz_class t = static_cast<long>(params.t());

  DiscriminantValue out;
  out.structured = {r * (r - 1) / 2, r - 1, r - 2, r - 2};

  mpz_class numerator = pow(t + 1, r - 1) * pow(t + r + 1, r - 1);
  for (int k = 2; k <= r; ++k) numerator *= pow(t + k, r - 2);
  const mpz_class denominator = pow(factorial(r), r - 2);
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw std::logic_error("closed_form_discriminant: (r!)^(r-2) does not divide the numerator");
  }
  mpz_divexact(out.value.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  if (out.structured.sign_exponent % 2) out.value = -out.value;
  out.sign = sgn(out.value);
  return out;
}

mpz_class resultant_sylvester(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant_sylvester: zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0) return pow(f.leading(), n);
  if (n == 0) return pow(g.leading(), m);

  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<mpz_class>> rows(size, std::vector<mpz_class>(size, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f[m - k];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) rows[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = g[n - k];
  }
  return bareiss_determinant(std::move(rows));
}

mpz_class discriminant_via_resultant(const IntPolynomial& f) {
  const int r = f.degree();
  if (r < 2) throw std::invalid_argument("discriminant_via_resultant: need degree >= 2");
  mpz_class res = resultant_sylvester(f, f.derivative());
  if (!mpz_divisible_p(res.get_mpz_t(), f.leading().get_mpz_t())) {
    throw std::logic_error("discriminant_via_resultant: leading coefficient does not divide Res(f, f')");
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((r * (r - 1) / 2) % 2) out = -out;
  return out;
}

bool is_square(const mpz_class& d) {
  if (sgn(d) < 0) return false;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
  return root * root == d;
}

EvenSquareSearch even_r_square_search(int r) {
  if (r < 4 || r % 2) throw std::invalid_argument("even_r_square_search: r must be even and >= 4");
  EvenSquareSearch out;
  out.r = r;
  const i64 rr = r;
  out.bound = (rr * (rr - 1) * (rr - 1) + 3) / 4;
  for (i64 t = 0; t < out.bound; ++t) {
    DiscriminantValue d = closed_form_discriminant(FamilyParams::from_rt(r, t));
    const bool square = is_square(d.value);
    const bool product_square = is_square(mpz_class(static_cast<long>((t + 1) * (t + rr + 1))));
    if (square != (d.sign > 0 && product_square)) out.product_criterion_agrees = false;
    if (square) out.hits.push_back({t, d.value, std::gcd(t + 1, t + rr + 1)});
  }
  return out;
}

}  // namespace truncgal
