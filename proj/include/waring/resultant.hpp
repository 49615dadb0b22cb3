#ifndef WARING_RESULTANT_HPP
#define WARING_RESULTANT_HPP

// Resultants with explicit formal degrees (so vanishing coefficients at the top
// correctly report common projective roots at [1:0]).  Two flavours:
//   - exact rational Sylvester determinant for pairs of binary forms,
//   - fraction-free integer Bareiss determinant for integer polynomials.

#include <vector>

#include "binary_form.hpp"
#include "qmatrix.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace waring {

// Sylvester matrix of p (formal degree m) and q (formal degree n), size (m+n).
// Coefficient vectors are indexed low-to-high and padded with zeros to formal degree.
inline QMatrix sylvester_matrix(const std::vector<Rat>& p, int m, const std::vector<Rat>& q,
                                int n) {
  if (static_cast<int>(p.size()) > m + 1 || static_cast<int>(q.size()) > n + 1)
    throw domain_error("sylvester_matrix: coefficients exceed formal degree");
  auto get = [](const std::vector<Rat>& c, int i) {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : Rat(0);
  };
  QMatrix s(m + n, m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s.at(r, r + k) = get(p, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s.at(n + r, r + k) = get(q, n - k);
  return s;
}

// Resultant of two binary forms at their nominal degrees; zero iff they share a
// projective root over C (the root [1:0] included).
inline Rat resultant(const BinaryForm& f, const BinaryForm& g) {
  const int m = f.degree(), n = g.degree();
  if (m + n == 0) return Rat(1);
  return sylvester_matrix(f.coeffs(), m, g.coeffs(), n).det();
}

// Fraction-free (Bareiss) determinant of an integer matrix.
inline Int int_det(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Int(1);
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw domain_error("int_det: matrix not square");
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(p)]);
      sign = -sign;
    }
    const Int pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pivot -
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      }
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
    }
    prev = pivot;
  }
  Int d = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign > 0 ? d : Int(-d);
}

// Integer resultant of p, q at formal degrees m >= deg p, n >= deg q.
inline Int resultant_int(const ZPoly& p, int m, const ZPoly& q, int n) {
  if (p.deg() > m || q.deg() > n)
    throw domain_error("resultant_int: coefficients exceed formal degree");
  if (m + n == 0) return Int(1);
  auto get = [](const ZPoly& c, int i) { return (i >= 0 && i <= c.deg()) ? c[i] : Int(0); };
  std::vector<std::vector<Int>> s(static_cast<std::size_t>(m + n),
                                  std::vector<Int>(static_cast<std::size_t>(m + n), Int(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = get(p, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = get(q, n - k);
  return int_det(std::move(s));
}

}  // namespace waring

#endif  // WARING_RESULTANT_HPP
