#ifndef WARING_APOLARITY_HPP
#define WARING_APOLARITY_HPP

// The apolar ideal of a binary form: catalecticant matrices, graded pieces,
// and the two minimal generators (binary apolar ideals are complete
// intersections with generator degrees summing to d + 2).
//
// Conventions: an operator h acts as h(dx, dy); the root [a:b] of a factor
// (b*x - a*y) of h corresponds to the power (a*x + b*y)^d in decompositions.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "binary_form.hpp"
#include "qmatrix.hpp"
#include "rational.hpp"
#include "resultant.hpp"

namespace waring {

// Degrees of the minimal generators for a generic form of degree d.
inline std::pair<int, int> generic_degrees(int d) {
  const int d1 = (d + 2) / 2;
  return {d1, d + 2 - d1};
}

// Matrix of h -> apply_apolar(h, f) on degree-e operators, e <= deg f.
// Entry (r, j) multiplies h_j into result coefficient r.
inline QMatrix catalecticant(const BinaryForm& f, int e) {
  const int d = f.degree();
  if (e < 0 || e > d) throw domain_error("catalecticant: operator degree out of range");
  QMatrix m(d - e + 1, e + 1);
  for (int r = 0; r <= d - e; ++r)
    for (int j = 0; j <= e; ++j)
      m.at(r, j) = f.coeff(r + j) * Rat(falling(r + j, j) * falling(d - r - j, e - j));
  return m;
}

// Basis of the degree-e graded piece of the apolar ideal of f.
// For e > deg f every operator annihilates f, so the piece is the full space.
inline std::vector<BinaryForm> apolar_piece(const BinaryForm& f, int e) {
  if (e < 0) throw domain_error("apolar_piece: negative degree");
  std::vector<BinaryForm> out;
  if (e > f.degree()) {
    for (int i = 0; i <= e; ++i) out.push_back(BinaryForm::monomial(e, i));
    return out;
  }
  for (auto& v : catalecticant(f, e).nullspace()) out.emplace_back(e, std::move(v));
  return out;
}

inline int apolar_piece_dim(const BinaryForm& f, int e) {
  if (e < 0) throw domain_error("apolar_piece_dim: negative degree");
  if (e > f.degree()) return e + 1;
  return (e + 1) - catalecticant(f, e).rank();
}

// Membership h in the apolar ideal of f.  In degrees above deg f this is
// automatic; otherwise it is exact annihilation.
inline bool in_apolar_ideal(const BinaryForm& h, const BinaryForm& f) {
  if (h.degree() > f.degree()) return true;
  return apply_apolar(h, f).is_zero();
}

// Least degree with a nonzero piece (the smaller minimal-generator degree).
inline int min_apolar_degree(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("min_apolar_degree: zero form");
  for (int e = 1; e <= f.degree() + 1; ++e)
    if (apolar_piece_dim(f, e) > 0) return e;
  throw internal_error("min_apolar_degree: no generator found");
}

// Row-reduced span of same-degree forms supporting remainder computation.
class SpanReducer {
 public:
  explicit SpanReducer(const std::vector<BinaryForm>& basis) {
    if (basis.empty()) {
      degree_ = -1;
      return;
    }
    degree_ = basis[0].degree();
    QMatrix m(static_cast<int>(basis.size()), degree_ + 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].degree() != degree_) throw domain_error("SpanReducer: degree mismatch");
      for (int j = 0; j <= degree_; ++j) m.at(static_cast<int>(i), j) = basis[i].coeff(j);
    }
    pivots_ = m.rref();
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      std::vector<Rat> row(static_cast<std::size_t>(degree_) + 1);
      for (int j = 0; j <= degree_; ++j) row[static_cast<std::size_t>(j)] = m.at(static_cast<int>(r), j);
      rows_.push_back(std::move(row));
    }
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  BinaryForm reduce(const BinaryForm& h) const {
    if (degree_ >= 0 && h.degree() != degree_) throw domain_error("SpanReducer: degree mismatch");
    std::vector<Rat> v = h.coeffs();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat& c = v[static_cast<std::size_t>(pivots_[r])];
      if (c == 0) continue;
      const Rat factor = c;  // pivot entries are 1 after rref
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * rows_[r][j];
    }
    return BinaryForm(h.degree(), std::move(v));
  }

  bool contains(const BinaryForm& h) const { return reduce(h).is_zero(); }

 private:
  int degree_ = -1;
  std::vector<int> pivots_;
  std::vector<std::vector<Rat>> rows_;
};

// g * (all monomials of degree e - deg g); basis of the multiples of g in degree e.
inline std::vector<BinaryForm> multiples_in_degree(const BinaryForm& g, int e) {
  std::vector<BinaryForm> out;
  const int k = e - g.degree();
  if (k < 0) return out;
  for (int i = 0; i <= k; ++i) out.push_back(g * BinaryForm::monomial(k, i));
  return out;
}

struct ApolarGenerators {
  BinaryForm g1, g2;   // deg g1 <= deg g2, deg g1 + deg g2 = deg f + 2
  Rat res;             // resultant of the pair, nonzero (complete intersection)
  bool generic = false;  // degrees match generic_degrees(deg f)
};

// The two minimal generators of the apolar ideal of a nonzero form.
inline ApolarGenerators apolar_generators(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("apolar_generators: zero form");
  const int d = f.degree();
  const int e1 = min_apolar_degree(f);
  const int e2 = d + 2 - e1;
  auto finish = [&](BinaryForm a, BinaryForm b) {
    ApolarGenerators out{std::move(a), std::move(b), Rat(0), false};
    out.res = resultant(out.g1, out.g2);
    if (out.res == 0) throw internal_error("apolar_generators: generators share a root");
    out.generic = std::pair<int, int>(e1, e2) == generic_degrees(d);
    return out;
  };
  const auto k1 = apolar_piece(f, e1);
  if (e1 == e2) {
    if (k1.size() != 2) throw internal_error("apolar_generators: expected a 2-dim minimal piece");
    return finish(k1[0].canonicalized(), k1[1].canonicalized());
  }
  if (k1.size() != 1) throw internal_error("apolar_generators: expected a 1-dim minimal piece");
  const BinaryForm g1 = k1[0].canonicalized();
  const SpanReducer mults(multiples_in_degree(g1, e2));
  for (const auto& cand : apolar_piece(f, e2)) {
    const BinaryForm red = mults.reduce(cand);
    if (!red.is_zero()) return finish(g1, red.canonicalized());
  }
  throw internal_error("apolar_generators: no second generator independent of g1 multiples");
}

// True when the minimal generator degrees are the generic ones, equivalently
// when the most-square catalecticant has full rank.
inline bool is_generic_degrees(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("is_generic_degrees: zero form");
  return min_apolar_degree(f) == generic_degrees(f.degree()).first;
}

// Reconstruct the unique form (up to scale) annihilated by a coprime pair of
// operators with deg g1 + deg g2 = D + 2.  Normalized so the first nonzero
// coefficient (lowest index) is 1.
inline BinaryForm form_from_apolar(const BinaryForm& g1, const BinaryForm& g2) {
  if (g1.is_zero() || g2.is_zero()) throw domain_error("form_from_apolar: zero generator");
  if (resultant(g1, g2) == 0) throw domain_error("form_from_apolar: generators share a root");
  const int target = g1.degree() + g2.degree() - 2;
  if (target < 0) throw domain_error("form_from_apolar: degrees too small");
  // Stack the conditions apply_apolar(g_i, f) = 0, f unknown of degree `target`.
  const int rows1 = target - g1.degree() + 1, rows2 = target - g2.degree() + 1;
  if (rows1 < 0 || rows2 < 0) throw domain_error("form_from_apolar: generator above target degree");
  QMatrix a(rows1 + rows2, target + 1);
  for (int i = 0; i <= target; ++i) {
    const BinaryForm probe = BinaryForm::monomial(target, i);
    // A generator of degree above the target imposes no condition (rows == 0)
    // and cannot even be applied, e.g. the pair (y, x^{d+1}) of a pure power.
    if (rows1 > 0) {
      const BinaryForm c1 = apply_apolar(g1, probe);
      for (int r = 0; r < rows1; ++r) a.at(r, i) = c1.coeff(r);
    }
    if (rows2 > 0) {
      const BinaryForm c2 = apply_apolar(g2, probe);
      for (int r = 0; r < rows2; ++r) a.at(rows1 + r, i) = c2.coeff(r);
    }
  }
  const auto kernel = a.nullspace();
  if (kernel.size() != 1)
    throw internal_error("form_from_apolar: joint kernel dimension " +
                         std::to_string(kernel.size()) + ", expected 1");
  std::vector<Rat> v = kernel[0];
  for (auto& c : v) {
    if (c != 0) {
      const Rat lead = c;
      for (auto& w : v) w /= lead;
      break;
    }
  }
  return BinaryForm(target, std::move(v));
}

// Write s (degree m) as q1 * p1 + q2 * p2 with deg q_i = m - deg p_i.
// Requires m >= deg p1 and s in the ideal generated by p1, p2; throws
// internal_error if no representation exists.  When m < deg p2 the second
// block is empty and q2 is returned as the zero form (of degree 0).
inline std::pair<BinaryForm, BinaryForm> express_in_ideal(const BinaryForm& s,
                                                          const BinaryForm& p1,
                                                          const BinaryForm& p2) {
  const int m = s.degree(), e1 = p1.degree(), e2 = p2.degree();
  if (e1 > e2) throw domain_error("express_in_ideal: generators out of order");
  if (m < e1) throw domain_error("express_in_ideal: target degree below first generator");
  const int n1 = m - e1 + 1, n2 = std::max(0, m - e2 + 1);
  QMatrix a(m + 1, n1 + n2);
  for (int i = 0; i < n1; ++i) {
    const BinaryForm col = p1 * BinaryForm::monomial(m - e1, i);
    for (int r = 0; r <= m; ++r) a.at(r, i) = col.coeff(r);
  }
  for (int i = 0; i < n2; ++i) {
    const BinaryForm col = p2 * BinaryForm::monomial(m - e2, i);
    for (int r = 0; r <= m; ++r) a.at(r, n1 + i) = col.coeff(r);
  }
  const auto x = solve_linear(a, s.coeffs());
  if (!x) throw internal_error("express_in_ideal: target not in the ideal");
  std::vector<Rat> c1(x->begin(), x->begin() + n1), c2(x->begin() + n1, x->end());
  BinaryForm q2 = n2 > 0 ? BinaryForm(m - e2, std::move(c2)) : BinaryForm(0, {Rat(0)});
  return {BinaryForm(m - e1, std::move(c1)), std::move(q2)};
}

// Representation of an ideal member over the minimal generator pair.  For
// deg s <= deg f the representation is unique (the syzygy module starts in
// degree deg f + 2), which callers rely on.
inline std::pair<BinaryForm, BinaryForm> syzygy_representation(const BinaryForm& s,
                                                               const ApolarGenerators& gens) {
  return express_in_ideal(s, gens.g1, gens.g2);
}

}  // namespace waring

#endif  // WARING_APOLARITY_HPP
