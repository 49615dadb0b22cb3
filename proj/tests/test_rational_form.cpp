// Exact arithmetic, binary forms, the apolar action, and small linear algebra.
// Expected values are frozen from independent hand computation.

#include <catch2/catch_amalgamated.hpp>

#include "waring/apolarity.hpp"
#include "waring/binary_form.hpp"
#include "waring/qmatrix.hpp"
#include "waring/rational.hpp"
#include "waring/resultant.hpp"
#include "waring/rng.hpp"

using namespace waring;

namespace {

BinaryForm form(int d, std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return BinaryForm(d, std::move(c));
}

BinaryForm random_form(Rng& rng, int d) {
  BinaryForm f(d);
  for (int i = 0; i <= d; ++i)
    f.set_coeff(i, make_rat(rng.next_in(-20, 20), rng.next_in(1, 6)));
  return f;
}

}  // namespace

TEST_CASE("rational parsing and printing round-trip") {
  REQUIRE(rat_to_string(make_rat(3, 6)) == "1/2");
  REQUIRE(rat_to_string(Rat(-7)) == "-7/1");
  REQUIRE_THROWS_AS(rat_from_string("22/-11"), domain_error);  // sign lives in the numerator
  REQUIRE(rat_from_string("-22/11") == Rat(-2));
  REQUIRE(rat_from_string("5") == Rat(5));
  REQUIRE(rat_from_string(rat_to_string(make_rat(-355, 113))) == make_rat(-355, 113));
  REQUIRE_THROWS_AS(rat_from_string(""), domain_error);
  REQUIRE_THROWS_AS(rat_from_string("1/0"), domain_error);
  REQUIRE_THROWS_AS(rat_from_string("/2"), domain_error);
  REQUIRE_THROWS_AS(rat_from_string("1/"), domain_error);
  REQUIRE_THROWS_AS(rat_from_string("x"), domain_error);
  REQUIRE_THROWS_AS(make_rat(Int(1), Int(0)), domain_error);
}

TEST_CASE("combinatorial helpers") {
  REQUIRE(falling(5, 2) == 20);
  REQUIRE(falling(3, 0) == 1);
  REQUIRE(falling(2, 3) == 0);
  REQUIRE(binomial(5, 2) == 10);
  REQUIRE(int_pow(Int(3), 4) == 81);
  REQUIRE(rat_pow(make_rat(2, 3), 3) == make_rat(8, 27));
  REQUIRE(rat_floor(make_rat(-7, 2)) == -4);
  REQUIRE(rat_ceil(make_rat(-7, 2)) == -3);
}

TEST_CASE("simplest rational in an interval has minimal denominator") {
  REQUIRE(simplest_rational_in(make_rat(1, 3), make_rat(1, 2)) == make_rat(1, 2));
  REQUIRE(simplest_rational_in(make_rat(3, 10), make_rat(14, 25)) == make_rat(1, 2));
  REQUIRE(simplest_rational_in(make_rat(-1, 2), make_rat(1, 3)) == 0);
  REQUIRE(simplest_rational_in(Rat(2), Rat(3)) == 2);
  REQUIRE(simplest_rational_in(make_rat(5, 3), make_rat(7, 4)) == make_rat(5, 3));
  REQUIRE(simplest_rational_in(make_rat(15, 11), make_rat(17, 11)) == make_rat(3, 2));
  // property: result lies in the interval and no smaller denominator does
  Rng rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = make_rat(rng.next_in(-500, 500), rng.next_in(1, 40));
    Rat b = a + make_rat(rng.next_in(1, 60), rng.next_in(1, 40));
    Rat s = simplest_rational_in(a, b);
    REQUIRE(a <= s);
    REQUIRE(s <= b);
    for (Int q = 1; q < s.get_den(); ++q) {
      // no p/q in [a, b]: ceil(a*q) must exceed floor(b*q)
      REQUIRE(rat_ceil(a * Rat(q)) > rat_floor(b * Rat(q)));
    }
  }
}

TEST_CASE("seeded rng is deterministic and streams are independent") {
  Rng a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 64; ++i) {
    uint64_t va = a.next(), vb = b.next();
    all_equal = all_equal && (va == vb);
    any_diff = any_diff || (va != c.next());
  }
  REQUIRE(all_equal);
  REQUIRE(any_diff);
  Rng base(7);
  Rng d1 = base.derive(1), d2 = base.derive(2);
  REQUIRE(d1.next() != d2.next());
  Rng e(99);
  for (int i = 0; i < 500; ++i) {
    long v = e.next_in(-3, 9);
    REQUIRE(v >= -3);
    REQUIRE(v <= 9);
  }
}

TEST_CASE("direction enumeration starts with the axes and stays coprime") {
  FareyEnumerator fe;
  std::vector<FareyPoint> got;
  for (int i = 0; i < 12; ++i) got.push_back(fe.next());
  const std::vector<FareyPoint> expect = {{1, 0}, {0, 1}, {1, 1}, {1, -1},
                                          {2, 1}, {1, 2}, {2, -1}, {1, -2},
                                          {3, 1}, {1, 3}, {3, -1}, {1, -3}};
  for (std::size_t i = 0; i < expect.size(); ++i) {
    REQUIRE(got[i].a == expect[i].a);
    REQUIRE(got[i].b == expect[i].b);
  }
  DirectionEnumerator de(3);
  std::vector<long> v;
  int count = 0;
  while (de.next(v, 2)) {
    ++count;
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    REQUIRE(g == 1);
  }
  // height <= 2 primitive triples, first nonzero positive: 13 * 2 - ... counted once
  REQUIRE(count > 20);
}

TEST_CASE("binary form construction and evaluation") {
  const BinaryForm f = BinaryForm::linear_power(Rat(1), Rat(1), 3);  // (x + y)^3
  REQUIRE(f == form(3, {1, 3, 3, 1}));
  const BinaryForm g = BinaryForm::linear_power(Rat(2), Rat(-1), 2);  // (2x - y)^2
  REQUIRE(g == form(2, {1, -4, 4}));
  const BinaryForm prod = BinaryForm::linear(Rat(1), Rat(-1)) * BinaryForm::linear(Rat(1), Rat(1));
  REQUIRE(prod == form(2, {-1, 0, 1}));  // x^2 - y^2
  REQUIRE(f.eval(Rat(2), Rat(3)) == 125);
  REQUIRE(g.eval(make_rat(1, 2), Rat(1)) == 0);
  REQUIRE_THROWS_AS(form(2, {1, 0, 1}) + form(3, {0, 0, 0, 1}), domain_error);
}

TEST_CASE("dehomogenization tracks the root at [1:0]") {
  const BinaryForm f = form(3, {0, 0, 1, 0});  // x^2 y
  REQUIRE(f.inf_multiplicity() == 1);
  REQUIRE(f.dehom_primitive() == ZPoly({0, 0, 1}));
  const BinaryForm g = form(3, {5, 0, 0, 0});  // 5 y^3
  REQUIRE(g.inf_multiplicity() == 3);
  REQUIRE(g.dehom_primitive() == ZPoly({1}));
  std::vector<Rat> c = {make_rat(-4, 3), Rat(0), make_rat(-2, 3)};
  REQUIRE(BinaryForm(2, c).canonicalized() == form(2, {2, 0, 1}));
}

TEST_CASE("distinct projective roots over C") {
  REQUIRE(has_distinct_roots(form(2, {0, 1, 0})));      // xy
  REQUIRE(has_distinct_roots(form(2, {1, 0, 1})));      // x^2 + y^2
  REQUIRE_FALSE(has_distinct_roots(form(4, {0, 0, 1, 0, 0})));  // x^2 y^2
  REQUIRE_FALSE(has_distinct_roots(form(2, {1, 2, 1})));        // (x + y)^2
  REQUIRE(has_distinct_roots(form(1, {1, 0})));         // y
}

TEST_CASE("format_form prints signed rational terms") {
  REQUIRE(format_form(form(3, {1, -2, 0, 1})) == "x^3 - 2*x*y^2 + y^3");
  BinaryForm f(2);
  f.set_coeff(1, make_rat(-1, 2));
  REQUIRE(format_form(f) == "-1/2*x*y");
  REQUIRE(format_form(BinaryForm(4)) == "0");
}

TEST_CASE("exact linear algebra basics") {
  QMatrix m(2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(1, 0) = 3; m.at(1, 1) = 4;
  REQUIRE(m.det() == -2);
  REQUIRE(m.rank() == 2);
  QMatrix row(1, 3);
  row.at(0, 0) = 1; row.at(0, 1) = 1; row.at(0, 2) = 1;
  REQUIRE(row.nullspace().size() == 2);
  QMatrix sys(2, 2);
  sys.at(0, 0) = 1; sys.at(0, 1) = 1; sys.at(1, 0) = 1; sys.at(1, 1) = -1;
  auto sol = solve_unique(sys, {Rat(3), Rat(1)});
  REQUIRE(sol[0] == 2);
  REQUIRE(sol[1] == 1);
  QMatrix bad(2, 1);
  bad.at(0, 0) = 1; bad.at(1, 0) = 1;
  REQUIRE_FALSE(solve_linear(bad, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("resultants detect shared projective roots") {
  REQUIRE(resultant(form(2, {1, 0, 1}), form(2, {-1, 0, 1})) == 4);
  const BinaryForm a = BinaryForm::linear(Rat(1), Rat(-1)) * BinaryForm::linear(Rat(1), Rat(1));
  const BinaryForm b = BinaryForm::linear(Rat(1), Rat(-1)) * BinaryForm::linear(Rat(1), Rat(2));
  REQUIRE(resultant(a, b) == 0);
  REQUIRE(resultant(form(2, {0, 1, 0}), form(2, {1, 0, 0})) == 0);  // xy vs y^2 share [1:0]
  REQUIRE(resultant(form(1, {1, 0}), form(1, {0, 1})) != 0);        // y vs x
  REQUIRE(resultant_int(ZPoly({-1, 0, 1}), 2, ZPoly({1, 0, 1}), 2) == 4);
  // product formula cross-check on random split pairs
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Rat r1(rng.next_in(-5, 5)), r2(rng.next_in(-5, 5));
    const BinaryForm p = BinaryForm::linear(Rat(1), -r1);   // x - r1 y, root [r1:1]
    const BinaryForm q = BinaryForm::linear(Rat(1), -r2);
    REQUIRE(resultant(p, q) == r1 - r2);
  }
}

TEST_CASE("apolar action differentiates forms") {
  // (d/dx)(x^3) = 3 x^2, (d/dy)(x^3) = 0
  REQUIRE(apply_apolar(form(1, {0, 1}), form(3, {0, 0, 0, 1})) == form(2, {0, 0, 3}));
  REQUIRE(apply_apolar(form(1, {1, 0}), form(3, {0, 0, 0, 1})) == form(2, {0, 0, 0}));
  // (d/dx)(d/dy)(x^2 y^2) = 4 x y
  REQUIRE(apply_apolar(form(2, {0, 1, 0}), form(4, {0, 0, 1, 0, 0})) == form(2, {0, 4, 0}));
  REQUIRE_THROWS_AS(apply_apolar(form(3, {0, 0, 0, 1}), form(2, {1, 0, 1})), domain_error);

  SECTION("composition law") {
    Rng rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
      const int dh = static_cast<int>(rng.next_in(0, 2));
      const int dg = static_cast<int>(rng.next_in(0, 2));
      const int df = dh + dg + static_cast<int>(rng.next_in(0, 3));
      const BinaryForm h = random_form(rng, dh);
      const BinaryForm g = random_form(rng, dg);
      const BinaryForm f = random_form(rng, df);
      REQUIRE(apply_apolar(g * h, f) == apply_apolar(g, apply_apolar(h, f)));
    }
  }

  SECTION("powers of annihilated directions vanish") {
    Rng rng(777);
    for (int trial = 0; trial < 60; ++trial) {
      const long a = rng.next_in(-6, 6), b = rng.next_in(-6, 6);
      if (a == 0 && b == 0) continue;
      const int d = static_cast<int>(rng.next_in(1, 8));
      // (b x - a y) annihilates (a x + b y)^d
      const BinaryForm ell = BinaryForm::linear(Rat(b), Rat(-a));
      const BinaryForm pw = BinaryForm::linear_power(Rat(a), Rat(b), d);
      REQUIRE(apply_apolar(ell, pw).is_zero());
    }
  }
}

TEST_CASE("catalecticant matrices match the apolar action") {
  const QMatrix c1 = catalecticant(form(2, {1, 0, 1}), 1);
  REQUIRE(c1.rows() == 2);
  REQUIRE(c1.cols() == 2);
  REQUIRE(c1.at(0, 0) == 2);
  REQUIRE(c1.at(0, 1) == 0);
  REQUIRE(c1.at(1, 0) == 0);
  REQUIRE(c1.at(1, 1) == 2);
  const QMatrix c2 = catalecticant(form(2, {0, 1, 0}), 1);
  REQUIRE(c2.at(0, 0) == 0);
  REQUIRE(c2.at(0, 1) == 1);
  REQUIRE(c2.at(1, 0) == 1);
  REQUIRE(c2.at(1, 1) == 0);
  // multiplying the matrix by operator coefficients reproduces apply_apolar
  Rng rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = static_cast<int>(rng.next_in(1, 9));
    const int e = static_cast<int>(rng.next_in(0, d));
    const BinaryForm f = random_form(rng, d);
    const BinaryForm h = random_form(rng, e);
    const QMatrix m = catalecticant(f, e);
    const BinaryForm want = apply_apolar(h, f);
    for (int r = 0; r <= d - e; ++r) {
      Rat acc = 0;
      for (int j = 0; j <= e; ++j) acc += m.at(r, j) * h.coeff(j);
      REQUIRE(acc == want.coeff(r));
    }
  }
}

TEST_CASE("apolar ideal pieces and membership") {
  const BinaryForm xy = form(2, {0, 1, 0});
  REQUIRE(apolar_piece_dim(xy, 1) == 0);
  REQUIRE(apolar_piece_dim(xy, 2) == 2);
  REQUIRE(apolar_piece_dim(xy, 3) == 4);  // above the degree: full space
  REQUIRE(in_apolar_ideal(form(2, {0, 0, 1}), xy));       // x^2
  REQUIRE_FALSE(in_apolar_ideal(form(1, {0, 1}), xy));    // x
  REQUIRE(in_apolar_ideal(form(5, {0, 0, 0, 0, 0, 1}), xy));
  REQUIRE(generic_degrees(2) == std::pair<int, int>(2, 2));
  REQUIRE(generic_degrees(3) == std::pair<int, int>(2, 3));
  REQUIRE(generic_degrees(4) == std::pair<int, int>(3, 3));
  REQUIRE(generic_degrees(5) == std::pair<int, int>(3, 4));
  REQUIRE(generic_degrees(12) == std::pair<int, int>(7, 7));
}

TEST_CASE("minimal generators of the apolar ideal") {
  SECTION("xy has generators {x^2, y^2}") {
    const auto gens = apolar_generators(form(2, {0, 1, 0}));
    const BinaryForm xx = form(2, {0, 0, 1}), yy = form(2, {1, 0, 0});
    const bool match = (gens.g1 == xx && gens.g2 == yy) || (gens.g1 == yy && gens.g2 == xx);
    REQUIRE(match);
  }
  SECTION("x^3 has generators {y, x^4}") {
    const auto gens = apolar_generators(form(3, {0, 0, 0, 1}));
    REQUIRE(gens.g1 == form(1, {1, 0}));
    REQUIRE(gens.g2 == form(4, {0, 0, 0, 0, 1}));
  }
  SECTION("degree sum is d + 2 and both annihilate f") {
    Rng rng(90210);
    for (int trial = 0; trial < 60; ++trial) {
      const int d = static_cast<int>(rng.next_in(1, 10));
      BinaryForm f = random_form(rng, d);
      if (f.is_zero()) continue;
      const auto gens = apolar_generators(f);
      REQUIRE(gens.g1.degree() + gens.g2.degree() == d + 2);
      REQUIRE(gens.g1.degree() <= gens.g2.degree());
      REQUIRE(in_apolar_ideal(gens.g1, f));
      REQUIRE(in_apolar_ideal(gens.g2, f));
      REQUIRE(resultant(gens.g1, gens.g2) != 0);
    }
  }
}

TEST_CASE("span reduction and ideal expression") {
  const BinaryForm a = form(2, {1, 0, 1});   // x^2 + y^2
  const BinaryForm b = form(2, {-1, 0, 1});  // x^2 - y^2
  const SpanReducer span({a, b});
  REQUIRE(span.rank() == 2);
  REQUIRE(span.contains(form(2, {0, 0, 1})));
  REQUIRE_FALSE(span.contains(form(2, {0, 1, 0})));

  // s = x^3 y - x y^3 = y * x^3 + (-x) * y^3
  const BinaryForm s = form(4, {0, -1, 0, 1, 0});
  const auto [q1, q2] = express_in_ideal(s, form(3, {0, 0, 0, 1}), form(3, {1, 0, 0, 0}));
  REQUIRE(q1 == form(1, {1, 0}));
  REQUIRE(q2 == form(1, {0, -1}));
  REQUIRE(q1 * form(3, {0, 0, 0, 1}) + q2 * form(3, {1, 0, 0, 0}) == s);
}
