#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace clhopf;

TEST_CASE("rational parsing and normal form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  // Leading zeros are decimal, not octal.
  CHECK(Rational::parse("010") == Rational(10));
  CHECK(Rational::parse("0.08") == Rational(2, 25));
  CHECK(Rational::parse("09/011") == Rational(9, 11));
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("rational field axioms on samples") {
  SeededRng rng(1);
  for (int k = 0; k < 200; ++k) {
    const Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
    CHECK(((a <=> b) == std::strong_ordering::less) == (a.value() < b.value()));
  }
}

TEST_CASE("rational square roots") {
  Rational root;
  CHECK(rational_sqrt(Rational(9, 4), root));
  CHECK(root.abs() == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), root));
  CHECK_FALSE(rational_sqrt(Rational(-4), root));
}

TEST_CASE("multipoly arithmetic and canonical rendering") {
  const auto r = MultiPoly::variable("r"), t = MultiPoly::variable("t"), z = MultiPoly::variable("z");
  const auto p = MultiPoly(1) + (t * z).scaled(4);
  CHECK(p.to_string() == "1 + 4*t*z");
  CHECK(p.term_strings() == std::vector<std::string>{"1", "4*t*z"});
  CHECK((r - r).is_zero());
  CHECK((r + t) * (r - t) == r * r - t * t);
  CHECK((r + 1).pow(3) == r * r * r + (r * r).scaled(3) + r.scaled(3) + 1);
  CHECK(p.total_degree() == 2);
  CHECK(p.support() == std::set<std::string>{"t", "z"});
  CHECK(MultiPoly(Rational(-3, 2)).to_string() == "-3/2");
  // Variable order is fixed, not insertion order.
  CHECK((z * r).to_string() == (r * z).to_string());
  CHECK(MultiPoly(0).to_string() == "0");
}

TEST_CASE("multipoly evaluation and specialization") {
  const auto r = MultiPoly::variable("r"), s = MultiPoly::variable("s");
  const auto p = r * r - s.scaled(3);
  CHECK(p.evaluate({{"r", Rational(2)}, {"s", Rational(1, 3)}}) == Rational(3));
  CHECK(p.specialize({{"r", Rational(1)}}) == MultiPoly(1) - s.scaled(3));
  CHECK_THROWS_AS(p.evaluate({{"r", Rational(1)}}), MissingVariable);
  try {
    (void)p.evaluate({});
  } catch (const MissingVariable& e) {
    CHECK(e.names == std::vector<std::string>{"r", "s"});
  }
}

TEST_CASE("exact polynomial division") {
  SeededRng rng(2);
  const std::vector<std::string> vars{"r", "s", "t"};
  for (int k = 0; k < 50; ++k) {
    const auto a = gen::poly(rng, vars), b = gen::poly(rng, vars);
    if (b.is_zero()) continue;
    const auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  const auto r = MultiPoly::variable("r");
  CHECK_FALSE(divide_exact(r * r + 1, r).has_value());
  CHECK_THROWS_AS(exact_quotient(r + 1, r), InexactDivision);
}

TEST_CASE("Bareiss determinant matches cofactor expansion over Q") {
  SeededRng rng(3);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int k = 0; k < 10; ++k) {
      const auto m = n <= 4 ? gen::rational_matrix(rng, n, n) : gen::sparse_matrix(rng, n, n);
      CHECK(det(m) == oracle::cofactor_det(m));
    }
  // Zero pivot in the first column forces a row swap.
  const auto swap = RingMatrix<Rational>::from_rows({{0, 1, 2}, {3, 4, 5}, {6, 7, 9}});
  CHECK(det(swap) == Rational(-3));
  CHECK(det(RingMatrix<Rational>::from_rows({{1, 2}, {2, 4}})) == Rational(0));
}

TEST_CASE("Bareiss determinant matches cofactor expansion over Q[r,s,t]") {
  SeededRng rng(4);
  const std::vector<std::string> vars{"r", "s", "t"};
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 4; ++k) {
      const auto m = gen::poly_matrix(rng, n, vars);
      const auto d = det(m);
      CHECK(d == oracle::cofactor_det(m));
      const auto at = gen::point(rng, vars);
      CHECK(d.evaluate(at) == det(evaluate(m, at)));
    }
}

TEST_CASE("fraction-free solve: unique, non-unique, inconsistent") {
  SeededRng rng(5);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 10; ++k) {
      const auto a = gen::rational_matrix(rng, n, n);
      std::vector<Rational> b(n);
      for (auto& x : b) x = rng.rational();
      const auto res = solve_linear(a, b);
      const auto d = oracle::cofactor_det(a);
      if (d.is_zero()) continue;
      REQUIRE(res.status == SolveStatus::Unique);
      CHECK(res.denominator == d);
      const auto want = oracle::gauss_solve(a, b);
      for (std::size_t i = 0; i < n; ++i) CHECK(res.solution[i] / res.denominator == want[i]);
    }

  const auto sing = RingMatrix<Rational>::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const auto nonunique = solve_linear(sing, {Rational(1), Rational(2), Rational(0)});
  CHECK(nonunique.status == SolveStatus::NonUnique);
  CHECK(nonunique.rank == 2);
  REQUIRE(nonunique.nullspace.size() == 1);
  for (std::size_t row = 0; row < 3; ++row) {
    Rational acc(0);
    for (std::size_t j = 0; j < 3; ++j) acc += sing(row, j) * nonunique.nullspace[0][j];
    CHECK(acc.is_zero());
  }
  const auto inconsistent = solve_linear(sing, {Rational(1), Rational(3), Rational(0)});
  CHECK(inconsistent.status == SolveStatus::NoSolution);
  CHECK(inconsistent.augmented_rank == inconsistent.rank + 1);
}

TEST_CASE("block-diagonal solve keeps the determinant as denominator") {
  // Two decoupled blocks with a column permutation between them.
  const auto a = RingMatrix<Rational>::from_rows({{0, 2, 0}, {3, 0, 1}, {1, 0, 2}});
  const auto res = solve_linear(a, {Rational(1), Rational(1), Rational(1)});
  REQUIRE(res.status == SolveStatus::Unique);
  CHECK(res.denominator == oracle::cofactor_det(a));
}

TEST_CASE("polynomial solve specializes to the rational solve") {
  SeededRng rng(6);
  const std::vector<std::string> vars{"r", "s"};
  for (int k = 0; k < 6; ++k) {
    const auto a = gen::poly_matrix(rng, 3, vars);
    const std::vector<MultiPoly> b{gen::poly(rng, vars), gen::poly(rng, vars), gen::poly(rng, vars)};
    const auto res = solve_linear(a, b);
    if (res.status != SolveStatus::Unique) continue;
    const auto at = gen::point(rng, vars);
    const auto qa = evaluate(a, at);
    if (det(qa).is_zero()) continue;
    std::vector<Rational> qb;
    for (const auto& x : b) qb.push_back(x.evaluate(at));
    const auto want = oracle::gauss_solve(qa, qb);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(res.solution[i].evaluate(at) / res.denominator.evaluate(at) == want[i]);
  }
}

TEST_CASE("sparse solver agrees with dense elimination") {
  SeededRng rng(7);
  for (int k = 0; k < 30; ++k) {
    const std::size_t rows = rng.integer(2, 7), cols = rng.integer(2, 7);
    const auto a = gen::sparse_matrix(rng, rows, cols);
    std::vector<Rational> b(rows);
    for (auto& x : b) x = Rational(rng.integer(-3, 3));
    SparseSystem sys;
    sys.unknowns = cols;
    for (std::size_t i = 0; i < rows; ++i) {
      SparseRow row;
      for (std::size_t j = 0; j < cols; ++j)
        if (!a(i, j).is_zero()) row[j] = a(i, j);
      sys.add_row(row, b[i]);
    }
    const auto sparse = solve_sparse(sys);
    const auto dense = solve_linear(a, b);
    CHECK(sparse.status == dense.status);
    CHECK(sparse.rank == dense.rank);
    CHECK(sparse.nullspace.size() == dense.nullspace.size());
    if (sparse.status == SolveStatus::NoSolution) continue;
    const auto ax = a * sparse.solution;
    for (std::size_t i = 0; i < rows; ++i) CHECK(ax[i] == b[i] * sparse.denominator);
    for (const auto& v : sparse.nullspace)
      for (const auto& entry : a * v) CHECK(entry.is_zero());
  }
}

TEST_CASE("rank and kernel basis") {
  const auto a = RingMatrix<Rational>::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(rank(a) == 2);
  const auto k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
  CHECK(rank(RingMatrix<Rational>::identity(4)) == 4);
  CHECK(kernel_basis(RingMatrix<Rational>::identity(3)).cols() == 0);
}

TEST_CASE("univariate polynomials") {
  const auto x = UniPoly::monomial(Rational(1), 1);
  const UniPoly one({Rational(1)});
  const auto p = (x - one) * (x - one) * (x + one);
  CHECK(p.degree() == 3);
  CHECK(p(Rational(1)).is_zero());
  CHECK(p.to_string() == "x^3 - x^2 - x + 1");
  const auto [q, rem] = divmod(p, x - one);
  CHECK(rem.is_zero());
  CHECK(q == (x - one) * (x + one));
  CHECK(gcd(p, p.derivative()) == x - one);
  CHECK(square_free_part(p) == (x - one) * (x + one));
  CHECK(rational_roots(p) == std::vector<Rational>{Rational(-1), Rational(1)});
  const auto half = UniPoly({Rational(-1), Rational(2)});  // 2x - 1
  CHECK(rational_roots(half * (x * x + one)) == std::vector<Rational>{Rational(1, 2)});
  CHECK(UniPoly::from_descending({Rational(1), Rational(0), Rational(-2)}) == x * x - UniPoly({Rational(2)}));
}

TEST_CASE("minimal polynomial") {
  // Jordan block: minimal polynomial equals the characteristic polynomial.
  const auto j = RingMatrix<Rational>::from_rows({{2, 1, 0}, {0, 2, 0}, {0, 0, 2}});
  const auto x = UniPoly::monomial(Rational(1), 1);
  const UniPoly two({Rational(2)});
  CHECK(min_poly(j) == (x - two) * (x - two));
  CHECK(min_poly(RingMatrix<Rational>::identity(4).scaled(Rational(3))) == x - UniPoly({Rational(3)}));

  SeededRng rng(8);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 5; ++k) {
      const auto m = gen::rational_matrix(rng, n, n, 4);
      const auto mp = min_poly(m);
      CHECK(mp.leading() == Rational(1));
      CHECK(evaluate_at(mp, m).is_zero());
      const auto cp = UniPoly::from_descending(oracle::char_poly(m));
      CHECK(divmod(cp, mp).second.is_zero());
      // No proper divisor of the minimal polynomial annihilates m.
      for (const auto& root : rational_roots(mp)) {
        const auto reduced = divmod(mp, x - UniPoly({root})).first;
        CHECK_FALSE(evaluate_at(reduced, m).is_zero());
      }
    }
}

TEST_CASE("matrix helpers") {
  const auto a = RingMatrix<Rational>::from_rows({{1, 2}, {3, 4}});
  const auto cp = char_poly_2x2(a);
  CHECK(cp.trace == Rational(5));
  CHECK(cp.det == Rational(-2));
  CHECK(matrix_pow(a, 2) == a * a);
  CHECK(kronecker(a, RingMatrix<Rational>::identity(2))(2, 0) == Rational(3));
  CHECK_THROWS_AS(RingMatrix<Rational>::from_rows({{1, 2}, {3}}), DimensionError);
  CHECK_THROWS_AS(a * RingMatrix<Rational>(3, 3), DimensionError);
  CHECK_THROWS_AS(det(RingMatrix<Rational>(2, 3)), DimensionError);
}
