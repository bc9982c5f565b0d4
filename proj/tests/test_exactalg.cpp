#include "doctest.h"
#include "support.hpp"

#include "pfaff/error.hpp"
#include "pfaff/rational_function.hpp"

using namespace pfaff;
using namespace pfaff::test;

TEST_CASE("rationals are stored in lowest terms with a positive denominator") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, -7).to_string() == "0");
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse(" -3 ") == Rational(-3));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("polynomial evaluation and differentiation") {
    const std::size_t n = 5;
    const Point p{0, 0, 0, 2, 0};
    CHECK(var(n, 3).evaluate(p) == Rational(2));
    CHECK((var(n, 3) * var(n, 4)).partial_derivative(4) == var(n, 3));
    CHECK((var(n, 3) * var(n, 4)).partial_derivative(0).is_zero());
    CHECK_THROWS_AS(var(n, 0).partial_derivative(5), DimensionError);
    CHECK_THROWS_AS(var(n, 0).evaluate(Point{1, 2}), DimensionError);
}

TEST_CASE("difference of squares against a term-by-term expansion") {
    const std::size_t n = 5;
    const Polynomial lhs = (var(n, 3) + var(n, 4)) * (var(n, 3) - var(n, 4));
    const Polynomial expected =
        Polynomial::monomial({0, 0, 0, 2, 0}, Rational(1)) + Polynomial::monomial({0, 0, 0, 0, 2}, Rational(-1));
    CHECK(lhs == expected);
    CHECK(lhs.to_string() == "x4^2 - x5^2");
    CHECK(lhs.term_count() == 2);
}

TEST_CASE("polynomials on different charts do not mix") {
    CHECK_THROWS_AS(var(2, 0) + var(3, 0), DimensionError);
    CHECK_THROWS_AS(var(2, 0) * var(3, 0), DimensionError);
}

TEST_CASE("graded lexicographic rendering") {
    const std::size_t n = 5;
    const Polynomial p = var(n, 3).pow(2) * var(n, 4) - Rational(3, 2) * var(n, 0) + cst(n, 1);
    CHECK(p.to_string() == "x4^2*x5 - 3/2*x1 + 1");
    CHECK(p.leading_coefficient() == Rational(1));
    CHECK(p.total_degree() == 3);
}

TEST_CASE("substitution, restriction and embedding") {
    const std::size_t n = 3;
    const Polynomial p = var(n, 0) * var(n, 2) + var(n, 1);
    CHECK(p.substitute(1, Rational(4)) == var(n, 0) * var(n, 2) + cst(n, 4));
    const std::vector<std::size_t> kept{0, 2};
    CHECK_THROWS_AS(p.restrict_to(kept), DomainError);
    const Polynomial q = p.substitute(1, Rational(0)).restrict_to(kept);
    CHECK(q == var(2, 0) * var(2, 1));
    const std::vector<std::size_t> placement{0, 2};
    CHECK(q.embed(3, placement) == var(n, 0) * var(n, 2));
}

TEST_CASE("exact division") {
    const std::size_t n = 2;
    const Polynomial x = var(n, 0), y = var(n, 1);
    const auto q = (x * x - y * y).divide_exact(x - y);
    REQUIRE(q.has_value());
    CHECK(*q == x + y);
    CHECK_FALSE((x * x + y).divide_exact(x - y).has_value());
}

TEST_CASE("rational functions compare by cross multiplication") {
    const std::size_t n = 2;
    const Polynomial x = var(n, 0), y = var(n, 1);
    const RationalFunction a(x * x - cst(n, 1), x - cst(n, 1));
    CHECK(a == RationalFunction(x + cst(n, 1)));
    const RationalFunction b(x, -Rational(2) * y);
    CHECK(b.denominator().leading_coefficient().sign() > 0);
    CHECK(b == RationalFunction(-x, Rational(2) * y));
    CHECK_THROWS_AS(RationalFunction(x, Polynomial(n)), DomainError);
    CHECK((a / a) == RationalFunction(cst(n, 1)));
    const Point p{3, 5};
    CHECK((a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p));
}

TEST_CASE("nullspace over the function field of [1, x4]") {
    const std::size_t n = 5;
    const auto m = PolynomialMatrix::from_rows({{cst(n, 1), var(n, 3)}}, 2);
    const auto k = nullspace(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -var(n, 3));
    CHECK(k[0][1] == cst(n, 1));
}

TEST_CASE("nullspace of the identity is empty") {
    RationalMatrix id(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
    CHECK(nullspace(id).empty());
    CHECK(rank_of(id) == 3);
}

TEST_CASE("annihilator of {dx1 + x4 dx5, dx2} at (0,0,0,2,0) by substitution") {
    const std::size_t n = 5;
    const PfaffianSystem sys(n, {dx(n, 0) + var(n, 3) * dx(n, 4), dx(n, 1)});
    const Point p{0, 0, 0, 2, 0};
    const RationalMatrix c = sys.coefficient_matrix_at(p);
    const auto k = nullspace(c);
    REQUIRE(k.size() == 3);
    for (const auto& v : k) {
        // Substitute each vector into both rows directly.
        CHECK(v[0] + Rational(2) * v[4] == Rational(0));
        CHECK(v[1] == Rational(0));
    }
    CHECK(span_rank(k, n) == 3);
}

TEST_CASE("ranks") {
    const std::size_t n = 5;
    CHECK(rank_of(RationalMatrix(2, 3, Rational(0))) == 0);
    CHECK(rank_of(PolynomialMatrix(2, 3, Polynomial(n))) == 0);
    const auto tri = PolynomialMatrix::from_rows({{cst(n, 1), var(n, 3)}, {Polynomial(n), cst(n, 1)}}, 2);
    CHECK(rank_of(tri) == 2);
    const auto a = system_of(example_a, "A");
    CHECK(rank_of(a.coefficient_matrix()) == 3);
    Random rng(7);
    for (int i = 0; i < 10; ++i) CHECK(rank_of(a.coefficient_matrix_at(rng.point(n))) == 3);
}

TEST_CASE("generic rank ignores vanishing loci of pivots") {
    const std::size_t n = 2;
    const auto m = PolynomialMatrix::from_rows({{var(n, 0), cst(n, 1)}, {cst(n, 1), var(n, 0)}}, 2);
    CHECK(rank_of(m) == 2);
    CHECK(rank_of(evaluate(m, Point{1, 0})) == 1);
}

TEST_CASE("function-field kernel of a rank-one polynomial matrix") {
    const std::size_t n = 2;
    const Polynomial x = var(n, 0), y = var(n, 1);
    const auto m = PolynomialMatrix::from_rows({{x, y, x * y}, {x * x, x * y, x * x * y}}, 3);
    CHECK(rank_of(m) == 1);
    const auto k = nullspace(m);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) {
        for (std::size_t i = 0; i < 2; ++i) {
            Polynomial s(n);
            for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * v[j];
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("invariant checks count verified nullspace calls") {
    set_invariant_checks(true);
    const auto before = verified_nullspace_calls();
    RationalMatrix m(1, 3, Rational(1));
    CHECK(nullspace(m).size() == 2);
    CHECK(verified_nullspace_calls() == before + 1);
    set_invariant_checks(false);
}
