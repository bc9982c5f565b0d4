#include "doctest.h"
#include "support.hpp"

#include "pfaff/error.hpp"

using namespace pfaff;
using namespace pfaff::test;

namespace {

DifferentialForm basis2(std::size_t n, std::uint32_t i, std::uint32_t j, const Rational& c = 1) {
    DifferentialForm f(n, 2);
    f.add({i, j}, cst(n, c));
    return f;
}

} // namespace

TEST_CASE("wedge of basis forms") {
    const std::size_t n = 5;
    const auto w = wedge(dx(n, 3), dx(n, 4));
    CHECK(w.degree() == 2);
    CHECK(w.terms().size() == 1);
    CHECK(w.coefficient({3, 4}) == cst(n, 1));
    CHECK(wedge(dx(n, 4), dx(n, 3)) == -w);
    CHECK(wedge(dx(n, 3), dx(n, 3)).is_zero());
    CHECK(w.to_string() == "dx4/\\dx5");
}

TEST_CASE("square of dx4^dx5 + dx2^dx3") {
    const std::size_t n = 5;
    const auto omega = basis2(n, 3, 4) + basis2(n, 1, 2);
    DifferentialForm expected(n, 4);
    expected.add({1, 2, 3, 4}, cst(n, 2));
    CHECK(wedge(omega, omega) == expected);
    CHECK(wedge_power(omega, 2) == expected);
    CHECK(wedge_power(omega, 3).is_zero());
}

TEST_CASE("wedge beyond the chart dimension vanishes") {
    const std::size_t n = 2;
    CHECK(wedge(basis2(n, 0, 1), dx(n, 0)).is_zero());
    CHECK_THROWS_AS(wedge(dx(2, 0), dx(3, 0)), DimensionError);
}

TEST_CASE("exterior derivatives of the worked generators") {
    const std::size_t n = 5;
    const auto w1 = dx(n, 0) + var(n, 3) * dx(n, 4);
    CHECK(exterior_derivative(w1) == basis2(n, 3, 4));
    const auto v3 = dx(n, 2) + var(n, 4) * dx(n, 0);
    // dx5 ^ dx1 = -dx1 ^ dx5
    CHECK(exterior_derivative(v3) == basis2(n, 0, 4, -1));
    CHECK(exterior_derivative(v3) == wedge(dx(n, 4), dx(n, 0)));
    const auto f = var(n, 3).pow(2) * var(n, 4) * dx(n, 1);
    CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
    CHECK(exterior_derivative(DifferentialForm::function(var(n, 0) * var(n, 1))) ==
          var(n, 1) * dx(n, 0) + var(n, 0) * dx(n, 1));
}

TEST_CASE("interior products") {
    const std::size_t n = 5;
    const auto b = basis2(n, 3, 4);
    CHECK(interior_product(unit_vector(n, 3), b) == dx(n, 4));
    CHECK(interior_product(unit_vector(n, 0), b).is_zero());
    TangentVector xi(n, Polynomial(n));
    xi[4] = cst(n, 1);
    xi[0] = -var(n, 3);
    CHECK(interior_product(xi, b) == -dx(n, 3));
    CHECK_THROWS_AS(interior_product(unit_vector(n, 0), DifferentialForm::function(var(n, 0))), DomainError);
}

TEST_CASE("interior product against a direct coefficient formula") {
    const std::size_t n = 4;
    Random rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto b = rng.form(n, 2);
        const Point p = rng.point(n);
        const Vector v = rng.vector(n), w = rng.vector(n);
        Rational direct(0);
        for (const auto& [idx, c] : b.terms()) {
            direct += c.evaluate(p) * (v[idx[0]] * w[idx[1]] - v[idx[1]] * w[idx[0]]);
        }
        const Vector one[1] = {w};
        CHECK(evaluate_on(interior_product(v, b), p, one) == direct);
        const Vector two[2] = {v, w};
        CHECK(evaluate_on(b, p, two) == direct);
    }
}

TEST_CASE("pointwise evaluation") {
    const std::size_t n = 5;
    const auto w1 = dx(n, 0) + var(n, 3) * dx(n, 4);
    const Point p{0, 0, 0, 2, 0};
    CHECK(evaluate_at(w1, p) == dx(n, 0) + Rational(2) * dx(n, 4));
    const auto b = basis2(n, 3, 4);
    CHECK(evaluate_at(b, Point{1, 2, 3, 4, 5}) == b);
    DifferentialForm f(n, 2);
    f.add({0, 1}, var(n, 4));
    CHECK(evaluate_at(f, Point{1, 1, 1, 1, 3}) == basis2(n, 0, 1, 3));
    CHECK_THROWS_AS(evaluate_at(f, Point{1, 2}), DimensionError);
}

TEST_CASE("canonical rendering") {
    const std::size_t n = 5;
    CHECK((dx(n, 0) + var(n, 3) * dx(n, 4)).to_string() == "dx1 + x4*dx5");
    CHECK((dx(n, 2) - (var(n, 0) + cst(n, 1)) * dx(n, 1)).to_string() == "(-x1 - 1)*dx2 + dx3");
    CHECK(DifferentialForm(n, 1).to_string() == "0");
}

TEST_CASE("sort_with_sign") {
    MultiIndex a{2, 0, 1};
    CHECK(sort_with_sign(a) == 1);
    CHECK(a == MultiIndex{0, 1, 2});
    MultiIndex b{1, 0};
    CHECK(sort_with_sign(b) == -1);
    MultiIndex c{1, 1};
    CHECK(sort_with_sign(c) == 0);
}
