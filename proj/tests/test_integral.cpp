#include "doctest.h"
#include "support.hpp"

#include "pfaff/error.hpp"

using namespace pfaff;
using namespace pfaff::test;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

Vector combo(std::size_t n, std::initializer_list<std::pair<std::size_t, Rational>> parts) {
    Vector v(n, Rational(0));
    for (const auto& [i, q] : parts) v[i] += q;
    return v;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t n) {
    if (span_rank(a, n) != span_rank(b, n)) return false;
    for (const auto& v : b) {
        if (!in_span(a, v)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("frame of example A at the origin") {
    const auto a = system_of(example_a, "A");
    const PointFrame f(a, origin(5));
    REQUIRE(f.dimension() == 2);
    CHECK(f.annihilator_basis()[0] == e(5, 3));
    CHECK(f.annihilator_basis()[1] == e(5, 4));
    RationalMatrix b1(2, 2, Rational(0));
    b1(0, 1) = 1;
    b1(1, 0) = -1;
    CHECK(f.skew_forms()[0] == b1);
    CHECK(f.skew_forms()[1] == RationalMatrix(2, 2, Rational(0)));
    CHECK(f.skew_forms()[2] == RationalMatrix(2, 2, Rational(0)));
}

TEST_CASE("skew forms agree with direct evaluation of the differentials") {
    Random rng(9);
    for (const char* name : {"B", "B2", "C"}) {
        const auto sys = system_of(example_b, name);
        const Point p = rng.point(6);
        const PointFrame f(sys, p);
        CHECK(f.dimension() == 3);
        const auto& basis = f.annihilator_basis();
        for (std::size_t i = 0; i < sys.rank(); ++i) {
            const auto d = exterior_derivative(sys.generators()[i]);
            for (std::size_t a = 0; a < basis.size(); ++a) {
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    CHECK(f.skew_forms()[i](a, b) == evaluate_by_determinants(d, p, {basis[a], basis[b]}));
                }
            }
        }
        for (const auto& v : basis) CHECK(multiply(sys.coefficient_matrix_at(p), v) == Vector(3, Rational(0)));
    }
}

TEST_CASE("frames of B and of an integrable system") {
    CHECK(PointFrame(system_of(example_b, "B"), origin(6)).dimension() == 3);
    const PointFrame f(system_of(integrable_23, "I"), Point{1, 1, 1, 1, 1});
    CHECK(f.dimension() == 3);
    CHECK(f.all_forms_vanish());
}

TEST_CASE("degenerate frame") {
    const std::size_t n = 2;
    const PfaffianSystem sys(n, {dx(n, 0), dx(n, 0) + var(n, 1) * dx(n, 1)});
    CHECK_THROWS_AS(PointFrame(sys, origin(n)), DegeneratePointError);
}

TEST_CASE("involution") {
    const PointFrame a(system_of(example_a, "A"), origin(5));
    CHECK_FALSE(is_in_involution(a, e(5, 3), e(5, 4)));
    CHECK(is_in_involution(a, e(5, 3), e(5, 3)));
    CHECK_THROWS_AS(is_in_involution(a, e(5, 0), e(5, 3)), DomainError);

    const PointFrame b(system_of(example_b, "B"), origin(6));
    CHECK(is_in_involution(b, e(6, 3), e(6, 5)));
    // Away from the origin the field e6 - x5 e2 is needed.
    const Point p{0, 0, 0, 2, 3, 0};
    const PointFrame bp(system_of(example_b, "B"), p);
    const Vector v = combo(6, {{3, 1}});
    const Vector w = combo(6, {{5, 1}, {1, -3}});
    CHECK(is_in_involution(bp, v, w));
}

TEST_CASE("polar spaces") {
    const PointFrame a(system_of(example_a, "A"), origin(5));
    CHECK(same_span(polar_space(a, {e(5, 3)}), {e(5, 3)}, 5));

    const PointFrame b(system_of(example_b, "B"), origin(6));
    CHECK(same_span(polar_space(b, {e(6, 4)}), {e(6, 4)}, 6));

    const PointFrame i(system_of(integrable_23, "I"), origin(5));
    CHECK(polar_space(i, {e(5, 0)}).size() == 3);

    try {
        polar_space(a, {e(5, 3), e(5, 4)});
        FAIL("expected a non-integral element");
    } catch (const NotIntegralError& err) {
        CHECK(err.first() == 0);
        CHECK(err.second() == 1);
        CHECK(err.form_index() == 0);
    }
}

TEST_CASE("chains of example A") {
    const PointFrame a(system_of(example_a, "A"), origin(5));
    auto step = extend_chain(a, empty_chain(a), e(5, 3));
    REQUIRE_FALSE(step.exhausted());
    CHECK(step.chain->polar_dims == std::vector<std::size_t>{1});
    CHECK(extend_chain(a, *step.chain).exhausted());
    const auto rep = character_report(system_of(example_a, "A"), origin(5));
    CHECK(rep.rho_chain == 1);
    CHECK(rep.character_chain == 1);
    CHECK(rep.chain.s(1) == 1);
    CHECK(rep.rho_max == 1);
}

TEST_CASE("chains of example B") {
    const auto b = system_of(example_b, "B");
    const PointFrame f(b, origin(6));
    const auto seeded = complete_chain(f, make_chain(f, {e(6, 4)}));
    CHECK(seeded.dimension() == 1);
    CHECK(6 - 3 - seeded.dimension() == 2);

    const auto two = make_chain(f, {e(6, 3), e(6, 5)});
    CHECK(two.dimension() == 2);
    CHECK_NOTHROW(validate_chain(f, two));

    // e5 is not in the polar space of e4.
    const auto one = make_chain(f, {e(6, 3)});
    CHECK_THROWS_WITH_AS(extend_chain(f, one, e(6, 4)), doctest::Contains("involution"), DomainError);
    // Already in the span.
    CHECK_THROWS_AS(extend_chain(f, one, Vector{0, 0, 0, 2, 0, 0}), DomainError);

    const auto rep = character_report(b, origin(6), std::vector<Vector>{e(6, 4)});
    CHECK(rep.seeded);
    CHECK(rep.character_chain == 2);
    CHECK(rep.rho_max == 2);
    CHECK(rep.character_min == 1);
    CHECK(verify_integral_element(b, origin(6), rep.maximal.witness));
}

TEST_CASE("maximal integral elements") {
    CHECK(max_integral_dimension(PointFrame(system_of(example_a, "A"), origin(5))).dimension == 1);
    const auto i = max_integral_dimension(PointFrame(system_of(integrable_23, "I"), origin(5)));
    CHECK(i.dimension == 3);
    CHECK(i.certified);
    const auto c = system_of(example_b, "C");
    const auto mc = max_integral_dimension(PointFrame(c, origin(6)));
    CHECK(mc.dimension == 1);
    CHECK(verify_integral_element(c, origin(6), mc.witness));
    CHECK(mc.upper_bound >= mc.dimension);
}

TEST_CASE("the search refuses beyond its limit") {
    const PointFrame f(system_of(integrable_23, "I"), origin(5));
    SearchOptions tight;
    tight.max_dimension = 2;
    CHECK_THROWS_AS(max_integral_dimension(f, tight), SearchLimitError);
}

TEST_CASE("witness verification catches non-integral spans") {
    const auto a = system_of(example_a, "A");
    CHECK(verify_integral_element(a, origin(5), {e(5, 3)}));
    CHECK_FALSE(verify_integral_element(a, origin(5), {e(5, 3), e(5, 4)}));
    CHECK_FALSE(verify_integral_element(a, origin(5), {e(5, 0)}));
}

TEST_CASE("characteristic elements and conjugacy") {
    const PointFrame a(system_of(example_a, "A"), origin(5));
    CHECK(characteristic_element_of(a, a.annihilator_basis()).empty());
    CHECK(same_span(characteristic_element_of(a, {e(5, 3)}), {e(5, 3)}, 5));
    CHECK_FALSE(are_conjugate(a, {e(5, 3)}, {e(5, 4)}));
    CHECK(are_conjugate(a, {e(5, 3)}, {e(5, 3)}));

    const PointFrame i(system_of(integrable_23, "I"), origin(5));
    CHECK(characteristic_element_of(i, i.annihilator_basis()).size() == 3);
    CHECK(are_conjugate(i, {e(5, 0)}, {e(5, 3), e(5, 4)}));
}

TEST_CASE("character reports") {
    const auto i = character_report(system_of(integrable_23, "I"), origin(5));
    CHECK(i.rho_chain == 3);
    CHECK(i.rho_max == 3);
    CHECK(i.character_chain == 0);
    CHECK_FALSE(singular_char2_predicate(i).has_value());
    CHECK_FALSE(systatic_indicator(i));

    const auto b = character_report(system_of(example_b, "B"), origin(6), std::vector<Vector>{e(6, 4)});
    REQUIRE(singular_char2_predicate(b).has_value());
    CHECK(*singular_char2_predicate(b) == false);
    CHECK_FALSE(systatic_indicator(b));

    const auto a = character_report(system_of(example_a, "A"), origin(5));
    CHECK(systatic_indicator(a));

    const auto c = character_report(system_of(example_b, "C"), origin(6));
    CHECK(c.character_chain == 2);
    REQUIRE(singular_char2_predicate(c).has_value());
    CHECK(*singular_char2_predicate(c) == (c.chain.s(c.rho_chain - 1) <= 1));
}

TEST_CASE("seeding with a witness reproduces its dimension") {
    for (const char* name : {"B", "B2", "C"}) {
        const auto sys = system_of(example_b, name);
        const auto first = character_report(sys, origin(6));
        const auto again = character_report(sys, origin(6), first.maximal.witness);
        CHECK(again.rho_chain == first.rho_max);
    }
}

TEST_CASE("invalid seeds") {
    const auto a = system_of(example_a, "A");
    CHECK_THROWS_AS(character_report(a, origin(5), std::vector<Vector>{e(5, 0)}), DomainError);
    CHECK_THROWS_AS(character_report(a, origin(5), std::vector<Vector>{e(5, 3), e(5, 4)}), DomainError);
}

TEST_CASE("candidate stream order") {
    CandidateStream s(3);
    CHECK(*s.next() == Vector{1, 0, 0});
    CHECK(*s.next() == Vector{0, 1, 0});
    CHECK(*s.next() == Vector{0, 0, 1});
    std::size_t count = 3;
    while (auto v = s.next()) {
        const auto first = std::find_if(v->begin(), v->end(), [](const Rational& q) { return !q.is_zero(); });
        REQUIRE(first != v->end());
        CHECK(*first == Rational(1));
        ++count;
    }
    // vectors led by a one with at least two nonzero entries, after the unit vectors
    CHECK(count == 3 + (49 - 1) + (7 - 1));
}

TEST_CASE("enlarged characters are monotone along produced chains") {
    for (const char* name : {"B", "B2", "C"}) {
        const auto rep = character_report(system_of(example_b, name), origin(6));
        CHECK(rep.monotone);
        CHECK(differences_non_increasing(rep.chain));
    }
}
