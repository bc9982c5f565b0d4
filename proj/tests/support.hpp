#pragma once

#include "pfaff/document.hpp"
#include "pfaff/form.hpp"
#include "pfaff/integral.hpp"
#include "pfaff/linalg.hpp"
#include "pfaff/system.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pfaff::test {

inline Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
inline Polynomial cst(std::size_t n, const Rational& q) { return Polynomial::constant(n, q); }
inline DifferentialForm dx(std::size_t n, std::size_t i) { return DifferentialForm::differential(n, i); }

inline PfaffianSystem system_of(std::string_view source, std::string_view name) {
    return parse_document(source).system(name);
}

inline constexpr const char* example_a = R"(chart x1 x2 x3 x4 x5;
form w1 = d(x1) + x4*d(x5);
form w2 = d(x2);
form w3 = d(x3);
form v3 = d(x3) + x5*d(x1);
system A = [w1, w2, w3];
system A2 = [w1, w2, v3];
)";

inline constexpr const char* example_b = R"(chart x1 x2 x3 x4 x5 x6;
form w1 = d(x1) + x4*d(x5);
form w2 = d(x2) + x5*d(x6);
form w3 = d(x3);
form v3 = d(x3) + x5*d(x1);
form u3 = d(x3) + x6*d(x4);
system B = [w1, w2, w3];
system B2 = [w1, w2, v3];
system C = [w1, w2, u3];
)";

inline constexpr const char* integrable_23 = R"(chart x1 x2 x3 x4 x5;
form w2 = d(x2);
form w3 = d(x3);
system I = [w2, w3];
)";

struct Random {
    std::mt19937_64 gen;
    explicit Random(std::uint64_t seed) : gen(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

    Rational rational(long range = 3) {
        const long den = integer(1, 3);
        return Rational(integer(-range, range), den);
    }

    Rational nonzero_rational(long range = 3) {
        Rational q;
        do q = rational(range);
        while (q.is_zero());
        return q;
    }

    Point point(std::size_t n, long range = 3) {
        Point p;
        for (std::size_t i = 0; i < n; ++i) p.push_back(rational(range));
        return p;
    }

    Polynomial polynomial(std::size_t n, unsigned max_degree = 2, std::size_t max_terms = 4) {
        Polynomial p(n);
        const std::size_t terms = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
        for (std::size_t t = 0; t < terms; ++t) {
            Exponent e(n, 0);
            const long degree = integer(0, max_degree);
            for (long k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1))];
            p += Polynomial::monomial(e, rational());
        }
        return p;
    }

    DifferentialForm form(std::size_t n, std::size_t degree, unsigned max_degree = 2) {
        DifferentialForm out(n, degree);
        if (degree > n) return out;
        const std::size_t terms = static_cast<std::size_t>(integer(0, 3));
        for (std::size_t t = 0; t < terms; ++t) {
            std::vector<std::uint32_t> all(n);
            std::iota(all.begin(), all.end(), 0u);
            std::shuffle(all.begin(), all.end(), gen);
            MultiIndex idx(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(degree));
            out.add(idx, polynomial(n, max_degree));
        }
        return out;
    }

    Vector vector(std::size_t n) { return point(n); }
};

/// Alternating multilinear evaluation straight from the coefficients:
/// sum over multi-indices of c_I(p) * det[v_a(I_b)].
inline Rational evaluate_by_determinants(const DifferentialForm& f, const Point& p, const std::vector<Vector>& vs) {
    Rational total(0);
    const std::size_t k = f.degree();
    for (const auto& [idx, c] : f.terms()) {
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        Rational det(0);
        do {
            int inversions = 0;
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
            }
            Rational term(inversions % 2 ? -1 : 1);
            for (std::size_t a = 0; a < k; ++a) term *= vs[a][idx[perm[a]]];
            det += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        total += c.evaluate(p) * det;
    }
    return total;
}

/// Darboux class of a 1-form at p from pointwise linear algebra:
/// with A = dw(p) and a = w(p), rank [[A, a], [-a^T, 0]] decides 2h or 2h+1.
inline unsigned darboux_class_by_rank(const DifferentialForm& w, const Point& p) {
    const std::size_t n = w.nvars();
    const DifferentialForm dw = exterior_derivative(w);
    RationalMatrix aug(n + 1, n + 1, Rational(0));
    RationalMatrix a(n, n, Rational(0));
    for (const auto& [idx, c] : dw.terms()) {
        const Rational v = c.evaluate(p);
        a(idx[0], idx[1]) = v;
        a(idx[1], idx[0]) = -v;
        aug(idx[0], idx[1]) = v;
        aug(idx[1], idx[0]) = -v;
    }
    for (const auto& [idx, c] : w.terms()) {
        const Rational v = c.evaluate(p);
        aug(idx[0], n) = v;
        aug(n, idx[0]) = -v;
    }
    const std::size_t ra = rank_of(a);
    const std::size_t rg = rank_of(aug);
    return static_cast<unsigned>(rg > ra ? rg - 1 : rg);
}

} // namespace pfaff::test
