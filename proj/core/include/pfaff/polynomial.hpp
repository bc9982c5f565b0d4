#pragma once

#include "pfaff/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pfaff {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then the first differing
/// exponent decides (x1 > x2 > ... > xn).
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over the rationals on a chart of `nvars`
/// coordinates. Zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Exponent, Rational, GradedLex>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(Exponent exponent, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws DomainError otherwise.
    Rational constant_value() const;
    std::uint32_t total_degree() const;
    /// True when some term has a nonzero exponent in `index`.
    bool involves(std::size_t index) const;

    /// Largest term in graded-lex order. Requires a nonzero polynomial.
    const Terms::value_type& leading_term() const;
    const Rational& leading_coefficient() const { return leading_term().second; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned exponent) const;
    Polynomial partial_derivative(std::size_t index) const;
    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    /// Replaces coordinate `index` by a constant; the chart is unchanged.
    Polynomial substitute(std::size_t index, const Rational& value) const;
    /// Re-reads the polynomial on the sub-chart of `kept` coordinates.
    /// Throws DomainError when a dropped coordinate occurs.
    Polynomial restrict_to(std::span<const std::size_t> kept) const;
    /// Re-reads the polynomial on a larger chart; `placement[i]` is the new
    /// index of coordinate i.
    Polynomial embed(std::size_t new_nvars, std::span<const std::size_t> placement) const;

    /// Positive rational content: gcd of numerators over lcm of denominators.
    Rational content() const;
    /// Componentwise minimum exponent over all terms.
    Exponent monomial_gcd() const;
    /// Quotient when `divisor` divides exactly, nullopt otherwise.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
    /// Divides by a monomial with coefficient one; the monomial must divide every term.
    Polynomial divide_monomial(const Exponent& e) const;

    std::string to_string(std::span<const std::string> names) const;
    /// Renders with default names x1..xn.
    std::string to_string() const;

private:
    void check_same_chart(const Polynomial& o) const;
    void add_term(const Exponent& e, const Rational& c);

    std::size_t nvars_;
    Terms terms_;
};

std::vector<std::string> default_names(std::size_t nvars);

} // namespace pfaff
