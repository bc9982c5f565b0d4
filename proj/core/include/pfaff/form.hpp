#pragma once

#include "pfaff/polynomial.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace pfaff {

/// Strictly increasing coordinate indices labelling dx^{i1} ^ ... ^ dx^{ik}.
using MultiIndex = std::vector<std::uint32_t>;

/// Vector field with polynomial components; constant components give a
/// tangent vector at a point.
using TangentVector = std::vector<Polynomial>;

TangentVector constant_field(std::size_t nvars, const Vector& v);

/// Degree-homogeneous exterior differential form with polynomial coefficients.
class DifferentialForm {
public:
    using Terms = std::map<MultiIndex, Polynomial>;

    DifferentialForm(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree) {}

    static DifferentialForm zero(std::size_t nvars, std::size_t degree) { return {nvars, degree}; }
    static DifferentialForm function(const Polynomial& f);
    /// The basis 1-form dx^index.
    static DifferentialForm differential(std::size_t nvars, std::size_t index);
    /// Sum of c_i dx^i.
    static DifferentialForm one_form(std::span<const Polynomial> coefficients);
    /// Constant-coefficient 1-form sum of c_i dx^i.
    static DifferentialForm one_form(std::size_t nvars, const Vector& coefficients);

    std::size_t nvars() const { return nvars_; }
    std::size_t degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of the basis monomial (zero when absent).
    Polynomial coefficient(const MultiIndex& index) const;
    /// Coefficients c_i of a 1-form in coordinate order.
    std::vector<Polynomial> coefficients() const;
    /// True when a coefficient depends on coordinate `index` or dx^index occurs.
    bool involves(std::size_t index) const;

    /// Adds c * dx^I where I need not be sorted; repeated indices give zero.
    void add(MultiIndex index, const Polynomial& c);

    DifferentialForm& operator+=(const DifferentialForm& o);
    DifferentialForm& operator-=(const DifferentialForm& o);
    DifferentialForm operator-() const;
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
    friend DifferentialForm operator*(const Polynomial& f, const DifferentialForm& a);
    friend DifferentialForm operator*(const Rational& c, const DifferentialForm& a);
    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b) = default;

    std::string to_string(std::span<const std::string> names) const;
    std::string to_string() const;

private:
    void check_same_chart(const DifferentialForm& o) const;

    std::size_t nvars_;
    std::size_t degree_;
    Terms terms_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
/// Wedge of a list of forms; the empty product is the constant 1 on the chart.
DifferentialForm wedge_all(std::span<const DifferentialForm> forms, std::size_t nvars);
/// k-th wedge power; power 0 is the constant 1.
DifferentialForm wedge_power(const DifferentialForm& a, unsigned k);
DifferentialForm exterior_derivative(const DifferentialForm& a);
/// Contraction in the first slot.
DifferentialForm interior_product(const TangentVector& v, const DifferentialForm& a);
DifferentialForm interior_product(const Vector& v, const DifferentialForm& a);
/// Coefficients evaluated at the point; the result has constant coefficients.
DifferentialForm evaluate_at(const DifferentialForm& a, std::span<const Rational> point);
/// Value of a k-form at a point on k tangent vectors, a(v1, ..., vk).
Rational evaluate_on(const DifferentialForm& a, std::span<const Rational> point, std::span<const Vector> vectors);

/// Parity sign and sorted copy of an index list, or sign 0 when an index repeats.
int sort_with_sign(MultiIndex& index);

} // namespace pfaff
