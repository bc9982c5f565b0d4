#pragma once

#include "pfaff/polynomial.hpp"

#include <string>

namespace pfaff {

/// Quotient of two polynomials on the same chart.
///
/// Normal form: the denominator is primitive with a positive leading
/// coefficient, common monomial factors are cancelled, and a numerator or
/// denominator that divides the other exactly is cancelled. Without a
/// multivariate gcd this is not a unique normal form, so equality compares
/// cross products.
class RationalFunction {
public:
    explicit RationalFunction(std::size_t nvars = 0);
    RationalFunction(Polynomial numerator); // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial numerator, Polynomial denominator);

    std::size_t nvars() const { return num_.nvars(); }
    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const;

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    /// Throws DomainError when the denominator vanishes at the point.
    Rational evaluate(std::span<const Rational> point) const;
    std::string to_string() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

} // namespace pfaff
