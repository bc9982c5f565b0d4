#include "pfaff/rational_function.hpp"

#include "pfaff/error.hpp"

#include <algorithm>

namespace pfaff {

RationalFunction::RationalFunction(std::size_t nvars)
    : num_(nvars), den_(Polynomial::constant(nvars, Rational(1))) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(num_.nvars(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.nvars() != den_.nvars()) throw DimensionError("rational function over mismatched charts");
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    const std::size_t n = num_.nvars();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(n, Rational(1));
        return;
    }
    // Common monomial factor.
    Exponent mn = num_.monomial_gcd();
    Exponent md = den_.monomial_gcd();
    Exponent common(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        common[i] = std::min(mn[i], md[i]);
        any = any || common[i] != 0;
    }
    if (any) {
        num_ = num_.divide_monomial(common);
        den_ = den_.divide_monomial(common);
    }
    if (!den_.is_constant()) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = std::move(*q);
            den_ = Polynomial::constant(n, Rational(1));
        } else if (auto q2 = den_.divide_exact(num_)) {
            den_ = std::move(*q2);
            num_ = Polynomial::constant(n, Rational(1));
        }
    }
    // Primitive denominator with positive leading coefficient.
    Rational scale = den_.content();
    if (den_.leading_coefficient().sign() < 0) scale = -scale;
    const Rational inv = scale.inverse();
    num_ *= inv;
    den_ *= inv;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DomainError("division by the zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
    const Rational d = den_.evaluate(point);
    if (d.is_zero()) throw DomainError("denominator " + den_.to_string() + " vanishes at the point");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace pfaff
