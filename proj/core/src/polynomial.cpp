#include "pfaff/polynomial.hpp"

#include "pfaff/error.hpp"

#include <algorithm>
#include <numeric>

namespace pfaff {

namespace {

std::uint64_t degree_of(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

} // namespace

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
    const auto da = degree_of(a);
    const auto db = degree_of(b);
    if (da != db) return da < db;
    // Same degree: a < b when, at the first difference, a has the smaller power.
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) {
        throw DimensionError("variable index " + std::to_string(index) + " outside chart of dimension " +
                             std::to_string(nvars));
    }
    Exponent e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(Exponent exponent, const Rational& c) {
    Polynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("polynomial " + to_string() + " is not constant");
    return terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    return static_cast<std::uint32_t>(degree_of(terms_.rbegin()->first));
}

bool Polynomial::involves(std::size_t index) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.at(index) != 0; });
}

const Polynomial::Terms::value_type& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::check_same_chart(const Polynomial& o) const {
    if (nvars_ != o.nvars_) {
        throw DimensionError("polynomials on charts of dimension " + std::to_string(nvars_) + " and " +
                             std::to_string(o.nvars_));
    }
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_chart(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_chart(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_chart(b);
    Polynomial r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(nvars_, Rational(1));
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent) base = base * base;
    }
    return result;
}

Polynomial Polynomial::partial_derivative(std::size_t index) const {
    if (index >= nvars_) {
        throw DimensionError("derivative index " + std::to_string(index) + " outside chart of dimension " +
                             std::to_string(nvars_));
    }
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponent d = e;
        d[index] -= 1;
        r.add_term(d, c * Rational(static_cast<long>(e[index])));
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) {
        throw DimensionError("point of length " + std::to_string(point.size()) + " on chart of dimension " +
                             std::to_string(nvars_));
    }
    mpq_class sum = 0;
    mpq_class term;
    for (const auto& [e, c] : terms_) {
        term = c.raw();
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i].raw();
        }
        sum += term;
    }
    return Rational(std::move(sum));
}

double Polynomial::evaluate(std::span<const double> point) const {
    if (point.size() != nvars_) {
        throw DimensionError("point of length " + std::to_string(point.size()) + " on chart of dimension " +
                             std::to_string(nvars_));
    }
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.to_double();
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::substitute(std::size_t index, const Rational& value) const {
    if (index >= nvars_) throw DimensionError("substitution index outside chart");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent d = e;
        Rational factor(1);
        for (std::uint32_t k = 0; k < e[index]; ++k) factor *= value;
        d[index] = 0;
        r.add_term(d, c * factor);
    }
    return r;
}

Polynomial Polynomial::restrict_to(std::span<const std::size_t> kept) const {
    Polynomial r(kept.size());
    std::vector<bool> is_kept(nvars_, false);
    for (auto k : kept) {
        if (k >= nvars_) throw DimensionError("kept coordinate outside chart");
        is_kept[k] = true;
    }
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!is_kept[i] && e[i] != 0) {
                throw DomainError("polynomial " + to_string() + " involves dropped coordinate x" +
                                  std::to_string(i + 1));
            }
        }
        Exponent d(kept.size());
        for (std::size_t j = 0; j < kept.size(); ++j) d[j] = e[kept[j]];
        r.add_term(d, c);
    }
    return r;
}

Polynomial Polynomial::embed(std::size_t new_nvars, std::span<const std::size_t> placement) const {
    if (placement.size() != nvars_) throw DimensionError("embedding placement has wrong length");
    Polynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponent d(new_nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i) d.at(placement[i]) = e[i];
        r.add_term(d, c);
    }
    return r;
}

Rational Polynomial::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) g = rational_gcd(g, c);
    return g;
}

Exponent Polynomial::monomial_gcd() const {
    if (terms_.empty()) return Exponent(nvars_, 0);
    Exponent g = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) g[i] = std::min(g[i], e[i]);
    }
    return g;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    check_same_chart(divisor);
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    Polynomial quotient(nvars_);
    Polynomial rem = *this;
    const auto& [lead_e, lead_c] = divisor.leading_term();
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        if (!divides(lead_e, re)) return std::nullopt;
        Exponent qe(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) qe[i] = re[i] - lead_e[i];
        const Rational qc = rc / lead_c;
        quotient.add_term(qe, qc);
        Polynomial step(nvars_);
        Exponent se(nvars_);
        for (const auto& [de, dc] : divisor.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) se[i] = de[i] + qe[i];
            step.add_term(se, dc * qc);
        }
        rem -= step;
    }
    return quotient;
}

Polynomial Polynomial::divide_monomial(const Exponent& m) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (!divides(m, e)) throw DomainError("monomial does not divide polynomial");
        Exponent d(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) d[i] = e[i] - m[i];
        r.add_term(d, c);
    }
    return r;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (names.size() != nvars_) throw DimensionError("name list does not match chart");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const Rational mag = c.abs();
        std::string body;
        if (mono.empty()) {
            body = mag.to_string();
        } else if (mag.is_one()) {
            body = mono;
        } else {
            body = mag.to_string() + "*" + mono;
        }
        if (first) {
            out = (c.sign() < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string Polynomial::to_string() const {
    const auto names = default_names(nvars_);
    return to_string(names);
}

std::vector<std::string> default_names(std::size_t nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

} // namespace pfaff
