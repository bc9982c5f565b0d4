#include "pfaff/form.hpp"

#include "pfaff/error.hpp"

#include <algorithm>

namespace pfaff {

int sort_with_sign(MultiIndex& index) {
    int sign = 1;
    // Insertion sort counting transpositions; indices are short.
    for (std::size_t i = 1; i < index.size(); ++i) {
        for (std::size_t j = i; j > 0 && index[j - 1] > index[j]; --j) {
            std::swap(index[j - 1], index[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < index.size(); ++i) {
        if (index[i] == index[i - 1]) return 0;
    }
    return sign;
}

TangentVector constant_field(std::size_t nvars, const Vector& v) {
    if (v.size() != nvars) throw DimensionError("vector length does not match chart");
    TangentVector out;
    out.reserve(nvars);
    for (const auto& c : v) out.push_back(Polynomial::constant(nvars, c));
    return out;
}

DifferentialForm DifferentialForm::function(const Polynomial& f) {
    DifferentialForm out(f.nvars(), 0);
    out.add({}, f);
    return out;
}

DifferentialForm DifferentialForm::differential(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DimensionError("differential index outside chart");
    DifferentialForm out(nvars, 1);
    out.add({static_cast<std::uint32_t>(index)}, Polynomial::constant(nvars, Rational(1)));
    return out;
}

DifferentialForm DifferentialForm::one_form(std::span<const Polynomial> coefficients) {
    const std::size_t n = coefficients.size();
    DifferentialForm out(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (coefficients[i].nvars() != n) throw DimensionError("coefficient on a different chart");
        out.add({static_cast<std::uint32_t>(i)}, coefficients[i]);
    }
    return out;
}

DifferentialForm DifferentialForm::one_form(std::size_t nvars, const Vector& coefficients) {
    return one_form(constant_field(nvars, coefficients));
}

Polynomial DifferentialForm::coefficient(const MultiIndex& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Polynomial(nvars_) : it->second;
}

std::vector<Polynomial> DifferentialForm::coefficients() const {
    if (degree_ != 1) throw DomainError("coefficient vector requested for a form of degree " + std::to_string(degree_));
    std::vector<Polynomial> out(nvars_, Polynomial(nvars_));
    for (const auto& [idx, c] : terms_) out[idx[0]] = c;
    return out;
}

bool DifferentialForm::involves(std::size_t index) const {
    for (const auto& [idx, c] : terms_) {
        if (std::find(idx.begin(), idx.end(), index) != idx.end()) return true;
        if (c.involves(index)) return true;
    }
    return false;
}

void DifferentialForm::add(MultiIndex index, const Polynomial& c) {
    if (index.size() != degree_) throw DimensionError("multi-index length does not match form degree");
    if (c.nvars() != nvars_) throw DimensionError("coefficient on a different chart");
    for (auto i : index) {
        if (i >= nvars_) throw DimensionError("multi-index outside chart");
    }
    const int sign = sort_with_sign(index);
    if (sign == 0 || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(index, Polynomial(nvars_));
    if (sign > 0) {
        it->second += c;
    } else {
        it->second -= c;
    }
    if (it->second.is_zero()) terms_.erase(it);
}

void DifferentialForm::check_same_chart(const DifferentialForm& o) const {
    if (nvars_ != o.nvars_) {
        throw DimensionError("forms on charts of dimension " + std::to_string(nvars_) + " and " +
                             std::to_string(o.nvars_));
    }
    if (degree_ != o.degree_) {
        throw DimensionError("adding forms of degree " + std::to_string(degree_) + " and " +
                             std::to_string(o.degree_));
    }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
    check_same_chart(o);
    for (const auto& [idx, c] : o.terms_) add(idx, c);
    return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
    check_same_chart(o);
    for (const auto& [idx, c] : o.terms_) add(idx, -c);
    return *this;
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm out(*this);
    for (auto& [idx, c] : out.terms_) c = -c;
    return out;
}

DifferentialForm operator*(const Polynomial& f, const DifferentialForm& a) {
    if (f.nvars() != a.nvars_) throw DimensionError("function and form on different charts");
    DifferentialForm out(a.nvars_, a.degree_);
    for (const auto& [idx, c] : a.terms_) out.add(idx, f * c);
    return out;
}

DifferentialForm operator*(const Rational& c, const DifferentialForm& a) {
    return Polynomial::constant(a.nvars(), c) * a;
}

std::string DifferentialForm::to_string(std::span<const std::string> names) const {
    if (names.size() != nvars_) throw DimensionError("name list does not match chart");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        std::string basis;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k) basis += "/\\";
            basis += "d" + names[idx[k]];
        }
        bool negative = false;
        std::string coeff;
        if (c.term_count() == 1) {
            const auto& [e, v] = *c.terms().begin();
            negative = v.sign() < 0;
            coeff = (negative ? -c : c).to_string(names);
        } else {
            coeff = "(" + c.to_string(names) + ")";
        }
        std::string body;
        if (basis.empty()) {
            body = coeff;
        } else if (coeff == "1") {
            body = basis;
        } else {
            body = coeff + "*" + basis;
        }
        if (first) {
            out = (negative ? "-" : "") + body;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string DifferentialForm::to_string() const {
    const auto names = default_names(nvars_);
    return to_string(names);
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("wedge of forms on different charts");
    DifferentialForm out(a.nvars(), a.degree() + b.degree());
    if (out.degree() > out.nvars()) return out;
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            MultiIndex idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add(std::move(idx), ca * cb);
        }
    }
    return out;
}

DifferentialForm wedge_all(std::span<const DifferentialForm> forms, std::size_t nvars) {
    DifferentialForm out = DifferentialForm::function(Polynomial::constant(nvars, Rational(1)));
    for (const auto& f : forms) out = wedge(out, f);
    return out;
}

DifferentialForm wedge_power(const DifferentialForm& a, unsigned k) {
    DifferentialForm out = DifferentialForm::function(Polynomial::constant(a.nvars(), Rational(1)));
    for (unsigned i = 0; i < k; ++i) {
        out = wedge(out, a);
        if (out.is_zero()) break;
    }
    return out;
}

DifferentialForm exterior_derivative(const DifferentialForm& a) {
    DifferentialForm out(a.nvars(), a.degree() + 1);
    if (out.degree() > out.nvars()) return out;
    for (const auto& [idx, c] : a.terms()) {
        for (std::size_t j = 0; j < a.nvars(); ++j) {
            Polynomial dc = c.partial_derivative(j);
            if (dc.is_zero()) continue;
            MultiIndex full{static_cast<std::uint32_t>(j)};
            full.insert(full.end(), idx.begin(), idx.end());
            out.add(std::move(full), dc);
        }
    }
    return out;
}

DifferentialForm interior_product(const TangentVector& v, const DifferentialForm& a) {
    if (a.degree() == 0) throw DomainError("interior product of a 0-form");
    if (v.size() != a.nvars()) throw DimensionError("vector length does not match chart");
    DifferentialForm out(a.nvars(), a.degree() - 1);
    for (const auto& [idx, c] : a.terms()) {
        for (std::size_t slot = 0; slot < idx.size(); ++slot) {
            const Polynomial& comp = v[idx[slot]];
            if (comp.is_zero()) continue;
            MultiIndex rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t k = 0; k < idx.size(); ++k) {
                if (k != slot) rest.push_back(idx[k]);
            }
            Polynomial term = comp * c;
            if (slot % 2 == 1) term = -term;
            out.add(std::move(rest), term);
        }
    }
    return out;
}

DifferentialForm interior_product(const Vector& v, const DifferentialForm& a) {
    return interior_product(constant_field(a.nvars(), v), a);
}

DifferentialForm evaluate_at(const DifferentialForm& a, std::span<const Rational> point) {
    if (point.size() != a.nvars()) throw DimensionError("point length does not match chart");
    DifferentialForm out(a.nvars(), a.degree());
    for (const auto& [idx, c] : a.terms()) out.add(idx, Polynomial::constant(a.nvars(), c.evaluate(point)));
    return out;
}

Rational evaluate_on(const DifferentialForm& a, std::span<const Rational> point, std::span<const Vector> vectors) {
    if (vectors.size() != a.degree()) throw DimensionError("number of vectors does not match form degree");
    DifferentialForm cur = evaluate_at(a, point);
    for (const auto& v : vectors) cur = interior_product(v, cur);
    return cur.coefficient({}).is_zero() ? Rational(0) : cur.coefficient({}).constant_value();
}

} // namespace pfaff
