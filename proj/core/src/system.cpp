#include "pfaff/system.hpp"

#include "pfaff/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pfaff {

PfaffianSystem::PfaffianSystem(std::size_t nvars)
    : nvars_(nvars),
      coefficients_(0, nvars, Polynomial(nvars)),
      top_(DifferentialForm::function(Polynomial::constant(nvars, Rational(1)))) {}

PfaffianSystem::PfaffianSystem(std::size_t nvars, std::vector<DifferentialForm> generators)
    : nvars_(nvars),
      generators_(std::move(generators)),
      coefficients_(generators_.size(), nvars, Polynomial(nvars)),
      top_(DifferentialForm::function(Polynomial::constant(nvars, Rational(1)))) {
    if (generators_.size() > nvars_) {
        throw DomainError("a Pfaffian system of rank " + std::to_string(generators_.size()) +
                          " cannot live on a chart of dimension " + std::to_string(nvars_));
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.nvars() != nvars_) throw DimensionError("generator " + std::to_string(i + 1) + " lives on another chart");
        if (g.degree() != 1) {
            throw DimensionError("generator " + std::to_string(i + 1) + " has degree " + std::to_string(g.degree()));
        }
        auto coeffs = g.coefficients();
        for (std::size_t j = 0; j < nvars_; ++j) coefficients_(i, j) = std::move(coeffs[j]);
    }
    const auto elim = eliminate(coefficients_);
    if (elim.rank() != generators_.size()) {
        throw DomainError("generators are dependent: generic rank " + std::to_string(elim.rank()) + " < " +
                          std::to_string(generators_.size()));
    }
    pivots_ = elim.pivots;
    top_ = wedge_all(generators_, nvars_);
    differentials_.reserve(generators_.size());
    for (const auto& g : generators_) differentials_.push_back(exterior_derivative(g));
}

RationalMatrix PfaffianSystem::coefficient_matrix_at(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw DimensionError("point length does not match chart");
    return evaluate(coefficients_, point);
}

bool PfaffianSystem::independent_at(std::span<const Rational> point) const {
    return rank_of(coefficient_matrix_at(point)) == rank();
}

void PfaffianSystem::require_independent_at(std::span<const Rational> point) const {
    const std::size_t r = rank_of(coefficient_matrix_at(point));
    if (r == rank()) return;
    std::string msg = "generators are dependent at " + to_string(Vector(point.begin(), point.end())) + " (rank " +
                      std::to_string(r) + " < " + std::to_string(rank()) + ")";
    for (const auto& p : pivots_) {
        if (p.evaluate(point).is_zero()) {
            msg += "; pivot polynomial " + p.to_string() + " vanishes";
            break;
        }
    }
    throw DegeneratePointError(msg);
}

bool congruent_zero_mod(const PfaffianSystem& system, const DifferentialForm& form, const std::optional<Point>& at) {
    if (form.nvars() != system.nvars()) throw DimensionError("form and system live on different charts");
    if (at) {
        system.require_independent_at(*at);
        return evaluate_at(wedge(system.top_wedge(), form), *at).is_zero();
    }
    return wedge(system.top_wedge(), form).is_zero();
}

bool is_frobenius_integrable(const PfaffianSystem& system) {
    return std::all_of(system.differentials().begin(), system.differentials().end(),
                       [&](const DifferentialForm& d) { return congruent_zero_mod(system, d); });
}

namespace {

DifferentialForm primitive(const DifferentialForm& f) {
    Rational g(0);
    std::optional<Exponent> mono;
    for (const auto& [idx, c] : f.terms()) {
        g = rational_gcd(g, c.content());
        auto m = c.monomial_gcd();
        if (!mono) {
            mono = m;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) (*mono)[i] = std::min((*mono)[i], m[i]);
        }
    }
    if (g.is_zero()) return f;
    Rational scale = g.inverse();
    if (f.terms().begin()->second.leading_coefficient().sign() < 0) scale = -scale;
    DifferentialForm out(f.nvars(), f.degree());
    for (const auto& [idx, c] : f.terms()) {
        Polynomial q = c.divide_monomial(*mono);
        q *= scale;
        out.add(idx, q);
    }
    return out;
}

} // namespace

PfaffianSystem derived_system(const PfaffianSystem& system) {
    const std::size_t n = system.nvars();
    const std::size_t r = system.rank();
    if (r == 0) return PfaffianSystem(n);
    // Column i holds the coefficients of d(omega^i) ^ omega^1 ^ ... ^ omega^r.
    std::vector<DifferentialForm> products;
    std::set<MultiIndex> rows;
    for (const auto& d : system.differentials()) {
        products.push_back(wedge(d, system.top_wedge()));
        for (const auto& [idx, c] : products.back().terms()) rows.insert(idx);
    }
    PolynomialMatrix m(rows.size(), r, Polynomial(n));
    std::size_t i = 0;
    for (const auto& idx : rows) {
        for (std::size_t j = 0; j < r; ++j) m(i, j) = products[j].coefficient(idx);
        ++i;
    }
    std::vector<std::vector<Polynomial>> kernel;
    if (rows.empty()) {
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Polynomial> e(r, Polynomial(n));
            e[j] = Polynomial::constant(n, Rational(1));
            kernel.push_back(std::move(e));
        }
    } else {
        kernel = nullspace(m);
    }
    std::vector<DifferentialForm> gens;
    for (const auto& lambda : kernel) {
        DifferentialForm f = DifferentialForm::zero(n, 1);
        for (std::size_t j = 0; j < r; ++j) {
            if (!lambda[j].is_zero()) f += lambda[j] * system.generators()[j];
        }
        gens.push_back(primitive(f));
    }
    return PfaffianSystem(n, std::move(gens));
}

DerivedFlag derived_flag(const PfaffianSystem& system) {
    DerivedFlag flag;
    flag.systems.push_back(system);
    flag.ranks.push_back(system.rank());
    while (true) {
        PfaffianSystem next = derived_system(flag.systems.back());
        if (next.rank() == flag.systems.back().rank()) break;
        flag.ranks.push_back(next.rank());
        flag.systems.push_back(std::move(next));
    }
    flag.terminal_integrable = is_frobenius_integrable(flag.systems.back());
    return flag;
}

FlagClassification is_flag_system(const DerivedFlag& flag) {
    FlagClassification out;
    if (flag.ranks.size() == 1) {
        out.flag_system = flag.terminal_integrable;
        out.trivial = flag.terminal_integrable;
        return out;
    }
    out.flag_system = flag.terminal_integrable;
    for (std::size_t i = 1; i < flag.ranks.size(); ++i) {
        if (flag.ranks[i - 1] != flag.ranks[i] + 1) out.flag_system = false;
    }
    return out;
}

FlagClassification is_flag_system(const PfaffianSystem& system) { return is_flag_system(derived_flag(system)); }

CharacteristicData characteristic_data_at(const PfaffianSystem& system, const Point& point) {
    system.require_independent_at(point);
    const std::size_t n = system.nvars();
    const auto annihilator = nullspace(system.coefficient_matrix_at(point));

    std::vector<DifferentialForm> dforms;
    for (const auto& d : system.differentials()) dforms.push_back(evaluate_at(d, point));

    // Covector side: omega^i(p) and i(u) d omega^i(p) for u in the annihilator.
    std::vector<Vector> covectors;
    auto as_vector = [&](const DifferentialForm& f) {
        Vector v(n, Rational(0));
        for (const auto& [idx, c] : f.terms()) v[idx[0]] = c.constant_value();
        return v;
    };
    for (const auto& g : system.generators()) covectors.push_back(as_vector(evaluate_at(g, point)));
    for (const auto& u : annihilator) {
        for (const auto& d : dforms) covectors.push_back(as_vector(interior_product(u, d)));
    }

    // Vector side: kernel of every restricted skew form on the annihilator.
    const std::size_t m = annihilator.size();
    std::vector<std::vector<Rational>> rows;
    for (const auto& d : dforms) {
        for (std::size_t a = 0; a < m; ++a) {
            std::vector<Rational> row(m, Rational(0));
            for (std::size_t b = 0; b < m; ++b) {
                const Vector pair[2] = {annihilator[a], annihilator[b]};
                row[b] = evaluate_on(d, point, pair);
            }
            rows.push_back(std::move(row));
        }
    }
    std::vector<Vector> coords;
    if (rows.empty()) {
        for (std::size_t a = 0; a < m; ++a) coords.push_back(unit_vector(m, a));
    } else {
        coords = nullspace(RationalMatrix::from_rows(std::move(rows), m));
    }

    CharacteristicData out;
    out.base_point = point;
    out.covector_basis = row_space_basis(covectors, n);
    out.covector_rank = out.covector_basis.size();
    for (const auto& c : coords) {
        Vector v(n, Rational(0));
        for (std::size_t a = 0; a < m; ++a) {
            if (c[a].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) v[k] += c[a] * annihilator[a][k];
        }
        out.characteristic_space.push_back(std::move(v));
    }
    // The two sides are computed independently and must annihilate each other.
    if (out.covector_rank + out.characteristic_space.size() != n) {
        throw InternalError("characteristic covectors and vectors do not have complementary dimensions");
    }
    for (const auto& cv : out.covector_basis) {
        for (const auto& v : out.characteristic_space) {
            Rational s(0);
            for (std::size_t k = 0; k < n; ++k) s += cv[k] * v[k];
            if (!s.is_zero()) throw InternalError("characteristic vector not annihilated by CH");
        }
    }
    return out;
}

unsigned gender_of_form_at(const PfaffianSystem& system, const DifferentialForm& form, const Point& point,
                           GenderConvention convention) {
    if (form.nvars() != system.nvars()) throw DimensionError("form and system live on different charts");
    if (form.degree() == 0) throw DomainError("gender of a 0-form is undefined");
    system.require_independent_at(point);
    const DifferentialForm omega = evaluate_at(form, point);
    const DifferentialForm base = convention == GenderConvention::modulo_system
                                      ? evaluate_at(system.top_wedge(), point)
                                      : DifferentialForm::function(Polynomial::constant(system.nvars(), Rational(1)));
    DifferentialForm power = omega;
    for (unsigned h = 0;; ++h) {
        if (wedge(base, power).is_zero()) return h;
        power = wedge(power, omega);
    }
}

unsigned system_gender_at(const PfaffianSystem& system, const Point& point, GenderConvention convention,
                          const std::optional<SectionSampling>& sampling) {
    system.require_independent_at(point);
    unsigned best = 0;
    for (const auto& d : system.differentials()) {
        best = std::max(best, gender_of_form_at(system, d, point, convention));
    }
    if (sampling && system.rank() > 0) {
        const std::size_t n = system.nvars();
        std::mt19937_64 rng(sampling->seed);
        std::uniform_int_distribution<long> coef(-3, 3);
        for (unsigned s = 0; s < sampling->samples; ++s) {
            DifferentialForm section = DifferentialForm::zero(n, 1);
            for (const auto& g : system.generators()) {
                Polynomial c = Polynomial::constant(n, Rational(coef(rng)));
                for (std::size_t k = 0; k < n; ++k) c += Rational(coef(rng)) * Polynomial::variable(n, k);
                section += c * g;
            }
            const auto d = exterior_derivative(section);
            if (d.is_zero()) continue;
            best = std::max(best, gender_of_form_at(system, d, point, convention));
        }
    }
    return best;
}

unsigned darboux_class_at(const DifferentialForm& form, const Point& point) {
    if (form.degree() != 1) throw DomainError("Darboux class is defined for 1-forms");
    const DifferentialForm omega = evaluate_at(form, point);
    if (omega.is_zero()) throw DomainError("Darboux class undefined: the 1-form vanishes at " + to_string(point));
    const DifferentialForm d = evaluate_at(exterior_derivative(form), point);
    unsigned h = 0;
    DifferentialForm power = DifferentialForm::function(Polynomial::constant(form.nvars(), Rational(1)));
    while (true) {
        DifferentialForm next = wedge(power, d);
        if (next.is_zero()) break;
        power = std::move(next);
        ++h;
    }
    return wedge(omega, power).is_zero() ? 2 * h : 2 * h + 1;
}

bool contained_in(const PfaffianSystem& sub, const PfaffianSystem& system) {
    if (sub.nvars() != system.nvars()) throw DimensionError("systems live on different charts");
    return std::all_of(sub.generators().begin(), sub.generators().end(), [&](const DifferentialForm& g) {
        return wedge(system.top_wedge(), g).is_zero();
    });
}

} // namespace pfaff
