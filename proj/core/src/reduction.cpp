#include "pfaff/reduction.hpp"

#include "pfaff/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pfaff {

namespace {

DifferentialForm reread(const DifferentialForm& g, const std::vector<std::size_t>& kept) {
    std::vector<std::size_t> position(g.nvars(), kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) position[kept[i]] = i;
    DifferentialForm out(kept.size(), g.degree());
    for (const auto& [idx, c] : g.terms()) {
        MultiIndex mapped;
        for (auto i : idx) mapped.push_back(static_cast<std::uint32_t>(position[i]));
        out.add(std::move(mapped), c.restrict_to(kept));
    }
    return out;
}

// Keeps generators that raise the generic rank, in order.
std::vector<DifferentialForm> independent_subset(std::vector<DifferentialForm> gens, std::size_t nvars,
                                                 std::vector<std::string>& notices) {
    std::vector<DifferentialForm> out;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].is_zero()) {
            notices.push_back("generator " + std::to_string(k + 1) + " restricts to zero and is dropped");
            continue;
        }
        std::vector<std::vector<Polynomial>> rows;
        for (const auto& g : out) rows.push_back(g.coefficients());
        rows.push_back(gens[k].coefficients());
        const std::size_t r = rank_of(PolynomialMatrix::from_rows(std::move(rows), nvars));
        if (r == rank) {
            notices.push_back("generator " + std::to_string(k + 1) + " becomes dependent and is dropped");
            continue;
        }
        rank = r;
        out.push_back(std::move(gens[k]));
    }
    return out;
}

} // namespace

ReducedSystem restrict_to_slice(const PfaffianSystem& system, const SliceSpec& slice) {
    const std::size_t n = system.nvars();
    for (const auto& [index, value] : slice.assignments) {
        if (index >= n) throw DimensionError("slice assigns coordinate outside the chart");
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
        if (!slice.assignments.count(i)) kept.push_back(i);
    }
    std::vector<DifferentialForm> gens;
    for (const auto& g : system.generators()) {
        DifferentialForm sliced(n, 1);
        for (const auto& [idx, c] : g.terms()) {
            if (slice.assignments.count(idx[0])) continue; // the differential vanishes on the slice
            Polynomial coeff = c;
            for (const auto& [index, value] : slice.assignments) coeff = coeff.substitute(index, value);
            sliced.add(idx, coeff);
        }
        gens.push_back(reread(sliced, kept));
    }
    ReducedSystem out{PfaffianSystem(kept.size()), kept, {}};
    auto independent = independent_subset(std::move(gens), kept.size(), out.notices);
    if (independent.empty()) out.notices.push_back("every generator restricts to zero: the restricted system is empty");
    out.system = PfaffianSystem(kept.size(), std::move(independent));
    out.notices.push_back("restricted system has generic rank " + std::to_string(out.system.rank()));
    return out;
}

ReducedSystem drop_coordinates(const PfaffianSystem& system, const std::vector<std::size_t>& kept_in) {
    std::vector<std::size_t> kept = kept_in;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (auto k : kept) {
        if (k >= system.nvars()) throw DimensionError("kept coordinate outside the chart");
    }
    for (std::size_t g = 0; g < system.rank(); ++g) {
        for (std::size_t j = 0; j < system.nvars(); ++j) {
            if (std::binary_search(kept.begin(), kept.end(), j)) continue;
            if (system.generators()[g].involves(j)) {
                throw ValidityError("generator " + std::to_string(g + 1) + " involves dropped coordinate x" +
                                    std::to_string(j + 1) + "; the system is not adapted to this quotient");
            }
        }
    }
    std::vector<DifferentialForm> gens;
    for (const auto& g : system.generators()) gens.push_back(reread(g, kept));
    ReducedSystem out{PfaffianSystem(kept.size()), kept, {}};
    out.system = PfaffianSystem(kept.size(), std::move(gens));
    return out;
}

PfaffianSystem extend_system(const PfaffianSystem& system, std::size_t new_nvars,
                             const std::vector<std::size_t>& placement) {
    if (placement.size() != system.nvars()) throw DimensionError("placement has the wrong length");
    std::vector<DifferentialForm> gens;
    for (const auto& g : system.generators()) {
        DifferentialForm out(new_nvars, 1);
        for (const auto& [idx, c] : g.terms()) {
            out.add({static_cast<std::uint32_t>(placement.at(idx[0]))}, c.embed(new_nvars, placement));
        }
        gens.push_back(std::move(out));
    }
    return PfaffianSystem(new_nvars, std::move(gens));
}

namespace {

Point rationalize(const std::vector<double>& x) {
    Point p;
    p.reserve(x.size());
    for (double v : x) p.push_back(Rational::from_double(v));
    return p;
}

// Kernel field with the free-column parametrisation fixed at the start point.
class KernelField {
public:
    KernelField(const PfaffianSystem& system, const Point& start, const DirectionSelector& direction)
        : system_(system) {
        system.require_independent_at(start);
        const RationalMatrix c = system.coefficient_matrix_at(start);
        const auto elim = eliminate(c);
        pivots_ = elim.pivot_columns;
        std::vector<bool> is_pivot(system.nvars(), false);
        for (auto p : pivots_) is_pivot[p] = true;
        for (std::size_t j = 0; j < system.nvars(); ++j) {
            if (!is_pivot[j]) frees_.push_back(j);
        }
        if (frees_.empty()) throw DomainError("the annihilator is zero at the start point");
        if (const auto* index = std::get_if<std::size_t>(&direction)) {
            if (*index >= frees_.size()) {
                throw DomainError("direction index " + std::to_string(*index) + " exceeds annihilator dimension " +
                                  std::to_string(frees_.size()));
            }
            weights_ = unit_vector(frees_.size(), *index);
        } else {
            const Vector& v = std::get<Vector>(direction);
            if (v.size() != system.nvars()) throw DimensionError("direction has the wrong length");
            for (const auto& x : multiply(c, v)) {
                if (!x.is_zero()) throw DomainError("direction " + to_string(v) + " is not in the kernel at the start");
            }
            for (auto f : frees_) weights_.push_back(v[f]);
        }
    }

    std::vector<double> operator()(const std::vector<double>& x) const {
        const Point p = rationalize(x);
        const RationalMatrix c = system_.coefficient_matrix_at(p);
        const std::size_t r = pivots_.size();
        // Solve C_P v_P = -C_F w.
        RationalMatrix aug(r, r + 1, Rational(0));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < r; ++k) aug(i, k) = c(i, pivots_[k]);
            Rational rhs(0);
            for (std::size_t k = 0; k < frees_.size(); ++k) rhs -= c(i, frees_[k]) * weights_[k];
            aug(i, r) = rhs;
        }
        const auto elim = eliminate(aug);
        if (elim.rank() < r || (r > 0 && elim.pivot_columns.back() >= r)) {
            throw DegeneratePointError("kernel parametrisation breaks down along the curve at " + to_string(p));
        }
        std::vector<double> v(system_.nvars(), 0.0);
        for (std::size_t k = 0; k < frees_.size(); ++k) v[frees_[k]] = weights_[k].to_double();
        for (std::size_t k = 0; k < r; ++k) {
            v[pivots_[k]] = (elim.reduced(k, r) / elim.pivots.back()).to_double();
        }
        return v;
    }

private:
    const PfaffianSystem& system_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> frees_;
    Vector weights_;
};

std::vector<double> axpy(const std::vector<double>& x, double a, const std::vector<double>& y) {
    std::vector<double> out(x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * y[i];
    return out;
}

std::vector<double> tangent_at(const std::vector<std::vector<double>>& s, std::size_t k, double h) {
    const std::size_t n = s.front().size();
    const std::size_t last = s.size() - 1;
    std::vector<double> t(n, 0.0);
    // Fourth-order stencils: centred in the interior, one-sided near the ends.
    static constexpr double centred[5] = {1.0, -8.0, 0.0, 8.0, -1.0};
    static constexpr double forward[5] = {-25.0, 48.0, -36.0, 16.0, -3.0};
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        if (k >= 2 && k + 2 <= last) {
            for (int j = 0; j < 5; ++j) acc += centred[j] * s[k - 2 + static_cast<std::size_t>(j)][i];
        } else if (k < 2) {
            for (int j = 0; j < 5; ++j) acc += forward[j] * s[k + static_cast<std::size_t>(j)][i];
        } else {
            for (int j = 0; j < 5; ++j) acc -= forward[j] * s[k - static_cast<std::size_t>(j)][i];
        }
        t[i] = acc / (12.0 * h);
    }
    return t;
}

} // namespace

TracedCurve trace_integral_curve(const PfaffianSystem& system, const Point& start, const DirectionSelector& direction,
                                 double step, std::size_t count) {
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("step must be a positive finite number");
    if (start.size() != system.nvars()) throw DimensionError("start point has the wrong length");
    const KernelField field(system, start, direction);

    TracedCurve curve;
    curve.step = step;
    std::vector<double> x;
    for (const auto& c : start) x.push_back(c.to_double());
    curve.samples.push_back(x);
    for (std::size_t k = 0; k < count; ++k) {
        const auto k1 = field(x);
        const auto k2 = field(axpy(x, step / 2, k1));
        const auto k3 = field(axpy(x, step / 2, k2));
        const auto k4 = field(axpy(x, step, k3));
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += step / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        curve.samples.push_back(x);
    }

    const bool stencil = curve.samples.size() >= 5;
    for (std::size_t k = 0; k < curve.samples.size(); ++k) {
        const auto tangent = stencil ? tangent_at(curve.samples, k, step) : field(curve.samples[k]);
        const Point p = rationalize(curve.samples[k]);
        Vector t;
        for (double v : tangent) t.push_back(Rational::from_double(v));
        std::vector<double> row;
        for (const auto& g : system.generators()) {
            const Vector one[1] = {t};
            const double res = std::fabs(evaluate_on(g, p, one).to_double());
            row.push_back(res);
            curve.max_residual = std::max(curve.max_residual, res);
        }
        curve.residuals.push_back(std::move(row));
    }
    return curve;
}

void write_csv(std::ostream& out, const TracedCurve& curve, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    const std::size_t r = curve.residuals.empty() ? 0 : curve.residuals.front().size();
    for (std::size_t i = 0; i < r; ++i) out << ",residual" << (i + 1);
    out << "\n";
    char buf[32];
    for (std::size_t k = 0; k < curve.samples.size(); ++k) {
        bool first = true;
        for (double v : curve.samples[k]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << (first ? "" : ",") << buf;
            first = false;
        }
        for (double v : curve.residuals[k]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << "," << buf;
        }
        out << "\n";
    }
}

} // namespace pfaff
