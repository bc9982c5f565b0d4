#include "pfaff/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <optional>

namespace pfaff {

namespace {

std::atomic<bool> g_checks{false};
std::atomic<std::uint64_t> g_verified{0};

bool is_zero(const Rational& r) { return r.is_zero(); }
bool is_zero(const Polynomial& p) { return p.is_zero(); }

Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto q = a.divide_exact(b);
    if (!q) {
        throw InternalError("fraction-free elimination produced an inexact division: (" + a.to_string() + ") / (" +
                            b.to_string() + ")");
    }
    return std::move(*q);
}

// Constant pivots keep the elimination's vanishing loci small.
bool preferred_pivot(const Rational&) { return true; }
bool preferred_pivot(const Polynomial& p) { return p.is_constant(); }

template <class T>
Elimination<T> gauss_jordan(Matrix<T> a) {
    Elimination<T> out;
    std::optional<T> prev;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::optional<std::size_t> pick;
        for (std::size_t i = row; i < a.rows(); ++i) {
            if (is_zero(a(i, col))) continue;
            if (!pick) pick = i;
            if (preferred_pivot(a(i, col))) {
                pick = i;
                break;
            }
        }
        if (!pick) continue;
        a.swap_rows(row, *pick);
        const T piv = a(row, col);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            const T factor = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (j == col) continue;
                T v = piv * a(i, j) - factor * a(row, j);
                a(i, j) = prev ? exact_div(v, *prev) : std::move(v);
            }
            a(i, col) = piv - piv; // zero of the right chart
        }
        out.pivot_columns.push_back(col);
        out.pivots.push_back(piv);
        prev = piv;
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

template <class T>
std::vector<std::size_t> free_columns(const Elimination<T>& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cols; ++j) {
        if (!is_pivot[j]) out.push_back(j);
    }
    return out;
}

void record_check(std::size_t rank, std::size_t nullity, std::size_t cols) {
    if (rank + nullity != cols) {
        throw InternalError("rank-nullity violated: " + std::to_string(rank) + " + " + std::to_string(nullity) +
                            " != " + std::to_string(cols));
    }
    g_verified.fetch_add(1, std::memory_order_relaxed);
}

// The sign is fixed by the leading coefficient of v[lead].
std::vector<Polynomial> clear_content(std::vector<Polynomial> v, std::size_t lead) {
    if (v.empty()) return v;
    const std::size_t n = v.front().nvars();
    Rational g(0);
    std::optional<Exponent> mono;
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        g = rational_gcd(g, p.content());
        Exponent m = p.monomial_gcd();
        if (!mono) {
            mono = m;
        } else {
            for (std::size_t i = 0; i < n; ++i) (*mono)[i] = std::min((*mono)[i], m[i]);
        }
    }
    if (g.is_zero()) return v;
    Rational scale = g.inverse();
    if (v[lead].leading_coefficient().sign() < 0) scale = -scale;
    for (auto& p : v) {
        if (p.is_zero()) continue;
        p = p.divide_monomial(*mono);
        p *= scale;
    }
    return v;
}

} // namespace

Elimination<Rational> eliminate(RationalMatrix m) { return gauss_jordan(std::move(m)); }
Elimination<Polynomial> eliminate(PolynomialMatrix m) { return gauss_jordan(std::move(m)); }

std::vector<Vector> nullspace(const RationalMatrix& m) {
    const auto e = eliminate(m);
    const auto frees = free_columns(e, m.cols());
    std::vector<Vector> basis;
    for (auto f : frees) {
        Vector v(m.cols(), Rational(0));
        v[f] = Rational(1);
        for (std::size_t k = 0; k < e.rank(); ++k) {
            // Pivot rows carry the last pivot on their diagonal.
            v[e.pivot_columns[k]] = -e.reduced(k, f) / e.pivots.back();
        }
        basis.push_back(std::move(v));
    }
    if (invariant_checks_enabled()) {
        for (const auto& v : basis) {
            for (const auto& x : multiply(m, v)) {
                if (!x.is_zero()) throw InternalError("rational kernel vector not annihilated");
            }
        }
        record_check(e.rank(), basis.size(), m.cols());
    }
    return basis;
}

std::vector<std::vector<Polynomial>> nullspace(const PolynomialMatrix& m) {
    const auto e = eliminate(m);
    const auto frees = free_columns(e, m.cols());
    std::size_t nvars = 0;
    if (m.rows() && m.cols()) nvars = m(0, 0).nvars();
    const Polynomial det = e.rank() ? e.pivots.back() : Polynomial::constant(nvars, Rational(1));
    std::vector<std::vector<Polynomial>> basis;
    for (auto f : frees) {
        std::vector<Polynomial> v(m.cols(), Polynomial(nvars));
        v[f] = det;
        for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivot_columns[k]] = -e.reduced(k, f);
        basis.push_back(clear_content(std::move(v), f));
    }
    if (invariant_checks_enabled()) {
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Polynomial acc(nvars);
                for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
                if (!acc.is_zero()) throw InternalError("polynomial kernel vector not annihilated");
            }
        }
        record_check(e.rank(), basis.size(), m.cols());
    }
    return basis;
}

PolynomialMatrix clear_denominators(const FunctionMatrix& m) {
    std::size_t nvars = 0;
    if (m.rows() && m.cols()) nvars = m(0, 0).nvars();
    PolynomialMatrix out(m.rows(), m.cols(), Polynomial(nvars));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        // Product of the distinct denominators of the row.
        std::vector<Polynomial> dens;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& d = m(i, j).denominator();
            if (d.is_constant()) continue;
            if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
        }
        Polynomial common = Polynomial::constant(nvars, Rational(1));
        for (const auto& d : dens) common = common * d;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& f = m(i, j);
            auto q = (common * f.numerator()).divide_exact(f.denominator());
            if (!q) throw InternalError("row denominator clearing failed");
            out(i, j) = std::move(*q);
        }
    }
    return out;
}

std::vector<std::vector<Polynomial>> nullspace(const FunctionMatrix& m) {
    auto basis = nullspace(clear_denominators(m));
    if (invariant_checks_enabled()) {
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (m.cols() == 0) break;
                RationalFunction acc(m(i, 0).nvars());
                for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * RationalFunction(v[j]);
                if (!acc.is_zero()) throw InternalError("function-field kernel vector not annihilated");
            }
        }
    }
    return basis;
}

std::size_t rank_of(const RationalMatrix& m) { return eliminate(m).rank(); }
std::size_t rank_of(const PolynomialMatrix& m) { return eliminate(m).rank(); }
std::size_t rank_of(const FunctionMatrix& m) { return eliminate(clear_denominators(m)).rank(); }

RationalMatrix evaluate(const PolynomialMatrix& m, std::span<const Rational> point) {
    RationalMatrix out(m.rows(), m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(point);
    }
    return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
    RationalMatrix out(m.cols(), m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    }
    return out;
}

Vector multiply(const RationalMatrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw DimensionError("matrix-vector size mismatch");
    Vector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t dim) {
    std::vector<std::vector<Rational>> rows(vectors.begin(), vectors.end());
    for (const auto& r : rows) {
        if (r.size() != dim) throw DimensionError("vector length does not match dimension");
    }
    const auto e = eliminate(RationalMatrix::from_rows(rows, dim));
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < e.rank(); ++k) {
        Vector r = e.reduced.row(k);
        const Rational scale = r[e.pivot_columns[k]].inverse();
        for (auto& x : r) x *= scale;
        basis.push_back(std::move(r));
    }
    return basis;
}

std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    std::vector<std::vector<Rational>> rows(vectors.begin(), vectors.end());
    return rank_of(RationalMatrix::from_rows(std::move(rows), dim));
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
    const std::size_t dim = v.size();
    std::vector<Vector> extended = basis;
    extended.push_back(v);
    return span_rank(extended, dim) == span_rank(basis, dim);
}

void set_invariant_checks(bool enabled) { g_checks.store(enabled); }
bool invariant_checks_enabled() { return g_checks.load(); }
std::uint64_t verified_nullspace_calls() { return g_verified.load(); }

} // namespace pfaff
