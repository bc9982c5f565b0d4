#include "pfaff/integral.hpp"

#include "pfaff/error.hpp"

#include <algorithm>
#include <array>

namespace pfaff {

namespace {

const std::array<Rational, 7>& symbols() {
    static const std::array<Rational, 7> s = {Rational(0),     Rational(1),  Rational(-1), Rational(1, 2),
                                              Rational(-1, 2), Rational(2), Rational(-2)};
    return s;
}

std::vector<Vector> identity_basis(std::size_t m) {
    std::vector<Vector> out;
    for (std::size_t a = 0; a < m; ++a) out.push_back(unit_vector(m, a));
    return out;
}

Vector combine(const std::vector<Vector>& basis, const Vector& weights, std::size_t dim) {
    Vector out(dim, Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (weights[j].is_zero()) continue;
        for (std::size_t k = 0; k < dim; ++k) {
            if (!basis[j][k].is_zero()) out[k] += weights[j] * basis[j][k];
        }
    }
    return out;
}

std::size_t skew_rank(const RationalMatrix& b, const std::vector<Vector>& basis) {
    const std::size_t p = basis.size();
    if (p == 0) return 0;
    RationalMatrix g(p, p, Rational(0));
    for (std::size_t a = 0; a < p; ++a) {
        const Vector ba = multiply(transpose(b), basis[a]);
        for (std::size_t c = 0; c < p; ++c) {
            Rational s(0);
            for (std::size_t k = 0; k < ba.size(); ++k) s += ba[k] * basis[c][k];
            g(a, c) = s;
        }
    }
    return rank_of(g);
}

} // namespace

PointFrame::PointFrame(PfaffianSystem system, Point point) : system_(std::move(system)), point_(std::move(point)) {
    system_.require_independent_at(point_);
    const RationalMatrix c = system_.coefficient_matrix_at(point_);
    basis_ = nullspace(c);
    const auto elim = eliminate(c);
    std::vector<bool> pivot(system_.nvars(), false);
    for (auto col : elim.pivot_columns) pivot[col] = true;
    for (std::size_t j = 0; j < system_.nvars(); ++j) {
        if (!pivot[j]) free_columns_.push_back(j);
    }
    const std::size_t m = basis_.size();
    for (const auto& d : system_.differentials()) {
        const DifferentialForm dp = evaluate_at(d, point_);
        RationalMatrix b(m, m, Rational(0));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t e = a + 1; e < m; ++e) {
                Rational s(0);
                for (const auto& [idx, coef] : dp.terms()) {
                    const Rational& c0 = coef.constant_value();
                    s += c0 * (basis_[a][idx[0]] * basis_[e][idx[1]] - basis_[a][idx[1]] * basis_[e][idx[0]]);
                }
                b(a, e) = s;
                b(e, a) = -s;
            }
        }
        skew_.push_back(std::move(b));
    }
}

Vector PointFrame::coordinates(const Vector& v) const {
    if (v.size() != system_.nvars()) throw DimensionError("vector length does not match chart");
    Vector c;
    c.reserve(free_columns_.size());
    for (auto f : free_columns_) c.push_back(v[f]);
    if (ambient(c) != v) throw DomainError("vector " + to_string(v) + " is not in the annihilator at the point");
    return c;
}

Vector PointFrame::ambient(const Vector& c) const {
    if (c.size() != basis_.size()) throw DimensionError("frame coordinates have the wrong length");
    return combine(basis_, c, system_.nvars());
}

bool PointFrame::contains(const Vector& v) const {
    try {
        coordinates(v);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

Rational PointFrame::pairing(std::size_t form, const Vector& a, const Vector& b) const {
    const auto& m = skew_.at(form);
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_zero() && !m(i, j).is_zero()) s += a[i] * m(i, j) * b[j];
        }
    }
    return s;
}

bool PointFrame::involutive_pair(const Vector& a, const Vector& b) const {
    for (std::size_t i = 0; i < skew_.size(); ++i) {
        if (!pairing(i, a, b).is_zero()) return false;
    }
    return true;
}

bool PointFrame::all_forms_vanish() const {
    for (const auto& b : skew_) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(i, j).is_zero()) return false;
            }
        }
    }
    return true;
}

std::vector<Vector> PointFrame::polar_coordinates(const std::vector<Vector>& element) const {
    const std::size_t m = dimension();
    std::vector<std::vector<Rational>> rows;
    for (const auto& e : element) {
        for (const auto& b : skew_) {
            std::vector<Rational> row(m, Rational(0));
            for (std::size_t j = 0; j < m; ++j) {
                for (std::size_t i = 0; i < m; ++i) {
                    if (!e[i].is_zero()) row[j] += e[i] * b(i, j);
                }
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return identity_basis(m);
    return nullspace(RationalMatrix::from_rows(std::move(rows), m));
}

bool is_in_involution(const PointFrame& frame, const Vector& v, const Vector& w) {
    return frame.involutive_pair(frame.coordinates(v), frame.coordinates(w));
}

namespace {

void require_integral(const PointFrame& frame, const std::vector<Vector>& coords) {
    for (std::size_t a = 0; a < coords.size(); ++a) {
        for (std::size_t b = a + 1; b < coords.size(); ++b) {
            for (std::size_t i = 0; i < frame.skew_forms().size(); ++i) {
                if (!frame.pairing(i, coords[a], coords[b]).is_zero()) {
                    throw NotIntegralError("vectors " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                               " are not in involution: d(omega^" + std::to_string(i + 1) +
                                               ") does not vanish on them",
                                           a, b, i);
                }
            }
        }
    }
}

std::vector<Vector> to_coordinates(const PointFrame& frame, const std::vector<Vector>& ambient) {
    std::vector<Vector> out;
    out.reserve(ambient.size());
    for (const auto& v : ambient) out.push_back(frame.coordinates(v));
    return out;
}

std::vector<Vector> to_ambient(const PointFrame& frame, const std::vector<Vector>& coords) {
    std::vector<Vector> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(frame.ambient(c));
    return out;
}

} // namespace

std::vector<Vector> polar_space(const PointFrame& frame, const std::vector<Vector>& element) {
    const auto coords = to_coordinates(frame, element);
    require_integral(frame, coords);
    return to_ambient(frame, frame.polar_coordinates(coords));
}

IntegralChain empty_chain(const PointFrame& frame) {
    IntegralChain chain;
    chain.annihilator_dim = frame.dimension();
    return chain;
}

CandidateStream::CandidateStream(std::size_t dim) : dim_(dim), digits_(dim, 0) {}

std::optional<Vector> CandidateStream::next() {
    if (unit_ < dim_) return unit_vector(dim_, unit_++);
    if (done_ || dim_ == 0) return std::nullopt;
    while (true) {
        // Odometer over symbol indices; the last coordinate runs fastest.
        std::size_t k = dim_;
        while (k > 0) {
            --k;
            if (++digits_[k] < symbols().size()) break;
            digits_[k] = 0;
            if (k == 0) {
                done_ = true;
                return std::nullopt;
            }
        }
        std::size_t lead = 0;
        while (lead < dim_ && digits_[lead] == 0) ++lead;
        if (lead == dim_ || digits_[lead] != 1) continue;
        std::size_t support = 0;
        for (auto d : digits_) support += d != 0;
        if (support == 1) continue; // unit vectors were already emitted
        Vector v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = symbols()[digits_[i]];
        return v;
    }
}

ChainStep extend_chain(const PointFrame& frame, const IntegralChain& chain, const std::optional<Vector>& v) {
    const std::size_t m = frame.dimension();
    const auto polar = frame.polar_coordinates(chain.coordinates);
    Vector pick;
    if (v) {
        pick = frame.coordinates(*v);
        if (std::all_of(pick.begin(), pick.end(), [](const Rational& x) { return x.is_zero(); })) {
            throw DomainError("cannot extend a chain by the zero vector");
        }
        if (!in_span(polar, pick)) {
            throw DomainError("vector " + to_string(*v) + " is not in involution with the current chain element");
        }
        if (in_span(chain.coordinates, pick)) {
            throw DomainError("vector " + to_string(*v) + " already lies in the current chain element");
        }
    } else {
        if (polar.size() == chain.dimension()) return {};
        bool found = false;
        CandidateStream stream(m);
        while (auto c = stream.next()) {
            if (in_span(polar, *c) && !in_span(chain.coordinates, *c)) {
                pick = std::move(*c);
                found = true;
                break;
            }
        }
        if (!found) {
            // The symbol lattice misses the polar space; fall back to its basis.
            for (const auto& p : polar) {
                if (!in_span(chain.coordinates, p)) {
                    pick = p;
                    found = true;
                    break;
                }
            }
        }
        if (!found) return {};
    }
    IntegralChain next = chain;
    next.coordinates.push_back(pick);
    next.vectors.push_back(frame.ambient(pick));
    next.polar_dims.push_back(frame.polar_coordinates(next.coordinates).size());
    return {std::move(next)};
}

IntegralChain make_chain(const PointFrame& frame, const std::vector<Vector>& vectors) {
    IntegralChain chain = empty_chain(frame);
    for (const auto& v : vectors) {
        auto step = extend_chain(frame, chain, v);
        chain = std::move(*step.chain);
    }
    return chain;
}

IntegralChain complete_chain(const PointFrame& frame, IntegralChain chain) {
    while (true) {
        auto step = extend_chain(frame, chain);
        if (step.exhausted()) return chain;
        chain = std::move(*step.chain);
    }
}

void validate_chain(const PointFrame& frame, const IntegralChain& chain) {
    if (chain.vectors.size() != chain.coordinates.size() || chain.vectors.size() != chain.polar_dims.size()) {
        throw InternalError("chain fields have inconsistent lengths");
    }
    const auto coords = to_coordinates(frame, chain.vectors);
    if (coords != chain.coordinates) throw InternalError("chain coordinates disagree with its vectors");
    if (span_rank(coords, frame.dimension()) != coords.size()) throw InternalError("chain vectors are dependent");
    require_integral(frame, coords);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        const std::vector<Vector> prefix(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(j));
        if (!in_span(frame.polar_coordinates(prefix), coords[j])) {
            throw InternalError("chain vector " + std::to_string(j + 1) + " is outside the previous polar space");
        }
        const std::vector<Vector> upto(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(j + 1));
        if (frame.polar_coordinates(upto).size() != chain.polar_dims[j]) {
            throw InternalError("recorded polar dimension s_" + std::to_string(j + 1) + " is wrong");
        }
    }
}

bool differences_non_increasing(const IntegralChain& chain) {
    for (std::size_t j = 2; j < chain.polar_dims.size(); ++j) {
        const auto s = [&](std::size_t k) { return static_cast<long>(chain.polar_dims[k - 1]); };
        if (s(j - 1) - s(j) < s(j) - s(j + 1)) return false;
    }
    return true;
}

namespace {

struct Search {
    const PointFrame& frame;
    const SearchOptions& options;
    std::size_t best = 0;
    std::vector<Vector> witness; // frame coordinates
    std::size_t ceiling = 0;
    std::uint64_t nodes = 0;

    void visit(const std::vector<Vector>& element) {
        if (++nodes > options.node_budget) {
            throw SearchLimitError("integral-element search exceeded its node budget of " +
                                   std::to_string(options.node_budget));
        }
        if (element.size() > best) {
            best = element.size();
            witness = element;
        }
        if (best >= ceiling) return;
        const auto polar = frame.polar_coordinates(element);
        // Every integral element containing `element` lies in its polar space and is
        // isotropic for each form restricted there.
        std::size_t bound = polar.size();
        bool isotropic = true;
        for (const auto& b : frame.skew_forms()) {
            const std::size_t rk = skew_rank(b, polar);
            isotropic = isotropic && rk == 0;
            bound = std::min(bound, polar.size() - rk / 2);
        }
        if (isotropic) {
            if (polar.size() > best) {
                best = polar.size();
                witness = polar;
            }
            return;
        }
        if (bound <= best) return;
        // Complement of the element inside the polar space.
        std::vector<Vector> complement;
        std::vector<Vector> span = element;
        for (const auto& p : polar) {
            if (!in_span(span, p)) {
                complement.push_back(p);
                span.push_back(p);
            }
        }
        CandidateStream stream(complement.size());
        while (auto w = stream.next()) {
            Vector c = combine(complement, *w, frame.dimension());
            std::vector<Vector> next = element;
            next.push_back(std::move(c));
            visit(next);
            if (best >= ceiling || best >= bound) return;
        }
    }
};

} // namespace

MaxIntegralResult max_integral_dimension(const PointFrame& frame, const SearchOptions& options) {
    const std::size_t m = frame.dimension();
    if (m > options.max_dimension) {
        throw SearchLimitError("annihilator of dimension " + std::to_string(m) + " exceeds the search limit of " +
                               std::to_string(options.max_dimension));
    }
    const auto all = identity_basis(m);
    std::size_t upper = m;
    // Each form, and a few fixed combinations, bound any common isotropic subspace.
    std::vector<RationalMatrix> probes = frame.skew_forms();
    if (probes.size() > 1) {
        RationalMatrix sum(m, m, Rational(0));
        RationalMatrix weighted(m, m, Rational(0));
        for (std::size_t i = 0; i < probes.size(); ++i) {
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t b = 0; b < m; ++b) {
                    sum(a, b) += frame.skew_forms()[i](a, b);
                    weighted(a, b) += Rational(static_cast<long>(i + 1)) * frame.skew_forms()[i](a, b);
                }
            }
        }
        probes.push_back(std::move(sum));
        probes.push_back(std::move(weighted));
    }
    for (const auto& b : probes) upper = std::min(upper, m - skew_rank(b, all) / 2);

    Search search{frame, options, 0, {}, 0, 0};
    search.ceiling = upper;
    const IntegralChain greedy = complete_chain(frame, empty_chain(frame));
    search.best = greedy.dimension();
    search.witness = greedy.coordinates;
    if (search.best < upper) search.visit({});

    MaxIntegralResult out;
    out.dimension = search.best;
    out.witness = to_ambient(frame, search.witness);
    out.upper_bound = upper;
    out.certified = out.dimension == upper;
    out.nodes = search.nodes;
    return out;
}

bool verify_integral_element(const PfaffianSystem& system, const Point& point, const std::vector<Vector>& basis) {
    if (span_rank(basis, system.nvars()) != basis.size()) return false;
    for (const auto& g : system.generators()) {
        for (const auto& v : basis) {
            const Vector one[1] = {v};
            if (!evaluate_on(g, point, one).is_zero()) return false;
        }
    }
    for (const auto& d : system.differentials()) {
        for (std::size_t a = 0; a < basis.size(); ++a) {
            for (std::size_t b = a + 1; b < basis.size(); ++b) {
                const Vector pair[2] = {basis[a], basis[b]};
                if (!evaluate_on(d, point, pair).is_zero()) return false;
            }
        }
    }
    return true;
}

std::vector<Vector> characteristic_element_of(const PointFrame& frame, const std::vector<Vector>& element) {
    const auto coords = row_space_basis(to_coordinates(frame, element), frame.dimension());
    const std::size_t k = coords.size();
    if (k == 0) return {};
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < frame.skew_forms().size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            std::vector<Rational> row(k, Rational(0));
            for (std::size_t b = 0; b < k; ++b) row[b] = frame.pairing(i, coords[b], coords[a]);
            rows.push_back(std::move(row));
        }
    }
    const auto kernel = rows.empty() ? identity_basis(k) : nullspace(RationalMatrix::from_rows(std::move(rows), k));
    std::vector<Vector> out;
    for (const auto& c : kernel) out.push_back(frame.ambient(combine(coords, c, frame.dimension())));
    return out;
}

bool are_conjugate(const PointFrame& frame, const std::vector<Vector>& e, const std::vector<Vector>& f) {
    const auto ce = characteristic_element_of(frame, e);
    const auto cf = characteristic_element_of(frame, f);
    for (const auto& v : ce) {
        for (const auto& w : cf) {
            if (!is_in_involution(frame, v, w)) return false;
        }
    }
    return true;
}

CharacterReport character_report(const PfaffianSystem& system, const Point& point,
                                 const std::optional<std::vector<Vector>>& seeds, const SearchOptions& options) {
    const PointFrame frame(system, point);
    CharacterReport report;
    report.n = system.nvars();
    report.r = system.rank();
    IntegralChain chain = empty_chain(frame);
    if (seeds) {
        report.seeded = true;
        report.seed_vectors = *seeds;
        chain = make_chain(frame, *seeds);
    }
    chain = complete_chain(frame, std::move(chain));
    validate_chain(frame, chain);
    report.chain = chain;
    report.rho_chain = chain.dimension();
    report.character_chain = report.n - report.r - report.rho_chain;
    report.first_polar_codimension = chain.dimension() ? chain.s(0) - chain.s(1) : 0;
    report.monotone = differences_non_increasing(chain);

    report.maximal = max_integral_dimension(frame, options);
    if (chain.dimension() > report.maximal.dimension) {
        report.maximal.dimension = chain.dimension();
        report.maximal.witness = chain.vectors;
        report.maximal.certified = report.maximal.dimension == report.maximal.upper_bound;
    }
    if (!verify_integral_element(system, point, report.maximal.witness)) {
        throw InternalError("maximal integral element witness failed the independent re-check");
    }
    report.rho_max = report.maximal.dimension;
    report.character_min = report.n - report.r - report.rho_max;
    return report;
}

std::optional<bool> singular_char2_predicate(const CharacterReport& report) {
    if (report.character_chain != 2 || report.rho_chain == 0) return std::nullopt;
    return report.chain.s(report.rho_chain - 1) <= 1;
}

bool systatic_indicator(const CharacterReport& report) { return report.n - report.r == 2 * report.rho_chain; }

} // namespace pfaff
