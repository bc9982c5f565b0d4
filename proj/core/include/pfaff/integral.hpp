#pragma once

#include "pfaff/system.hpp"

#include <optional>
#include <vector>

namespace pfaff {

/// Pointwise data of a Pfaffian system: the annihilator Sigma_p and the
/// restrictions B_i of d(omega^i)(p) to it.
///
/// Vectors passed to the operations below are ambient tangent vectors of
/// length n; they are checked to lie in Sigma_p and converted to frame
/// coordinates (components along the annihilator basis).
class PointFrame {
public:
    /// Throws DegeneratePointError when the generators are dependent at `point`.
    PointFrame(PfaffianSystem system, Point point);

    const PfaffianSystem& system() const { return system_; }
    const Point& base_point() const { return point_; }
    std::size_t ambient_dimension() const { return system_.nvars(); }
    /// dim Sigma_p.
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Vector>& annihilator_basis() const { return basis_; }
    const std::vector<RationalMatrix>& skew_forms() const { return skew_; }

    /// Frame coordinates of an ambient vector; throws DomainError outside Sigma_p.
    Vector coordinates(const Vector& ambient) const;
    Vector ambient(const Vector& coordinates) const;
    bool contains(const Vector& ambient) const;

    /// B_i(a, b) in frame coordinates.
    Rational pairing(std::size_t form, const Vector& a, const Vector& b) const;
    /// True when every B_i(a, b) vanishes (frame coordinates).
    bool involutive_pair(const Vector& a, const Vector& b) const;
    /// All forms vanish identically on Sigma_p.
    bool all_forms_vanish() const;

    /// Polar space in frame coordinates of a list of frame-coordinate vectors.
    std::vector<Vector> polar_coordinates(const std::vector<Vector>& element) const;

private:
    PfaffianSystem system_;
    Point point_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> free_columns_;
    std::vector<RationalMatrix> skew_;
};

/// Ascending chain E_1 < E_2 < ... of integral elements with the dimensions
/// s_j of the successive polar spaces.
struct IntegralChain {
    std::vector<Vector> vectors;        ///< ambient
    std::vector<Vector> coordinates;    ///< frame coordinates
    std::vector<std::size_t> polar_dims; ///< s_j = dim of the polar space of E_j, j = 1..k
    std::size_t annihilator_dim = 0;     ///< dim Sigma_p, the polar space of E_0

    std::size_t dimension() const { return vectors.size(); }
    /// s_j for j = 0..k with s_0 = dim Sigma_p.
    std::size_t s(std::size_t j) const { return j == 0 ? annihilator_dim : polar_dims.at(j - 1); }
};

/// Outcome of extending a chain.
struct ChainStep {
    std::optional<IntegralChain> chain; ///< empty when exhausted
    bool exhausted() const { return !chain.has_value(); }
};

struct MaxIntegralResult {
    std::size_t dimension = 0;
    std::vector<Vector> witness; ///< ambient basis
    std::size_t upper_bound = 0; ///< from ranks of the skew forms
    bool certified = false;      ///< dimension == upper_bound
    std::uint64_t nodes = 0;     ///< search nodes visited
};

struct SearchOptions {
    std::size_t max_dimension = 8;
    std::uint64_t node_budget = 2'000'000;
};

struct CharacterReport {
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<Vector> seed_vectors; ///< seeds actually used (ambient)
    bool seeded = false;
    IntegralChain chain;
    std::size_t rho_chain = 0;
    std::size_t character_chain = 0; ///< n - r - rho_chain
    MaxIntegralResult maximal;
    std::size_t rho_max = 0;
    std::size_t character_min = 0; ///< n - r - rho_max
    /// s_0 - s_1: number of conditions imposed by the first vector of the chain.
    std::size_t first_polar_codimension = 0;
    bool monotone = true; ///< s_1 - s_2 >= s_2 - s_3 >= ...
};

bool is_in_involution(const PointFrame& frame, const Vector& v, const Vector& w);
/// Basis (ambient) of the polar space of the integral element spanned by E.
/// Throws NotIntegralError when E is not integral.
std::vector<Vector> polar_space(const PointFrame& frame, const std::vector<Vector>& element);

IntegralChain empty_chain(const PointFrame& frame);
/// Builds a validated chain from ambient vectors, in order.
IntegralChain make_chain(const PointFrame& frame, const std::vector<Vector>& vectors);
/// Appends `v` (or the first admissible candidate of the default stream).
ChainStep extend_chain(const PointFrame& frame, const IntegralChain& chain,
                       const std::optional<Vector>& v = std::nullopt);
/// Extends greedily with the default stream until exhausted.
IntegralChain complete_chain(const PointFrame& frame, IntegralChain chain);
/// Exact isotropy re-check of every pair and admissibility of each step.
void validate_chain(const PointFrame& frame, const IntegralChain& chain);
bool differences_non_increasing(const IntegralChain& chain);

/// Deterministic candidate stream over frame coordinates of dimension m:
/// the unit vectors, then every vector whose first nonzero entry is 1 and
/// whose remaining entries are drawn from {0, 1, -1, 1/2, -1/2, 2, -2}, in
/// lexicographic order of that symbol list.
class CandidateStream {
public:
    explicit CandidateStream(std::size_t dim);
    std::optional<Vector> next();

private:
    std::size_t dim_;
    std::size_t unit_ = 0;
    std::vector<std::size_t> digits_;
    bool started_ = false;
    bool done_ = false;
};

/// Largest integral element at the frame's point, by backtracking search.
MaxIntegralResult max_integral_dimension(const PointFrame& frame, const SearchOptions& options = {});
/// Independent check that `basis` spans an integral element: every generator
/// and every d(omega^i) evaluated directly from the forms vanishes on it.
bool verify_integral_element(const PfaffianSystem& system, const Point& point, const std::vector<Vector>& basis);

/// {v in E : B_i(v, w) = 0 for all w in E and all i}, ambient basis.
std::vector<Vector> characteristic_element_of(const PointFrame& frame, const std::vector<Vector>& element);
bool are_conjugate(const PointFrame& frame, const std::vector<Vector>& e, const std::vector<Vector>& f);

CharacterReport character_report(const PfaffianSystem& system, const Point& point,
                                 const std::optional<std::vector<Vector>>& seeds = std::nullopt,
                                 const SearchOptions& options = {});

/// s_{rho-1} <= 1 for chain-relative character 2; nullopt when not applicable.
std::optional<bool> singular_char2_predicate(const CharacterReport& report);
/// n - r == 2 rho_chain.
bool systatic_indicator(const CharacterReport& report);

} // namespace pfaff
