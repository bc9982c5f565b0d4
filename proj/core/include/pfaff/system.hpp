#pragma once

#include "pfaff/form.hpp"
#include "pfaff/linalg.hpp"

#include <optional>
#include <vector>

namespace pfaff {

/// Ordered family of independent 1-forms on an n-dimensional chart.
class PfaffianSystem {
public:
    /// The zero system on a chart.
    explicit PfaffianSystem(std::size_t nvars);
    /// Throws DimensionError for mixed charts or non-1-forms and DomainError
    /// when the generators are generically dependent.
    PfaffianSystem(std::size_t nvars, std::vector<DifferentialForm> generators);

    std::size_t nvars() const { return nvars_; }
    std::size_t rank() const { return generators_.size(); }
    const std::vector<DifferentialForm>& generators() const { return generators_; }

    /// r x n polynomial matrix of generator coefficients.
    const PolynomialMatrix& coefficient_matrix() const { return coefficients_; }
    RationalMatrix coefficient_matrix_at(std::span<const Rational> point) const;
    /// Pivot polynomials of the generic elimination; the rank can only drop
    /// where one of them vanishes.
    const std::vector<Polynomial>& pivot_polynomials() const { return pivots_; }
    /// omega^1 ^ ... ^ omega^r.
    const DifferentialForm& top_wedge() const { return top_; }
    /// Exterior derivatives of the generators, in order.
    const std::vector<DifferentialForm>& differentials() const { return differentials_; }

    /// Throws DegeneratePointError naming the vanishing pivot when the
    /// generators are dependent at the point.
    void require_independent_at(std::span<const Rational> point) const;
    bool independent_at(std::span<const Rational> point) const;

    friend bool operator==(const PfaffianSystem& a, const PfaffianSystem& b) {
        return a.nvars_ == b.nvars_ && a.generators_ == b.generators_;
    }

private:
    std::size_t nvars_;
    std::vector<DifferentialForm> generators_;
    PolynomialMatrix coefficients_;
    std::vector<Polynomial> pivots_;
    DifferentialForm top_;
    std::vector<DifferentialForm> differentials_;
};

/// Descending chain P = P0 > P1 > ... > P_mu with P_mu = P_{mu+1}.
struct DerivedFlag {
    std::vector<PfaffianSystem> systems;
    std::vector<std::size_t> ranks;
    bool terminal_integrable = false;
};

/// Characteristic system CH of P at a point.
struct CharacteristicData {
    Point base_point;
    std::size_t covector_rank = 0;
    std::vector<Vector> covector_basis;
    std::vector<Vector> characteristic_space;
};

enum class GenderConvention {
    modulo_system, ///< smallest h with omega^1 ^ ... ^ omega^r ^ Omega^{h+1} = 0
    absolute,      ///< smallest h with Omega^{h+1} = 0
};

struct FlagClassification {
    bool flag_system = false;
    /// Set when the system is already integrable (flag of length zero).
    bool trivial = false;
};

/// Randomised local sections sum c_i omega^i with c_i affine in the chart.
struct SectionSampling {
    unsigned samples = 16;
    std::uint64_t seed = 1;
};

/// Omega = 0 mod P, tested as omega^1 ^ ... ^ omega^r ^ Omega = 0 identically
/// or at `at`.
bool congruent_zero_mod(const PfaffianSystem& system, const DifferentialForm& form,
                        const std::optional<Point>& at = std::nullopt);
bool is_frobenius_integrable(const PfaffianSystem& system);
/// Generic first derived system, computed over the rational-function field.
PfaffianSystem derived_system(const PfaffianSystem& system);
DerivedFlag derived_flag(const PfaffianSystem& system);
FlagClassification is_flag_system(const DerivedFlag& flag);
FlagClassification is_flag_system(const PfaffianSystem& system);
CharacteristicData characteristic_data_at(const PfaffianSystem& system, const Point& point);
unsigned gender_of_form_at(const PfaffianSystem& system, const DifferentialForm& form, const Point& point,
                           GenderConvention convention);
/// Maximum gender of d(omega^i) over the generators; with `sampling`, the
/// maximum also ranges over random sections.
unsigned system_gender_at(const PfaffianSystem& system, const Point& point, GenderConvention convention,
                          const std::optional<SectionSampling>& sampling = std::nullopt);
/// Darboux class of a 1-form at a point (2h+1 or 2h).
unsigned darboux_class_at(const DifferentialForm& form, const Point& point);

/// True when every generator of `sub` lies in the function span of `system`.
bool contained_in(const PfaffianSystem& sub, const PfaffianSystem& system);

} // namespace pfaff
