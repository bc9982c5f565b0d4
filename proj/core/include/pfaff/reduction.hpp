#pragma once

#include "pfaff/system.hpp"

#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace pfaff {

/// Coordinates frozen to constants.
struct SliceSpec {
    std::map<std::size_t, Rational> assignments;
};

/// A system re-read on a sub-chart. `kept[i]` is the original index of
/// residual coordinate i.
struct ReducedSystem {
    PfaffianSystem system;
    std::vector<std::size_t> kept;
    std::vector<std::string> notices;
};

/// Substitutes the slice constants, deletes their differentials and reindexes
/// the residual chart. Generators that vanish or become dependent are dropped
/// with a notice.
ReducedSystem restrict_to_slice(const PfaffianSystem& system, const SliceSpec& slice);

/// Re-reads the generators on the chart of `kept` coordinates. Throws
/// ValidityError naming the generator and coordinate when a generator
/// involves a dropped coordinate.
ReducedSystem drop_coordinates(const PfaffianSystem& system, const std::vector<std::size_t>& kept);

/// Trivial extension of a system to a larger chart; `placement[i]` is the new
/// index of coordinate i.
PfaffianSystem extend_system(const PfaffianSystem& system, std::size_t new_nvars,
                             const std::vector<std::size_t>& placement);

/// Kernel direction for curve tracing: an annihilator-basis index at the
/// start point, or explicit rational components.
using DirectionSelector = std::variant<std::size_t, Vector>;

struct TracedCurve {
    std::vector<std::vector<double>> samples;
    /// residuals[k][i] = |omega^i(gamma'(t_k))| at sample k.
    std::vector<std::vector<double>> residuals;
    double step = 0.0;
    double max_residual = 0.0;
};

/// Fourth-order Runge-Kutta integration of a kernel vector field. The field
/// is re-solved exactly at every stage with the free-column parametrisation
/// fixed at the start point; residuals use exact form coefficients at the
/// rationalised sample points and a fourth-order finite-difference tangent.
TracedCurve trace_integral_curve(const PfaffianSystem& system, const Point& start, const DirectionSelector& direction,
                                 double step, std::size_t count);

/// One row per sample: coordinates, then per-generator residuals.
void write_csv(std::ostream& out, const TracedCurve& curve, const std::vector<std::string>& coordinate_names);

} // namespace pfaff
