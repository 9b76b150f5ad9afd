#ifndef ZONEST_CONFIG_HPP_
#define ZONEST_CONFIG_HPP_

namespace zonest {
namespace config {

/// Absolute feasibility tolerance used by the LP engine and every
/// membership / emptiness test built on top of it.
inline constexpr double lp_tolerance = 1e-8;

/// Optional outward inflation applied to both endpoints of every interval
/// arithmetic result. Defaults to 0: plain floating point, no directed
/// rounding. Set to a small positive value to widen all interval results.
inline double interval_inflation = 0.0;

/// Entries of a pseudoinverse residual smaller than this count as zero when
/// computing row supports.
inline constexpr double rowsupp_tolerance = 1e-9;

}  // namespace config
}  // namespace zonest

#endif  // ZONEST_CONFIG_HPP_
