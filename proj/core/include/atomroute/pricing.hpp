#pragma once

// ISP price functions. F(x) is the total charge for buying x units of flow on
// an edge; u(x) = F(x)/x is the resulting per-unit price. Every family in the
// catalog is a bulk discount: F(x) <= x, u is nonincreasing and u(0+) = 1.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atomroute {

enum class PriceFamily { zero, identity, sin, log1p, saturating };

std::string_view to_string(PriceFamily family);
std::optional<PriceFamily> parse_price_family(std::string_view name);

// All families in declaration order.
std::span<const PriceFamily> price_catalog();

struct PriceSpec {
  PriceFamily family = PriceFamily::zero;
  // Discount depth of the saturating family, F(x) = x / (1 + beta x).
  // Ignored by the other families.
  double beta = 0.0;

  static PriceSpec zero() { return {PriceFamily::zero, 0.0}; }
  static PriceSpec identity() { return {PriceFamily::identity, 0.0}; }
  static PriceSpec sine() { return {PriceFamily::sin, 0.0}; }
  static PriceSpec log1p() { return {PriceFamily::log1p, 0.0}; }
  static PriceSpec saturating(double beta) { return {PriceFamily::saturating, beta}; }

  friend bool operator==(const PriceSpec&, const PriceSpec&) = default;
};

// Human-readable label, e.g. "saturating(beta=1)".
std::string describe(const PriceSpec& spec);

// Empty when the parameters are admissible, else the reason.
std::optional<std::string> check_price_params(const PriceSpec& spec);

// Upper end of the admissible domain [0, x_max]; infinity when unbounded.
// sin is only monotone up to pi/2.
double domain_max(const PriceSpec& spec);

// Throws DomainError when x is negative, NaN or beyond domain_max, or when the
// parameters are inadmissible.
double eval_F(const PriceSpec& spec, double x);

// F(x)/x, with u(0) defined by its limit: 1 for every priced family, 0 for
// `zero`.
double eval_u(const PriceSpec& spec, double x);

struct PropertyReport {
  std::size_t samples = 0;
  bool bounded_by_identity = true;  // F(x) <= x at every sample
  bool unit_price_nonincreasing = true;
  bool unit_price_limit = true;  // |u(smallest sample) - 1| <= 1e-6
  // First offending sample for each failed property.
  std::optional<double> first_unbounded_x;
  std::optional<double> first_increase_x;

  bool all_hold() const {
    return bounded_by_identity && unit_price_nonincreasing && unit_price_limit;
  }
};

inline constexpr double kUnitLimitTolerance = 1e-6;

// Grid must be nonempty and ascending. Throws DomainError otherwise.
PropertyReport check_price_properties(const PriceSpec& spec,
                                      std::span<const double> grid);

// Same checks against arbitrary callables. Lets tests feed counterexamples
// that are not in the catalog.
using PriceCurve = std::function<double(double)>;
PropertyReport check_price_properties(const PriceCurve& total_price,
                                      const PriceCurve& unit_price,
                                      bool expect_unit_limit,
                                      std::span<const double> grid);

// n evenly spaced points from `lo` to `hi` inclusive (n >= 2).
std::vector<double> linear_grid(double lo, double hi, std::size_t n);

}  // namespace atomroute
