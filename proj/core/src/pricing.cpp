#include "atomroute/pricing.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "atomroute/error.hpp"

namespace atomroute {
namespace {

constexpr std::array<PriceFamily, 5> kCatalog = {
    PriceFamily::zero, PriceFamily::identity, PriceFamily::sin,
    PriceFamily::log1p, PriceFamily::saturating};

// Rounding slack for the monotonicity comparison between adjacent samples.
constexpr double kMonotoneSlack = 1e-12;

void require_in_domain(const PriceSpec& spec, double x) {
  if (auto bad = check_price_params(spec)) {
    throw DomainError(describe(spec) + ": " + *bad);
  }
  if (std::isnan(x) || x < 0.0) {
    throw DomainError(describe(spec) + ": flow must be nonnegative");
  }
  if (x > domain_max(spec)) {
    std::ostringstream msg;
    msg << describe(spec) << ": flow " << x << " outside admissible domain [0, "
        << domain_max(spec) << "]";
    throw DomainError(msg.str());
  }
}

}  // namespace

std::string_view to_string(PriceFamily family) {
  switch (family) {
    case PriceFamily::zero: return "zero";
    case PriceFamily::identity: return "identity";
    case PriceFamily::sin: return "sin";
    case PriceFamily::log1p: return "log1p";
    case PriceFamily::saturating: return "saturating";
  }
  return "unknown";
}

std::optional<PriceFamily> parse_price_family(std::string_view name) {
  for (PriceFamily f : kCatalog) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::span<const PriceFamily> price_catalog() { return kCatalog; }

std::string describe(const PriceSpec& spec) {
  std::string out(to_string(spec.family));
  if (spec.family == PriceFamily::saturating) {
    std::ostringstream s;
    s << "(beta=" << spec.beta << ")";
    out += s.str();
  }
  return out;
}

std::optional<std::string> check_price_params(const PriceSpec& spec) {
  if (spec.family == PriceFamily::saturating &&
      !(std::isfinite(spec.beta) && spec.beta > 0.0)) {
    return "saturating price requires beta > 0";
  }
  return std::nullopt;
}

double domain_max(const PriceSpec& spec) {
  if (spec.family == PriceFamily::sin) return std::numbers::pi / 2.0;
  return std::numeric_limits<double>::infinity();
}

double eval_F(const PriceSpec& spec, double x) {
  require_in_domain(spec, x);
  switch (spec.family) {
    case PriceFamily::zero: return 0.0;
    case PriceFamily::identity: return x;
    case PriceFamily::sin: return std::sin(x);
    case PriceFamily::log1p: return std::log1p(x);
    case PriceFamily::saturating: return x / (1.0 + spec.beta * x);
  }
  return 0.0;
}

double eval_u(const PriceSpec& spec, double x) {
  require_in_domain(spec, x);
  if (spec.family == PriceFamily::zero) return 0.0;
  if (x == 0.0) return 1.0;
  switch (spec.family) {
    case PriceFamily::identity: return 1.0;
    case PriceFamily::saturating: return 1.0 / (1.0 + spec.beta * x);
    default: return eval_F(spec, x) / x;
  }
}

PropertyReport check_price_properties(const PriceCurve& total_price,
                                      const PriceCurve& unit_price,
                                      bool expect_unit_limit,
                                      std::span<const double> grid) {
  if (grid.empty()) throw DomainError("price property check needs a nonempty grid");
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k - 1] <= grid[k])) {
      throw DomainError("price property grid must be sorted ascending");
    }
  }

  PropertyReport report;
  report.samples = grid.size();
  double prev_u = std::numeric_limits<double>::infinity();
  for (double x : grid) {
    const double F = total_price(x);
    const double u = unit_price(x);
    if (F > x && report.bounded_by_identity) {
      report.bounded_by_identity = false;
      report.first_unbounded_x = x;
    }
    if (u > prev_u + kMonotoneSlack * std::abs(prev_u) &&
        report.unit_price_nonincreasing) {
      report.unit_price_nonincreasing = false;
      report.first_increase_x = x;
    }
    prev_u = u;
  }
  if (expect_unit_limit) {
    report.unit_price_limit =
        std::abs(unit_price(grid.front()) - 1.0) <= kUnitLimitTolerance;
  }
  return report;
}

PropertyReport check_price_properties(const PriceSpec& spec,
                                      std::span<const double> grid) {
  return check_price_properties(
      [&](double x) { return eval_F(spec, x); },
      [&](double x) { return eval_u(spec, x); },
      spec.family != PriceFamily::zero, grid);
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n < 2) throw DomainError("grid needs at least two samples");
  std::vector<double> grid(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) grid[k] = lo + step * static_cast<double>(k);
  grid.back() = hi;
  return grid;
}

}  // namespace atomroute
