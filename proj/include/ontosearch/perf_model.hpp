#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ontosearch/error.hpp"

/// Analytical search-cost model for a domain hierarchy.
///
/// The Web is modelled as a tree in which every domain splits into r
/// subdomains on average, holding n pages in total. A query that follows one
/// domain path costs on the order of the tree height h; one that must probe
/// every subdomain on each level costs r * (h - 1); a flat keyword index costs
/// n. All functions take real-valued n and r and return real-valued counts,
/// with no rounding of h.
namespace ontosearch::perf {

/// Worst-case search count is r * (h - 1): about 88.04 for n = 1000, r = 50.
/// The "about 138 searches" usually quoted for that configuration is r * h;
/// see search_bound_per_level().
inline constexpr std::string_view kWorstCaseNote =
    "worst_case uses r*(h-1), which gives 88.04 for n=1000, r=50; the figure of about 138 "
    "searches quoted for that configuration equals r*h (search_bound_per_level)";

template <std::floating_point Scalar>
void check_pages(Scalar n) {
  if (!(n >= Scalar(1)) || !std::isfinite(n)) {
    throw Error(ErrorCode::DomainError, "page count n must be finite and >= 1");
  }
}

template <std::floating_point Scalar>
void check_branching(Scalar r) {
  if (!(r >= Scalar(2)) || !std::isfinite(r)) {
    throw Error(ErrorCode::DomainError, "branching factor r must be finite and >= 2");
  }
}

/// h = log_r(n (r - 1) + 1).
template <std::floating_point Scalar>
Scalar tree_height(Scalar n, Scalar r) {
  check_pages(n);
  check_branching(r);
  return std::log(n * (r - Scalar(1)) + Scalar(1)) / std::log(r);
}

template <std::floating_point Scalar>
Scalar best_case(Scalar n, Scalar r) {
  return tree_height(n, r);
}

template <std::floating_point Scalar>
Scalar worst_case(Scalar n, Scalar r) {
  return r * (tree_height(n, r) - Scalar(1));
}

/// r * h: r probes on each of the h levels.
template <std::floating_point Scalar>
Scalar search_bound_per_level(Scalar n, Scalar r) {
  return r * tree_height(n, r);
}

template <std::floating_point Scalar>
Scalar keyword_cost(Scalar n) {
  check_pages(n);
  return n;
}

/// Page count of a perfect r-ary tree of the given height, (r^h - 1) / (r - 1).
/// tree_height() inverts it exactly.
template <std::floating_point Scalar>
Scalar pages_for_height(Scalar h, Scalar r) {
  check_branching(r);
  return (std::pow(r, h) - Scalar(1)) / (r - Scalar(1));
}

template <std::floating_point Scalar>
struct CostParams {
  Scalar n;
  Scalar r;

  Scalar height() const { return tree_height(n, r); }
};

template <std::floating_point Scalar>
struct CostRow {
  Scalar n;
  Scalar best_case;
  Scalar worst_case;
  Scalar keyword;
};

/// `steps` rows at geometrically spaced n from n_min to n_max inclusive.
template <std::floating_point Scalar>
std::vector<CostRow<Scalar>> emit_curves(Scalar n_min, Scalar n_max, std::size_t steps, Scalar r) {
  check_pages(n_min);
  check_pages(n_max);
  check_branching(r);
  if (!(n_min < n_max)) throw Error(ErrorCode::DomainError, "n_min must be below n_max");
  if (steps < 2) throw Error(ErrorCode::DomainError, "steps must be >= 2");

  // Spacing is computed in extended precision so decades land on round values.
  using Wide = long double;
  const Wide log_min = std::log(Wide(n_min));
  const Wide log_span = std::log(Wide(n_max)) - log_min;
  std::vector<CostRow<Scalar>> rows;
  rows.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    Scalar n;
    if (i == 0) {
      n = n_min;
    } else if (i + 1 == steps) {
      n = n_max;
    } else {
      n = static_cast<Scalar>(std::exp(log_min + log_span * Wide(i) / Wide(steps - 1)));
    }
    rows.push_back({n, best_case(n, r), worst_case(n, r), keyword_cost(n)});
  }
  return rows;
}

/// Shortest plain (non-exponent) decimal text that reads back to the same double.
std::string format_real(double value);

/// CSV with header `n,best_case,worst_case,keyword`.
void write_csv(std::ostream& os, const std::vector<CostRow<double>>& rows);

}  // namespace ontosearch::perf
