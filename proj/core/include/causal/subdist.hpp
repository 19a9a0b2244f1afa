#pragma once

#include <map>
#include <string>

#include "causal/event.hpp"
#include "causal/rational.hpp"

namespace causal {

/// Finitely supported subprobability distribution with exact weights.
/// Only strictly positive weights are stored and total mass never exceeds 1.
class SubDist {
 public:
  using Support = std::map<Event, Rational>;

  SubDist() = default;

  static SubDist zero() { return {}; }
  static SubDist point(Event e) { return point(std::move(e), Rational(1)); }
  static SubDist point(Event e, const Rational& weight);
  /// Validates weights and mass; throws BadWeight.
  static SubDist from(Support weights);

  const Support& support() const& noexcept { return weights_; }
  // By value on temporaries, so `for (auto& [e, w] : f(x).support())` is safe.
  Support support() && { return std::move(weights_); }
  bool empty() const noexcept { return weights_.empty(); }
  std::size_t size() const noexcept { return weights_.size(); }
  Rational at(const Event& e) const;
  Rational mass() const;

  // Accumulation used while building a distribution; mass is checked by the
  // caller (composition of subprobability kernels cannot exceed 1).
  void add(const Event& e, const Rational& weight);
  SubDist scaled(const Rational& factor) const;

  bool operator==(const SubDist&) const = default;

 private:
  Support weights_;
};

/// Largest |a(e) - b(e)| over the union of supports.
Rational max_discrepancy(const SubDist& a, const SubDist& b);

/// "{EVENT: RAT, ...}" sorted by event order.
std::string to_string(const SubDist& d);

}  // namespace causal
