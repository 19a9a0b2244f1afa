#include "causal/subdist.hpp"

#include "causal/error.hpp"

namespace causal {

SubDist SubDist::point(Event e, const Rational& weight) {
  SubDist d;
  d.add(e, weight);
  return d;
}

SubDist SubDist::from(Support weights) {
  SubDist d;
  Rational total = 0;
  for (auto& [e, w] : weights) {
    if (w < 0) throw Error(ErrorCode::BadWeight, "negative weight " + to_string(w) + " on " + to_string(e));
    w.canonicalize();
    total += w;
    if (w > 0) d.weights_.emplace(e, w);
  }
  if (total > 1) throw Error(ErrorCode::BadWeight, "total mass " + to_string(total) + " exceeds 1");
  return d;
}

Rational SubDist::at(const Event& e) const {
  auto it = weights_.find(e);
  return it == weights_.end() ? Rational(0) : it->second;
}

Rational SubDist::mass() const {
  Rational total = 0;
  for (const auto& [e, w] : weights_) total += w;
  return total;
}

void SubDist::add(const Event& e, const Rational& weight) {
  if (weight == 0) return;
  auto [it, inserted] = weights_.try_emplace(e, weight);
  if (inserted)
    it->second.canonicalize();
  else
    it->second += weight;
}

SubDist SubDist::scaled(const Rational& factor) const {
  SubDist d;
  if (factor == 0) return d;
  for (const auto& [e, w] : weights_) d.weights_.emplace(e, w * factor);
  return d;
}

Rational max_discrepancy(const SubDist& a, const SubDist& b) {
  Rational worst = 0;
  for (const auto& [e, w] : a.support()) {
    Rational diff = abs(w - b.at(e));
    if (diff > worst) worst = diff;
  }
  for (const auto& [e, w] : b.support()) {
    if (a.support().count(e)) continue;
    if (w > worst) worst = w;
  }
  return worst;
}

std::string to_string(const SubDist& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [e, w] : d.support()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(e) + ": " + to_string(w);
  }
  out += "}";
  return out;
}

}  // namespace causal
