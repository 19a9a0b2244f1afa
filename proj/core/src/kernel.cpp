#include "causal/kernel.hpp"

#include "causal/error.hpp"

namespace causal {

Kernel::Kernel(TypeExpr dom, TypeExpr cod, Transition transition)
    : dom_(std::move(dom)), cod_(std::move(cod)), transition_(std::move(transition)) {}

Kernel::Kernel(TypeExpr dom, TypeExpr cod, std::shared_ptr<const std::vector<SubDist>> rows)
    : dom_(std::move(dom)), cod_(std::move(cod)), rows_(std::move(rows)) {}

Kernel Kernel::from_rows(TypeExpr dom, TypeExpr cod, std::vector<SubDist> rows) {
  if (rows.size() != dom.event_count())
    throw Error(ErrorCode::BadMatrix, "expected " + std::to_string(dom.event_count()) + " rows, got " +
                                          std::to_string(rows.size()));
  for (const auto& row : rows) {
    if (row.mass() > 1) throw Error(ErrorCode::BadWeight, "row mass exceeds 1");
    for (const auto& [e, w] : row.support())
      if (!inhabits(e, cod))
        throw Error(ErrorCode::InvalidEvent, to_string(e) + " does not inhabit " + to_string(cod));
  }
  return Kernel(std::move(dom), std::move(cod), std::make_shared<const std::vector<SubDist>>(std::move(rows)));
}

Kernel Kernel::from_matrix(TypeExpr dom, TypeExpr cod, const Matrix& m) {
  // Reuses the literal checks for dimensions and substochasticity.
  Term::lit(dom, cod, m);
  std::vector<SubDist> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    SubDist d;
    for (std::size_t j = 0; j < r.size(); ++j) d.add(event_at(j, cod), r[j]);
    rows.push_back(std::move(d));
  }
  return Kernel(std::move(dom), std::move(cod), std::make_shared<const std::vector<SubDist>>(std::move(rows)));
}

SubDist Kernel::operator()(const Event& x) const {
  if (rows_) return (*rows_)[event_index(x, dom_)];
  return transition_(x);
}

Kernel Kernel::materialized() const {
  if (rows_) return *this;
  std::vector<SubDist> rows;
  for (const auto& x : all_events(dom_)) rows.push_back(transition_(x));
  return Kernel(dom_, cod_, std::make_shared<const std::vector<SubDist>>(std::move(rows)));
}

Matrix Kernel::matrix() const {
  std::size_t n_cols = cod_.event_count();
  Matrix m;
  for (const auto& x : all_events(dom_)) {
    std::vector<Rational> row(n_cols);
    for (const auto& [e, w] : (*this)(x).support()) row[event_index(e, cod_)] = w;
    m.push_back(std::move(row));
  }
  return m;
}

SubDist kernel_apply(const Kernel& k, const Event& x) {
  if (!inhabits(x, k.dom()))
    throw Error(ErrorCode::InvalidEvent, to_string(x) + " does not inhabit " + to_string(k.dom()));
  return k(x);
}

namespace {

Kernel finish(Kernel k) {
  if (k.dom().is_finite()) return k.materialized();
  return k;
}

}  // namespace

Kernel kernel_seq(const Kernel& k1, const Kernel& k2) {
  if (k1.cod() != k2.dom())
    throw Error(ErrorCode::TypeMismatch, "cannot compose kernel into " + to_string(k1.cod()) +
                                             " with kernel from " + to_string(k2.dom()));
  return finish(Kernel(k1.dom(), k2.cod(), [k1, k2](const Event& x) {
    SubDist out;
    for (const auto& [y, w] : k1(x).support())
      for (const auto& [z, v] : k2(y).support()) out.add(z, w * v);
    return out;
  }));
}

Kernel kernel_par(const Kernel& k1, const Kernel& k2) {
  std::size_t split = k1.dom().arity();
  return finish(Kernel(k1.dom() * k2.dom(), k1.cod() * k2.cod(), [k1, k2, split](const Event& x) {
    SubDist left = k1(x.slice(0, split));
    SubDist right = k2(x.drop_front(split));
    SubDist out;
    for (const auto& [y, w] : left.support())
      for (const auto& [v, u] : right.support()) out.add(y * v, w * u);
    return out;
  }));
}

Kernel identity_kernel(const TypeExpr& t) {
  return finish(Kernel(t, t, [](const Event& x) { return SubDist::point(x); }));
}

Kernel zero_kernel(const TypeExpr& dom, const TypeExpr& cod) {
  return finish(Kernel(dom, cod, [](const Event&) { return SubDist::zero(); }));
}

DataServices data_services(const TypeExpr& t) {
  std::size_t n = t.arity();
  return DataServices{
      finish(Kernel(t, t * t, [](const Event& x) { return SubDist::point(x * x); })),
      finish(Kernel(t, TypeExpr::unit(), [](const Event&) { return SubDist::point(Event::unit()); })),
      finish(Kernel(t * t, t * t,
                    [n](const Event& x) { return SubDist::point(x.drop_front(n) * x.slice(0, n)); })),
  };
}

std::string dump(const Kernel& k, const std::vector<Event>& probes) {
  std::string out;
  for (const auto& x : probes) out += to_string(x) + " -> " + to_string(kernel_apply(k, x)) + "\n";
  return out;
}

std::string dump(const Kernel& k) { return dump(k, all_events(k.dom())); }

}  // namespace causal
