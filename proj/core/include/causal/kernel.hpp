#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "causal/subdist.hpp"
#include "causal/term.hpp"
#include "causal/type.hpp"

namespace causal {

/// Denotation of a causal process: input events to subdistributions over
/// output events. Kernels on finite domains are materialized as one row per
/// domain event; kernels whose domain mentions the code type stay lazy.
class Kernel {
 public:
  using Transition = std::function<SubDist(const Event&)>;

  /// Lazy kernel. The transition must be pure.
  Kernel(TypeExpr dom, TypeExpr cod, Transition transition);
  /// Materialized kernel; rows follow the event order of dom.
  static Kernel from_rows(TypeExpr dom, TypeExpr cod, std::vector<SubDist> rows);
  static Kernel from_matrix(TypeExpr dom, TypeExpr cod, const Matrix& m);

  const TypeExpr& dom() const noexcept { return dom_; }
  const TypeExpr& cod() const noexcept { return cod_; }
  bool is_materialized() const noexcept { return rows_ != nullptr; }

  /// Unchecked lookup; x must inhabit dom.
  SubDist operator()(const Event& x) const;

  /// Evaluates every row. Requires a finite domain.
  Kernel materialized() const;
  /// Dense |dom| x |cod| matrix. Requires finite dom and cod.
  Matrix matrix() const;

 private:
  Kernel(TypeExpr dom, TypeExpr cod, std::shared_ptr<const std::vector<SubDist>> rows);

  TypeExpr dom_;
  TypeExpr cod_;
  Transition transition_;
  std::shared_ptr<const std::vector<SubDist>> rows_;
};

/// Throws InvalidEvent if x does not inhabit k.dom().
SubDist kernel_apply(const Kernel& k, const Event& x);

/// (k2 ∘ k1)(x) = Σ_y k1(x)(y) · k2(y). Throws TypeMismatch unless k1.cod == k2.dom.
Kernel kernel_seq(const Kernel& k1, const Kernel& k2);

/// (k1 ⊗ k2)(x, u)(y, v) = k1(x)(y) · k2(u)(v).
Kernel kernel_par(const Kernel& k1, const Kernel& k2);

Kernel identity_kernel(const TypeExpr& t);
Kernel zero_kernel(const TypeExpr& dom, const TypeExpr& cod);

struct DataServices {
  Kernel copy;    // t -> t ⊗ t
  Kernel del;     // t -> unit
  Kernel swap;    // t ⊗ t -> t ⊗ t
};

DataServices data_services(const TypeExpr& t);

/// One line per probe: "EVENT -> {EVENT: RAT, ...}".
std::string dump(const Kernel& k, const std::vector<Event>& probes);
/// Dump over every domain event; requires a finite domain.
std::string dump(const Kernel& k);

}  // namespace causal
