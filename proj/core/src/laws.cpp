#include "causal/laws.hpp"

#include <stdexcept>

#include "causal/error.hpp"

namespace causal {

std::vector<Event> resolve_probes(const TypeExpr& dom, const Probes& probes) {
  if (probes) {
    for (const auto& x : *probes)
      if (!inhabits(x, dom))
        throw Error(ErrorCode::InvalidEvent, "probe " + to_string(x) + " does not inhabit " + to_string(dom));
    return *probes;
  }
  if (!dom.is_finite())
    throw Error(ErrorCode::NeedProbes, "domain " + to_string(dom) + " involves code; supply probes");
  return all_events(dom);
}

namespace {

FunctionVerdict row_test(const Kernel& k, const std::vector<Event>& probes) {
  FunctionVerdict v;
  for (const auto& x : probes) {
    SubDist row = k(x);
    if (row.size() > 1) v.single_valued = false;
    if (row.mass() != 1) v.total = false;
  }
  return v;
}

bool homomorphism_test(const Kernel& k, const std::vector<Event>& probes) {
  DataServices in = data_services(k.dom());
  DataServices out = data_services(k.cod());
  Kernel copy_after = kernel_seq(k, out.copy);
  Kernel copy_before = kernel_seq(in.copy, kernel_par(k, k));
  Kernel del_after = kernel_seq(k, out.del);
  for (const auto& x : probes) {
    if (copy_after(x) != copy_before(x)) return false;
    if (del_after(x) != in.del(x)) return false;
  }
  return true;
}

}  // namespace

FunctionVerdict is_function(const Kernel& k, const Probes& probes) {
  auto xs = resolve_probes(k.dom(), probes);
  FunctionVerdict v = row_test(k, xs);
  if (v.is_function() != homomorphism_test(k, xs))
    throw std::logic_error("function row test disagrees with comonoid homomorphism test");
  return v;
}

bool is_comonoid_homomorphism(const Kernel& k, const Probes& probes) {
  return homomorphism_test(k, resolve_probes(k.dom(), probes));
}

bool indistinguishable(const Kernel& k1, const Kernel& k2, const Probes& probes) {
  if (k1.dom() != k2.dom() || k1.cod() != k2.cod())
    throw Error(ErrorCode::TypeMismatch, "kernels have different signatures");
  for (const auto& x : resolve_probes(k1.dom(), probes))
    if (k1(x) != k2(x)) return false;
  return true;
}

}  // namespace causal
