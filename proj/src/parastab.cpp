#include "schubert/parastab.hpp"

#include "schubert/inversion.hpp"
#include "schubert/order.hpp"

namespace schubert {

LeviSupport levi_support(const WeylElement& w) { return {simple_inversions(w)}; }

SimpleSubset levi_support_via_covers(const WeylElement& w) {
  SimpleSubset out = SimpleSubset::none(w.rank());
  for (const auto& v : covers_weak_right(w)) out = out | simple_inversions(v);
  if (w.length() == 1) out = out | support(w);
  return out;
}

SimpleSubset coset_stabilizer_support(const WeylElement& v, const SimpleSubset& K) {
  if (!is_min_coset_rep(v, K)) throw InvalidArgument("element is not a minimal coset representative for K");
  const RootSystem& sys = v.system();
  WeylElement vi = inverse(v);
  std::uint32_t bits = 0;
  for (int i = 0; i < sys.rank(); ++i) {
    Root img = vi.apply(Root::simple(sys.rank(), i));
    bool in_k = true;
    for (int j = 0; j < sys.rank(); ++j)
      if (img.coords[j] != 0 && !K.contains(j)) in_k = false;
    if (img.is_negative() || in_k) bits |= 1u << i;
  }
  return {sys.rank(), bits};
}

StabMonotoneReport check_stab_monotone(const WeylElement& v, const WeylElement& w) {
  if (!weak_leq_right(v, w)) throw InvalidArgument("check_stab_monotone needs v <=_R w");
  const RootSystem& sys = v.system();
  WeylElement u = inverse(v) * w;
  SimpleSubset nv = simple_inversions(v), nw = simple_inversions(w);
  if (!nv.subset_of(nw)) throw InternalInconsistency("N_Delta(v) is not contained in N_Delta(w)");
  StabMonotoneReport r;
  r.strict = nv != nw;
  for (int k = 0; k < sys.num_positive() && !r.witness; ++k) {
    if (!u.left_mask().test(k)) continue;
    auto img = sys.find(v.apply(sys.positive_root(k)));
    if (img && img->positive && img->index < sys.rank()) r.witness = k;
  }
  if (r.strict != r.witness.has_value()) throw InternalInconsistency("strict inclusion and witness root disagree");
  return r;
}

}  // namespace schubert
