#include "schubert/inversion.hpp"

#include <bit>

namespace schubert {

InversionSet inversions_left(const WeylElement& w) { return {RootSubset(w.system(), w.left_mask()), Side::Left}; }

InversionSet inversions_right(const WeylElement& w) { return {RootSubset(w.system(), w.right_mask()), Side::Right}; }

SimpleSubset simple_inversions(const WeylElement& w) { return left_descents(w); }

RootMask act_on_mask(const WeylElement& v, const RootMask& m, bool* all_positive) {
  const RootSystem& sys = v.system();
  RootMask out;
  bool ok = true;
  for (int k = 0; k < sys.num_positive(); ++k) {
    if (!m.test(k)) continue;
    auto img = sys.find(v.apply(sys.positive_root(k)));
    if (!img || !img->positive) {
      ok = false;
      continue;
    }
    out.set(img->index);
  }
  if (all_positive) *all_positive = ok;
  return out;
}

WeylElement element_from_biclosed(const RootSubset& A) {
  if (auto bad = closure_violation(A))
    throw InvalidArgument("set is not closed: cone(" + A.system().root_name(bad->first) + ", " +
                          A.system().root_name(bad->second) + ") leaves it");
  if (auto bad = closure_violation(A.complement()))
    throw InvalidArgument("set is not coclosed: cone(" + A.system().root_name(bad->first) + ", " +
                          A.system().root_name(bad->second) + ") leaves the complement");
  const RootSystem& sys = A.system();
  // Peel simple roots: N(s w') = {a_s} + s N(w').
  std::vector<int> word;
  RootMask cur = A.mask();
  while (cur.any()) {
    int s = -1;
    for (int i = 0; i < sys.rank(); ++i)
      if (cur.test(sys.simple_index(i))) {
        s = i;
        break;
      }
    if (s < 0) throw InvalidArgument("set is not biclosed: no simple root to peel");
    RootMask next;
    for (int k = 0; k < sys.num_positive(); ++k) {
      if (!cur.test(k) || k == sys.simple_index(s)) continue;
      SignedRoot t = sys.reflect_index(k, s);
      if (!t.positive) throw InvalidArgument("set is not biclosed");
      next.set(t.index);
    }
    word.push_back(s);
    cur = next;
  }
  WeylElement w = from_word(sys, word);
  if (w.left_mask() != A.mask()) throw InvalidArgument("set is not biclosed: peeling does not reproduce it");
  return w;
}

bool check_concat(const WeylElement& w, const WeylElement& v, const WeylElement& u) {
  if (!(v * u == w)) throw InvalidArgument("check_concat: w is not the product v u");
  bool additive = w.length() == v.length() + u.length();
  bool positive = false;
  RootMask image = act_on_mask(v, u.left_mask(), &positive);
  bool disjoint_union = positive && (image & v.left_mask()).none() && (image | v.left_mask()) == w.left_mask();
  if (additive != disjoint_union) throw InternalInconsistency("length additivity and inversion-set union disagree");
  return additive;
}

}  // namespace schubert
