#include "schubert/smooth.hpp"

#include "schubert/order.hpp"

namespace schubert {

std::string to_string(SmoothMethod m) {
  switch (m) {
    case SmoothMethod::PatternAvoidance:
      return "pattern-avoidance";
    case SmoothMethod::Palindromic:
      return "palindromic";
    case SmoothMethod::PetersonTransfer:
      return "peterson-transfer";
  }
  return "?";
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False:
      return "false";
    case Tri::True:
      return "true";
    case Tri::Unsupported:
      return "unsupported";
  }
  return "?";
}

namespace {

void check_perm(const std::vector<int>& p, const char* what) {
  std::vector<bool> hit(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || hit[v])
      throw InvalidArgument(std::string(what) + " is not a permutation");
    hit[v] = true;
  }
}

bool embeds(const std::vector<int>& p, const std::vector<int>& q, std::vector<int>& chosen, std::size_t start) {
  const std::size_t k = chosen.size();
  if (k == q.size()) return true;
  for (std::size_t i = start; i + (q.size() - k) <= p.size(); ++i) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) ok = (p[chosen[a]] < p[i]) == (q[a] < q[k]);
    if (!ok) continue;
    chosen.push_back(static_cast<int>(i));
    if (embeds(p, q, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool avoids_pattern(const std::vector<int>& p, const std::vector<int>& q) {
  check_perm(p, "input");
  check_perm(q, "pattern");
  if (q.size() > p.size()) return true;
  std::vector<int> chosen;
  return !embeds(p, q, chosen, 0);
}

bool is_rationally_smooth(const WeylElement& w, std::size_t cap) { return poincare(w, cap).is_palindromic(); }

SmoothnessReport is_smooth(const WeylElement& w, std::size_t cap) {
  SmoothnessReport r;
  r.rationally_smooth = is_rationally_smooth(w, cap);
  switch (w.system().type().family) {
    case Family::A: {
      std::vector<int> p = element_to_perm(w);
      bool pat = avoids_pattern(p, {4, 2, 3, 1}) && avoids_pattern(p, {3, 4, 1, 2});
      if (pat != r.rationally_smooth)
        throw InternalInconsistency("pattern avoidance and palindromicity disagree");
      r.smooth = pat ? Tri::True : Tri::False;
      r.method = SmoothMethod::PatternAvoidance;
      break;
    }
    case Family::D:
    case Family::E:
      r.smooth = r.rationally_smooth ? Tri::True : Tri::False;
      r.method = SmoothMethod::PetersonTransfer;
      break;
    default:
      r.smooth = Tri::Unsupported;
      r.method = SmoothMethod::Palindromic;
  }
  return r;
}

std::vector<WeylElement> smooth_divisors(const WeylElement& w, std::size_t cap) {
  if (!w.system().type().simply_laced()) throw InvalidArgument("smooth divisors need a type A, D or E system");
  if (is_smooth(w, cap).smooth != Tri::True) throw InvalidArgument("smooth divisors need a smooth element");
  std::vector<WeylElement> out;
  for (auto& x : covers_bruhat(w))
    if (is_smooth(x, cap).smooth == Tri::True) out.push_back(x);
  return out;
}

}  // namespace schubert
