#include "schubert/root_system.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>

#include "linear_feasibility.hpp"

namespace schubert {

namespace {

void add_edge(std::array<std::array<int, kMaxRank>, kMaxRank>& c, int i, int j) {
  c[i][j] = -1;
  c[j][i] = -1;
}

ActionMatrix matmul(const ActionMatrix& a, const ActionMatrix& b, int r) {
  ActionMatrix out{};
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) {
      int acc = 0;
      for (int k = 0; k < r; ++k) acc += a[k * kMaxRank + i] * b[j * kMaxRank + k];
      out[j * kMaxRank + i] = static_cast<std::int8_t>(acc);
    }
  return out;
}

}  // namespace

CartanType CartanType::make(Family family, int rank) {
  auto fail = [&](const std::string& rule) {
    throw InvalidArgument("invalid Cartan type " + std::string(1, static_cast<char>(family)) +
                          std::to_string(rank) + ": " + rule);
  };
  switch (family) {
    case Family::A:
      if (rank < 1) fail("type A needs rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail("types B and C need rank >= 2");
      break;
    case Family::D:
      if (rank < 4) fail("type D needs rank >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("type E needs rank 6, 7 or 8");
      break;
    case Family::F:
      if (rank != 4) fail("type F needs rank 4");
      break;
    case Family::G:
      if (rank != 2) fail("type G needs rank 2");
      break;
    default:
      fail("unknown family");
  }
  if (rank > kMaxRank) fail("rank above the supported maximum of " + std::to_string(kMaxRank));
  return CartanType{family, rank};
}

CartanType CartanType::parse(const std::string& family, int rank) {
  if (family.size() != 1) throw InvalidArgument("family must be one of A B C D E F G, got '" + family + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
  if (f < 'A' || f > 'G') throw InvalidArgument("family must be one of A B C D E F G, got '" + family + "'");
  return make(static_cast<Family>(f), rank);
}

std::string CartanType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

SimpleSubset::SimpleSubset(int rank, std::uint32_t bits) : rank_(rank), bits_(bits) {
  if (rank < 0 || rank > kMaxRank) throw InvalidArgument("subset rank out of range");
  if (bits >> rank) throw InvalidArgument("simple index out of range for rank " + std::to_string(rank));
}

SimpleSubset SimpleSubset::of(int rank, const std::vector<int>& indices) {
  std::uint32_t b = 0;
  for (int i : indices) {
    if (i < 0 || i >= rank) throw InvalidArgument("simple index " + std::to_string(i + 1) + " out of range");
    b |= 1u << i;
  }
  return {rank, b};
}

int SimpleSubset::size() const { return std::popcount(bits_); }

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Root Root::simple(int rank, int i) {
  Root r;
  r.rank = rank;
  r.coords[i] = 1;
  return r;
}

int Root::height() const { return std::accumulate(coords.begin(), coords.begin() + rank, 0); }

bool Root::is_positive() const {
  bool any = false;
  for (int i = 0; i < rank; ++i) {
    if (coords[i] < 0) return false;
    any |= coords[i] > 0;
  }
  return any;
}

bool Root::is_negative() const { return (-*this).is_positive(); }

Root Root::operator-() const {
  Root r = *this;
  for (int i = 0; i < rank; ++i) r.coords[i] = -r.coords[i];
  return r;
}

SimpleSubset DynkinComponent::as_subset(int ambient_rank) const { return SimpleSubset::of(ambient_rank, nodes); }

std::shared_ptr<const RootSystem> RootSystem::build(CartanType type) {
  type = CartanType::make(type.family, type.rank);
  return std::shared_ptr<const RootSystem>(new RootSystem(type));
}

RootSystem::RootSystem(CartanType type) : type_(type) {
  const int n = type.rank;
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) add_edge(cartan_, i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) add_edge(cartan_, i, i + 1);
      cartan_[n - 1][n - 2] = -2;
      break;
    case Family::C:  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) add_edge(cartan_, i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      break;
    case Family::D:  // 1-3, 2-3, 3-4, ..., (n-1)-n
      add_edge(cartan_, 0, 2);
      add_edge(cartan_, 1, 2);
      for (int i = 2; i + 1 < n; ++i) add_edge(cartan_, i, i + 1);
      break;
    case Family::E:  // 2-3-4-...-n with 1 hanging off 4
      add_edge(cartan_, 0, 3);
      for (int i = 1; i + 1 < n; ++i) add_edge(cartan_, i, i + 1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      add_edge(cartan_, 0, 1);
      add_edge(cartan_, 1, 2);
      add_edge(cartan_, 2, 3);
      cartan_[2][1] = -2;
      break;
    case Family::G:  // alpha_1 short
      cartan_[0][1] = -3;
      cartan_[1][0] = -1;
      break;
  }

  // Closure of the simple roots under simple reflections.
  auto key = [n](const Root& r) { return std::vector<int>(r.coords.begin(), r.coords.begin() + n); };
  std::map<std::vector<int>, int> seen;
  std::vector<Root> found;
  std::queue<Root> todo;
  for (int i = 0; i < n; ++i) {
    Root s = Root::simple(n, i);
    seen[key(s)] = 1;
    found.push_back(s);
    todo.push(s);
  }
  while (!todo.empty()) {
    Root r = todo.front();
    todo.pop();
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += r.coords[j] * cartan_[i][j];
      Root s = r;
      s.coords[i] -= pairing;
      if (!s.is_positive() || seen.count(key(s))) continue;
      seen[key(s)] = 1;
      found.push_back(s);
      todo.push(s);
    }
  }
  std::sort(found.begin() + n, found.end(), [&](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return key(a) < key(b);
  });
  roots_ = std::move(found);
  const int m = num_positive();
  for (int k = 0; k < m; ++k) all_.set(k);

  std::map<std::vector<int>, int> index;
  for (int k = 0; k < m; ++k) index[key(roots_[k])] = k;

  supports_.resize(m);
  reflection_table_.resize(m);
  for (int k = 0; k < m; ++k) {
    const Root& r = roots_[k];
    for (int j = 0; j < n; ++j)
      if (r.coords[j]) supports_[k] |= 1u << j;
    for (int i = 0; i < n; ++i) {
      if (k == i) {
        reflection_table_[k][i] = {k, false};
        continue;
      }
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += r.coords[j] * cartan_[i][j];
      Root s = r;
      s.coords[i] -= pairing;
      reflection_table_[k][i] = {index.at(key(s)), true};
    }
  }

  // Reflection matrices, t_{s_i b} = s_i t_b s_i.
  reflections_.assign(m, ActionMatrix{});
  std::vector<bool> done(m, false);
  std::queue<int> q;
  for (int i = 0; i < n; ++i) {
    ActionMatrix& s = reflections_[i];
    for (int j = 0; j < n; ++j) {
      s[j * kMaxRank + j] = 1;
      s[j * kMaxRank + i] = static_cast<std::int8_t>(s[j * kMaxRank + i] - cartan_[i][j]);
    }
    done[i] = true;
    q.push(i);
  }
  while (!q.empty()) {
    int k = q.front();
    q.pop();
    for (int i = 0; i < n; ++i) {
      SignedRoot t = reflection_table_[k][i];
      if (!t.positive || done[t.index]) continue;
      reflections_[t.index] = matmul(matmul(reflections_[i], reflections_[k], n), reflections_[i], n);
      done[t.index] = true;
      q.push(t.index);
    }
  }

  // cone({a, b}) restricted to positive roots, exact integer arithmetic.
  pair_cone_.assign(static_cast<std::size_t>(m) * m, RootMask{});
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      RootMask cone;
      const auto& x = roots_[a].coords;
      const auto& y = roots_[b].coords;
      int px = -1, py = -1;
      long det = 0;
      for (int s = 0; s < n && det == 0; ++s)
        for (int t = s + 1; t < n; ++t) {
          long d = static_cast<long>(x[s]) * y[t] - static_cast<long>(x[t]) * y[s];
          if (d != 0) {
            det = d;
            px = s;
            py = t;
            break;
          }
        }
      if (det == 0) {
        cone.set(a);
      } else {
        for (int g = 0; g < m; ++g) {
          const auto& z = roots_[g].coords;
          long p = static_cast<long>(z[px]) * y[py] - static_cast<long>(z[py]) * y[px];
          long r = static_cast<long>(x[px]) * z[py] - static_cast<long>(x[py]) * z[px];
          if (det < 0) {
            p = -p;
            r = -r;
          }
          if (p < 0 || r < 0) continue;
          long d = det < 0 ? -det : det;
          bool ok = true;
          for (int s = 0; s < n && ok; ++s) ok = d * z[s] == p * x[s] + r * y[s];
          if (ok) cone.set(g);
        }
      }
      pair_cone_[static_cast<std::size_t>(a) * m + b] = cone;
      pair_cone_[static_cast<std::size_t>(b) * m + a] = cone;
    }
}

std::optional<SignedRoot> RootSystem::find(const Root& r) const {
  if (r.rank != rank()) return std::nullopt;
  bool pos = r.is_positive();
  if (!pos && !r.is_negative()) return std::nullopt;
  Root p = pos ? r : -r;
  auto it = std::lower_bound(roots_.begin() + rank(), roots_.end(), p, [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords < b.coords;
  });
  for (int i = 0; i < rank(); ++i)
    if (roots_[i] == p) return SignedRoot{i, pos};
  if (it != roots_.end() && *it == p) return SignedRoot{static_cast<int>(it - roots_.begin()), pos};
  return std::nullopt;
}

Root RootSystem::reflect(int i, const Root& r) const {
  if (i < 0 || i >= rank()) throw InvalidArgument("simple index out of range");
  if (!find(r)) throw InvalidArgument("reflect: input is not a root");
  int pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += r.coords[j] * cartan_[i][j];
  Root s = r;
  s.coords[i] -= pairing;
  return s;
}

RootMask RootSystem::sub_root_mask(const SimpleSubset& I) const {
  RootMask out;
  for (int k = 0; k < num_positive(); ++k)
    if ((supports_[k] & ~I.bits()) == 0) out.set(k);
  return out;
}

std::string RootSystem::simple_name(int i) const { return "a" + std::to_string(i + 1); }

std::string RootSystem::root_name(int idx) const {
  std::string out;
  const Root& r = roots_[idx];
  for (int j = 0; j < rank(); ++j) {
    if (!r.coords[j]) continue;
    if (!out.empty()) out += '+';
    if (r.coords[j] != 1) out += std::to_string(r.coords[j]);
    out += simple_name(j);
  }
  return out;
}

std::vector<DynkinComponent> RootSystem::components(const SimpleSubset& I) const {
  const int n = rank();
  std::vector<DynkinComponent> out;
  std::uint32_t left = I.bits();
  while (left) {
    int start = std::countr_zero(left);
    std::vector<int> comp{start};
    std::uint32_t in = 1u << start;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int j = 0; j < n; ++j)
        if ((left >> j & 1u) && !(in >> j & 1u) && adjacent(comp[k], j)) {
          in |= 1u << j;
          comp.push_back(j);
        }
    left &= ~in;
    std::sort(comp.begin(), comp.end());
    const int r = static_cast<int>(comp.size());

    auto nbrs = [&](int v) {
      std::vector<int> out;
      for (int u : comp)
        if (adjacent(u, v)) out.push_back(u);
      return out;
    };
    // Walk a path starting at `from`, moving away from `prev`.
    auto walk = [&](int from, int prev) {
      std::vector<int> path{from};
      while (true) {
        int next = -1;
        for (int u : nbrs(path.back()))
          if (u != prev) next = u;
        if (next < 0) break;
        prev = path.back();
        path.push_back(next);
      }
      return path;
    };

    DynkinComponent dc;
    if (r == 1) {
      dc = {{Family::A, 1}, comp};
      out.push_back(dc);
      continue;
    }
    int triple = -1, da = -1, db = -1;
    int branch = -1;
    for (int a : comp) {
      if (nbrs(a).size() == 3) branch = a;
      for (int b : comp) {
        int prod = cartan_[a][b] * cartan_[b][a];
        if (prod == 3) triple = a;
        if (prod == 2 && cartan_[a][b] == -2) {
          da = a;  // short end of the double bond
          db = b;
        }
      }
    }
    if (triple >= 0) {
      int s = cartan_[comp[0]][comp[1]] == -3 ? comp[0] : comp[1];
      int l = s == comp[0] ? comp[1] : comp[0];
      dc = {{Family::G, 2}, {s, l}};
    } else if (da >= 0) {
      int end = -1;
      for (int a : comp)
        if (nbrs(a).size() == 1) {
          // prefer the endpoint far from the double bond
          std::vector<int> p = walk(a, -1);
          bool bond_last = (p[r - 1] == da && p[r - 2] == db) || (p[r - 1] == db && p[r - 2] == da);
          if (bond_last && end < 0) end = a;
        }
      if (end >= 0) {
        std::vector<int> p = walk(end, -1);
        if (r == 2) {
          dc = {{Family::B, 2}, {db, da}};
        } else {
          Family f = p.back() == da ? Family::B : Family::C;
          dc = {{f, r}, p};
        }
      } else {
        // F4: start from the long end
        int e0 = -1;
        for (int a : comp)
          if (nbrs(a).size() == 1) {
            std::vector<int> p = walk(a, -1);
            if (p[1] == db) e0 = a;
          }
        dc = {{Family::F, 4}, walk(e0, -1)};
      }
    } else if (branch < 0) {
      dc = {{Family::A, r}, walk(comp[0], -1)};
    } else {
      std::vector<std::vector<int>> legs;
      for (int u : nbrs(branch)) legs.push_back(walk(u, branch));
      std::sort(legs.begin(), legs.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.back() < y.back();
      });
      if (legs[0].size() == 1 && legs[1].size() == 1) {
        // D: short legs become labels 1 and 2, the long leg runs 4..r
        std::vector<int> nodes{legs[0][0], legs[1][0], branch};
        nodes.insert(nodes.end(), legs[2].begin(), legs[2].end());
        dc = {{Family::D, r}, nodes};
      } else {
        std::vector<int> nodes{legs[0][0], legs[1][1], legs[1][0], branch};
        nodes.insert(nodes.end(), legs[2].begin(), legs[2].end());
        dc = {{Family::E, r}, nodes};
      }
    }
    out.push_back(dc);
  }
  return out;
}

RootSubset::RootSubset(const RootSystem& sys, RootMask mask) : sys_(&sys), mask_(mask) {
  if ((mask_ & ~sys.all_positive()).any()) throw InvalidArgument("root mask wider than the positive roots");
}

RootSubset RootSubset::from_indices(const RootSystem& sys, const std::vector<int>& idx) {
  RootMask m;
  for (int k : idx) {
    if (k < 0 || k >= sys.num_positive()) throw InvalidArgument("positive root index out of range");
    m.set(k);
  }
  return {sys, m};
}

std::vector<int> RootSubset::indices() const {
  std::vector<int> out;
  for (int k = 0; k < sys_->num_positive(); ++k)
    if (mask_.test(k)) out.push_back(k);
  return out;
}

RootSubset RootSubset::complement() const { return {*sys_, sys_->all_positive() & ~mask_}; }

RootSubset sub_root_subset(const RootSystem& sys, const SimpleSubset& I) { return {sys, sys.sub_root_mask(I)}; }

std::optional<std::pair<int, int>> closure_violation(const RootSubset& A) {
  const RootSystem& sys = A.system();
  std::vector<int> idx = A.indices();
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y)
      if ((sys.pair_cone(idx[x], idx[y]) & ~A.mask()).any()) return std::make_pair(idx[x], idx[y]);
  return std::nullopt;
}

bool is_closed(const RootSubset& A) { return !closure_violation(A); }
bool is_coclosed(const RootSubset& A) { return is_closed(A.complement()); }
bool is_biclosed(const RootSubset& A) { return is_closed(A) && is_coclosed(A); }

bool is_convex(const RootSubset& A) {
  const RootSystem& sys = A.system();
  std::vector<std::vector<int>> gens;
  for (int k : A.indices()) {
    const Root& r = sys.positive_root(k);
    gens.emplace_back(r.coords.begin(), r.coords.begin() + sys.rank());
  }
  for (int g = 0; g < sys.num_positive(); ++g) {
    if (A.contains(g)) continue;
    const Root& r = sys.positive_root(g);
    std::vector<int> target(r.coords.begin(), r.coords.begin() + sys.rank());
    if (detail::in_cone(gens, target)) return false;
  }
  return true;
}

bool is_coconvex(const RootSubset& A) { return is_convex(A.complement()); }
bool is_biconvex(const RootSubset& A) { return is_convex(A) && is_coconvex(A); }

}  // namespace schubert
