#include "gk/smallgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>

namespace gk {

int GroupTable::inv(int x) const {
  for (int y = 0; y < order; ++y) {
    if (mul(x, y) == 0) return y;
  }
  throw std::logic_error("element has no inverse: " + std::to_string(x));
}

int GroupTable::label_id(const std::string& label) const {
  for (int i = 0; i < order; ++i) {
    if (labels[i] == label) return i;
  }
  throw std::invalid_argument("no element labeled '" + label + "' in " +
                              (iso_label.empty() ? "group" : iso_label));
}

void validate_group(const GroupTable& g) {
  const int n = g.order;
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (static_cast<int>(g.table.size()) != n * n) {
    throw std::invalid_argument("table size does not match order");
  }
  if (static_cast<int>(g.labels.size()) != n) {
    throw std::invalid_argument("label count does not match order");
  }
  for (int v : g.table) {
    if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
  }
  for (int x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) {
      throw std::invalid_argument("element 0 is not a two-sided identity");
    }
  }
  // Latin square: each row and column is a permutation.
  for (int x = 0; x < n; ++x) {
    std::vector<bool> row(n, false), col(n, false);
    for (int y = 0; y < n; ++y) {
      if (row[g.mul(x, y)]) throw std::invalid_argument("duplicate entry in row");
      if (col[g.mul(y, x)]) throw std::invalid_argument("duplicate entry in column");
      row[g.mul(x, y)] = col[g.mul(y, x)] = true;
    }
  }
  for (int x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < n && !has_inverse; ++y) {
      has_inverse = g.mul(x, y) == 0 && g.mul(y, x) == 0;
    }
    if (!has_inverse) throw std::invalid_argument("element without inverse");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
          throw std::invalid_argument("associativity fails at (" + std::to_string(x) +
                                      "," + std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
}

namespace {

GroupTable finish(GroupTable g) {
  validate_group(g);
  return g;
}

std::string power_label(const std::string& base, int e) {
  if (e == 0) return "e";
  if (e == 1) return base;
  return base + std::to_string(e);
}

}  // namespace

GroupTable make_cyclic(int n) {
  if (n < 1 || n > kGroupOrderBound) throw SizeBoundError("cyclic order out of bounds");
  GroupTable g;
  g.order = n;
  g.table.resize(n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) g.table[x * n + y] = (x + y) % n;
  }
  for (int x = 0; x < n; ++x) g.labels.push_back(power_label("g", x));
  return finish(std::move(g));
}

GroupTable make_dihedral(int m) {
  if (m < 1 || 2 * m > kGroupOrderBound) throw SizeBoundError("dihedral order out of bounds");
  const int n = 2 * m;
  GroupTable g;
  g.order = n;
  g.table.resize(n * n);
  // id i < m is a^i, id m+i is a^i b.
  auto rot = [&](int i) { return ((i % m) + m) % m; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      g.table[i * n + j] = rot(i + j);                  // a^i a^j
      g.table[i * n + (m + j)] = m + rot(i + j);        // a^i (a^j b)
      g.table[(m + i) * n + j] = m + rot(i - j);        // (a^i b) a^j
      g.table[(m + i) * n + (m + j)] = rot(i - j);      // (a^i b)(a^j b)
    }
  }
  for (int i = 0; i < m; ++i) g.labels.push_back(power_label("a", i));
  for (int i = 0; i < m; ++i) {
    g.labels.push_back(i == 0 ? "b" : power_label("a", i) + "b");
  }
  return finish(std::move(g));
}

GroupTable make_dicyclic(int m) {
  if (m < 1 || 4 * m > kGroupOrderBound) throw SizeBoundError("dicyclic order out of bounds");
  const int c = 2 * m;  // order of a
  const int n = 4 * m;
  GroupTable g;
  g.order = n;
  g.table.resize(n * n);
  auto rot = [&](int i) { return ((i % c) + c) % c; };
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      g.table[i * n + j] = rot(i + j);
      g.table[i * n + (c + j)] = c + rot(i + j);
      g.table[(c + i) * n + j] = c + rot(i - j);
      g.table[(c + i) * n + (c + j)] = rot(i - j + m);  // (a^i b)(a^j b) = a^{i-j} b^2
    }
  }
  for (int i = 0; i < c; ++i) g.labels.push_back(power_label("a", i));
  for (int i = 0; i < c; ++i) {
    g.labels.push_back(i == 0 ? "b" : power_label("a", i) + "b");
  }
  return finish(std::move(g));
}

GroupTable make_quaternion8() { return make_dicyclic(2); }

GroupTable make_elementary_abelian2(int m) {
  if (m < 0 || m > 6) throw SizeBoundError("elementary abelian rank out of bounds");
  const int n = 1 << m;
  GroupTable g;
  g.order = n;
  g.table.resize(n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) g.table[x * n + y] = x ^ y;
  }
  for (int x = 0; x < n; ++x) {
    std::string label;
    for (int bit = 0; bit < m; ++bit) {
      if (x & (1 << bit)) label += static_cast<char>('a' + bit);
    }
    g.labels.push_back(label.empty() ? "e" : label);
  }
  return finish(std::move(g));
}

GroupTable make_perm_group(std::span<const std::vector<int>> generators,
                           std::span<const std::string> names) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  const auto domain = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != domain) throw std::invalid_argument("generators act on different domains");
    std::vector<bool> seen(domain, false);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(domain) || seen[v]) {
        throw std::invalid_argument("generator is not a permutation");
      }
      seen[v] = true;
    }
  }

  std::vector<int> id(domain);
  std::iota(id.begin(), id.end(), 0);

  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(domain);  // apply p, then q
    for (std::size_t i = 0; i < domain; ++i) r[i] = q[p[i]];
    return r;
  };

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> elems;
  std::vector<std::string> labels;
  ids[id] = 0;
  elems.push_back(id);
  labels.emplace_back("e");

  auto gen_name = [&](std::size_t j) {
    if (j < names.size()) return names[j];
    return std::string(1, static_cast<char>('a' + j));
  };

  // BFS so each element gets its shortest product expression as the label.
  std::queue<int> work;
  work.push(0);
  while (!work.empty()) {
    const int cur = work.front();
    work.pop();
    for (std::size_t j = 0; j < generators.size(); ++j) {
      auto next = compose(elems[cur], generators[j]);
      if (ids.contains(next)) continue;
      if (static_cast<int>(elems.size()) >= kGroupOrderBound) {
        throw SizeBoundError("permutation closure exceeds order bound " +
                             std::to_string(kGroupOrderBound));
      }
      const int next_id = static_cast<int>(elems.size());
      ids[next] = next_id;
      elems.push_back(next);
      labels.push_back(cur == 0 ? gen_name(j) : labels[cur] + gen_name(j));
      work.push(next_id);
    }
  }

  const int n = static_cast<int>(elems.size());
  GroupTable g;
  g.order = n;
  g.labels = std::move(labels);
  g.table.resize(n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      g.table[x * n + y] = ids.at(compose(elems[x], elems[y]));
    }
  }
  return finish(std::move(g));
}

GroupTable make_r10() {
  const std::vector<std::vector<int>> gens = {
      {1, 0, 3, 2, 4},  // (1,2)(3,4)
      {0, 2, 1, 4, 3},  // (2,3)(4,5)
  };
  const std::vector<std::string> names = {"a", "b"};
  return make_perm_group(gens, names);
}

GroupTable make_alternating4() {
  const std::vector<std::vector<int>> gens = {
      {1, 2, 0, 3},  // (1,2,3)
      {1, 0, 3, 2},  // (1,2)(3,4)
  };
  const std::vector<std::string> names = {"r", "s"};
  return make_perm_group(gens, names);
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int n = g.order * h.order;
  if (n > kGroupOrderBound) throw SizeBoundError("direct product exceeds order bound");
  GroupTable p;
  p.order = n;
  p.table.resize(n * n);
  auto pack = [&](int i, int j) { return i * h.order + j; };
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < h.order; ++j) {
      for (int i2 = 0; i2 < g.order; ++i2) {
        for (int j2 = 0; j2 < h.order; ++j2) {
          p.table[pack(i, j) * n + pack(i2, j2)] = pack(g.mul(i, i2), h.mul(j, j2));
        }
      }
    }
  }
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < h.order; ++j) {
      p.labels.push_back(i == 0 && j == 0 ? "e"
                                          : "(" + g.labels[i] + "," + h.labels[j] + ")");
    }
  }
  return finish(std::move(p));
}

int element_order(const GroupTable& g, int x) {
  if (x < 0 || x >= g.order) throw std::invalid_argument("element id out of range");
  int cur = x;
  int n = 1;
  while (cur != 0) {
    cur = g.mul(cur, x);
    ++n;
  }
  return n;
}

std::vector<int> involution_ids(const GroupTable& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order; ++x) {
    if (g.mul(x, x) == 0) out.push_back(x);
  }
  return out;
}

std::vector<int> subgroup_closure(const GroupTable& g, std::span<const int> seeds) {
  std::vector<bool> in(g.order, false);
  std::vector<int> members;
  auto add = [&](int x) {
    if (x < 0 || x >= g.order) throw std::invalid_argument("seed id out of range");
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  add(0);
  for (int s : seeds) add(s);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      const int prod = g.mul(members[i], members[j]);
      if (!in[prod]) {
        in[prod] = true;
        members.push_back(prod);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// Greedy generating sequence: extend while the closure grows.
std::vector<int> generating_sequence(const GroupTable& g) {
  std::vector<int> gens;
  std::vector<int> closure = subgroup_closure(g, gens);
  while (static_cast<int>(closure.size()) < g.order) {
    for (int x = 1; x < g.order; ++x) {
      if (!std::binary_search(closure.begin(), closure.end(), x)) {
        gens.push_back(x);
        break;
      }
    }
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

// Expression of every element as (parent, generator slot), BFS from identity.
struct ExpressionDag {
  std::vector<int> parent;  // -1 for identity
  std::vector<int> via;     // generator slot used
  std::vector<int> bfs;     // discovery order
};

ExpressionDag expressions(const GroupTable& g, const std::vector<int>& gens) {
  ExpressionDag dag;
  dag.parent.assign(g.order, -2);
  dag.via.assign(g.order, -1);
  dag.parent[0] = -1;
  dag.bfs.push_back(0);
  for (std::size_t i = 0; i < dag.bfs.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const int next = g.mul(dag.bfs[i], gens[j]);
      if (dag.parent[next] == -2) {
        dag.parent[next] = dag.bfs[i];
        dag.via[next] = static_cast<int>(j);
        dag.bfs.push_back(next);
      }
    }
  }
  return dag;
}

// Builds the map determined by generator images and checks it is a bijective
// homomorphism; nullopt if anything fails.
std::optional<std::vector<int>> build_hom(const GroupTable& g, const GroupTable& h,
                                          const std::vector<int>& gens,
                                          const ExpressionDag& dag,
                                          const std::vector<int>& images) {
  std::vector<int> map(g.order, -1);
  map[0] = 0;
  for (std::size_t i = 1; i < dag.bfs.size(); ++i) {
    const int x = dag.bfs[i];
    map[x] = h.mul(map[dag.parent[x]], images[dag.via[x]]);
  }
  std::vector<bool> hit(h.order, false);
  for (int x = 0; x < g.order; ++x) {
    if (hit[map[x]]) return std::nullopt;
    hit[map[x]] = true;
  }
  for (int x = 0; x < g.order; ++x) {
    for (int y = 0; y < g.order; ++y) {
      if (map[g.mul(x, y)] != h.mul(map[x], map[y])) return std::nullopt;
    }
  }
  return map;
}

// All table-preserving bijections g -> h (all of them when collect_all,
// otherwise at most one).
std::vector<std::vector<int>> isomorphism_search(const GroupTable& g, const GroupTable& h,
                                                 bool collect_all) {
  std::vector<std::vector<int>> found;
  if (g.order != h.order) return found;

  std::vector<int> g_orders(g.order), h_orders(h.order);
  for (int x = 0; x < g.order; ++x) g_orders[x] = element_order(g, x);
  for (int x = 0; x < h.order; ++x) h_orders[x] = element_order(h, x);
  {
    auto gs = g_orders, hs = h_orders;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return found;
  }

  const std::vector<int> gens = generating_sequence(g);
  const ExpressionDag dag = expressions(g, gens);

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (int y = 0; y < h.order; ++y) {
      if (h_orders[y] == g_orders[gens[j]]) candidates[j].push_back(y);
    }
    if (candidates[j].empty()) return found;
  }

  std::vector<int> images(gens.size(), 0);
  std::vector<std::size_t> pos(gens.size(), 0);
  // Odometer over candidate tuples; build_hom rejects bad tuples outright.
  std::size_t level = 0;
  while (true) {
    if (level == gens.size()) {
      for (std::size_t j = 0; j < gens.size(); ++j) images[j] = candidates[j][pos[j]];
      if (auto map = build_hom(g, h, gens, dag, images)) {
        found.push_back(std::move(*map));
        if (!collect_all) return found;
      }
      --level;
      ++pos[level];
    } else if (pos[level] == candidates[level].size()) {
      if (level == 0) break;
      pos[level] = 0;
      --level;
      ++pos[level];
    } else {
      ++level;
      if (level < gens.size()) pos[level] = 0;
    }
  }
  return found;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const GroupTable& g, const GroupTable& h) {
  auto found = isomorphism_search(g, h, /*collect_all=*/false);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

bool isomorphic(const GroupTable& g, const GroupTable& h) {
  return isomorphism(g, h).has_value();
}

std::vector<Automorphism> automorphisms(const GroupTable& g) {
  return isomorphism_search(g, g, /*collect_all=*/true);
}

namespace {

std::vector<GroupPtr> build_catalog(int order) {
  auto reg = [](GroupTable g, const std::string& name) {
    g.iso_label = name;
    return std::make_shared<const GroupTable>(std::move(g));
  };
  const std::string zn = "Z" + std::to_string(order);
  std::vector<GroupPtr> out;
  out.push_back(reg(make_cyclic(order), zn));
  switch (order) {
    case 4:
      out.push_back(reg(make_elementary_abelian2(2), "Z2xZ2"));
      break;
    case 6:
      out.push_back(reg(make_dihedral(3), "D3"));
      break;
    case 8:
      out.push_back(reg(direct_product(make_cyclic(4), make_cyclic(2)), "Z4xZ2"));
      out.push_back(reg(make_elementary_abelian2(3), "K8"));
      out.push_back(reg(make_dihedral(4), "D4"));
      out.push_back(reg(make_quaternion8(), "Q8"));
      break;
    case 9:
      out.push_back(reg(direct_product(make_cyclic(3), make_cyclic(3)), "Z3xZ3"));
      break;
    case 10:
      out.push_back(reg(make_dihedral(5), "D5"));
      break;
    case 12:
      out.push_back(reg(direct_product(make_cyclic(6), make_cyclic(2)), "Z6xZ2"));
      out.push_back(reg(make_dihedral(6), "D6"));
      out.push_back(reg(make_alternating4(), "A4"));
      out.push_back(reg(make_dicyclic(3), "Dic3"));
      break;
    default:
      break;  // only the cyclic group for 1, 2, 3, 5, 7, 11
  }
  return out;
}

}  // namespace

const std::vector<GroupPtr>& catalog(int order) {
  if (order < 1 || order > 12) {
    throw std::invalid_argument("catalog supports orders 1..12, got " + std::to_string(order));
  }
  static std::vector<std::vector<GroupPtr>> cache(13);
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  if (cache[order].empty()) cache[order] = build_catalog(order);
  return cache[order];
}

GroupPtr catalog_lookup(const std::string& iso_label) {
  static std::map<std::string, GroupPtr> extra;
  static std::mutex mutex;
  for (int order = 1; order <= 12; ++order) {
    for (const auto& g : catalog(order)) {
      if (g->iso_label == iso_label) return g;
    }
  }
  // Dihedral targets past the catalog range, registered on first use.
  if (iso_label.size() > 1 && iso_label[0] == 'D') {
    const int m = std::stoi(iso_label.substr(1));
    if (m >= 3 && 2 * m <= kGroupOrderBound) {
      std::lock_guard lock(mutex);
      auto it = extra.find(iso_label);
      if (it != extra.end()) return it->second;
      GroupTable g = make_dihedral(m);
      g.iso_label = iso_label;
      auto ptr = std::make_shared<const GroupTable>(std::move(g));
      extra.emplace(iso_label, ptr);
      return ptr;
    }
  }
  throw std::invalid_argument("unknown group label: " + iso_label);
}

}  // namespace gk
