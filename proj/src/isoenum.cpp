#include "hyper/isoenum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "hyper/errors.hpp"

namespace hyper {

namespace {

std::vector<std::string> generic_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

std::vector<uint8_t> serialize(const FiniteHyperStructure& T) {
  std::vector<uint8_t> out;
  const int n = T.n();
  out.push_back(static_cast<uint8_t>(n));
  out.push_back(T.has_mul() ? 1 : 0);
  out.push_back(T.has_mul() ? static_cast<uint8_t>(*T.one_index()) : 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      uint64_t b = T.add(x, y).bits();
      for (int k = 0; k < 8; ++k) out.push_back(static_cast<uint8_t>(b >> (8 * k)));
    }
  if (T.has_mul())
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) out.push_back(static_cast<uint8_t>(T.mul(x, y)));
  return out;
}

}  // namespace

FiniteHyperStructure apply_permutation(const FiniteHyperStructure& T,
                                       const std::vector<int>& perm) {
  const int n = T.n();
  if (static_cast<int>(perm.size()) != n || perm[0] != 0)
    throw std::invalid_argument("apply_permutation: perm must fix 0 and cover the carrier");
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[perm[i]] = T.name(i);
  std::vector<ElemSet> add(static_cast<size_t>(n) * n, ElemSet(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ElemSet cell(n);
      for (int z : T.add(x, y).elements()) cell.insert(perm[z]);
      add[static_cast<size_t>(perm[x]) * n + perm[y]] = cell;
    }
  std::optional<std::vector<int>> mul;
  std::optional<int> one;
  if (T.has_mul()) {
    mul.emplace(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        (*mul)[static_cast<size_t>(perm[x]) * n + perm[y]] = perm[T.mul(x, y)];
    one = perm[*T.one_index()];
  }
  return FiniteHyperStructure::make(std::move(names), std::move(add), std::move(mul), one);
}

std::vector<uint8_t> canonical_form(const FiniteHyperStructure& T) {
  const int n = T.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint8_t> best = serialize(T);
  if (n <= 2) return best;
  std::vector<int> tail(perm.begin() + 1, perm.end());
  std::sort(tail.begin(), tail.end());
  do {
    std::copy(tail.begin(), tail.end(), perm.begin() + 1);
    std::vector<uint8_t> cand = serialize(apply_permutation(T, perm));
    if (cand < best) best = std::move(cand);
  } while (std::next_permutation(tail.begin(), tail.end()));
  return best;
}

namespace {

// Per-element fingerprint: sorted row/column sum sizes, self-inverse flag,
// diagonal size, and (when multiplicative) invertibility and squares.
std::vector<int> invariant(const FiniteHyperStructure& T, int x) {
  const int n = T.n();
  std::vector<int> rows, cols;
  for (int y = 0; y < n; ++y) {
    rows.push_back(T.add(x, y).size());
    cols.push_back(T.add(y, x).size());
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  std::vector<int> inv;
  inv.push_back(x == 0 ? 0 : 1);
  inv.push_back(T.neg(x) == x ? 1 : 0);
  inv.push_back(T.add(x, x).size());
  inv.push_back(T.add(x, x).contains(x) ? 1 : 0);
  if (T.has_mul()) {
    inv.push_back(x == *T.one_index() ? 1 : 0);
    int sq = T.mul(x, x);
    inv.push_back(sq == x ? 1 : (sq == 0 ? 2 : 3));
    bool unit = false;
    for (int y = 0; y < n; ++y)
      if (T.mul(x, y) == *T.one_index() && T.mul(y, x) == *T.one_index()) unit = true;
    inv.push_back(unit ? 1 : 0);
  }
  inv.insert(inv.end(), rows.begin(), rows.end());
  inv.insert(inv.end(), cols.begin(), cols.end());
  return inv;
}

struct IsoSearch {
  const FiniteHyperStructure& A;
  const FiniteHyperStructure& B;
  std::vector<int> f;           // A index -> B index, -1 unassigned
  std::vector<bool> used;       // B indices taken
  std::vector<std::vector<int>> candidates;

  bool consistent(int x) const {
    const int n = A.n();
    for (int y = 0; y < n; ++y) {
      if (f[y] < 0) continue;
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        const ElemSet& sa = A.add(p, q);
        const ElemSet& sb = B.add(f[p], f[q]);
        if (sa.size() != sb.size()) return false;
        for (int z = 0; z < n; ++z)
          if (f[z] >= 0 && sa.contains(z) != sb.contains(f[z])) return false;
        if (A.has_mul()) {
          int pr = A.mul(p, q);
          if (f[pr] >= 0 && f[pr] != B.mul(f[p], f[q])) return false;
        }
      }
    }
    return true;
  }

  bool run(int x) {
    const int n = A.n();
    if (x == n) return true;
    if (f[x] >= 0) return consistent(x) && run(x + 1);
    for (int y : candidates[x]) {
      if (used[y]) continue;
      f[x] = y;
      used[y] = true;
      if (consistent(x) && run(x + 1)) return true;
      f[x] = -1;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteHyperStructure& A,
                                                 const FiniteHyperStructure& B) {
  if (A.n() != B.n() || A.has_mul() != B.has_mul()) return std::nullopt;
  const int n = A.n();

  std::vector<std::vector<int>> inv_b(n);
  for (int y = 0; y < n; ++y) inv_b[y] = invariant(B, y);

  IsoSearch search{A, B, std::vector<int>(n, -1), std::vector<bool>(n, false), {}};
  search.candidates.resize(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> ia = invariant(A, x);
    for (int y = 0; y < n; ++y)
      if (ia == inv_b[y]) search.candidates[x].push_back(y);
    if (search.candidates[x].empty()) return std::nullopt;
  }
  search.f[0] = 0;
  search.used[0] = true;
  if (A.has_mul()) {
    int oa = *A.one_index(), ob = *B.one_index();
    if (oa != 0) {
      search.f[oa] = ob;
      search.used[ob] = true;
    }
  }
  if (!search.run(0)) return std::nullopt;

  std::vector<int> g(n);
  for (int x = 0; x < n; ++x) g[search.f[x]] = x;
  if (!is_homomorphism(search.f, A, B) || !is_homomorphism(g, B, A)) return std::nullopt;
  return search.f;
}

// ---------------------------------------------------------------------------
// Hypergroup enumeration: fix the hyperinverse involution, then decide the
// membership bits z in x ⊞ y (all indices nonzero) orbit by orbit under the
// invertibility and reversibility closure maps.

namespace {

struct TripleSpace {
  int n, m;  // m = n - 1 nonzero elements

  int id(int x, int y, int z) const { return ((x - 1) * m + (y - 1)) * m + (z - 1); }
  int total() const { return m * m * m; }
};

struct HypergroupSearch {
  int n, m;
  std::vector<int> nu;  // hyperinverse on 1..n-1
  bool stringent, commutative;
  TripleSpace ts;

  std::vector<int> orbit_of;                // triple id -> orbit id
  std::vector<std::vector<int>> orbits;     // orbit id -> triple ids
  std::vector<int8_t> value;                // per orbit: -1 / 0 / 1
  std::vector<int> cell_ones, cell_undecided;
  std::vector<FiniteHyperStructure> found;

  int cell_of(int t) const { return t / m; }
  bool inverse_cell(int c) const {
    int x = c / m + 1, y = c % m + 1;
    return nu[x] == y;
  }

  void build_orbits() {
    orbit_of.assign(ts.total(), -1);
    for (int x = 1; x <= m; ++x)
      for (int y = 1; y <= m; ++y)
        for (int z = 1; z <= m; ++z) {
          int t0 = ts.id(x, y, z);
          if (orbit_of[t0] >= 0) continue;
          int oid = static_cast<int>(orbits.size());
          std::vector<int> todo = {t0}, members;
          orbit_of[t0] = oid;
          while (!todo.empty()) {
            int t = todo.back();
            todo.pop_back();
            members.push_back(t);
            int zz = t % m + 1, yy = (t / m) % m + 1, xx = t / (m * m) + 1;
            int imgs[4][3] = {
                {nu[yy], nu[xx], nu[zz]},  // invertibility of sums
                {zz, nu[yy], xx},          // reversibility, first component
                {nu[xx], zz, yy},          // reversibility, second component
                {yy, xx, zz},              // commutativity (optional)
            };
            int count = commutative ? 4 : 3;
            for (int k = 0; k < count; ++k) {
              int t2 = ts.id(imgs[k][0], imgs[k][1], imgs[k][2]);
              if (orbit_of[t2] < 0) {
                orbit_of[t2] = oid;
                todo.push_back(t2);
              }
            }
          }
          orbits.push_back(std::move(members));
        }
  }

  // Assign an orbit and run cell-level forcing to a fixed point.
  bool assign(int oid, int8_t v, std::vector<int>& trail) {
    std::vector<std::pair<int, int8_t>> queue = {{oid, v}};
    while (!queue.empty()) {
      auto [o, val] = queue.back();
      queue.pop_back();
      if (value[o] == val) continue;
      if (value[o] >= 0) return false;
      value[o] = val;
      trail.push_back(o);
      for (int t : orbits[o]) {
        int c = cell_of(t);
        --cell_undecided[c];
        if (val) ++cell_ones[c];
      }
      for (int t : orbits[o]) {
        int c = cell_of(t);
        bool invc = inverse_cell(c);
        if (!invc && cell_ones[c] == 0 && cell_undecided[c] == 0) return false;
        if (stringent && !invc && cell_ones[c] > 1) return false;
        if (!invc && cell_ones[c] == 0 && cell_undecided[c] == 1) {
          // the one remaining bit must be set
          for (int zz = 1; zz <= m; ++zz) {
            int t2 = (c)*m + (zz - 1);
            if (value[orbit_of[t2]] < 0) queue.push_back({orbit_of[t2], 1});
          }
        }
        if (stringent && !invc && cell_ones[c] == 1 && cell_undecided[c] > 0) {
          for (int zz = 1; zz <= m; ++zz) {
            int t2 = (c)*m + (zz - 1);
            if (value[orbit_of[t2]] < 0) queue.push_back({orbit_of[t2], 0});
          }
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      int o = trail.back();
      trail.pop_back();
      int8_t val = value[o];
      value[o] = -1;
      for (int t : orbits[o]) {
        int c = cell_of(t);
        ++cell_undecided[c];
        if (val) --cell_ones[c];
      }
    }
  }

  void emit() {
    std::vector<ElemSet> add(static_cast<size_t>(n) * n, ElemSet(n));
    auto cell = [&](int x, int y) -> ElemSet& { return add[static_cast<size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x) {
      cell(0, x) = ElemSet::single(x, n);
      cell(x, 0) = ElemSet::single(x, n);
    }
    for (int x = 1; x <= m; ++x)
      for (int y = 1; y <= m; ++y) {
        ElemSet s(n);
        if (nu[x] == y) s.insert(0);
        for (int z = 1; z <= m; ++z)
          if (value[orbit_of[ts.id(x, y, z)]] == 1) s.insert(z);
        cell(x, y) = s;
      }
    FiniteHyperStructure T = FiniteHyperStructure::make(generic_names(n), std::move(add));
    if (!check_hypergroup(T).passed) return;
    if (stringent && !is_stringent(T)) return;
    if (commutative && !is_commutative_add(T)) return;
    found.push_back(std::move(T));
  }

  void dfs(std::vector<int>& trail) {
    int next = -1;
    for (size_t o = 0; o < orbits.size(); ++o)
      if (value[o] < 0) {
        next = static_cast<int>(o);
        break;
      }
    if (next < 0) {
      emit();
      return;
    }
    for (int8_t v : {int8_t{1}, int8_t{0}}) {
      size_t mark = trail.size();
      if (assign(next, v, trail)) dfs(trail);
      undo(trail, mark);
    }
  }

  void run() {
    build_orbits();
    value.assign(orbits.size(), -1);
    cell_ones.assign(m * m, 0);
    cell_undecided.assign(m * m, m);
    std::vector<int> trail;
    dfs(trail);
  }
};

void involutions_rec(std::vector<int>& nu, int x, std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(nu.size());
  while (x < n && nu[x] != 0) ++x;
  if (x >= n) {
    out.push_back(nu);
    return;
  }
  nu[x] = x;
  involutions_rec(nu, x + 1, out);
  nu[x] = 0;
  for (int y = x + 1; y < n; ++y) {
    if (nu[y] != 0) continue;
    nu[x] = y;
    nu[y] = x;
    involutions_rec(nu, x + 1, out);
    nu[x] = nu[y] = 0;
  }
}

std::vector<std::vector<int>> involutions(int n) {
  std::vector<int> nu(n, 0);
  std::vector<std::vector<int>> out;
  if (n == 1) {
    out.push_back(nu);
    return out;
  }
  involutions_rec(nu, 1, out);
  return out;
}

std::vector<FiniteHyperStructure> dedup(std::vector<FiniteHyperStructure> items) {
  std::map<std::vector<uint8_t>, FiniteHyperStructure> by_form;
  for (auto& t : items) by_form.emplace(canonical_form(t), std::move(t));
  std::vector<FiniteHyperStructure> out;
  out.reserve(by_form.size());
  for (auto& [form, t] : by_form) out.push_back(std::move(t));
  return out;
}

template <class Task>
std::vector<FiniteHyperStructure> run_partitioned(const std::vector<Task>& tasks,
                                                  int threads,
                                                  std::vector<FiniteHyperStructure> (*fn)(const Task&)) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  std::vector<FiniteHyperStructure> all;
  if (threads <= 1 || tasks.size() <= 1) {
    for (const auto& t : tasks) {
      auto part = fn(t);
      for (auto& s : part) all.push_back(std::move(s));
    }
    return all;
  }
  std::vector<std::future<std::vector<FiniteHyperStructure>>> futures;
  std::atomic<size_t> cursor{0};
  for (int w = 0; w < threads; ++w)
    futures.push_back(std::async(std::launch::async, [&]() {
      std::vector<FiniteHyperStructure> mine;
      while (true) {
        size_t i = cursor.fetch_add(1);
        if (i >= tasks.size()) break;
        auto part = fn(tasks[i]);
        for (auto& s : part) mine.push_back(std::move(s));
      }
      return mine;
    }));
  for (auto& f : futures) {
    auto part = f.get();
    for (auto& s : part) all.push_back(std::move(s));
  }
  return all;
}

struct HgTask {
  int n;
  std::vector<int> nu;
  EnumFilters filters;
};

std::vector<FiniteHyperStructure> run_hg_task(const HgTask& task) {
  HypergroupSearch search;
  search.n = task.n;
  search.m = task.n - 1;
  search.nu = task.nu;
  search.stringent = task.filters.stringent;
  search.commutative = task.filters.commutative;
  search.ts = TripleSpace{task.n, task.n - 1};
  search.run();
  return std::move(search.found);
}

}  // namespace

std::vector<FiniteHyperStructure> enumerate_hypergroups(int n, EnumFilters filters, int threads) {
  if (n < 1) throw std::invalid_argument("carrier size must be positive");
  if (n > 6) throw capacity_error("hypergroup enumeration supports n <= 6");
  if (n == 1) {
    std::vector<ElemSet> add = {ElemSet::single(0, 1)};
    return {FiniteHyperStructure::make(generic_names(1), std::move(add))};
  }
  std::vector<HgTask> tasks;
  for (auto& nu : involutions(n)) tasks.push_back({n, nu, filters});
  auto all = run_partitioned(tasks, threads, &run_hg_task);
  return dedup(std::move(all));
}

// ---------------------------------------------------------------------------
// Hyperfield enumeration: groups for the units, then the row of 1.

namespace {

// All group tables on {0..m-1} with identity 0, by Latin-square backtracking
// with a final associativity scan.
void group_tables_rec(int m, std::vector<int>& table, int pos, std::vector<std::vector<int>>& out) {
  const int cells = m * m;
  if (pos == cells) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          if (table[table[a * m + b] * m + c] != table[a * m + table[b * m + c]]) return;
    out.push_back(table);
    return;
  }
  int a = pos / m, b = pos % m;
  if (a == 0 || b == 0) {  // identity row/column
    table[pos] = a == 0 ? b : a;
    group_tables_rec(m, table, pos + 1, out);
    return;
  }
  for (int v = 0; v < m; ++v) {
    bool clash = false;
    for (int bb = 0; bb < b && !clash; ++bb)
      if (table[a * m + bb] == v) clash = true;
    for (int aa = 0; aa < a && !clash; ++aa)
      if (table[aa * m + b] == v) clash = true;
    if (clash) continue;
    table[pos] = v;
    group_tables_rec(m, table, pos + 1, out);
  }
  table[pos] = -1;
}

std::vector<std::vector<int>> group_tables(int m) {
  std::vector<int> table(static_cast<size_t>(m) * m, -1);
  std::vector<std::vector<int>> out;
  group_tables_rec(m, table, 0, out);
  return out;
}

// Search over the sets s(z) = 1 ⊞ z for nonzero z, as membership bits
// b(z, y) = [y in s(z)], closed under the hyperfield symmetry maps.
struct HyperfieldSearch {
  int n, m;                  // m = n - 1 units
  std::vector<int> gmul;     // unit group table on 0..m-1 (identity 0)
  std::vector<int> ginv;     // unit group inverses
  int eps;                   // unit index (0-based) of -1
  EnumFilters filters;

  // carrier indices: 0 plus units u+1 for u in 0..m-1
  int pid(int z, int y) const { return z * m + y; }  // z, y unit-indices

  std::vector<int> orbit_of;
  std::vector<std::vector<int>> orbits;
  std::vector<int8_t> value;
  std::vector<int> cell_ones, cell_undecided;
  std::vector<FiniteHyperStructure> found;

  void build_orbits() {
    orbit_of.assign(m * m, -1);
    for (int z = 0; z < m; ++z)
      for (int y = 0; y < m; ++y) {
        int p0 = pid(z, y);
        if (orbit_of[p0] >= 0) continue;
        int oid = static_cast<int>(orbits.size());
        std::vector<int> todo = {p0}, members;
        orbit_of[p0] = oid;
        while (!todo.empty()) {
          int p = todo.back();
          todo.pop_back();
          members.push_back(p);
          int zz = p / m, yy = p % m;
          std::vector<std::pair<int, int>> imgs;
          // y in 1 ⊞ z  <=>  y^-1 in 1 ⊞ (-1) y^-1 z
          imgs.push_back({gmul[gmul[ginv[yy] * m + eps] * m + zz], ginv[yy]});
          // y in 1 ⊞ z  <=>  (-1) z in 1 ⊞ (-1) y
          imgs.push_back({gmul[eps * m + yy], gmul[eps * m + zz]});
          // additive commutativity: y in s(z) <=> z^-1 y in s(z^-1)
          imgs.push_back({ginv[zz], gmul[ginv[zz] * m + yy]});
          // right distributivity: s(c^-1 z c) = c^-1 s(z) c
          for (int c = 0; c < m; ++c)
            imgs.push_back({gmul[gmul[ginv[c] * m + zz] * m + c], gmul[gmul[ginv[c] * m + yy] * m + c]});
          for (auto [z2, y2] : imgs) {
            int p2 = pid(z2, y2);
            if (orbit_of[p2] < 0) {
              orbit_of[p2] = oid;
              todo.push_back(p2);
            }
          }
        }
        orbits.push_back(std::move(members));
      }
  }

  bool assign(int oid, int8_t v, std::vector<int>& trail) {
    std::vector<std::pair<int, int8_t>> queue = {{oid, v}};
    while (!queue.empty()) {
      auto [o, val] = queue.back();
      queue.pop_back();
      if (value[o] == val) continue;
      if (value[o] >= 0) return false;
      value[o] = val;
      trail.push_back(o);
      for (int p : orbits[o]) {
        int z = p / m;
        --cell_undecided[z];
        if (val) ++cell_ones[z];
      }
      for (int p : orbits[o]) {
        int z = p / m;
        bool invc = (z == eps);  // the cell whose set contains 0
        if (!invc && cell_ones[z] == 0 && cell_undecided[z] == 0) return false;
        if (filters.stringent && !invc && cell_ones[z] > 1) return false;
        if (!invc && cell_ones[z] == 0 && cell_undecided[z] == 1) {
          for (int y = 0; y < m; ++y)
            if (value[orbit_of[pid(z, y)]] < 0) queue.push_back({orbit_of[pid(z, y)], 1});
        }
        if (filters.stringent && !invc && cell_ones[z] == 1 && cell_undecided[z] > 0) {
          for (int y = 0; y < m; ++y)
            if (value[orbit_of[pid(z, y)]] < 0) queue.push_back({orbit_of[pid(z, y)], 0});
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      int o = trail.back();
      trail.pop_back();
      int8_t val = value[o];
      value[o] = -1;
      for (int p : orbits[o]) {
        int z = p / m;
        ++cell_undecided[z];
        if (val) --cell_ones[z];
      }
    }
  }

  void emit() {
    // a ⊞ b = a · s(a^-1 b); s(z) read off the decided bits.
    std::vector<ElemSet> add(static_cast<size_t>(n) * n, ElemSet(n));
    auto cell = [&](int x, int y) -> ElemSet& { return add[static_cast<size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x) {
      cell(0, x) = ElemSet::single(x, n);
      cell(x, 0) = ElemSet::single(x, n);
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        int z = gmul[ginv[a] * m + b];
        ElemSet s(n);
        if (z == eps) s.insert(0);
        for (int y = 0; y < m; ++y)
          if (value[orbit_of[pid(z, y)]] == 1) s.insert(1 + gmul[a * m + y]);
        cell(1 + a, 1 + b) = s;
      }
    std::vector<int> mul(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) mul[static_cast<size_t>(1 + a) * n + (1 + b)] = 1 + gmul[a * m + b];
    FiniteHyperStructure T =
        FiniteHyperStructure::make(generic_names(n), std::move(add), std::move(mul), 1);
    if (!check_hyperfield(T).passed) return;
    if (filters.stringent && !is_stringent(T)) return;
    if (filters.dd && !is_doubly_distributive(T)) return;
    found.push_back(std::move(T));
  }

  void dfs(std::vector<int>& trail) {
    int next = -1;
    for (size_t o = 0; o < orbits.size(); ++o)
      if (value[o] < 0) {
        next = static_cast<int>(o);
        break;
      }
    if (next < 0) {
      emit();
      return;
    }
    for (int8_t v : {int8_t{1}, int8_t{0}}) {
      size_t mark = trail.size();
      if (assign(next, v, trail)) dfs(trail);
      undo(trail, mark);
    }
  }

  void run() {
    build_orbits();
    value.assign(orbits.size(), -1);
    cell_ones.assign(m, 0);
    cell_undecided.assign(m, m);
    std::vector<int> trail;
    dfs(trail);
  }
};

struct HfTask {
  int n;
  std::vector<int> gmul;
  int eps;
  EnumFilters filters;
};

std::vector<FiniteHyperStructure> run_hf_task(const HfTask& task) {
  const int m = task.n - 1;
  HyperfieldSearch search;
  search.n = task.n;
  search.m = m;
  search.gmul = task.gmul;
  search.ginv.assign(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (search.gmul[a * m + b] == 0) search.ginv[a] = b;
  search.eps = task.eps;
  search.filters = task.filters;
  search.run();
  return std::move(search.found);
}

}  // namespace

std::vector<FiniteHyperStructure> enumerate_hyperfields(int n, EnumFilters filters, int threads) {
  if (n < 2) throw std::invalid_argument("a hyperfield has at least two elements");
  if (n > 7) throw capacity_error("hyperfield enumeration supports n <= 7");
  const int m = n - 1;
  std::vector<HfTask> tasks;
  for (auto& g : group_tables(m))
    for (int eps = 0; eps < m; ++eps)
      if (g[eps * m + eps] == 0) tasks.push_back({n, g, eps, filters});
  auto all = run_partitioned(tasks, threads, &run_hf_task);
  return dedup(std::move(all));
}

// ---------------------------------------------------------------------------
// Stringent skew hyperrings: stringent commutative additive structures with
// every compatible single-valued multiplication.

namespace {

bool additive_endo(const FiniteHyperStructure& T, const std::vector<int>& f) {
  const int n = T.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const ElemSet& s = T.add(x, y);
      const ElemSet& target = T.add(f[x], f[y]);
      for (int t : s.elements())
        if (!target.contains(f[t])) return false;
    }
  return true;
}

}  // namespace

std::vector<FiniteHyperStructure> enumerate_stringent_hyperrings(int n) {
  if (n < 1) throw std::invalid_argument("carrier size must be positive");
  if (n > 5) throw capacity_error("hyperring enumeration supports n <= 5");
  if (n == 1) {
    std::vector<ElemSet> add = {ElemSet::single(0, 1)};
    return {FiniteHyperStructure::make(generic_names(1), std::move(add), std::vector<int>{0}, 0)};
  }

  std::vector<FiniteHyperStructure> out;
  EnumFilters base_filters;
  base_filters.stringent = true;
  base_filters.commutative = true;
  for (const auto& base : enumerate_hypergroups(n, base_filters)) {
    // single-valued additive endomorphisms fixing 0
    std::vector<std::vector<int>> endos;
    std::vector<int> f(n, 0);
    const long long total = static_cast<long long>(std::pow(double(n), double(n - 1)));
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int x = 1; x < n; ++x) {
        f[x] = static_cast<int>(c % n);
        c /= n;
      }
      if (additive_endo(base, f)) endos.push_back(f);
    }

    for (int one = 1; one < n; ++one) {
      std::vector<std::vector<const std::vector<int>*>> by_image(n);
      for (const auto& e : endos) by_image[e[one]].push_back(&e);

      // choose the left-multiplication map for every element other than `one`
      std::vector<const std::vector<int>*> rows(n, nullptr);
      std::vector<int> identity(n);
      std::iota(identity.begin(), identity.end(), 0);
      rows[one] = &identity;

      std::vector<int> slots;
      for (int a = 1; a < n; ++a)
        if (a != one) slots.push_back(a);

      std::vector<size_t> choice(slots.size(), 0);
      auto try_emit = [&]() {
        std::vector<int> mul(static_cast<size_t>(n) * n, 0);
        for (int a = 1; a < n; ++a)
          for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = (*rows[a])[b];
        for (int a = 0; a < n; ++a) mul[static_cast<size_t>(a) * n + 0] = 0;
        // monoid associativity and two-sided identity, then the full check
        for (int a = 1; a < n; ++a)
          if (mul[static_cast<size_t>(a) * n + one] != a) return;
        for (int a = 1; a < n; ++a)
          for (int b = 1; b < n; ++b)
            for (int c = 1; c < n; ++c)
              if (mul[static_cast<size_t>(mul[static_cast<size_t>(a) * n + b]) * n + c] !=
                  mul[static_cast<size_t>(a) * n + mul[static_cast<size_t>(b) * n + c]])
                return;
        std::vector<ElemSet> add;
        add.reserve(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) add.push_back(base.add(x, y));
        FiniteHyperStructure T =
            FiniteHyperStructure::make(base.names(), std::move(add), std::move(mul), one);
        if (!check_skew_hyperring(T).passed) return;
        if (!is_stringent(T)) return;
        out.push_back(std::move(T));
      };

      size_t k = slots.size();
      std::vector<size_t> stack_idx(k, 0);
      // iterative product over candidate rows per slot
      size_t depth = 0;
      while (true) {
        if (depth == k) {
          try_emit();
          if (k == 0) break;
          --depth;
          ++stack_idx[depth];
          continue;
        }
        auto& cands = by_image[slots[depth]];
        if (stack_idx[depth] >= cands.size()) {
          if (depth == 0) break;
          stack_idx[depth] = 0;
          --depth;
          ++stack_idx[depth];
          continue;
        }
        rows[slots[depth]] = cands[stack_idx[depth]];
        ++depth;
      }
    }
  }
  return dedup(std::move(out));
}

}  // namespace hyper
