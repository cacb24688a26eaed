#include "isoseq/isometry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "isoseq/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isoseq {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v)
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

using KeySet = std::unordered_set<std::vector<int>, VecHash>;

/// Lexicographic minimization of the flattened color matrix over all
/// orderings of the subset. Columns are appended one placed vertex at a time;
/// a branch is pruned as soon as its column exceeds the best key at the same
/// position with an equal prefix. `relabel_colors` switches on the
/// first-occurrence renaming used for whole-configuration canonical forms.
struct KeyMinimizer {
  const DistanceConfiguration& cfg;
  const std::vector<int>& pts;
  int k;
  bool relabel_colors;

  std::vector<int> order, best_order;
  std::vector<char> used;
  std::vector<int> cur, best;
  std::vector<int> relabel, best_relabel, assigned;
  int next_label = 0;

  KeyMinimizer(const DistanceConfiguration& c, const std::vector<int>& p, bool rl)
      : cfg(c), pts(p), k(static_cast<int>(p.size())), relabel_colors(rl) {
    order.assign(k, 0);
    used.assign(k, 0);
    relabel.assign(cfg.color_count(), -1);
    cur.reserve(k * (k - 1) / 2);
    seed();
  }

  int label_of(int raw) {
    if (!relabel_colors) return raw;
    if (relabel[raw] < 0) {
      relabel[raw] = next_label++;
      assigned.push_back(raw);
    }
    return relabel[raw];
  }

  void undo_labels(size_t mark) {
    while (assigned.size() > mark) {
      relabel[assigned.back()] = -1;
      assigned.pop_back();
      --next_label;
    }
  }

  void seed() {
    best.clear();
    for (int t = 1; t < k; ++t)
      for (int s = 0; s < t; ++s) best.push_back(label_of(cfg.color_of(pts[s], pts[t])));
    best_order.resize(k);
    std::iota(best_order.begin(), best_order.end(), 0);
    best_relabel = relabel;
    std::fill(relabel.begin(), relabel.end(), -1);
    assigned.clear();
    next_label = 0;
  }

  void dfs(int depth, bool tight) {
    if (depth == k) {
      if (cur < best) {
        best = cur;
        best_order.assign(order.begin(), order.end());
        best_relabel = relabel;
      }
      return;
    }
    for (int c = 0; c < k; ++c) {
      if (used[c]) continue;
      const size_t base = cur.size();
      const size_t label_mark = assigned.size();
      bool now_tight = tight;
      bool pruned = false;
      for (int t = 0; t < depth; ++t) {
        int col = label_of(cfg.color_of(pts[order[t]], pts[c]));
        if (now_tight) {
          int b = best[base + static_cast<size_t>(t)];
          if (col > b) {
            pruned = true;
            break;
          }
          if (col < b) now_tight = false;
        }
        cur.push_back(col);
      }
      if (pruned) {
        cur.resize(base);
        undo_labels(label_mark);
        continue;
      }
      used[c] = 1;
      order[depth] = c;
      dfs(depth + 1, now_tight);
      used[c] = 0;
      cur.resize(base);
      undo_labels(label_mark);
    }
  }

  void run() { dfs(0, true); }
};

std::vector<int> minimal_key(const DistanceConfiguration& cfg,
                             const std::vector<int>& pts) {
  KeyMinimizer m(cfg, pts, false);
  m.run();
  return std::move(m.best);
}

void check_subset(const DistanceConfiguration& cfg, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("empty subset");
  if (s.size() > 12) throw std::invalid_argument("subset size capped at 12");
  for (int v : s)
    if (v < 0 || v >= cfg.n()) throw std::invalid_argument("point out of range");
}

void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::vector<std::vector<int>> all_combinations(int n, int k) {
  double count = 1;
  for (int i = 0; i < k; ++i) count = count * (n - i) / (i + 1);
  if (count > 5e6) throw std::invalid_argument("too many subsets");
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(count) + 1);
  for_each_combination(n, k, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

}  // namespace

SubsetKey canonical_key(const DistanceConfiguration& config,
                        const std::vector<int>& subset) {
  check_subset(config, subset);
  return SubsetKey{static_cast<int>(subset.size()), minimal_key(config, subset)};
}

long count_classes_serial(const DistanceConfiguration& config, int k) {
  if (k < 1 || k > config.n()) throw std::invalid_argument("k out of range");
  if (k > 12) throw std::invalid_argument("k capped at 12");
  KeySet keys;
  for_each_combination(config.n(), k, [&](const std::vector<int>& s) {
    keys.insert(minimal_key(config, s));
  });
  return static_cast<long>(keys.size());
}

long count_classes(const DistanceConfiguration& config, int k) {
  if (k < 1 || k > config.n()) throw std::invalid_argument("k out of range");
  if (k > 12) throw std::invalid_argument("k capped at 12");
  auto combos = all_combinations(config.n(), k);
  const int jobs = effective_jobs();
  std::vector<KeySet> local(jobs);
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
  for (long i = 0; i < static_cast<long>(combos.size()); ++i) {
#ifdef _OPENMP
    KeySet& mine = local[omp_get_thread_num() % jobs];
#else
    KeySet& mine = local[0];
#endif
    mine.insert(minimal_key(config, combos[i]));
  }
  KeySet merged;
  for (auto& s : local) merged.insert(s.begin(), s.end());
  return static_cast<long>(merged.size());
}

namespace {

IsometricSequence sequence_impl(const DistanceConfiguration& config, int jobs) {
  const int n = config.n();
  if (n > 12) throw std::invalid_argument("full sequence capped at n <= 12");
  const unsigned long total = 1ul << n;
  std::vector<std::vector<KeySet>> local(jobs);
  for (auto& v : local) v.resize(n + 1);
#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs)
  for (long code = 1; code < static_cast<long>(total); ++code) {
#ifdef _OPENMP
    auto& mine = local[omp_get_thread_num() % jobs];
#else
    auto& mine = local[0];
#endif
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (code & (1l << v)) s.push_back(v);
    mine[s.size()].insert(minimal_key(config, s));
  }
  IsometricSequence seq;
  seq.a.resize(n);
  for (int k = 1; k <= n; ++k) {
    KeySet merged;
    for (auto& v : local) merged.insert(v[k].begin(), v[k].end());
    seq.a[k - 1] = static_cast<long>(merged.size());
  }
  return seq;
}

}  // namespace

IsometricSequence isometric_sequence(const DistanceConfiguration& config) {
  return sequence_impl(config, effective_jobs());
}

IsometricSequence isometric_sequence_serial(const DistanceConfiguration& config) {
  return sequence_impl(config, 1);
}

ProfileVector profile(const DistanceConfiguration& config,
                      const std::vector<int>& S, const std::vector<int>& T) {
  if (S.empty() || T.empty()) throw std::invalid_argument("empty subset");
  ProfileVector v;
  v.counts.assign(config.color_count(), 0);
  for (int s : S)
    for (int t : T)
      if (s != t) v.counts[config.color_of(s, t)]++;
  return v;
}

std::set<int> m_set(const DistanceConfiguration& config, int k) {
  if (k < 1 || k > config.n()) throw std::invalid_argument("k out of range");
  std::set<int> out;
  for (int c = 0; c < config.color_count(); ++c)
    for (int x = 0; x < config.n(); ++x)
      if (config.color_degree(x, c) >= k) {
        out.insert(c);
        break;
      }
  return out;
}

bool is_closed(const DistanceConfiguration& config, const std::set<int>& gamma) {
  if (gamma.empty()) throw std::invalid_argument("empty color set");
  for (int c : gamma)
    if (c < 0 || c >= config.color_count())
      throw std::invalid_argument("color out of range");
  const int n = config.n();
  auto in = [&](int c) { return gamma.count(c) > 0; };

  // triangle-closure route
  bool closed_tri = true;
  for (int x = 0; x < n && closed_tri; ++x)
    for (int y = x + 1; y < n && closed_tri; ++y)
      for (int z = y + 1; z < n && closed_tri; ++z) {
        int a = config.color_of(x, y), b = config.color_of(y, z),
            c = config.color_of(z, x);
        int inside = in(a) + in(b) + in(c);
        if (inside == 2) closed_tri = false;
      }

  // clique-component route on the union graph
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (in(config.color_of(x, y))) parent[find(x)] = find(y);
  bool closed_cliques = true;
  for (int x = 0; x < n && closed_cliques; ++x)
    for (int y = x + 1; y < n && closed_cliques; ++y)
      if (find(x) == find(y) && !in(config.color_of(x, y)))
        closed_cliques = false;

  if (closed_tri != closed_cliques)
    throw std::logic_error("closure routes disagree");
  return closed_tri;
}

std::set<std::array<int, 3>> triangle_classes(const DistanceConfiguration& config) {
  std::set<std::array<int, 3>> out;
  const int n = config.n();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        std::array<int, 3> t{config.color_of(x, y), config.color_of(y, z),
                             config.color_of(z, x)};
        std::sort(t.begin(), t.end());
        out.insert(t);
      }
  return out;
}

CanonicalConfig canonical_config(const DistanceConfiguration& config) {
  const int n = config.n();
  if (n > 12) throw std::invalid_argument("canonical form capped at n <= 12");
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  KeyMinimizer m(config, pts, true);
  m.run();
  CanonicalConfig out;
  out.key = std::move(m.best);
  out.vertex_order = std::move(m.best_order);
  out.color_relabel = std::move(m.best_relabel);
  return out;
}

bool is_canonical_coloring(int n, const std::vector<int>& chi) {
  // chi holds colors in column order: pair (s,t), s<t, at index t(t-1)/2+s.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int m = n * (n - 1) / 2;
  std::vector<int> relabel;
  do {
    relabel.assign(m + 1, -1);
    int next = 0;
    int cmp = 0;
    for (int t = 1; t < n && cmp == 0; ++t)
      for (int s = 0; s < t; ++s) {
        int u = perm[s], v = perm[t];
        if (u > v) std::swap(u, v);
        int raw = chi[v * (v - 1) / 2 + u];
        int lab = relabel[raw] < 0 ? (relabel[raw] = next++) : relabel[raw];
        int ref = chi[t * (t - 1) / 2 + s];
        if (lab != ref) {
          cmp = lab < ref ? -1 : 1;
          break;
        }
      }
    if (cmp < 0) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace isoseq
