#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoseq/config.hpp"

namespace isoseq {

namespace {

using Edges = std::vector<int>;  // pair_index -> color

int pidx(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  return DistanceConfiguration::pair_index(i, j, n);
}

DistanceConfiguration build(int n, std::vector<std::string> colors,
                            Edges edges) {
  return DistanceConfiguration(n, std::move(colors), std::move(edges));
}

void need(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

long param(const FamilySpec& s, size_t i) {
  need(i < s.params.size(), "missing family parameter");
  return s.params[i];
}

/// Bipartition Y = [0,p), Z = [p,p+q): alpha on cross pairs, beta within.
DistanceConfiguration bipartite(int p, int q) {
  need(p >= 1 && q >= 1 && std::max(p, q) >= 2,
       "complete_bipartite needs parts >= 1 with one part >= 2");
  int n = p + q;
  Edges e(DistanceConfiguration::pair_count(n), 1);
  for (int i = 0; i < p; ++i)
    for (int j = p; j < n; ++j) e[pidx(i, j, n)] = 0;
  return build(n, {"alpha", "beta"}, std::move(e));
}

/// alpha = complement of the matching {0,1},{2,3},...,{2m-2,2m-1}.
DistanceConfiguration matching_complement(int n, int m) {
  need(n >= 3 && m >= 1 && 2 * m <= n, "matching_complement needs 1 <= m <= n/2, n >= 3");
  Edges e(DistanceConfiguration::pair_count(n), 0);
  for (int i = 0; i < m; ++i) e[pidx(2 * i, 2 * i + 1, n)] = 1;
  return build(n, {"alpha", "beta"}, std::move(e));
}

DistanceConfiguration pentagon() {
  Edges e(10, 1);
  for (int i = 0; i < 5; ++i) e[pidx(i, (i + 1) % 5, 5)] = 0;
  return build(5, {"alpha", "beta"}, std::move(e));
}

DistanceConfiguration graph_metric(int n, const std::vector<std::pair<int, int>>& edges) {
  need(n >= 2, "graph_metric needs n >= 2");
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    need(a >= 0 && b >= 0 && a < n && b < n && a != b, "bad graph edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // BFS distances from every vertex
  std::vector<int> dist(DistanceConfiguration::pair_count(n), -1);
  for (int s = 0; s < n; ++s) {
    std::vector<int> d(n, -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          q.push(v);
        }
    }
    for (int t = s + 1; t < n; ++t) {
      need(d[t] > 0, "graph_metric needs a connected graph");
      dist[pidx(s, t, n)] = d[t];
    }
  }
  int maxd = *std::max_element(dist.begin(), dist.end());
  std::vector<std::string> colors;
  std::vector<int> remap(maxd + 1, -1);
  Edges e(dist.size());
  for (int d = 1; d <= maxd; ++d)
    if (std::find(dist.begin(), dist.end(), d) != dist.end()) {
      remap[d] = static_cast<int>(colors.size());
      colors.push_back("d" + std::to_string(d));
    }
  for (size_t i = 0; i < dist.size(); ++i) e[i] = remap[dist[i]];
  return build(n, std::move(colors), std::move(e));
}

/// Eight points, parts {0..3} and {4..7}; gamma = {01},{23},{45},{67} is a
/// perfect matching inside the parts, beta = the other within-part pairs,
/// alpha = all cross pairs. n in [5,8] takes the first n points.
DistanceConfiguration example1(int n) {
  need(n >= 5 && n <= 8, "example1 needs 5 <= n <= 8");
  Edges e(DistanceConfiguration::pair_count(n));
  auto part = [](int v) { return v < 4 ? 0 : 1; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int c;
      if (part(i) != part(j)) c = 0;                      // alpha
      else if (j == i + 1 && i % 2 == 0) c = 2;           // gamma
      else c = 1;                                         // beta
      e[pidx(i, j, n)] = c;
    }
  return build(n, {"alpha", "beta", "gamma"}, std::move(e));
}

/// Parts Y = [0,p), Z = [p,p+q) as alpha-cliques; gamma matches i <-> p+i for
/// i < r; beta = remaining cross pairs.
DistanceConfiguration example2(int p, int q, int r) {
  need(p >= q && q >= 1 && r >= 1 && r <= q, "example2 needs p >= q >= r >= 1");
  need(p >= 2, "example2 needs a part of size >= 2");
  need(static_cast<long>(p) * q > r, "example2 needs an unmatched cross pair");
  int n = p + q;
  Edges e(DistanceConfiguration::pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool cross = (i < p) != (j < p);
      int c;
      if (!cross) c = 0;                                  // alpha
      else if (j == i + p && i < r) c = 2;                // gamma
      else c = 1;                                         // beta
      e[pidx(i, j, n)] = c;
    }
  return build(n, {"alpha", "beta", "gamma"}, std::move(e));
}

/// beta = matching {0,1},...,{2p-2,2p-1}; gamma = {2p,2p+1},...; points past
/// 2p+2q are uncovered; alpha = everything else.
DistanceConfiguration example3(int p, int q, int n) {
  need(p >= q && q >= 1, "example3 needs p >= q >= 1");
  need(n >= 2 * p + 2 * q, "example3 needs n >= 2p+2q");
  need(p + q + (n - 2 * p - 2 * q) >= 3,
       "example3 needs at least three matching blocks or free points");
  Edges e(DistanceConfiguration::pair_count(n), 0);
  for (int i = 0; i < p; ++i) e[pidx(2 * i, 2 * i + 1, n)] = 1;
  for (int j = 0; j < q; ++j) e[pidx(2 * p + 2 * j, 2 * p + 2 * j + 1, n)] = 2;
  return build(n, {"alpha", "beta", "gamma"}, std::move(e));
}

/// Y = [0,n-2) an alpha-clique, Z = {n-2,n-1} a gamma edge, beta = cross.
DistanceConfiguration example4(int n) {
  need(n >= 5, "example4 needs n >= 5");
  Edges e(DistanceConfiguration::pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int c;
      if (j < n - 2) c = 0;
      else if (i >= n - 2) c = 2;
      else c = 1;
      e[pidx(i, j, n)] = c;
    }
  return build(n, {"alpha", "beta", "gamma"}, std::move(e));
}

/// Hamming-distance coloring of binary words, colors d1 < d2 < ... by weight.
DistanceConfiguration hamming_config(const std::vector<unsigned>& words) {
  int n = static_cast<int>(words.size());
  std::vector<int> w(DistanceConfiguration::pair_count(n));
  std::vector<int> seen;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int h = __builtin_popcount(words[i] ^ words[j]);
      w[pidx(i, j, n)] = h;
      if (std::find(seen.begin(), seen.end(), h) == seen.end()) seen.push_back(h);
    }
  std::sort(seen.begin(), seen.end());
  std::vector<std::string> colors;
  std::map<int, int> remap;
  for (size_t k = 0; k < seen.size(); ++k) {
    remap[seen[k]] = static_cast<int>(k);
    colors.push_back("d" + std::to_string(k + 1));
  }
  for (int& c : w) c = remap[c];
  return build(n, std::move(colors), std::move(w));
}

}  // namespace

DistanceConfiguration construct_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: {
      int n = static_cast<int>(param(spec, 0));
      need(n >= 2, "complete needs n >= 2");
      return build(n, {"alpha"},
                   Edges(DistanceConfiguration::pair_count(n), 0));
    }
    case Family::complete_bipartite:
      return bipartite(static_cast<int>(param(spec, 0)),
                       static_cast<int>(param(spec, 1)));
    case Family::star: {
      int n = static_cast<int>(param(spec, 0));
      need(n >= 3, "star needs n >= 3");
      Edges e(DistanceConfiguration::pair_count(n), 1);
      for (int j = 1; j < n; ++j) e[pidx(0, j, n)] = 0;
      return build(n, {"alpha", "beta"}, std::move(e));
    }
    case Family::matching_complement:
      return matching_complement(static_cast<int>(param(spec, 0)),
                                 static_cast<int>(param(spec, 1)));
    case Family::pentagon:
      return pentagon();
    case Family::kn_minus_k2: {
      int n = static_cast<int>(param(spec, 0));
      return matching_complement(n, 1);
    }
    case Family::graph_metric: {
      int n = static_cast<int>(param(spec, 0));
      return graph_metric(n, spec.graph_edges);
    }
    case Family::example1:
      return example1(static_cast<int>(param(spec, 0)));
    case Family::example2: {
      if (spec.params.size() == 1) {
        int m = static_cast<int>(param(spec, 0));
        return example2(m, m, m);
      }
      return example2(static_cast<int>(param(spec, 0)),
                      static_cast<int>(param(spec, 1)),
                      static_cast<int>(param(spec, 2)));
    }
    case Family::example3: {
      int p = static_cast<int>(param(spec, 0));
      int q = static_cast<int>(param(spec, 1));
      if (spec.params.size() == 2) {
        need(p >= std::max(2, q) && q >= 1, "example3 needs p >= max(2,q) >= 1");
        return example3(p, q, 2 * p + 2 * q);
      }
      return example3(p, q, static_cast<int>(param(spec, 2)));
    }
    case Family::example4:
      return example4(static_cast<int>(param(spec, 0)));
    case Family::cross_polytope: {
      int m = static_cast<int>(param(spec, 0));
      need(m >= 2, "cross_polytope needs m >= 2");
      return matching_complement(2 * m, m);
    }
    case Family::cube: {
      std::vector<unsigned> words;
      for (unsigned v = 0; v < 8; ++v) words.push_back(v);
      return hamming_config(words);
    }
    case Family::half_cube5: {
      std::vector<unsigned> words;
      for (unsigned v = 0; v < 32; ++v)
        if (__builtin_popcount(v) % 2 == 0) words.push_back(v);
      return hamming_config(words);
    }
    case Family::johnson_J52: {
      // 2-subsets of {0..4}; Hamming distance of indicators is 2 or 4
      std::vector<unsigned> words;
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) words.push_back((1u << a) | (1u << b));
      return hamming_config(words);
    }
  }
  throw std::invalid_argument("unknown family");
}

namespace {
const std::vector<std::pair<std::string, Family>>& family_table() {
  static const std::vector<std::pair<std::string, Family>> table = {
      {"complete", Family::complete},
      {"complete_bipartite", Family::complete_bipartite},
      {"star", Family::star},
      {"matching_complement", Family::matching_complement},
      {"pentagon", Family::pentagon},
      {"kn_minus_k2", Family::kn_minus_k2},
      {"graph_metric", Family::graph_metric},
      {"example1", Family::example1},
      {"example2", Family::example2},
      {"example3", Family::example3},
      {"example4", Family::example4},
      {"cross_polytope", Family::cross_polytope},
      {"cube", Family::cube},
      {"half_cube5", Family::half_cube5},
      {"johnson_J52", Family::johnson_J52},
  };
  return table;
}
}  // namespace

Family family_from_name(const std::string& name) {
  for (const auto& [k, v] : family_table())
    if (k == name) return v;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
  for (const auto& [k, v] : family_table())
    if (v == f) return k;
  return "?";
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : family_table()) out.push_back(k);
  return out;
}

}  // namespace isoseq
