#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "isoseq/config.hpp"

namespace isoseq {

MetricRealization from_points(const PointSet& pts, double tol) {
  const int n = pts.size();
  if (n < 1) throw std::invalid_argument("empty point set");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (pts.coords.cols() != pts.dim)
    throw std::invalid_argument("coordinate width does not match dim");

  const int m = DistanceConfiguration::pair_count(n);
  std::vector<double> dist(m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = (pts.coords.row(i) - pts.coords.row(j)).norm();
      if (d == 0.0) throw std::invalid_argument("coincident points");
      dist[DistanceConfiguration::pair_index(i, j, n)] = d;
    }
  if (n == 1) return MetricRealization(DistanceConfiguration(1, {}, {}), {});

  // single-linkage grouping on the sorted distances, relative gap tol
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return dist[a] < dist[b]; });
  std::vector<int> group(m, -1);
  int groups = 0;
  for (int t = 0; t < m; ++t) {
    if (t == 0 || (dist[order[t]] - dist[order[t - 1]]) > tol * dist[order[t]])
      ++groups;
    group[order[t]] = groups - 1;
  }

  std::vector<double> sum(groups, 0.0);
  std::vector<int> cnt(groups, 0);
  for (int i = 0; i < m; ++i) {
    sum[group[i]] += dist[i];
    cnt[group[i]]++;
  }
  std::vector<std::string> colors;
  std::vector<double> values(groups);
  for (int g = 0; g < groups; ++g) {
    colors.push_back("d" + std::to_string(g + 1));
    values[g] = sum[g] / cnt[g];
  }
  return MetricRealization(DistanceConfiguration(n, std::move(colors), group),
                           std::move(values));
}

}  // namespace isoseq
