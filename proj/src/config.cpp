#include "isoseq/config.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "isoseq/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isoseq {

namespace {
std::atomic<int> g_jobs{0};
}

void set_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }

int effective_jobs() {
  int j = g_jobs.load();
  if (j > 0) return j;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int DistanceConfiguration::pair_index(int i, int j, int n) {
  // row-major upper triangle, i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

DistanceConfiguration::DistanceConfiguration(int n,
                                             std::vector<std::string> colors,
                                             std::vector<int> edge_color)
    : n_(n), colors_(std::move(colors)), edge_color_(std::move(edge_color)) {
  if (n_ < 1) throw std::invalid_argument("point count must be >= 1");
  if (static_cast<int>(edge_color_.size()) != pair_count(n_))
    throw std::invalid_argument("edge coloring is not total");
  std::vector<char> used(colors_.size(), 0);
  for (int c : edge_color_) {
    if (c < 0 || c >= static_cast<int>(colors_.size()))
      throw std::invalid_argument("edge color index out of range");
    used[c] = 1;
  }
  for (size_t c = 0; c < used.size(); ++c)
    if (!used[c])
      throw std::invalid_argument("empty color class: " + colors_[c]);
}

int DistanceConfiguration::color_of(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("bad pair");
  if (i > j) std::swap(i, j);
  return edge_color_[pair_index(i, j, n_)];
}

std::vector<int> DistanceConfiguration::class_sizes() const {
  std::vector<int> sizes(colors_.size(), 0);
  for (int c : edge_color_) sizes[c]++;
  return sizes;
}

int DistanceConfiguration::color_degree(int vertex, int color) const {
  int d = 0;
  for (int j = 0; j < n_; ++j)
    if (j != vertex && color_of(vertex, j) == color) d++;
  return d;
}

DistanceConfiguration DistanceConfiguration::induced(
    const std::vector<int>& points) const {
  if (points.empty()) throw std::invalid_argument("empty subset");
  for (size_t t = 0; t < points.size(); ++t) {
    if (points[t] < 0 || points[t] >= n_)
      throw std::invalid_argument("subset point out of range");
    if (t > 0 && points[t] <= points[t - 1])
      throw std::invalid_argument("subset must be sorted and distinct");
  }
  int m = static_cast<int>(points.size());
  std::vector<int> raw(pair_count(m), 0);
  std::vector<char> present(colors_.size(), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int c = color_of(points[i], points[j]);
      raw[pair_index(i, j, m)] = c;
      present[c] = 1;
    }
  std::vector<int> remap(colors_.size(), -1);
  std::vector<std::string> names;
  for (size_t c = 0; c < colors_.size(); ++c)
    if (present[c]) {
      remap[c] = static_cast<int>(names.size());
      names.push_back(colors_[c]);
    }
  if (m == 1) return DistanceConfiguration(1, {}, {});
  for (int& c : raw) c = remap[c];
  return DistanceConfiguration(m, std::move(names), std::move(raw));
}

DistanceConfiguration make_config(int n, const std::vector<EdgeSpec>& pairs) {
  if (n < 1) throw std::invalid_argument("point count must be >= 1");
  int m = DistanceConfiguration::pair_count(n);
  std::vector<std::string> token(m);
  std::vector<char> seen(m, 0);
  for (const auto& e : pairs) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n || e.i == e.j)
      throw std::invalid_argument("pair index out of range");
    int i = std::min(e.i, e.j), j = std::max(e.i, e.j);
    int idx = DistanceConfiguration::pair_index(i, j, n);
    if (seen[idx]) throw std::invalid_argument("duplicate pair");
    seen[idx] = 1;
    token[idx] = e.color;
  }
  for (int idx = 0; idx < m; ++idx)
    if (!seen[idx]) throw std::invalid_argument("missing pair");

  // colors in first-occurrence order over the row-major pair scan
  std::vector<std::string> colors;
  std::vector<int> edge_color(m);
  for (int idx = 0; idx < m; ++idx) {
    auto it = std::find(colors.begin(), colors.end(), token[idx]);
    if (it == colors.end()) {
      edge_color[idx] = static_cast<int>(colors.size());
      colors.push_back(token[idx]);
    } else {
      edge_color[idx] = static_cast<int>(it - colors.begin());
    }
  }
  return DistanceConfiguration(n, std::move(colors), std::move(edge_color));
}

MetricRealization::MetricRealization(DistanceConfiguration config,
                                     std::vector<double> values)
    : config_(std::move(config)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != config_.color_count())
    throw std::invalid_argument("one value per color required");
  double maxv = 0;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0) || !std::isfinite(values_[i]))
      throw std::invalid_argument("distances must be positive");
    maxv = std::max(maxv, values_[i]);
    for (size_t j = i + 1; j < values_.size(); ++j)
      if (values_[i] == values_[j])
        throw std::invalid_argument("values must be injective");
  }
  const double slack = 1e-12 * maxv;
  const int n = config_.n();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      double dxy = values_[config_.color_of(x, y)];
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        double dxz = values_[config_.color_of(x, z)];
        double dzy = values_[config_.color_of(z, y)];
        if (dxy > dxz + dzy + slack)
          throw std::invalid_argument("triangle inequality violated");
      }
    }
}

double MetricRealization::distance(int i, int j) const {
  if (i == j) return 0.0;
  return values_[config_.color_of(i, j)];
}

Eigen::MatrixXd MetricRealization::squared_matrix() const {
  const int n = config_.n();
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = values_[config_.color_of(i, j)];
      D(i, j) = D(j, i) = d * d;
    }
  return D;
}

MetricRealization MetricRealization::induced(
    const std::vector<int>& points) const {
  DistanceConfiguration sub = config_.induced(points);
  std::vector<double> vals;
  vals.reserve(sub.color_count());
  for (const auto& name : sub.colors()) {
    auto it = std::find(config_.colors().begin(), config_.colors().end(), name);
    vals.push_back(values_[it - config_.colors().begin()]);
  }
  return MetricRealization(std::move(sub), std::move(vals));
}

MetricRealization realize(
    const DistanceConfiguration& config,
    const std::optional<std::map<std::string, double>>& values) {
  const int c = config.color_count();
  std::vector<double> vals(c);
  if (!values) {
    for (int i = 0; i < c; ++i) vals[i] = 1.0 + (i + 1) / (2.0 * c);
  } else {
    if (static_cast<int>(values->size()) != c)
      throw std::invalid_argument("one value per color required");
    for (int i = 0; i < c; ++i) {
      auto it = values->find(config.colors()[i]);
      if (it == values->end())
        throw std::invalid_argument("no value for color " + config.colors()[i]);
      vals[i] = it->second;
    }
  }
  return MetricRealization(config, std::move(vals));
}

}  // namespace isoseq
