#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isoseq {

/// Edge-coloring of the complete graph on n points: records which unordered
/// pairs share a distance (the color), never the distance values. This is the
/// combinatorial residue of a finite metric space; two point subsets are
/// isometric at this level iff some bijection matches their pair colors.
///
/// Immutable after construction; safe to share across threads.
class DistanceConfiguration {
 public:
  DistanceConfiguration() = default;

  /// `edge_color[pair_index(i,j,n)]` is the color index of pair {i,j}.
  /// Throws std::invalid_argument on totality/emptiness violations.
  DistanceConfiguration(int n, std::vector<std::string> colors,
                        std::vector<int> edge_color);

  int n() const { return n_; }
  int color_count() const { return static_cast<int>(colors_.size()); }
  const std::vector<std::string>& colors() const { return colors_; }
  const std::vector<int>& edge_colors() const { return edge_color_; }

  int color_of(int i, int j) const;  // i != j, both in [0,n)

  /// Edges per color.
  std::vector<int> class_sizes() const;

  /// Alpha-degree of a vertex: number of incident edges of that color.
  int color_degree(int vertex, int color) const;

  /// Subconfiguration induced on `points` (sorted, distinct). Colors that no
  /// longer occur are dropped; surviving colors keep their relative order.
  DistanceConfiguration induced(const std::vector<int>& points) const;

  static int pair_count(int n) { return n * (n - 1) / 2; }
  static int pair_index(int i, int j, int n);  // requires i < j

  bool operator==(const DistanceConfiguration&) const = default;

 private:
  int n_ = 0;
  std::vector<std::string> colors_;
  std::vector<int> edge_color_;
};

struct EdgeSpec {
  int i = 0;
  int j = 0;
  std::string color;
};

/// Builds a configuration from explicit pair colorings. Every pair {i,j} with
/// 0 <= i < j < n must appear exactly once. Colors are reordered canonically
/// by first occurrence when scanning pairs (0,1),(0,2),...,(n-2,n-1).
DistanceConfiguration make_config(int n, const std::vector<EdgeSpec>& pairs);

/// A configuration together with an injective color -> positive distance
/// assignment satisfying the triangle inequality.
class MetricRealization {
 public:
  MetricRealization() = default;
  MetricRealization(DistanceConfiguration config, std::vector<double> values);

  const DistanceConfiguration& config() const { return config_; }
  const std::vector<double>& values() const { return values_; }
  double value_of(int color) const { return values_.at(color); }
  double distance(int i, int j) const;
  int n() const { return config_.n(); }

  /// Matrix of squared distances, zero diagonal.
  Eigen::MatrixXd squared_matrix() const;

  MetricRealization induced(const std::vector<int>& points) const;

 private:
  DistanceConfiguration config_;
  std::vector<double> values_;  // by color index
};

/// Realizes a configuration as a metric space. Without explicit values, color
/// i (0-based, c colors total) gets 1 + (i+1)/(2c); all defaults lie in
/// (1, 1.5], so the triangle inequality holds for any configuration.
MetricRealization realize(
    const DistanceConfiguration& config,
    const std::optional<std::map<std::string, double>>& values = std::nullopt);

/// Point set in R^dim; rows of `coords` are points.
struct PointSet {
  int dim = 0;
  Eigen::MatrixXd coords;
  int size() const { return static_cast<int>(coords.rows()); }
};

/// Metric realization of a point set. Pairwise distances whose relative gap
/// stays below `tol` are merged into one color (single linkage on the sorted
/// distance list); each color's value is the mean distance of its group.
/// Colors are named d1, d2, ... in increasing distance order.
MetricRealization from_points(const PointSet& pts, double tol = 1e-9);

enum class Family {
  complete,
  complete_bipartite,
  star,
  matching_complement,
  pentagon,
  kn_minus_k2,
  graph_metric,
  example1,
  example2,
  example3,
  example4,
  cross_polytope,
  cube,
  half_cube5,
  johnson_J52,
};

struct FamilySpec {
  Family family = Family::complete;
  std::vector<long> params;
  std::vector<std::pair<int, int>> graph_edges;  // graph_metric only
};

/// Named configuration families. Colors come out in a documented canonical
/// order (alpha first; dk families by increasing distance). Throws
/// std::invalid_argument on out-of-bounds parameters.
DistanceConfiguration construct_family(const FamilySpec& spec);

Family family_from_name(const std::string& name);
std::string family_name(Family f);
std::vector<std::string> family_names();

}  // namespace isoseq
