#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "isoseq/config.hpp"

namespace isoseq {

enum class Shape {
  pentagon,
  star,
  complete_bipartite,
  complement_of_matching,
  matching,
  union_of_cliques,
  kn_minus_k2,
  other,
};

std::string shape_name(Shape s);

/// Recognized shape of one color class, with a re-validatable witness.
/// Recognition runs in the fixed priority order pentagon > star >
/// complete_bipartite > complement_of_matching > matching > union_of_cliques
/// > kn_minus_k2 > other, so graphs in several classes get a deterministic
/// verdict. complement_of_matching requires at least two matching edges; the
/// one-edge complement is reported as kn_minus_k2.
struct ShapeVerdict {
  Shape shape = Shape::other;
  int center = -1;                               // star
  std::vector<std::vector<int>> sides;           // complete_bipartite
  std::vector<std::pair<int, int>> matching;     // matching / complement_of_matching
  std::pair<int, int> missing_edge{-1, -1};      // kn_minus_k2
  std::vector<std::vector<int>> components;      // union_of_cliques
};

ShapeVerdict recognize_shape(const DistanceConfiguration& config, int color);

/// Re-checks a verdict's witness directly against the color class.
bool validate_witness(const DistanceConfiguration& config, int color,
                      const ShapeVerdict& v);

struct TheoremReport {
  std::string theorem;
  bool applicable = false;
  bool holds = true;  // vacuously true when not applicable
  nlohmann::json details;
};

/// a_k = 1 for some k in [2, n-2] forces a_2 = 1.
TheoremReport verify_thm_a1(const DistanceConfiguration& config);

/// a_k = 2 for some k with 4 <= k and k(k-1) <= n forces a_2 = 2 with a color
/// class K_n minus an edge or a star K_{1,n-1}.
TheoremReport verify_thm_a2(const DistanceConfiguration& config);

/// For n >= 5 and a_3 <= 3: a_2 <= a_3; when a_2 = a_3 = 3, the triangle
/// class set matches one of the four canonical shapes up to color bijection.
TheoremReport classify_a3(const DistanceConfiguration& config);

/// For n >= 5 and a_3 = 2: some color class (or its complement partner) is a
/// complete bipartite graph, the complement of a matching, or the pentagon.
TheoremReport classify_a3_eq_2(const DistanceConfiguration& config);

/// For n >= 5 and a_2 = a_3 = 3: exhibits an isomorphism onto one of the
/// canonical example families (vertex bijection plus color bijection),
/// searched by canonical form comparison and re-validated.
TheoremReport verify_thm_a4(const DistanceConfiguration& config);

}  // namespace isoseq
