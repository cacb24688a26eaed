#pragma once

#include <array>
#include <set>
#include <vector>

#include "isoseq/config.hpp"

namespace isoseq {

/// Canonical form of a k-subset: the lexicographically least flattened color
/// matrix over all k! orderings. Two subsets of the same configuration have
/// equal keys iff they are isometric (a color-preserving bijection exists).
struct SubsetKey {
  int k = 0;
  std::vector<int> key;  // column order: (0,1),(0,2),(1,2),(0,3),...

  auto operator<=>(const SubsetKey&) const = default;
};

/// Brute-force minimization over orderings with prefix pruning; k <= 12.
SubsetKey canonical_key(const DistanceConfiguration& config,
                        const std::vector<int>& subset);

/// Number of isometry classes of k-subsets (a_k), by canonical keys over all
/// C(n,k) subsets. OpenMP-parallel; result independent of partitioning.
long count_classes(const DistanceConfiguration& config, int k);
long count_classes_serial(const DistanceConfiguration& config, int k);

/// The vector (a_1, ..., a_n). Always a_1 = a_n = 1, and a_2 equals the color
/// count. Computed by one sweep over all 2^n subsets bucketed by size; n <= 12.
struct IsometricSequence {
  std::vector<long> a;
  bool operator==(const IsometricSequence&) const = default;
};

IsometricSequence isometric_sequence(const DistanceConfiguration& config);
IsometricSequence isometric_sequence_serial(const DistanceConfiguration& config);

/// Per-color counts of ordered pairs (s,t), s in S, t in T, s != t.
struct ProfileVector {
  std::vector<long> counts;  // by color index
  bool operator==(const ProfileVector&) const = default;
};

ProfileVector profile(const DistanceConfiguration& config,
                      const std::vector<int>& S, const std::vector<int>& T);

/// M_k: colors alpha such that some vertex has at least k incident
/// alpha-edges. M_n is empty, M_1 is every color, and the chain is monotone.
std::set<int> m_set(const DistanceConfiguration& config, int k);

/// A color set Gamma is closed when the union graph of its classes is a
/// disjoint union of cliques; equivalently, any triangle with two side colors
/// in Gamma has its third side in Gamma. Both routes are evaluated and must
/// agree (logic_error otherwise).
bool is_closed(const DistanceConfiguration& config, const std::set<int>& gamma);

/// Isometry classes of triangles as sorted color triples. For k = 3 the color
/// multiset determines the class, so this is a fast exact route to A_3.
std::set<std::array<int, 3>> triangle_classes(const DistanceConfiguration& config);

/// Whole-configuration canonical form: colors are renamed by first occurrence
/// along the flattened sequence, then the sequence is minimized over all n!
/// vertex orderings. Equal keys characterize configuration isomorphism
/// (vertex bijection plus color bijection). n <= 12.
struct CanonicalConfig {
  std::vector<int> key;
  std::vector<int> vertex_order;   // position -> original vertex
  std::vector<int> color_relabel;  // original color -> canonical color
  bool operator==(const CanonicalConfig& o) const { return key == o.key; }
};

CanonicalConfig canonical_config(const DistanceConfiguration& config);

/// True iff `config` (colors already normalized by first occurrence along the
/// flattened column order) is the least element of its orbit.
bool is_canonical_coloring(int n, const std::vector<int>& edge_colors_column_order);

}  // namespace isoseq
