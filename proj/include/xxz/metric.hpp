#pragma once

#include <vector>

#include "xxz/algebra.hpp"
#include "xxz/code.hpp"
#include "xxz/group.hpp"

namespace xxz {

/// Word-metric data: two inverse-closed subsets. d(g, h) is the minimal a+b
/// over factorizations g = s_1..s_a h t_1..t_b with s_i in left, t_j in
/// right; infinity when no factorization exists.
struct MetricSpec {
  Group group;
  AlgebraElement left, right;

  /// Validates that both sets are inverse-closed.
  static MetricSpec create(Group group, AlgebraElement left, AlgebraElement right);
};

inline constexpr int kInfiniteDistance = -1;

/// d(x, origin) for every x, via BFS from origin over the moves x -> sx
/// (s in left) and x -> xt (t in right). Interleavings collapse to the
/// s..s h t..t normal form because left and right moves act on opposite
/// sides, so plain BFS computes the metric. Unreachable: kInfiniteDistance.
std::vector<int> distances_from(const MetricSpec& ms, int origin);

int word_metric(const MetricSpec& ms, int g, int h);

/// {h : d(h, g) <= r}, ascending element indices.
std::vector<int> ball(const MetricSpec& ms, int g, int radius);

/// The locality sets a code induces: right is the union over all matrices
/// chi and channels k of (chi A)_k and its inverse-set, left the same for
/// (chi^T B)_k. Both come out inverse-closed by construction.
MetricSpec metric_sets_from_spec(const CodeSpec& spec);
MetricSpec metric_sets_from_spec(const QuditCodeSpec& spec);

}  // namespace xxz
