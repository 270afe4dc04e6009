#include "xxz/metric.hpp"

#include <queue>
#include <stdexcept>
#include <variant>

#include "xxz/errors.hpp"

namespace xxz {

MetricSpec MetricSpec::create(Group group, AlgebraElement left, AlgebraElement right) {
  if (left.group().get() != group.get() || right.group().get() != group.get())
    throw std::invalid_argument("MetricSpec: sets over a different group");
  if (!(inverse_set(left) == left))
    throw validation_error("metric left set is not inverse-closed");
  if (!(inverse_set(right) == right))
    throw validation_error("metric right set is not inverse-closed");
  return {std::move(group), std::move(left), std::move(right)};
}

std::vector<int> distances_from(const MetricSpec& ms, int origin) {
  const FiniteGroup& g = *ms.group;
  if (origin < 0 || origin >= g.order())
    throw std::invalid_argument("distances_from: element out of range");
  const auto left = ms.left.support();
  const auto right = ms.right.support();

  std::vector<int> dist(g.order(), kInfiniteDistance);
  dist[origin] = 0;
  std::queue<int> todo;
  todo.push(origin);
  while (!todo.empty()) {
    const int cur = todo.front();
    todo.pop();
    const int dnext = dist[cur] + 1;
    for (int s : left) {
      const int nxt = g.mul(s, cur);
      if (dist[nxt] < 0) {
        dist[nxt] = dnext;
        todo.push(nxt);
      }
    }
    for (int t : right) {
      const int nxt = g.mul(cur, t);
      if (dist[nxt] < 0) {
        dist[nxt] = dnext;
        todo.push(nxt);
      }
    }
  }
  return dist;
}

int word_metric(const MetricSpec& ms, int g, int h) {
  if (g < 0 || g >= ms.group->order() || h < 0 || h >= ms.group->order())
    throw std::invalid_argument("word_metric: element out of range");
  return distances_from(ms, h)[g];
}

std::vector<int> ball(const MetricSpec& ms, int g, int radius) {
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  const auto dist = distances_from(ms, g);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(dist.size()); ++i)
    if (dist[i] >= 0 && dist[i] <= radius) out.push_back(i);
  return out;
}

namespace {

AlgebraElement inverse_closure_union(const Group& group,
                                     const std::vector<AlgebraElement>& sets) {
  AlgebraElement acc(group);
  for (const auto& s : sets) {
    s.bits().for_each_set([&](int i) {
      acc.insert(i);
      acc.insert(group->inv(i));
    });
  }
  return acc;
}

}  // namespace

MetricSpec metric_sets_from_spec(const CodeSpec& spec) {
  std::vector<AlgebraElement> ca_all, ctb_all;
  for (const auto& m : spec.matrices()) {
    auto apply = [&](bool transpose) {
      if (const auto* b = std::get_if<BinaryMatrix>(&m))
        return matrix_apply(transpose ? b->transpose() : *b,
                            transpose ? spec.b_sets() : spec.a_sets());
      const auto& am = std::get<AlgebraMatrix>(m);
      return matrix_apply(transpose ? am.transpose() : am,
                          transpose ? spec.b_sets() : spec.a_sets());
    };
    for (auto& s : apply(false)) ca_all.push_back(std::move(s));
    for (auto& s : apply(true)) ctb_all.push_back(std::move(s));
  }
  return MetricSpec::create(spec.group(),
                            inverse_closure_union(spec.group(), ctb_all),
                            inverse_closure_union(spec.group(), ca_all));
}

MetricSpec metric_sets_from_spec(const QuditCodeSpec& spec) {
  auto supports = [&](bool transpose) {
    std::vector<AlgebraElement> out;
    for (const auto& m : spec.matrices()) {
      const auto applied =
          weighted_matrix_apply(transpose ? m.transpose() : m,
                                transpose ? spec.b_sets() : spec.a_sets());
      for (const auto& w : applied) {
        AlgebraElement s(spec.group());
        for (int i : w.support()) s.insert(i);
        out.push_back(std::move(s));
      }
    }
    return out;
  };
  const auto ca_all = supports(false);
  const auto ctb_all = supports(true);
  return MetricSpec::create(spec.group(),
                            inverse_closure_union(spec.group(), ctb_all),
                            inverse_closure_union(spec.group(), ca_all));
}

}  // namespace xxz
