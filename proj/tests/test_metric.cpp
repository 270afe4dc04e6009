#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"
#include "xxz/errors.hpp"
#include "xxz/metric.hpp"
#include "xxz/spec_io.hpp"

using namespace xxz;
using test::set_of;
using test::set_of_indices;

namespace {

// The paper's definition evaluated literally: minimum a+b over products of
// exactly a left elements and b right elements with g = (left word) h (right
// word). Independent of the BFS path.
std::vector<int> oracle_distances(const MetricSpec& ms, int h) {
  const FiniteGroup& g = *ms.group;
  const int n = g.order();
  const auto left = ms.left.support();
  const auto right = ms.right.support();

  std::vector<int> dist(n, kInfiniteDistance);
  std::set<int> lpow{g.identity()};  // L^a
  for (int a = 0; a <= n; ++a) {
    std::set<int> row;
    for (int w : lpow) row.insert(g.mul(w, h));  // L^a h
    for (int b = 0; b <= n; ++b) {
      for (int x : row)
        if (dist[x] < 0 || a + b < dist[x]) dist[x] = a + b;
      std::set<int> next;
      for (int x : row)
        for (int t : right) next.insert(g.mul(x, t));
      row = std::move(next);
      if (row.empty()) break;
    }
    std::set<int> nextl;
    for (int w : lpow)
      for (int s : left) nextl.insert(g.mul(s, w));
    lpow = std::move(nextl);
    if (lpow.empty()) break;
  }
  return dist;
}

std::vector<Group> order_le_12_groups() {
  std::vector<Group> out;
  for (int n = 1; n <= 12; ++n) out.push_back(make_cyclic(n));
  out.push_back(make_torus(2, 2, 1));
  out.push_back(make_torus(2, 2, 2));
  out.push_back(make_torus(2, 4, 1));
  out.push_back(make_torus(3, 3, 1));
  out.push_back(make_torus(2, 2, 3));
  out.push_back(make_torus(2, 6, 1));
  out.push_back(test::make_s3());
  out.push_back(test::make_d4());
  out.push_back(test::make_dihedral(5));
  out.push_back(test::make_dihedral(6));
  out.push_back(test::make_a4());
  out.push_back(test::make_q8());
  out.push_back(test::make_dicyclic3());
  return out;
}

}  // namespace

TEST_CASE("word_metric examples") {
  auto z6 = make_cyclic(6);
  auto ms = MetricSpec::create(z6, set_of_indices(z6, {1, 5}), AlgebraElement(z6));
  for (int g = 0; g < 6; ++g) CHECK(word_metric(ms, g, g) == 0);
  CHECK(word_metric(ms, 3, 0) == 3);
  CHECK(word_metric(ms, 0, 3) == 3);

  auto s3 = test::make_s3();
  auto ms3 = MetricSpec::create(s3, set_of(s3, {"(12)"}), set_of(s3, {"(13)"}));
  const int t12 = resolve_element(*s3, "(12)");
  const int t13 = resolve_element(*s3, "(13)");
  const int target = s3->mul(t12, s3->mul(s3->identity(), t13));
  CHECK(word_metric(ms3, target, s3->identity()) == 2);

  // disconnected metric reports infinity
  auto empty = MetricSpec::create(z6, AlgebraElement(z6), AlgebraElement(z6));
  CHECK(word_metric(empty, 1, 0) == kInfiniteDistance);
  CHECK(word_metric(empty, 0, 0) == 0);
}

TEST_CASE("MetricSpec validates inverse-closedness") {
  auto z6 = make_cyclic(6);
  CHECK_THROWS_AS(MetricSpec::create(z6, set_of_indices(z6, {1}), AlgebraElement(z6)),
                  validation_error);
  CHECK_NOTHROW(MetricSpec::create(z6, set_of_indices(z6, {1, 5}),
                                   set_of_indices(z6, {3})));  // 3 is self-inverse
}

TEST_CASE("ball") {
  const auto spec = std::get<CodeSpec>(make_preset("haah-a", {.size = 3}));
  const auto ms = metric_sets_from_spec(spec);
  const auto& g = spec.group();

  const int center = resolve_element(*g, "yz");
  CHECK(ball(ms, center, 0) == std::vector<int>{center});

  // supports of Z_g and X_g lie inside the radius-1 ball
  const auto b1 = ball(ms, center, 1);
  CHECK(b1.size() == 13);
  auto [zop, xop] = build_stabilizer_pair(spec, 0, center);
  auto in_ball = [&](int flat) {
    const int site = QubitIndex::from_flat(flat, 1).site;
    CHECK(std::binary_search(b1.begin(), b1.end(), site));
  };
  zop.z.for_each_set(in_ball);
  xop.x.for_each_set(in_ball);

  // large radius covers the whole group once L u R generates it
  CHECK(ball(ms, center, g->order()).size() == static_cast<size_t>(g->order()));
}

TEST_CASE("metric_sets_from_spec") {
  {
    const auto spec = std::get<CodeSpec>(make_preset("haah-a", {.size = 3}));
    const auto ms = metric_sets_from_spec(spec);
    const auto& g = spec.group();
    CHECK(ms.right == set_of(g, {"1", "x", "y", "z", "-x", "-y", "-z"}));
    CHECK(ms.left == set_of(g, {"1", "xy", "xz", "yz", "-xy", "-xz", "-yz"}));
  }
  {
    const auto spec = std::get<CodeSpec>(make_preset("trivial", {.size = 4}));
    const auto ms = metric_sets_from_spec(spec);
    CHECK(ms.left == set_of_indices(spec.group(), {0}));
    CHECK(ms.right == set_of_indices(spec.group(), {0}));
  }
  {
    // both matrices contribute: supports close over {A1, A2, A1 (-) A2}
    const auto spec = std::get<CodeSpec>(make_preset("haah-b", {.size = 3}));
    const auto ms = metric_sets_from_spec(spec);
    const auto& g = spec.group();
    CHECK(ms.right == set_of(g, {"1", "x", "y", "-x", "-y"}));
    CHECK(ms.left == set_of(g, {"1", "x", "z", "-x", "-z"}));
  }
}

TEST_CASE("metric axioms on all groups of order <= 12") {
  std::mt19937 rng(41);
  for (const auto& g : order_le_12_groups()) {
    for (int draw = 0; draw < 3; ++draw) {
      AlgebraElement l(g), r(g);
      test::random_subset(rng, g, 0.3).bits().for_each_set([&](int i) {
        l.insert(i);
        l.insert(g->inv(i));
      });
      test::random_subset(rng, g, 0.3).bits().for_each_set([&](int i) {
        r.insert(i);
        r.insert(g->inv(i));
      });
      const auto ms = MetricSpec::create(g, l, r);

      const int n = g->order();
      std::vector<std::vector<int>> d(n);
      for (int h = 0; h < n; ++h) d[h] = distances_from(ms, h);

      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          CHECK(d[b][a] == d[a][b]);                    // symmetry
          CHECK((d[b][a] == 0) == (a == b));            // identity of indiscernibles
          for (int c = 0; c < n; ++c)
            if (d[b][a] >= 0 && d[c][b] >= 0) {
              REQUIRE(d[c][a] >= 0);
              CHECK(d[c][a] <= d[b][a] + d[c][b]);      // triangle
            }
        }
    }
  }
}

TEST_CASE("BFS equals the literal word-length minimum") {
  std::mt19937 rng(43);
  for (const auto& g : order_le_12_groups()) {
    AlgebraElement l(g), r(g);
    test::random_subset(rng, g, 0.35).bits().for_each_set([&](int i) {
      l.insert(i);
      l.insert(g->inv(i));
    });
    test::random_subset(rng, g, 0.35).bits().for_each_set([&](int i) {
      r.insert(i);
      r.insert(g->inv(i));
    });
    const auto ms = MetricSpec::create(g, l, r);
    for (int h = 0; h < g->order(); ++h)
      CHECK(distances_from(ms, h) == oracle_distances(ms, h));
  }
}

TEST_CASE("translation non-invariance witness exists on S_3") {
  auto s3 = test::make_s3();
  std::vector<int> transpositions;
  for (int a = 0; a < 6; ++a)
    if (a != s3->identity() && s3->inv(a) == a) transpositions.push_back(a);
  REQUIRE(transpositions.size() == 3);

  bool found = false;
  for (size_t nl = 1; nl <= transpositions.size() && !found; ++nl) {
    AlgebraElement l(s3);
    for (size_t i = 0; i < nl; ++i) l.insert(transpositions[i]);
    const auto ms = MetricSpec::create(s3, l, AlgebraElement(s3));
    std::vector<std::vector<int>> d(6);
    for (int h = 0; h < 6; ++h) d[h] = distances_from(ms, h);
    for (int g = 0; g < 6 && !found; ++g)
      for (int h = 0; h < 6 && !found; ++h)
        for (int c = 0; c < 6 && !found; ++c) {
          const int d1 = d[h][g];
          const int d2 = d[s3->mul(c, h)][s3->mul(c, g)];
          if (d1 >= 0 && d2 >= 0 && d1 != d2) found = true;
        }
  }
  CHECK(found);
}
