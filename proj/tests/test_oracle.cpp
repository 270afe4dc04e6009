#include <doctest.h>

#include <cstdlib>
#include <random>

#include "test_util.hpp"
#include "xxz/analysis.hpp"
#include "xxz/errors.hpp"
#include "xxz/oracle.hpp"
#include "xxz/spec_io.hpp"

using namespace xxz;

namespace {

StabilizerSet handmade(int n_qubits, std::vector<std::pair<Pauli, StabKind>> gens) {
  StabilizerSet s;
  s.group = make_cyclic(1);
  s.q = n_qubits;  // layout is irrelevant for handmade sets
  s.n_qubits = n_qubits;
  for (auto& [p, kind] : gens) {
    s.gens.push_back(std::move(p));
    s.tags.push_back({0, kind, 0});
  }
  return s;
}

}  // namespace

TEST_CASE("ground_space_dim_dense on tiny hand-built sets") {
  {
    Pauli z(1);
    z.z.set(0, true);
    auto s = handmade(1, {{z, StabKind::Z}});
    CHECK(ground_space_dim_dense(s) == 1);
  }
  {
    Pauli zz(2), xx(2);
    zz.z.set(0, true);
    zz.z.set(1, true);
    xx.x.set(0, true);
    xx.x.set(1, true);
    auto s = handmade(2, {{zz, StabKind::Z}, {xx, StabKind::X}});
    CHECK(ground_space_dim_dense(s) == 1);  // the Bell state
  }
  {
    // no generators: the whole space
    auto s = handmade(3, {});
    CHECK(ground_space_dim_dense(s) == 8);
  }
}

TEST_CASE("ground_space_dim_dense matches 2^(N-rank) on Haah A L=2") {
  const auto spec = std::get<CodeSpec>(make_preset("haah-a", {.size = 2}));
  const auto set = build_all_stabilizers(spec);
  CHECK(ground_space_dim_dense(set) == 64);
  const auto deg = logical_qubit_count(set);
  CHECK(uint64_t{1} << deg.logical_count == 64);
}

TEST_CASE("oracle equivalence on small commuting specs") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 12; ++trial) {
    const auto spec = test::random_spec(rng, 6, 2, false);
    if (spec.n_qubits() > 16) continue;
    const auto set = build_all_stabilizers(spec);
    const auto deg = logical_qubit_count(set);
    CHECK(ground_space_dim_dense(set) == uint64_t{1} << deg.logical_count);
  }
}

TEST_CASE("oracle caps fail fast") {
  const auto spec = std::get<CodeSpec>(make_preset("haah-a", {.size = 3}));
  const auto set = build_all_stabilizers(spec);  // 54 qubits
  CHECK_THROWS_WITH_AS(ground_space_dim_dense(set), doctest::Contains("cap"),
                       analysis_error);
  CHECK_THROWS_AS(ground_space_dim_dense(set, 20), analysis_error);

  // non-commuting input is rejected, not silently traced
  Pauli z(1), x(1);
  z.z.set(0, true);
  x.x.set(0, true);
  auto bad = handmade(1, {{z, StabKind::Z}, {x, StabKind::X}});
  CHECK_THROWS_WITH_AS(ground_space_dim_dense(bad), doctest::Contains("commute"),
                       analysis_error);
}

TEST_CASE("oracle_qubit_cap env override") {
  CHECK(oracle_qubit_cap() == kOracleDefaultQubits);
  setenv("XXZ_MAX_ORACLE_QUBITS", "22", 1);
  CHECK(oracle_qubit_cap() == 22);
  setenv("XXZ_MAX_ORACLE_QUBITS", "99", 1);
  CHECK(oracle_qubit_cap() == kOracleHardQubitLimit);
  unsetenv("XXZ_MAX_ORACLE_QUBITS");
  CHECK(oracle_qubit_cap() == kOracleDefaultQubits);
}

TEST_CASE("commute_dense basics") {
  Pauli z(1), x(1);
  z.z.set(0, true);
  x.x.set(0, true);
  CHECK(commute_dense(z, x) == 1);
  CHECK(commute_dense(z, z) == 0);
  CHECK(commute_dense(x, x) == 0);
}

TEST_CASE("commute_dense matches symplectic_product on random pairs") {
  std::mt19937 rng(53);
  std::bernoulli_distribution bit(0.4);

  // qubits: 500 random 8-qubit pairs
  for (int trial = 0; trial < 500; ++trial) {
    Pauli p(8), q(8);
    for (int i = 0; i < 8; ++i) {
      p.x.set(i, bit(rng));
      p.z.set(i, bit(rng));
      q.x.set(i, bit(rng));
      q.z.set(i, bit(rng));
    }
    CHECK(commute_dense(p, q) ==
          static_cast<int>(symplectic_product(to_qudit_pauli(p), to_qudit_pauli(q))));
    CHECK(commute_dense(p, q) == symplectic_parity(p, q));
  }

  // qudits d in {3, 5}, small N
  for (uint32_t d : {3u, 5u}) {
    std::uniform_int_distribution<uint32_t> e(0, d - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 4;
      QuditPauli p(n, d), q(n, d);
      for (int i = 0; i < n; ++i) {
        p.x[i] = e(rng);
        p.z[i] = e(rng);
        q.x[i] = e(rng);
        q.z[i] = e(rng);
      }
      p.phase = e(rng);
      q.phase = e(rng);
      CHECK(commute_dense(p, q) == symplectic_product(p, q));
    }
  }
}

TEST_CASE("qudit dense dimension agrees with d^(N-rank)") {
  auto g = make_cyclic(3);
  WeightedAlgebraElement a(g, 3), b(g, 3);
  a.set_coefficient(0, 1);
  a.set_coefficient(1, 2);
  b.set_coefficient(0, 1);
  const auto spec =
      QuditCodeSpec::create(g, 1, 3, {a}, {b}, {ZdMatrix::identity(1, 3)});
  const auto set = build_qudit_stabilizers(spec);  // 6 qutrits, 729 states
  const auto deg = logical_qubit_count(set);
  uint64_t expect = 1;
  for (int i = 0; i < deg.logical_count; ++i) expect *= 3;
  CHECK(ground_space_dim_dense(set) == expect);
}

TEST_CASE("qudit dense oracle rejects composite d") {
  QuditStabilizerSet s;
  s.group = make_cyclic(1);
  s.q = 1;
  s.d = 4;
  s.n_qudits = 2;
  CHECK_THROWS_WITH_AS(ground_space_dim_dense(s), doctest::Contains("prime"),
                       analysis_error);
}
