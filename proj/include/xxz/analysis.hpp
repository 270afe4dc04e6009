#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xxz/code.hpp"
#include "xxz/linalg.hpp"
#include "xxz/metric.hpp"

namespace xxz {

struct CommutationReport {
  long total_pairs = 0;          // all unordered generator pairs
  long cross_pairs_checked = 0;  // Z-vs-X pairs actually evaluated
  struct Violation {
    int gen_i = 0, gen_j = 0;
    uint32_t value = 0;  // nonzero symplectic product
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Evaluates the symplectic product on every Z-type/X-type generator pair.
/// Same-type pairs commute structurally (their symplectic halves live on
/// disjoint layers for every built set) and are counted without enumeration.
CommutationReport verify_commutation(const StabilizerSet& s);
CommutationReport verify_commutation(const QuditStabilizerSet& s);

struct MatrixCommuteResult {
  bool ok = true;
  int witness_i = -1, witness_j = -1;
  std::string detail;  // the differing products, when !ok
};

MatrixCommuteResult matrices_commute_check(std::span<const CodeMatrix> ms);
MatrixCommuteResult matrices_commute_check(std::span<const ZdMatrix> ms);

struct DegeneracyResult {
  int n_qubits = 0;
  int n_generators = 0;
  int rank = 0;
  int logical_count = 0;  // k = N - rank; ground-space degeneracy is d^k
  uint32_t d = 2;
};

/// Builds the m x 2N symplectic generator matrix and returns k = N - rank.
/// Refuses non-commuting sets; the qudit path also refuses composite d and
/// stabilizer groups whose generator dependencies carry a nonzero phase.
DegeneracyResult logical_qubit_count(const StabilizerSet& s);
DegeneracyResult logical_qubit_count(const QuditStabilizerSet& s);
DegeneracyResult logical_qubit_count(const CodeSpec& spec);
DegeneracyResult logical_qubit_count(const QuditCodeSpec& spec);

using AnySpec = std::variant<CodeSpec, QuditCodeSpec>;

struct SweepRow {
  std::string label;
  std::optional<DegeneracyResult> result;
  std::string error;  // populated when the row failed; the sweep continues
};

/// One DegeneracyResult row per entry; failures are reported inline.
std::vector<SweepRow> degeneracy_sweep(
    const std::vector<std::pair<std::string, AnySpec>>& entries);

struct LocalityResult {
  bool finite = true;
  int radius = 0;  // meaningful when finite
};

/// Max over all generators of the word-metric distance from the generator's
/// site to any qubit in its support, under metric_sets_from_spec. The
/// construction guarantees radius <= 1; a disconnected metric is reported as
/// not finite.
LocalityResult locality_check(const CodeSpec& spec);
LocalityResult locality_check(const QuditCodeSpec& spec);

}  // namespace xxz
