#include "xxz/analysis.hpp"

#include <map>
#include <sstream>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

template <typename Set, typename Eval>
CommutationReport verify_pairs(const Set& s, Eval&& eval) {
  CommutationReport rep;
  const long m = static_cast<long>(s.gens.size());
  rep.total_pairs = m * (m - 1) / 2;

  std::vector<int> zidx, xidx;
  for (int i = 0; i < m; ++i)
    (s.tags[i].kind == StabKind::Z ? zidx : xidx).push_back(i);

  for (int i : zidx)
    for (int j : xidx) {
      ++rep.cross_pairs_checked;
      const uint32_t v = eval(s.gens[i], s.gens[j]);
      if (v) rep.violations.push_back({i, j, v});
    }
  return rep;
}

}  // namespace

CommutationReport verify_commutation(const StabilizerSet& s) {
  return verify_pairs(s, [](const Pauli& a, const Pauli& b) {
    return static_cast<uint32_t>(symplectic_parity(a, b));
  });
}

CommutationReport verify_commutation(const QuditStabilizerSet& s) {
  return verify_pairs(s, [](const QuditPauli& a, const QuditPauli& b) {
    return symplectic_product(a, b);
  });
}

namespace {

std::string binary_matrix_str(const BinaryMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.dim(); ++r) {
    if (r) os << "; ";
    for (int c = 0; c < m.dim(); ++c) {
      if (c) os << " ";
      os << static_cast<int>(m.get(r, c));
    }
  }
  os << "]";
  return os.str();
}

}  // namespace

MatrixCommuteResult matrices_commute_check(std::span<const CodeMatrix> ms) {
  for (size_t i = 0; i < ms.size(); ++i)
    if (std::holds_alternative<BinaryMatrix>(ms[i]) !=
        std::holds_alternative<BinaryMatrix>(ms[0]))
      throw std::invalid_argument("matrices_commute_check: mixed matrix kinds");

  MatrixCommuteResult res;
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j) {
      if (const auto* bi = std::get_if<BinaryMatrix>(&ms[i])) {
        const auto& bj = std::get<BinaryMatrix>(ms[j]);
        const auto pij = *bi * bj, pji = bj * *bi;
        if (!(pij == pji)) {
          res.ok = false;
          res.witness_i = static_cast<int>(i);
          res.witness_j = static_cast<int>(j);
          res.detail = "products " + binary_matrix_str(pij) + " vs " +
                       binary_matrix_str(pji);
          return res;
        }
      } else {
        const auto& ai = std::get<AlgebraMatrix>(ms[i]);
        const auto& aj = std::get<AlgebraMatrix>(ms[j]);
        if (!((ai * aj) == (aj * ai))) {
          res.ok = false;
          res.witness_i = static_cast<int>(i);
          res.witness_j = static_cast<int>(j);
          res.detail = "algebra-valued products differ";
          return res;
        }
      }
    }
  return res;
}

MatrixCommuteResult matrices_commute_check(std::span<const ZdMatrix> ms) {
  MatrixCommuteResult res;
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j)
      if (!((ms[i] * ms[j]) == (ms[j] * ms[i]))) {
        res.ok = false;
        res.witness_i = static_cast<int>(i);
        res.witness_j = static_cast<int>(j);
        res.detail = "Z_d products differ";
        return res;
      }
  return res;
}

namespace {

void require_commuting(const CommutationReport& rep, const char* what) {
  if (rep.ok()) return;
  const auto& v = rep.violations.front();
  throw analysis_error(std::string(what) + ": stabilizers do not commute (generators " +
                       std::to_string(v.gen_i) + " and " + std::to_string(v.gen_j) +
                       ", symplectic value " + std::to_string(v.value) + ", " +
                       std::to_string(rep.violations.size()) + " violating pairs)");
}

}  // namespace

DegeneracyResult logical_qubit_count(const StabilizerSet& s) {
  require_commuting(verify_commutation(s), "logical_qubit_count");

  const int n = s.n_qubits;
  const int m = static_cast<int>(s.gens.size());
  BitMatrix mat(m, 2 * n);
  for (int i = 0; i < m; ++i) {
    BitVec row(2 * n);
    s.gens[i].x.for_each_set([&](int b) { row.set(b, true); });
    s.gens[i].z.for_each_set([&](int b) { row.set(n + b, true); });
    mat.set_row(i, row);
  }
  const int r = rank_f2(mat);
  return {n, m, r, n - r, 2};
}

DegeneracyResult logical_qubit_count(const QuditStabilizerSet& s) {
  if (!is_prime(s.d))
    throw analysis_error("degeneracy over composite d = " + std::to_string(s.d) +
                         " is unsupported (needs Smith normal form; use a prime d)");
  require_commuting(verify_commutation(s), "logical_qubit_count");

  const int n = s.n_qudits;
  const int m = static_cast<int>(s.gens.size());
  PrimeFieldMatrix mat(m, 2 * n, s.d);
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < n; ++c) {
      mat.set(i, c, s.gens[i].x[c]);
      mat.set(i, n + c, s.gens[i].z[c]);
    }
  const int r = rank_fp(mat);

  // A dependency among generators must multiply out to the exact identity,
  // not omega^a times it; otherwise k = N - rank overcounts.
  for (const auto& t : kernel_basis_fp(mat.transpose())) {
    QuditPauli acc(n, s.d);
    for (int i = 0; i < m; ++i)
      if (t[i]) acc = qudit_mul(acc, qudit_pow(s.gens[i], t[i]));
    if (acc.phase != 0)
      throw analysis_error("phase-obstructed stabilizer group: a generator "
                           "dependency multiplies to omega^" +
                           std::to_string(acc.phase) + " times the identity");
  }
  return {n, m, r, n - r, s.d};
}

DegeneracyResult logical_qubit_count(const CodeSpec& spec) {
  return logical_qubit_count(build_all_stabilizers(spec));
}

DegeneracyResult logical_qubit_count(const QuditCodeSpec& spec) {
  return logical_qubit_count(build_qudit_stabilizers(spec));
}

std::vector<SweepRow> degeneracy_sweep(
    const std::vector<std::pair<std::string, AnySpec>>& entries) {
  std::vector<SweepRow> rows;
  rows.reserve(entries.size());
  for (const auto& [label, spec] : entries) {
    SweepRow row;
    row.label = label;
    try {
      row.result = std::visit([](const auto& s) { return logical_qubit_count(s); }, spec);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

template <typename Set>
LocalityResult locality_of(const Set& s, const MetricSpec& ms, int two_q) {
  LocalityResult res{true, 0};
  std::map<int, std::vector<int>> dist_cache;
  for (size_t gi = 0; gi < s.gens.size(); ++gi) {
    const int site = s.tags[gi].site;
    auto it = dist_cache.find(site);
    if (it == dist_cache.end())
      it = dist_cache.emplace(site, distances_from(ms, site)).first;
    const auto& dist = it->second;

    auto visit_support = [&](int flat) {
      const int qsite = flat / two_q;
      const int d = dist[qsite];
      if (d == kInfiniteDistance)
        res.finite = false;
      else if (d > res.radius)
        res.radius = d;
    };
    if constexpr (std::is_same_v<Set, StabilizerSet>) {
      s.gens[gi].x.for_each_set(visit_support);
      s.gens[gi].z.for_each_set(visit_support);
    } else {
      for (int c = 0; c < s.gens[gi].n; ++c)
        if (s.gens[gi].x[c] || s.gens[gi].z[c]) visit_support(c);
    }
  }
  return res;
}

}  // namespace

LocalityResult locality_check(const CodeSpec& spec) {
  const auto ms = metric_sets_from_spec(spec);
  return locality_of(build_all_stabilizers(spec), ms, 2 * spec.q());
}

LocalityResult locality_check(const QuditCodeSpec& spec) {
  const auto ms = metric_sets_from_spec(spec);
  return locality_of(build_qudit_stabilizers(spec), ms, 2 * spec.q());
}

}  // namespace xxz
