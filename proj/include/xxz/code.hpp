#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "xxz/algebra.hpp"
#include "xxz/bitvec.hpp"
#include "xxz/group.hpp"

namespace xxz {

/// A site carries 2q qubits: channels 1..q on the "+" layer above channels
/// 1..q on the "-" layer. Flat index = site*2q + (layer ? q : 0) + channel.
struct QubitIndex {
  int site = 0;
  int layer = 0;  // 0 = "+", 1 = "-"
  int channel = 0;  // 0-based; printed 1-based

  int flat(int q) const { return site * 2 * q + layer * q + channel; }
  static QubitIndex from_flat(int flat, int q) {
    return {flat / (2 * q), (flat / q) % 2, flat % q};
  }
};

using CodeMatrix = std::variant<BinaryMatrix, AlgebraMatrix>;

int code_matrix_dim(const CodeMatrix& m);

/// The defining data of a code: a group G, q subsets A_1..A_q and B_1..B_q,
/// and a list of pairwise-commuting q x q matrices (F2-valued, or
/// F2[G]-valued over an abelian G). Validated at construction.
class CodeSpec {
 public:
  static CodeSpec create(Group group, int q, std::vector<AlgebraElement> a,
                         std::vector<AlgebraElement> b,
                         std::vector<CodeMatrix> matrices);

  /// Skips the pairwise-commutation check. Test hook for exercising the
  /// violation-reporting paths; everything reachable from parsing or the
  /// presets goes through create().
  static CodeSpec create_unchecked(Group group, int q,
                                   std::vector<AlgebraElement> a,
                                   std::vector<AlgebraElement> b,
                                   std::vector<CodeMatrix> matrices);

  const Group& group() const { return group_; }
  int q() const { return q_; }
  int n_qubits() const { return 2 * q_ * group_->order(); }
  std::span<const AlgebraElement> a_sets() const { return a_; }
  std::span<const AlgebraElement> b_sets() const { return b_; }
  std::span<const CodeMatrix> matrices() const { return matrices_; }

 private:
  CodeSpec() = default;
  Group group_;
  int q_ = 0;
  std::vector<AlgebraElement> a_, b_;
  std::vector<CodeMatrix> matrices_;
};

/// Qudit variant: multisets with counts mod d and Z_d matrices.
class QuditCodeSpec {
 public:
  static QuditCodeSpec create(Group group, int q, uint32_t d,
                              std::vector<WeightedAlgebraElement> a,
                              std::vector<WeightedAlgebraElement> b,
                              std::vector<ZdMatrix> matrices);

  const Group& group() const { return group_; }
  int q() const { return q_; }
  uint32_t modulus() const { return d_; }
  int n_qudits() const { return 2 * q_ * group_->order(); }
  std::span<const WeightedAlgebraElement> a_sets() const { return a_; }
  std::span<const WeightedAlgebraElement> b_sets() const { return b_; }
  std::span<const ZdMatrix> matrices() const { return matrices_; }

 private:
  QuditCodeSpec() = default;
  Group group_;
  int q_ = 0;
  uint32_t d_ = 2;
  std::vector<WeightedAlgebraElement> a_, b_;
  std::vector<ZdMatrix> matrices_;
};

/// Lift a qubit spec to the qudit representation (all multiplicities 1,
/// matrices reduced mod d). Only binary-matrix specs lift.
QuditCodeSpec to_qudit_spec(const CodeSpec& spec, uint32_t d);

/// Qubit Pauli in binary symplectic form: z holds Z exponents, x holds X
/// exponents. Generators are pure-type products, so no phase is tracked.
struct Pauli {
  int n = 0;
  BitVec x, z;

  explicit Pauli(int n_qubits) : n(n_qubits), x(n_qubits), z(n_qubits) {}
  Pauli() = default;
  bool operator==(const Pauli&) const = default;
};

/// x.z' - z.x' mod 2: 0 iff the operators commute.
int symplectic_parity(const Pauli& p, const Pauli& q);

/// Generalized Pauli over Z_d with a phase exponent. The operator denoted is
/// omega^phase * prod_j U_j^{z_j} V_j^{x_j} where U is the clock (U|m> =
/// omega^m |m>), V the shift (V|m> = |m+1>), and UV = omega VU.
struct QuditPauli {
  int n = 0;
  uint32_t d = 2;
  std::vector<uint32_t> x, z;
  uint32_t phase = 0;

  QuditPauli(int n_qudits, uint32_t modulus)
      : n(n_qudits), d(modulus), x(n_qudits, 0), z(n_qudits, 0) {}
  QuditPauli() = default;
  bool operator==(const QuditPauli&) const = default;
};

/// x.z' - z.x' mod d: 0 iff the operators commute.
uint32_t symplectic_product(const QuditPauli& p, const QuditPauli& q);

/// Product in canonical form, phases included.
QuditPauli qudit_mul(const QuditPauli& p, const QuditPauli& q);
QuditPauli qudit_pow(const QuditPauli& p, uint32_t t);

enum class StabKind : uint8_t { Z, X };  // qudits: Z-type is the U generator

struct GenTag {
  int site = 0;
  StabKind kind = StabKind::Z;
  int matrix_index = 0;
  bool operator==(const GenTag&) const = default;
};

struct StabilizerSet {
  Group group;
  int q = 0;
  int n_qubits = 0;
  std::vector<Pauli> gens;
  std::vector<GenTag> tags;
};

struct QuditStabilizerSet {
  Group group;
  int q = 0;
  uint32_t d = 2;
  int n_qudits = 0;
  std::vector<QuditPauli> gens;
  std::vector<GenTag> tags;
};

/// The two stabilizers a matrix chi assigns to a site g:
///   Z: Z on (g.(chiA)_k, +k) and ((chi^T B)_k.g, -k) for k = 1..q
///   X: X on (inv((chi^T B)_k).g, +k) and (g.inv((chiA)_k), -k)
/// with supports accumulated mod 2.
std::pair<Pauli, Pauli> build_stabilizer_pair(const CodeSpec& spec,
                                              int matrix_index, int site);

/// One (Z, X) pair per (matrix, site), ordered matrix-major, then site
/// index, Z before X. Two builds of the same spec are bit-identical.
StabilizerSet build_all_stabilizers(const CodeSpec& spec);

/// Qudit generators. U places its A-multiplicities as U-exponents on
/// (gu, +k) and B-multiplicities as V-exponents on (vg, -k); V places
/// B-multiplicities as V-exponents on (v^-1 g, +k) and A-multiplicities as
/// U-exponents on (g u^-1, -k).
QuditStabilizerSet build_qudit_stabilizers(const QuditCodeSpec& spec);

/// The per-pair overlap count between Z^{C_i}_g and X^{C_j}_h contributed by
/// (u, v) with gu = v^-1 h: with w1 = C_i u_A, w2 = C_j^T v_B, w3 = C_i^T v_B,
/// w4 = C_j u_A (all mod 2), returns w2.w1 + w3.w4 over the integers.
/// Requires binary matrices; rejects the precondition gu != v^-1 h.
long overlap_count(const CodeSpec& spec, int i, int j, int g, int h, int u, int v);

}  // namespace xxz
