#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xxz/bitvec.hpp"
#include "xxz/group.hpp"

namespace xxz {

/// An element of F2[G]: a subset of G stored as a |G|-bit vector.
/// Addition is symmetric difference, multiplication is convolution.
class AlgebraElement {
 public:
  explicit AlgebraElement(Group group);
  static AlgebraElement from_indices(Group group, std::span<const int> idx);
  static AlgebraElement from_names(const Group& group,
                                   std::span<const std::string> names);

  const Group& group() const { return group_; }
  int group_order() const { return coeffs_.size(); }

  bool contains(int g) const { return coeffs_.get(g); }
  void insert(int g) { coeffs_.set(g, true); }
  void erase(int g) { coeffs_.set(g, false); }
  void toggle(int g) { coeffs_.flip(g); }
  int count() const { return coeffs_.popcount(); }
  bool empty() const { return !coeffs_.any(); }
  std::vector<int> support() const;

  const BitVec& bits() const { return coeffs_; }

  /// Coefficientwise XOR; same-group precondition checked by the free
  /// symmetric_difference wrapper.
  AlgebraElement& operator^=(const AlgebraElement& o) {
    coeffs_ ^= o.coeffs_;
    return *this;
  }

  bool operator==(const AlgebraElement& o) const {
    return group_.get() == o.group_.get() && coeffs_ == o.coeffs_;
  }

 private:
  Group group_;
  BitVec coeffs_;
};

AlgebraElement symmetric_difference(const AlgebraElement& s, const AlgebraElement& t);

/// {s^-1 : s in S}.
AlgebraElement inverse_set(const AlgebraElement& s);

/// gS and Sg.
AlgebraElement left_translate(const GroupElement& g, const AlgebraElement& s);
AlgebraElement right_translate(const AlgebraElement& s, const GroupElement& g);
AlgebraElement left_translate(int g, const AlgebraElement& s);
AlgebraElement right_translate(const AlgebraElement& s, int g);

/// F2[G] product (convolution): coefficient of w is the parity of
/// |{(s,t) in S x T : st = w}|.
AlgebraElement convolve(const AlgebraElement& s, const AlgebraElement& t);

/// An element of Z_d[G]: a multiset whose counts matter mod d. Multiplicity
/// maps are folded into the coefficients (coefficient 0 means "not in the
/// set").
class WeightedAlgebraElement {
 public:
  WeightedAlgebraElement(Group group, uint32_t d);

  const Group& group() const { return group_; }
  uint32_t modulus() const { return d_; }
  int group_order() const { return static_cast<int>(coeffs_.size()); }

  uint32_t coefficient(int g) const { return coeffs_[g]; }
  void set_coefficient(int g, uint32_t c);
  void add_coefficient(int g, uint32_t c);
  bool empty() const;
  std::vector<int> support() const;

  const std::vector<uint32_t>& coefficients() const { return coeffs_; }

  bool operator==(const WeightedAlgebraElement& o) const {
    return group_.get() == o.group_.get() && d_ == o.d_ && coeffs_ == o.coeffs_;
  }

 private:
  Group group_;
  uint32_t d_;
  std::vector<uint32_t> coeffs_;
};

/// q x q matrix over F2.
class BinaryMatrix {
 public:
  explicit BinaryMatrix(int q) : q_(q), e_(static_cast<size_t>(q) * q, 0) {}
  static BinaryMatrix identity(int q);

  int dim() const { return q_; }
  uint8_t get(int r, int c) const { return e_[static_cast<size_t>(r) * q_ + c]; }
  void set(int r, int c, uint8_t v) { e_[static_cast<size_t>(r) * q_ + c] = v & 1; }

  BinaryMatrix transpose() const;
  friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b);
  bool operator==(const BinaryMatrix&) const = default;

 private:
  int q_;
  std::vector<uint8_t> e_;
};

/// q x q matrix over Z_d (qudit path).
class ZdMatrix {
 public:
  ZdMatrix(int q, uint32_t d);
  static ZdMatrix identity(int q, uint32_t d);

  int dim() const { return q_; }
  uint32_t modulus() const { return d_; }
  uint32_t get(int r, int c) const { return e_[static_cast<size_t>(r) * q_ + c]; }
  void set(int r, int c, uint32_t v) { e_[static_cast<size_t>(r) * q_ + c] = v % d_; }

  ZdMatrix transpose() const;
  friend ZdMatrix operator*(const ZdMatrix& a, const ZdMatrix& b);
  bool operator==(const ZdMatrix&) const = default;

 private:
  int q_;
  uint32_t d_;
  std::vector<uint32_t> e_;
};

/// q x q matrix with F2[G] entries. Only valid over abelian groups: the
/// commutation argument for algebra-valued matrices needs G abelian, so
/// construction rejects non-abelian groups outright.
class AlgebraMatrix {
 public:
  AlgebraMatrix(Group group, int q);
  static AlgebraMatrix identity(Group group, int q);

  const Group& group() const { return group_; }
  int dim() const { return q_; }
  const AlgebraElement& get(int r, int c) const { return e_[static_cast<size_t>(r) * q_ + c]; }
  void set(int r, int c, AlgebraElement v);

  AlgebraMatrix transpose() const;
  friend AlgebraMatrix operator*(const AlgebraMatrix& a, const AlgebraMatrix& b);
  bool operator==(const AlgebraMatrix& o) const { return q_ == o.q_ && e_ == o.e_; }

 private:
  Group group_;
  int q_;
  std::vector<AlgebraElement> e_;
};

/// (CA)_k = xor_j C_kj . A_j, with the F2 scalar 1 acting as identity and 0
/// yielding the empty set.
std::vector<AlgebraElement> matrix_apply(const BinaryMatrix& c,
                                         std::span<const AlgebraElement> a);

/// Algebra-valued variant: entries act by convolution.
std::vector<AlgebraElement> matrix_apply(const AlgebraMatrix& c,
                                         std::span<const AlgebraElement> a);

/// Z_d-linear combination of coefficient vectors, componentwise mod d.
std::vector<WeightedAlgebraElement> weighted_matrix_apply(
    const ZdMatrix& c, std::span<const WeightedAlgebraElement> a);

}  // namespace xxz
