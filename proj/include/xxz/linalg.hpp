#pragma once

#include <cstdint>
#include <vector>

#include "xxz/bitvec.hpp"

namespace xxz {

/// Dense bit matrix, row-major packed words. The rank/kernel routines are
/// the workhorse behind every degeneracy number.
class BitMatrix {
 public:
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  void set_row(int r, const BitVec& row);

  void xor_rows(int dst, int src);  // row[dst] ^= row[src]
  void swap_rows(int a, int b);

  BitMatrix transpose() const;

 private:
  int rows_, cols_, wpr_;
  std::vector<uint64_t> w_;
};

/// Rank over F2 by wordwise row reduction; the input is copied, not mutated.
int rank_f2(const BitMatrix& m);

/// Basis of {v : Mv = 0}; size is cols - rank. Every returned vector
/// satisfies Mv = 0 exactly.
std::vector<BitVec> kernel_basis_f2(const BitMatrix& m);

/// Dense matrix over a prime field F_p.
class PrimeFieldMatrix {
 public:
  /// Throws validation_error when p is composite (the composite-d qudit
  /// degeneracy is out of scope; Smith normal form would be needed).
  PrimeFieldMatrix(int rows, int cols, uint32_t p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint32_t modulus() const { return p_; }

  uint32_t get(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, uint32_t v) { e_[static_cast<size_t>(r) * cols_ + c] = v % p_; }

  PrimeFieldMatrix transpose() const;

 private:
  int rows_, cols_;
  uint32_t p_;
  std::vector<uint32_t> e_;
};

int rank_fp(const PrimeFieldMatrix& m);

/// Basis of {v : Mv = 0} over F_p.
std::vector<std::vector<uint32_t>> kernel_basis_fp(const PrimeFieldMatrix& m);

bool is_prime(uint32_t n);

}  // namespace xxz
