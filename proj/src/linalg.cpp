#include "xxz/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "xxz/errors.hpp"

namespace xxz {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
      w_(static_cast<size_t>(rows) * wpr_, 0) {}

bool BitMatrix::get(int r, int c) const {
  return (w_[static_cast<size_t>(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1;
}

void BitMatrix::set(int r, int c, bool v) {
  uint64_t& word = w_[static_cast<size_t>(r) * wpr_ + (c >> 6)];
  uint64_t m = uint64_t{1} << (c & 63);
  if (v)
    word |= m;
  else
    word &= ~m;
}

void BitMatrix::set_row(int r, const BitVec& row) {
  assert(row.size() == cols_);
  auto ws = row.words();
  std::copy(ws.begin(), ws.end(), w_.begin() + static_cast<size_t>(r) * wpr_);
}

void BitMatrix::xor_rows(int dst, int src) {
  uint64_t* d = w_.data() + static_cast<size_t>(dst) * wpr_;
  const uint64_t* s = w_.data() + static_cast<size_t>(src) * wpr_;
  for (int i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::swap_ranges(w_.begin() + static_cast<size_t>(a) * wpr_,
                   w_.begin() + static_cast<size_t>(a + 1) * wpr_,
                   w_.begin() + static_cast<size_t>(b) * wpr_);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

namespace {

// Forward elimination on a working copy. Pivoting is first-nonzero-column,
// lowest-row, which keeps results deterministic. Returns pivot column list;
// when rref is true the matrix ends in reduced row echelon form.
struct Elim {
  BitMatrix m;
  std::vector<int> pivot_cols;
};

Elim eliminate(BitMatrix m, bool rref) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m.get(i, c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(p, r);
    const int lo = rref ? 0 : r + 1;
    for (int i = lo; i < rows; ++i)
      if (i != r && m.get(i, c)) m.xor_rows(i, r);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

int rank_f2(const BitMatrix& m) {
  return static_cast<int>(eliminate(m, /*rref=*/false).pivot_cols.size());
}

std::vector<BitVec> kernel_basis_f2(const BitMatrix& m) {
  Elim e = eliminate(m, /*rref=*/true);
  const int cols = m.cols();
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t i = 0; i < e.pivot_cols.size(); ++i) pivot_of_col[e.pivot_cols[i]] = static_cast<int>(i);

  std::vector<BitVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;  // bound column
    BitVec v(cols);
    v.set(c, true);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i)
      if (e.m.get(static_cast<int>(i), c)) v.set(e.pivot_cols[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t f = 2; static_cast<uint64_t>(f) * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

namespace {

uint32_t pow_mod(uint32_t base, uint32_t exp, uint32_t p) {
  uint64_t acc = 1, b = base % p;
  while (exp) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

uint32_t inv_mod(uint32_t a, uint32_t p) { return pow_mod(a, p - 2, p); }

struct ElimFp {
  PrimeFieldMatrix m;
  std::vector<int> pivot_cols;
};

ElimFp eliminate_fp(PrimeFieldMatrix m, bool rref) {
  const int rows = m.rows(), cols = m.cols();
  const uint32_t p = m.modulus();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m.get(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) {
        uint32_t t = m.get(piv, j);
        m.set(piv, j, m.get(r, j));
        m.set(r, j, t);
      }
    const uint32_t inv = inv_mod(m.get(r, c), p);
    for (int j = 0; j < cols; ++j)
      m.set(r, j, static_cast<uint32_t>(static_cast<uint64_t>(m.get(r, j)) * inv % p));
    const int lo = rref ? 0 : r + 1;
    for (int i = lo; i < rows; ++i) {
      if (i == r) continue;
      const uint32_t f = m.get(i, c);
      if (!f) continue;
      for (int j = 0; j < cols; ++j) {
        uint64_t v = m.get(i, j) + static_cast<uint64_t>(p - f) * m.get(r, j) % p;
        m.set(i, j, static_cast<uint32_t>(v % p));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(int rows, int cols, uint32_t p)
    : rows_(rows), cols_(cols), p_(p),
      e_(static_cast<size_t>(rows) * cols, 0) {
  if (!is_prime(p))
    throw validation_error(
        "modulus " + std::to_string(p) +
        " is composite; degeneracy over composite d is unsupported "
        "(it needs Smith normal form over Z_d, which is out of scope)");
}

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
  PrimeFieldMatrix t(cols_, rows_, p_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
  return t;
}

int rank_fp(const PrimeFieldMatrix& m) {
  return static_cast<int>(eliminate_fp(m, /*rref=*/false).pivot_cols.size());
}

std::vector<std::vector<uint32_t>> kernel_basis_fp(const PrimeFieldMatrix& m) {
  ElimFp e = eliminate_fp(m, /*rref=*/true);
  const int cols = m.cols();
  const uint32_t p = m.modulus();
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t i = 0; i < e.pivot_cols.size(); ++i) pivot_of_col[e.pivot_cols[i]] = static_cast<int>(i);

  std::vector<std::vector<uint32_t>> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<uint32_t> v(cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
      uint32_t coef = e.m.get(static_cast<int>(i), c);
      if (coef) v[e.pivot_cols[i]] = p - coef;  // pivot + coef * free = 0
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace xxz
