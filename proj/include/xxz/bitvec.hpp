#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace xxz {

/// Packed bit vector over machine words. All the F2 set arithmetic and the
/// symplectic inner products run wordwise on this.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool get(int i) const {
    assert(i >= 0 && i < nbits_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i, bool v) {
    assert(i >= 0 && i < nbits_);
    uint64_t m = uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(int i) {
    assert(i >= 0 && i < nbits_);
    w_[i >> 6] ^= uint64_t{1} << (i & 63);
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  BitVec& operator^=(const BitVec& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVec&) const = default;

  int popcount() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }

  /// Parity of |a AND b|; the 1-bit inner product.
  static int and_parity(const BitVec& a, const BitVec& b) {
    assert(a.nbits_ == b.nbits_);
    uint64_t acc = 0;
    for (size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
    return std::popcount(acc) & 1;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t x = w_[wi];
      while (x) {
        int b = std::countr_zero(x);
        f(static_cast<int>(wi * 64 + b));
        x &= x - 1;
      }
    }
  }

  std::span<const uint64_t> words() const { return w_; }
  std::span<uint64_t> words() { return w_; }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace xxz
