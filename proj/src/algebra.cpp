#include "xxz/algebra.hpp"

#include <stdexcept>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

void require_same_group(const Group& a, const Group& b, const char* what) {
  if (a.get() != b.get())
    throw std::invalid_argument(std::string(what) + ": operands belong to different groups");
}

}  // namespace

AlgebraElement::AlgebraElement(Group group)
    : group_(std::move(group)), coeffs_(group_ ? group_->order() : 0) {
  if (!group_) throw std::invalid_argument("AlgebraElement: null group");
}

AlgebraElement AlgebraElement::from_indices(Group group, std::span<const int> idx) {
  AlgebraElement s(std::move(group));
  for (int i : idx) {
    if (i < 0 || i >= s.group_order())
      throw validation_error("element index " + std::to_string(i) + " out of range");
    s.insert(i);
  }
  return s;
}

AlgebraElement AlgebraElement::from_names(const Group& group,
                                          std::span<const std::string> names) {
  AlgebraElement s(group);
  for (const auto& n : names) s.insert(resolve_element(*group, n));
  return s;
}

std::vector<int> AlgebraElement::support() const {
  std::vector<int> out;
  coeffs_.for_each_set([&](int i) { out.push_back(i); });
  return out;
}

AlgebraElement symmetric_difference(const AlgebraElement& s, const AlgebraElement& t) {
  require_same_group(s.group(), t.group(), "symmetric_difference");
  AlgebraElement out = s;
  out ^= t;
  return out;
}

AlgebraElement inverse_set(const AlgebraElement& s) {
  AlgebraElement out(s.group());
  const FiniteGroup& g = *s.group();
  s.bits().for_each_set([&](int i) { out.insert(g.inv(i)); });
  return out;
}

AlgebraElement left_translate(int g, const AlgebraElement& s) {
  AlgebraElement out(s.group());
  const FiniteGroup& grp = *s.group();
  s.bits().for_each_set([&](int i) { out.insert(grp.mul(g, i)); });
  return out;
}

AlgebraElement right_translate(const AlgebraElement& s, int g) {
  AlgebraElement out(s.group());
  const FiniteGroup& grp = *s.group();
  s.bits().for_each_set([&](int i) { out.insert(grp.mul(i, g)); });
  return out;
}

AlgebraElement left_translate(const GroupElement& g, const AlgebraElement& s) {
  require_same_group(g.group, s.group(), "left_translate");
  return left_translate(g.index, s);
}

AlgebraElement right_translate(const AlgebraElement& s, const GroupElement& g) {
  require_same_group(g.group, s.group(), "right_translate");
  return right_translate(s, g.index);
}

AlgebraElement convolve(const AlgebraElement& s, const AlgebraElement& t) {
  require_same_group(s.group(), t.group(), "convolve");
  AlgebraElement out(s.group());
  const FiniteGroup& g = *s.group();
  s.bits().for_each_set([&](int a) {
    t.bits().for_each_set([&](int b) { out.toggle(g.mul(a, b)); });
  });
  return out;
}

WeightedAlgebraElement::WeightedAlgebraElement(Group group, uint32_t d)
    : group_(std::move(group)), d_(d) {
  if (!group_) throw std::invalid_argument("WeightedAlgebraElement: null group");
  if (d_ < 2) throw validation_error("qudit modulus must be at least 2");
  coeffs_.assign(group_->order(), 0);
}

void WeightedAlgebraElement::set_coefficient(int g, uint32_t c) {
  coeffs_.at(g) = c % d_;
}

void WeightedAlgebraElement::add_coefficient(int g, uint32_t c) {
  coeffs_.at(g) = (coeffs_.at(g) + c) % d_;
}

bool WeightedAlgebraElement::empty() const {
  for (uint32_t c : coeffs_)
    if (c) return false;
  return true;
}

std::vector<int> WeightedAlgebraElement::support() const {
  std::vector<int> out;
  for (int i = 0; i < group_order(); ++i)
    if (coeffs_[i]) out.push_back(i);
  return out;
}

BinaryMatrix BinaryMatrix::identity(int q) {
  BinaryMatrix m(q);
  for (int i = 0; i < q; ++i) m.set(i, i, 1);
  return m;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix m(q_);
  for (int r = 0; r < q_; ++r)
    for (int c = 0; c < q_; ++c) m.set(c, r, get(r, c));
  return m;
}

BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("BinaryMatrix product: dimension mismatch");
  BinaryMatrix m(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      uint8_t acc = 0;
      for (int k = 0; k < a.dim(); ++k) acc ^= a.get(r, k) & b.get(k, c);
      m.set(r, c, acc);
    }
  return m;
}

ZdMatrix::ZdMatrix(int q, uint32_t d) : q_(q), d_(d), e_(static_cast<size_t>(q) * q, 0) {
  if (d < 2) throw validation_error("qudit modulus must be at least 2");
}

ZdMatrix ZdMatrix::identity(int q, uint32_t d) {
  ZdMatrix m(q, d);
  for (int i = 0; i < q; ++i) m.set(i, i, 1);
  return m;
}

ZdMatrix ZdMatrix::transpose() const {
  ZdMatrix m(q_, d_);
  for (int r = 0; r < q_; ++r)
    for (int c = 0; c < q_; ++c) m.set(c, r, get(r, c));
  return m;
}

ZdMatrix operator*(const ZdMatrix& a, const ZdMatrix& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus())
    throw std::invalid_argument("ZdMatrix product: dimension or modulus mismatch");
  ZdMatrix m(a.dim(), a.modulus());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      uint64_t acc = 0;
      for (int k = 0; k < a.dim(); ++k)
        acc += static_cast<uint64_t>(a.get(r, k)) * b.get(k, c);
      m.set(r, c, static_cast<uint32_t>(acc % a.modulus()));
    }
  return m;
}

AlgebraMatrix::AlgebraMatrix(Group group, int q) : group_(std::move(group)), q_(q) {
  if (!group_) throw std::invalid_argument("AlgebraMatrix: null group");
  if (!group_->is_abelian())
    throw validation_error(
        "algebra-valued matrices are only defined over abelian groups");
  e_.assign(static_cast<size_t>(q) * q, AlgebraElement(group_));
}

AlgebraMatrix AlgebraMatrix::identity(Group group, int q) {
  AlgebraMatrix m(std::move(group), q);
  for (int i = 0; i < q; ++i) {
    AlgebraElement one(m.group());
    one.insert(m.group()->identity());
    m.set(i, i, std::move(one));
  }
  return m;
}

void AlgebraMatrix::set(int r, int c, AlgebraElement v) {
  require_same_group(group_, v.group(), "AlgebraMatrix::set");
  e_[static_cast<size_t>(r) * q_ + c] = std::move(v);
}

AlgebraMatrix AlgebraMatrix::transpose() const {
  AlgebraMatrix m(group_, q_);
  for (int r = 0; r < q_; ++r)
    for (int c = 0; c < q_; ++c) m.set(c, r, get(r, c));
  return m;
}

AlgebraMatrix operator*(const AlgebraMatrix& a, const AlgebraMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("AlgebraMatrix product: dimension mismatch");
  require_same_group(a.group(), b.group(), "AlgebraMatrix product");
  AlgebraMatrix m(a.group(), a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      AlgebraElement acc(a.group());
      for (int k = 0; k < a.dim(); ++k)
        acc = symmetric_difference(acc, convolve(a.get(r, k), b.get(k, c)));
      m.set(r, c, std::move(acc));
    }
  return m;
}

std::vector<AlgebraElement> matrix_apply(const BinaryMatrix& c,
                                         std::span<const AlgebraElement> a) {
  if (c.dim() != static_cast<int>(a.size()))
    throw std::invalid_argument("matrix_apply: dimension mismatch");
  std::vector<AlgebraElement> out;
  out.reserve(a.size());
  for (int k = 0; k < c.dim(); ++k) {
    AlgebraElement acc(a[0].group());
    for (int j = 0; j < c.dim(); ++j)
      if (c.get(k, j)) acc = symmetric_difference(acc, a[j]);
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<AlgebraElement> matrix_apply(const AlgebraMatrix& c,
                                         std::span<const AlgebraElement> a) {
  if (c.dim() != static_cast<int>(a.size()))
    throw std::invalid_argument("matrix_apply: dimension mismatch");
  for (const auto& s : a) require_same_group(c.group(), s.group(), "matrix_apply");
  std::vector<AlgebraElement> out;
  out.reserve(a.size());
  for (int k = 0; k < c.dim(); ++k) {
    AlgebraElement acc(c.group());
    for (int j = 0; j < c.dim(); ++j)
      acc = symmetric_difference(acc, convolve(c.get(k, j), a[j]));
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<WeightedAlgebraElement> weighted_matrix_apply(
    const ZdMatrix& c, std::span<const WeightedAlgebraElement> a) {
  if (c.dim() != static_cast<int>(a.size()))
    throw std::invalid_argument("weighted_matrix_apply: dimension mismatch");
  for (const auto& s : a)
    if (s.modulus() != c.modulus())
      throw std::invalid_argument("weighted_matrix_apply: modulus mismatch");
  std::vector<WeightedAlgebraElement> out;
  out.reserve(a.size());
  for (int k = 0; k < c.dim(); ++k) {
    WeightedAlgebraElement acc(a[0].group(), c.modulus());
    for (int j = 0; j < c.dim(); ++j) {
      const uint32_t s = c.get(k, j);
      if (!s) continue;
      for (int g = 0; g < acc.group_order(); ++g)
        acc.add_coefficient(g, s * a[j].coefficient(g) % c.modulus());
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace xxz
