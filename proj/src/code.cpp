#include "xxz/code.hpp"

#include <stdexcept>
#include <string>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

// Applies either matrix kind to a vector of subsets.
std::vector<AlgebraElement> apply_code_matrix(const CodeMatrix& m,
                                              std::span<const AlgebraElement> a,
                                              bool transpose) {
  if (const auto* b = std::get_if<BinaryMatrix>(&m))
    return matrix_apply(transpose ? b->transpose() : *b, a);
  const auto& am = std::get<AlgebraMatrix>(m);
  return matrix_apply(transpose ? am.transpose() : am, a);
}

void validate_spec_common(const Group& group, int q, size_t a_size, size_t b_size,
                          size_t n_matrices) {
  if (!group) throw validation_error("code spec: null group");
  if (q < 1) throw validation_error("code spec: q must be positive");
  if (a_size != static_cast<size_t>(q) || b_size != static_cast<size_t>(q))
    throw validation_error("code spec: expected " + std::to_string(q) +
                           " A sets and " + std::to_string(q) + " B sets");
  if (n_matrices < 1) throw validation_error("code spec: at least one matrix required");
  if (n_matrices > static_cast<size_t>(q))
    throw validation_error("code spec: at most q = " + std::to_string(q) +
                           " matrices allowed, got " + std::to_string(n_matrices));
}

}  // namespace

int code_matrix_dim(const CodeMatrix& m) {
  return std::visit([](const auto& x) { return x.dim(); }, m);
}

CodeSpec CodeSpec::create_unchecked(Group group, int q,
                                    std::vector<AlgebraElement> a,
                                    std::vector<AlgebraElement> b,
                                    std::vector<CodeMatrix> matrices) {
  validate_spec_common(group, q, a.size(), b.size(), matrices.size());
  for (const auto& s : a)
    if (s.group().get() != group.get())
      throw validation_error("code spec: A set over a different group");
  for (const auto& s : b)
    if (s.group().get() != group.get())
      throw validation_error("code spec: B set over a different group");

  const bool first_binary = std::holds_alternative<BinaryMatrix>(matrices[0]);
  for (size_t i = 0; i < matrices.size(); ++i) {
    if (code_matrix_dim(matrices[i]) != q)
      throw validation_error("code spec: matrix " + std::to_string(i) +
                             " is not " + std::to_string(q) + "x" + std::to_string(q));
    if (std::holds_alternative<BinaryMatrix>(matrices[i]) != first_binary)
      throw validation_error("code spec: matrices must be all binary or all algebra-valued");
    if (const auto* am = std::get_if<AlgebraMatrix>(&matrices[i]))
      if (am->group().get() != group.get())
        throw validation_error("code spec: algebra matrix over a different group");
  }

  CodeSpec s;
  s.group_ = std::move(group);
  s.q_ = q;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.matrices_ = std::move(matrices);
  return s;
}

CodeSpec CodeSpec::create(Group group, int q, std::vector<AlgebraElement> a,
                          std::vector<AlgebraElement> b,
                          std::vector<CodeMatrix> matrices) {
  CodeSpec s = create_unchecked(std::move(group), q, std::move(a), std::move(b),
                                std::move(matrices));
  // pairwise commutation (the construction's precondition)
  for (size_t i = 0; i < s.matrices_.size(); ++i)
    for (size_t j = i + 1; j < s.matrices_.size(); ++j) {
      bool ok;
      if (const auto* bi = std::get_if<BinaryMatrix>(&s.matrices_[i])) {
        const auto& bj = std::get<BinaryMatrix>(s.matrices_[j]);
        ok = (*bi * bj) == (bj * *bi);
      } else {
        const auto& ai = std::get<AlgebraMatrix>(s.matrices_[i]);
        const auto& aj = std::get<AlgebraMatrix>(s.matrices_[j]);
        ok = (ai * aj) == (aj * ai);
      }
      if (!ok)
        throw validation_error("matrices " + std::to_string(i) + " and " +
                               std::to_string(j) + " do not commute");
    }
  return s;
}

QuditCodeSpec QuditCodeSpec::create(Group group, int q, uint32_t d,
                                    std::vector<WeightedAlgebraElement> a,
                                    std::vector<WeightedAlgebraElement> b,
                                    std::vector<ZdMatrix> matrices) {
  validate_spec_common(group, q, a.size(), b.size(), matrices.size());
  if (d < 2) throw validation_error("qudit spec: d must be at least 2");
  for (const auto* sets : {&a, &b})
    for (const auto& s : *sets) {
      if (s.group().get() != group.get())
        throw validation_error("qudit spec: set over a different group");
      if (s.modulus() != d) throw validation_error("qudit spec: modulus mismatch in sets");
    }
  for (size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i].dim() != q || matrices[i].modulus() != d)
      throw validation_error("qudit spec: matrix " + std::to_string(i) +
                             " has wrong dimension or modulus");
    for (size_t j = i + 1; j < matrices.size(); ++j)
      if (!((matrices[i] * matrices[j]) == (matrices[j] * matrices[i])))
        throw validation_error("matrices " + std::to_string(i) + " and " +
                               std::to_string(j) + " do not commute");
  }

  QuditCodeSpec s;
  s.group_ = std::move(group);
  s.q_ = q;
  s.d_ = d;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.matrices_ = std::move(matrices);
  return s;
}

QuditCodeSpec to_qudit_spec(const CodeSpec& spec, uint32_t d) {
  std::vector<WeightedAlgebraElement> a, b;
  for (const auto& s : spec.a_sets()) {
    WeightedAlgebraElement w(spec.group(), d);
    s.bits().for_each_set([&](int i) { w.set_coefficient(i, 1); });
    a.push_back(std::move(w));
  }
  for (const auto& s : spec.b_sets()) {
    WeightedAlgebraElement w(spec.group(), d);
    s.bits().for_each_set([&](int i) { w.set_coefficient(i, 1); });
    b.push_back(std::move(w));
  }
  std::vector<ZdMatrix> mats;
  for (const auto& m : spec.matrices()) {
    const auto* bm = std::get_if<BinaryMatrix>(&m);
    if (!bm)
      throw validation_error("algebra-valued matrices have no qudit lift");
    ZdMatrix zm(bm->dim(), d);
    for (int r = 0; r < bm->dim(); ++r)
      for (int c = 0; c < bm->dim(); ++c) zm.set(r, c, bm->get(r, c));
    mats.push_back(std::move(zm));
  }
  return QuditCodeSpec::create(spec.group(), spec.q(), d, std::move(a), std::move(b),
                               std::move(mats));
}

int symplectic_parity(const Pauli& p, const Pauli& q) {
  if (p.n != q.n) throw std::invalid_argument("symplectic_parity: size mismatch");
  return BitVec::and_parity(p.x, q.z) ^ BitVec::and_parity(p.z, q.x);
}

uint32_t symplectic_product(const QuditPauli& p, const QuditPauli& q) {
  if (p.n != q.n || p.d != q.d)
    throw std::invalid_argument("symplectic_product: shape or modulus mismatch");
  uint64_t pos = 0, neg = 0;
  for (int i = 0; i < p.n; ++i) {
    pos += static_cast<uint64_t>(p.x[i]) * q.z[i] % p.d;
    neg += static_cast<uint64_t>(p.z[i]) * q.x[i] % p.d;
  }
  return static_cast<uint32_t>((pos + static_cast<uint64_t>(p.d) * p.n - neg) % p.d);
}

QuditPauli qudit_mul(const QuditPauli& p, const QuditPauli& q) {
  if (p.n != q.n || p.d != q.d)
    throw std::invalid_argument("qudit_mul: shape or modulus mismatch");
  QuditPauli r(p.n, p.d);
  // U^z V^x . U^z' V^x' = w^{-z'.x} U^{z+z'} V^{x+x'}
  uint64_t cross = 0;
  for (int i = 0; i < p.n; ++i) cross += static_cast<uint64_t>(q.z[i]) * p.x[i] % p.d;
  r.phase = static_cast<uint32_t>(
      (static_cast<uint64_t>(p.phase) + q.phase +
       (static_cast<uint64_t>(p.d) * p.n - cross)) % p.d);
  for (int i = 0; i < p.n; ++i) {
    r.z[i] = (p.z[i] + q.z[i]) % p.d;
    r.x[i] = (p.x[i] + q.x[i]) % p.d;
  }
  return r;
}

QuditPauli qudit_pow(const QuditPauli& p, uint32_t t) {
  // plain repeated multiplication; t is small (t < d in every caller)
  QuditPauli acc(p.n, p.d);
  for (uint32_t i = 0; i < t; ++i) acc = qudit_mul(acc, p);
  return acc;
}

std::pair<Pauli, Pauli> build_stabilizer_pair(const CodeSpec& spec,
                                              int matrix_index, int site) {
  if (matrix_index < 0 || matrix_index >= static_cast<int>(spec.matrices().size()))
    throw std::invalid_argument("matrix index out of range");
  const auto ca = apply_code_matrix(spec.matrices()[matrix_index], spec.a_sets(), false);
  const auto ctb = apply_code_matrix(spec.matrices()[matrix_index], spec.b_sets(), true);

  const FiniteGroup& g = *spec.group();
  const int q = spec.q();
  Pauli zop(spec.n_qubits()), xop(spec.n_qubits());
  for (int k = 0; k < q; ++k) {
    ca[k].bits().for_each_set([&](int u) {
      zop.z.flip(QubitIndex{g.mul(site, u), 0, k}.flat(q));
      xop.x.flip(QubitIndex{g.mul(site, g.inv(u)), 1, k}.flat(q));
    });
    ctb[k].bits().for_each_set([&](int v) {
      zop.z.flip(QubitIndex{g.mul(v, site), 1, k}.flat(q));
      xop.x.flip(QubitIndex{g.mul(g.inv(v), site), 0, k}.flat(q));
    });
  }
  return {std::move(zop), std::move(xop)};
}

StabilizerSet build_all_stabilizers(const CodeSpec& spec) {
  StabilizerSet out;
  out.group = spec.group();
  out.q = spec.q();
  out.n_qubits = spec.n_qubits();
  const FiniteGroup& g = *spec.group();
  const int q = spec.q();

  for (int mi = 0; mi < static_cast<int>(spec.matrices().size()); ++mi) {
    // (chi A) and (chi^T B) are site-independent; compute once per matrix.
    const auto ca = apply_code_matrix(spec.matrices()[mi], spec.a_sets(), false);
    const auto ctb = apply_code_matrix(spec.matrices()[mi], spec.b_sets(), true);
    for (int site = 0; site < g.order(); ++site) {
      Pauli zop(out.n_qubits), xop(out.n_qubits);
      for (int k = 0; k < q; ++k) {
        ca[k].bits().for_each_set([&](int u) {
          zop.z.flip(QubitIndex{g.mul(site, u), 0, k}.flat(q));
          xop.x.flip(QubitIndex{g.mul(site, g.inv(u)), 1, k}.flat(q));
        });
        ctb[k].bits().for_each_set([&](int v) {
          zop.z.flip(QubitIndex{g.mul(v, site), 1, k}.flat(q));
          xop.x.flip(QubitIndex{g.mul(g.inv(v), site), 0, k}.flat(q));
        });
      }
      out.gens.push_back(std::move(zop));
      out.tags.push_back({site, StabKind::Z, mi});
      out.gens.push_back(std::move(xop));
      out.tags.push_back({site, StabKind::X, mi});
    }
  }
  return out;
}

QuditStabilizerSet build_qudit_stabilizers(const QuditCodeSpec& spec) {
  QuditStabilizerSet out;
  out.group = spec.group();
  out.q = spec.q();
  out.d = spec.modulus();
  out.n_qudits = spec.n_qudits();
  const FiniteGroup& g = *spec.group();
  const int q = spec.q();
  const uint32_t d = spec.modulus();

  for (int mi = 0; mi < static_cast<int>(spec.matrices().size()); ++mi) {
    const auto ca = weighted_matrix_apply(spec.matrices()[mi], spec.a_sets());
    const auto ctb =
        weighted_matrix_apply(spec.matrices()[mi].transpose(), spec.b_sets());
    for (int site = 0; site < g.order(); ++site) {
      QuditPauli uop(out.n_qudits, d), vop(out.n_qudits, d);
      for (int k = 0; k < q; ++k) {
        for (int u = 0; u < g.order(); ++u) {
          const uint32_t mu = ca[k].coefficient(u);
          if (!mu) continue;
          // U-type: U^{m} on (gu, +k); V-type: U^{m} on (g u^-1, -k)
          int fl = QubitIndex{g.mul(site, u), 0, k}.flat(q);
          uop.z[fl] = (uop.z[fl] + mu) % d;
          fl = QubitIndex{g.mul(site, g.inv(u)), 1, k}.flat(q);
          vop.z[fl] = (vop.z[fl] + mu) % d;
        }
        for (int v = 0; v < g.order(); ++v) {
          const uint32_t mv = ctb[k].coefficient(v);
          if (!mv) continue;
          // U-type: V^{m} on (vg, -k); V-type: V^{m} on (v^-1 g, +k)
          int fl = QubitIndex{g.mul(v, site), 1, k}.flat(q);
          uop.x[fl] = (uop.x[fl] + mv) % d;
          fl = QubitIndex{g.mul(g.inv(v), site), 0, k}.flat(q);
          vop.x[fl] = (vop.x[fl] + mv) % d;
        }
      }
      out.gens.push_back(std::move(uop));
      out.tags.push_back({site, StabKind::Z, mi});
      out.gens.push_back(std::move(vop));
      out.tags.push_back({site, StabKind::X, mi});
    }
  }
  return out;
}

long overlap_count(const CodeSpec& spec, int i, int j, int g, int h, int u, int v) {
  const auto n_mats = static_cast<int>(spec.matrices().size());
  if (i < 0 || i >= n_mats || j < 0 || j >= n_mats)
    throw std::invalid_argument("overlap_count: matrix index out of range");
  const auto* ci = std::get_if<BinaryMatrix>(&spec.matrices()[i]);
  const auto* cj = std::get_if<BinaryMatrix>(&spec.matrices()[j]);
  if (!ci || !cj)
    throw std::invalid_argument("overlap_count is defined for binary matrices only");

  const FiniteGroup& grp = *spec.group();
  if (grp.mul(g, u) != grp.mul(grp.inv(v), h))
    throw std::invalid_argument("overlap_count: precondition gu = v^-1 h violated");

  const int q = spec.q();
  std::vector<uint8_t> ua(q), vb(q);
  for (int k = 0; k < q; ++k) {
    ua[k] = spec.a_sets()[k].contains(u) ? 1 : 0;
    vb[k] = spec.b_sets()[k].contains(v) ? 1 : 0;
  }
  auto matvec = [&](const BinaryMatrix& m, const std::vector<uint8_t>& x,
                    bool transpose) {
    std::vector<uint8_t> y(q, 0);
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < q; ++c)
        y[r] ^= (transpose ? m.get(c, r) : m.get(r, c)) & x[c];
    return y;
  };
  const auto w1 = matvec(*ci, ua, false);   // C_i u_A
  const auto w2 = matvec(*cj, vb, true);    // C_j^T v_B
  const auto w3 = matvec(*ci, vb, true);    // C_i^T v_B
  const auto w4 = matvec(*cj, ua, false);   // C_j u_A
  long total = 0;
  for (int k = 0; k < q; ++k) total += w2[k] * w1[k] + w3[k] * w4[k];
  return total;
}

}  // namespace xxz
