#include "xxz/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <vector>

#include "xxz/errors.hpp"
#include "xxz/linalg.hpp"

namespace xxz {

int oracle_qubit_cap() {
  int cap = kOracleDefaultQubits;
  if (const char* env = std::getenv("XXZ_MAX_ORACLE_QUBITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) cap = static_cast<int>(v);
  }
  if (cap > kOracleHardQubitLimit) cap = kOracleHardQubitLimit;
  return cap;
}

namespace {

void check_pairwise_commuting(const StabilizerSet& s) {
  for (size_t i = 0; i < s.gens.size(); ++i)
    for (size_t j = i + 1; j < s.gens.size(); ++j)
      if (symplectic_parity(s.gens[i], s.gens[j]))
        throw analysis_error("ground_space_dim_dense: generators " +
                             std::to_string(i) + " and " + std::to_string(j) +
                             " do not commute");
}

}  // namespace

uint64_t ground_space_dim_dense(const StabilizerSet& s, int cap) {
  if (cap < 0) cap = oracle_qubit_cap();
  if (s.n_qubits > cap)
    throw analysis_error("ground_space_dim_dense: " + std::to_string(s.n_qubits) +
                         " qubits exceeds the oracle cap of " + std::to_string(cap) +
                         " (raise XXZ_MAX_ORACLE_QUBITS, hard limit " +
                         std::to_string(kOracleHardQubitLimit) + ")");
  check_pairwise_commuting(s);

  const int n = s.n_qubits;
  const int m = static_cast<int>(s.gens.size());

  // Split into diagonal generators (empty x part: act as sign filters) and
  // the rest, whose projectors expand a basis state into a small coset map.
  struct Masked {
    uint32_t x, z;
  };
  std::vector<uint32_t> zfilters;
  std::vector<Masked> expanders;
  auto low32 = [&](const BitVec& v) {
    uint64_t w = v.words().empty() ? 0 : v.words()[0];
    return static_cast<uint32_t>(w);
  };
  for (const auto& g : s.gens) {
    if (!g.x.any())
      zfilters.push_back(low32(g.z));
    else
      expanders.push_back({low32(g.x), low32(g.z)});
  }

  auto sign_parity = [](uint32_t zmask, uint32_t state) {
    return std::popcount(zmask & state) & 1;  // U^z V^x |b> picks (-1)^(z.(b^x))
  };

  long long total = 0;  // numerator over 2^m
  const uint64_t nstates = uint64_t{1} << n;
  std::unordered_map<uint32_t, long long> cur, nxt;
  cur.reserve(64);
  nxt.reserve(64);
  for (uint64_t bb = 0; bb < nstates; ++bb) {
    const auto b = static_cast<uint32_t>(bb);
    bool dead = false;
    for (uint32_t z : zfilters)
      if (sign_parity(z, b)) {
        dead = true;
        break;
      }
    if (dead) continue;
    // each passed filter contributes (1 + 1)/2 = numerator 2
    long long coeff = 1;
    for (size_t i = 0; i < zfilters.size(); ++i) coeff *= 2;

    if (expanders.empty()) {
      total += coeff;
      continue;
    }
    cur.clear();
    cur.emplace(b, coeff);
    for (const auto& e : expanders) {
      nxt.clear();
      for (const auto& [state, c] : cur) {
        nxt[state] += c;
        const uint32_t flipped = state ^ e.x;
        const long long sgn = sign_parity(e.z, flipped) ? -1 : 1;
        nxt[flipped] += sgn * c;
      }
      std::swap(cur, nxt);
    }
    auto it = cur.find(b);
    if (it != cur.end()) total += it->second;
  }

  const long long denom_exp = m;
  if (total < 0 || (denom_exp < 63 && total % (1LL << denom_exp) != 0))
    throw std::logic_error("dense trace accumulation is not an exact multiple");
  return static_cast<uint64_t>(total) >> denom_exp;
}

namespace {

struct QuditBasis {
  int n;
  uint32_t d;
  std::vector<uint64_t> pow;  // pow[i] = d^i

  QuditBasis(int n_, uint32_t d_) : n(n_), d(d_), pow(n_ + 1) {
    pow[0] = 1;
    for (int i = 0; i < n; ++i) pow[i + 1] = pow[i] * d;
  }
  uint32_t digit(uint64_t state, int i) const {
    return static_cast<uint32_t>(state / pow[i] % d);
  }
};

// omega-exponent of applying P to |state>, and the resulting state.
std::pair<uint32_t, uint64_t> apply(const QuditPauli& p, const QuditBasis& basis,
                                    uint64_t state) {
  uint64_t out = 0;
  uint64_t phase = p.phase;
  for (int i = 0; i < basis.n; ++i) {
    const uint32_t b = basis.digit(state, i);
    const uint32_t shifted = (b + p.x[i]) % basis.d;
    phase += static_cast<uint64_t>(p.z[i]) * shifted % basis.d;
    out += static_cast<uint64_t>(shifted) * basis.pow[i];
  }
  return {static_cast<uint32_t>(phase % basis.d), out};
}

}  // namespace

uint64_t ground_space_dim_dense(const QuditStabilizerSet& s) {
  const uint32_t d = s.d;
  if (!is_prime(d))
    throw analysis_error("dense qudit oracle requires prime d (got " +
                         std::to_string(d) + ")");
  QuditBasis basis(s.n_qudits, d);
  if (basis.pow[s.n_qudits] > kOracleStateCap)
    throw analysis_error("ground_space_dim_dense: d^N = " +
                         std::to_string(basis.pow[s.n_qudits]) +
                         " exceeds the state cap " + std::to_string(kOracleStateCap));
  for (size_t i = 0; i < s.gens.size(); ++i) {
    for (size_t j = i + 1; j < s.gens.size(); ++j)
      if (symplectic_product(s.gens[i], s.gens[j]) != 0)
        throw analysis_error("ground_space_dim_dense: generators " +
                             std::to_string(i) + " and " + std::to_string(j) +
                             " do not commute");
    // the projector formula needs S^d = I
    QuditPauli pd = qudit_pow(s.gens[i], d);
    if (pd.phase != 0)
      throw analysis_error("generator " + std::to_string(i) +
                           " has order > d; not a valid stabilizer");
  }

  const int m = static_cast<int>(s.gens.size());
  const uint64_t nstates = basis.pow[s.n_qudits];

  // coefficients live in Z[omega], stored as integer vectors indexed by the
  // omega exponent (no cyclotomic reduction; exactness checked at the end)
  using Coeff = std::vector<long long>;
  auto rotate_add = [&](Coeff& dst, const Coeff& src, uint32_t e) {
    for (uint32_t i = 0; i < d; ++i) dst[(i + e) % d] += src[i];
  };

  Coeff total(d, 0);
  std::unordered_map<uint64_t, Coeff> cur, nxt;
  for (uint64_t b = 0; b < nstates; ++b) {
    cur.clear();
    cur.emplace(b, [&] {
      Coeff c(d, 0);
      c[0] = 1;
      return c;
    }());
    for (const auto& gen : s.gens) {
      nxt.clear();
      for (const auto& [state, c] : cur) {
        // (I + S + ... + S^{d-1}) |state>
        auto& acc0 = nxt[state];
        if (acc0.empty()) acc0.assign(d, 0);
        rotate_add(acc0, c, 0);
        uint64_t st = state;
        uint32_t ph = 0;
        for (uint32_t t = 1; t < d; ++t) {
          auto [pe, st2] = apply(gen, basis, st);
          ph = (ph + pe) % d;
          st = st2;
          auto& acc = nxt[st];
          if (acc.empty()) acc.assign(d, 0);
          rotate_add(acc, c, ph);
        }
      }
      std::swap(cur, nxt);
    }
    auto it = cur.find(b);
    if (it != cur.end())
      for (uint32_t i = 0; i < d; ++i) total[i] += it->second[i];
  }

  // the trace is an integer: all omega^1..omega^{d-1} coefficients must
  // agree, and the value is (c0 - c1) / d^m
  for (uint32_t i = 2; i < d; ++i)
    if (total[i] != total[1])
      throw std::logic_error("dense qudit trace is not a rational integer");
  long long numer = total[0] - (d > 1 ? total[1] : 0);
  long long denom = 1;
  for (int i = 0; i < m; ++i) denom *= d;
  if (numer < 0 || numer % denom != 0)
    throw std::logic_error("dense qudit trace accumulation is not exact");
  return static_cast<uint64_t>(numer / denom);
}

uint32_t commute_dense(const QuditPauli& p, const QuditPauli& q) {
  if (p.n != q.n || p.d != q.d)
    throw std::invalid_argument("commute_dense: shape or modulus mismatch");
  QuditBasis basis(p.n, p.d);
  if (basis.pow[p.n] > kOracleStateCap)
    throw analysis_error("commute_dense: d^N exceeds the state cap");

  bool have = false;
  uint32_t c = 0;
  for (uint64_t b = 0; b < basis.pow[p.n]; ++b) {
    auto [e1, s1] = apply(p, basis, b);
    auto [e2, s2] = apply(q, basis, s1);  // Q.P |b>
    auto [f1, t1] = apply(q, basis, b);
    auto [f2, t2] = apply(p, basis, t1);  // P.Q |b>
    if (s2 != t2)
      throw std::logic_error("commute_dense: products disagree on basis support");
    const uint32_t diff = ((e1 + e2) % p.d + p.d - (f1 + f2) % p.d) % p.d;
    if (!have) {
      c = diff;
      have = true;
    } else if (diff != c) {
      throw std::logic_error("commute_dense: inconsistent phase across basis states");
    }
  }
  return c;
}

QuditPauli to_qudit_pauli(const Pauli& p) {
  QuditPauli out(p.n, 2);
  for (int i = 0; i < p.n; ++i) {
    out.x[i] = p.x.get(i) ? 1 : 0;
    out.z[i] = p.z.get(i) ? 1 : 0;
  }
  return out;
}

int commute_dense(const Pauli& p, const Pauli& q) {
  return static_cast<int>(commute_dense(to_qudit_pauli(p), to_qudit_pauli(q)));
}

}  // namespace xxz
