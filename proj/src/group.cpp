#include "xxz/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

std::string default_name(int i) { return std::to_string(i); }

void check_order(long long n) {
  if (n < 1) throw validation_error("group order must be positive");
  if (n > kMaxGroupOrder)
    throw validation_error("group order " + std::to_string(n) +
                           " exceeds the configured maximum " +
                           std::to_string(kMaxGroupOrder));
}

}  // namespace

Group FiniteGroup::build(std::vector<int> mul, std::vector<std::string> names,
                         GroupDesc desc) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = static_cast<int>(names.size());
  g->mul_ = std::move(mul);
  g->names_ = std::move(names);
  g->desc_ = std::move(desc);
  const int n = g->order_;

  // identity
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (g->mul(e, a) != a || g->mul(a, e) != a) {
        ok = false;
        break;
      }
    if (ok) id = e;
  }
  if (id < 0) throw validation_error("table has no identity element");
  g->identity_ = id;

  // inverses
  g->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == id && g->mul(b, a) == id) {
        g->inv_[a] = b;
        break;
      }
    if (g->inv_[a] < 0)
      throw validation_error("element " + g->names_[a] +
                             " has no two-sided inverse");
  }

  g->abelian_ = true;
  for (int a = 0; a < n && g->abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        g->abelian_ = false;
        break;
      }

  return g;
}

Group make_cyclic(int n) {
  check_order(n);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<size_t>(i) * n + j] = (i + j) % n;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "g^" + std::to_string(i);
  return FiniteGroup::build(std::move(mul), std::move(names),
                            GroupDesc{GroupDesc::Kind::cyclic, {n}});
}

Group make_torus(int l, int m, int n) {
  check_order(static_cast<long long>(l) * m * n);
  if (l < 1 || m < 1 || n < 1) throw validation_error("torus dimensions must be positive");
  const int order = l * m * n;
  auto idx = [&](int a, int b, int c) { return (a * m + b) * n + c; };
  std::vector<int> mul(static_cast<size_t>(order) * order);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < n; ++c)
        for (int a2 = 0; a2 < l; ++a2)
          for (int b2 = 0; b2 < m; ++b2)
            for (int c2 = 0; c2 < n; ++c2)
              mul[static_cast<size_t>(idx(a, b, c)) * order + idx(a2, b2, c2)] =
                  idx((a + a2) % l, (b + b2) % m, (c + c2) % n);

  auto axis = [](char gen, int e) {
    if (e == 0) return std::string();
    std::string s(1, gen);
    if (e > 1) s += std::to_string(e);
    return s;
  };
  std::vector<std::string> names(order);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < n; ++c) {
        std::string s = axis('x', a) + axis('y', b) + axis('z', c);
        names[idx(a, b, c)] = s.empty() ? "1" : s;
      }
  return FiniteGroup::build(std::move(mul), std::move(names),
                            GroupDesc{GroupDesc::Kind::torus, {l, m, n}});
}

Group direct_product(const Group& g1, const Group& g2) {
  if (!g1 || !g2) throw validation_error("direct_product of null group");
  const long long order = static_cast<long long>(g1->order()) * g2->order();
  check_order(order);
  const int n1 = g1->order(), n2 = g2->order(), n = static_cast<int>(order);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      for (int c = 0; c < n1; ++c)
        for (int d = 0; d < n2; ++d)
          mul[static_cast<size_t>(a * n2 + b) * n + (c * n2 + d)] =
              g1->mul(a, c) * n2 + g2->mul(b, d);

  std::vector<std::string> names(n);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) {
      const bool e1 = a == g1->identity(), e2 = b == g2->identity();
      std::string s;
      if (!e1) s += g1->name(a);
      if (!e2) s += g2->name(b);
      names[a * n2 + b] = s.empty() ? "1" : s;
    }
  return FiniteGroup::build(std::move(mul), std::move(names),
                            GroupDesc{GroupDesc::Kind::product, {}});
}

Group from_cayley_table(std::vector<std::vector<int>> table,
                        std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  check_order(n);
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw validation_error("Cayley table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n)
        throw validation_error("Cayley table entry out of range 0.." +
                               std::to_string(n - 1));

  // Latin square: each row and column is a permutation.
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      if (seen[table[r][c]])
        throw validation_error("not a Latin square: row " + std::to_string(r) +
                               " repeats entry " + std::to_string(table[r][c]));
      seen[table[r][c]] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      if (seen[table[r][c]])
        throw validation_error("not a Latin square: column " + std::to_string(c) +
                               " repeats entry " + std::to_string(table[r][c]));
      seen[table[r][c]] = 1;
    }
  }

  // Associativity: exhaustive for small orders, sampled for big ones.
  auto mul = [&](int a, int b) { return table[a][b]; };
  auto assoc_fail = [&](int a, int b, int c) {
    throw validation_error("not associative: (" + std::to_string(a) + "*" +
                           std::to_string(b) + ")*" + std::to_string(c) + " = " +
                           std::to_string(mul(mul(a, b), c)) + " but " +
                           std::to_string(a) + "*(" + std::to_string(b) + "*" +
                           std::to_string(c) + ") = " +
                           std::to_string(mul(a, mul(b, c))));
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) assoc_fail(a, b, c);
  } else {
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 200000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) assoc_fail(a, b, c);
    }
  }

  if (!names.empty()) {
    if (static_cast<int>(names.size()) != n)
      throw validation_error("name list length does not match order");
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw validation_error("element names must be distinct");
  } else {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[i] = default_name(i);
  }

  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) flat[static_cast<size_t>(r) * n + c] = table[r][c];
  return FiniteGroup::build(std::move(flat), std::move(names),
                            GroupDesc{GroupDesc::Kind::table, {}});
}

Group load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open Cayley table file: " + path);
  std::string line;
  int n = -1;
  std::vector<std::vector<int>> table;
  std::vector<std::string> names;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("#names:", 0) == 0) {
      std::istringstream ss(line.substr(7));
      std::string tok;
      while (ss >> tok) names.push_back(tok);
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    if (n < 0) {
      if (!(ss >> n) || n < 1)
        throw parse_error(path + ":" + std::to_string(lineno) +
                          ": expected positive order on first line");
      continue;
    }
    std::vector<int> row;
    int v;
    while (ss >> v) row.push_back(v);
    if (!row.empty()) table.push_back(std::move(row));
  }
  if (n < 0) throw parse_error(path + ": empty Cayley table file");
  if (static_cast<int>(table.size()) != n)
    throw parse_error(path + ": expected " + std::to_string(n) + " table rows, got " +
                      std::to_string(table.size()));
  try {
    return from_cayley_table(std::move(table), std::move(names));
  } catch (const validation_error& e) {
    throw validation_error(path + ": " + e.what());
  }
}

std::optional<int> FiniteGroup::find(std::string_view name) const {
  for (int i = 0; i < order_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, cur = a;
  while (cur != identity_) {
    cur = mul(cur, a);
    ++k;
  }
  return k;
}

int resolve_element(const FiniteGroup& g, std::string_view token) {
  if (token.empty()) throw validation_error("empty element token");
  if (auto i = g.find(token)) return *i;
  if (token[0] == '-') return g.inv(resolve_element(g, token.substr(1)));
  if (token == "1" || token == "e") return g.identity();
  bool digits = std::all_of(token.begin(), token.end(),
                            [](char c) { return c >= '0' && c <= '9'; });
  if (digits) {
    int v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc() && p == token.data() + token.size() && v < g.order())
      return v;
    throw validation_error("element index " + std::string(token) +
                           " out of range for group of order " +
                           std::to_string(g.order()));
  }
  throw validation_error("unknown element name \"" + std::string(token) + "\"");
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  if (a.group.get() != b.group.get())
    throw std::invalid_argument("group_mul: elements of different groups");
  return {a.group, a.group->mul(a.index, b.index)};
}

GroupElement group_inv(const GroupElement& a) {
  return {a.group, a.group->inv(a.index)};
}

}  // namespace xxz
