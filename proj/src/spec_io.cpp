#include "xxz/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct RawMatrixEntry {
  // either a scalar or an element list (algebra-valued)
  long scalar = 0;
  bool is_scalar = true;
  std::vector<std::string> elements;
};

struct RawSetEntry {
  std::string element;
  long count = 1;
};

// Everything a spec file can say, before group resolution.
struct RawSpec {
  std::string group_kind;  // torus | cyclic | cayley | table
  std::vector<int> group_dims;
  std::string cayley_path;
  std::vector<std::vector<int>> table;
  std::vector<std::string> table_names;

  int q = 0;
  long d = 2;
  std::vector<std::vector<RawSetEntry>> a_sets, b_sets;  // indexed by channel
  std::vector<std::vector<std::vector<RawMatrixEntry>>> matrices;
  std::string origin;
  std::string base_dir;
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw parse_error(origin + ":" + std::to_string(line) + ": " + msg);
}

int parse_dim(const std::string& tok, std::optional<int> size_binding,
              const std::string& origin, int line) {
  if (tok == "L") {
    if (!size_binding)
      fail(origin, line, "size placeholder L used without a size binding "
                         "(pass --size / --sizes)");
    return *size_binding;
  }
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 1) throw std::exception();
    return v;
  } catch (...) {
    fail(origin, line, "expected a positive dimension, got \"" + tok + "\"");
  }
}

std::vector<std::string> tokenize_set(const std::string& body) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : body) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

std::vector<RawSetEntry> parse_set_body(const std::string& body,
                                        const std::string& origin, int line) {
  std::vector<RawSetEntry> out;
  for (auto& tok : tokenize_set(body)) {
    RawSetEntry e;
    auto colon = tok.find(':');
    if (colon != std::string::npos) {
      e.element = tok.substr(0, colon);
      try {
        e.count = std::stol(tok.substr(colon + 1));
      } catch (...) {
        fail(origin, line, "bad multiplicity in \"" + tok + "\"");
      }
    } else {
      e.element = tok;
    }
    if (e.element.empty()) fail(origin, line, "empty element token");
    out.push_back(std::move(e));
  }
  return out;
}

// matrix rows between '[' and ']', rows split by ';', entries are integers
// or brace-subsets
std::vector<std::vector<RawMatrixEntry>> parse_matrix_body(
    const std::string& body, const std::string& origin, int line) {
  std::vector<std::vector<RawMatrixEntry>> rows;
  std::vector<RawMatrixEntry> row;
  std::string cur;
  size_t i = 0;
  auto flush = [&] {
    if (cur.empty()) return;
    RawMatrixEntry e;
    try {
      size_t pos = 0;
      e.scalar = std::stol(cur, &pos);
      if (pos != cur.size()) throw std::exception();
    } catch (...) {
      fail(origin, line, "bad matrix entry \"" + cur + "\"");
    }
    row.push_back(std::move(e));
    cur.clear();
  };
  while (i < body.size()) {
    char c = body[i];
    if (c == '{') {
      auto close = body.find('}', i);
      if (close == std::string::npos) fail(origin, line, "unterminated { in matrix");
      RawMatrixEntry e;
      e.is_scalar = false;
      for (auto& se : parse_set_body(body.substr(i + 1, close - i - 1), origin, line))
        e.elements.push_back(se.element);
      row.push_back(std::move(e));
      i = close + 1;
    } else if (c == ';') {
      flush();
      rows.push_back(std::move(row));
      row.clear();
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
      ++i;
    } else {
      cur += c;
      ++i;
    }
  }
  flush();
  rows.push_back(std::move(row));
  if (rows.empty() || rows[0].empty()) fail(origin, line, "empty matrix");
  return rows;
}

RawSpec parse_raw_text(const std::string& text, const std::string& origin,
                       std::optional<int> size_binding) {
  RawSpec raw;
  raw.origin = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    if (key == "group") {
      std::string kind;
      ls >> kind;
      if (kind == "torus") {
        std::string t1, t2, t3;
        if (!(ls >> t1 >> t2 >> t3)) fail(origin, lineno, "torus needs three dimensions");
        raw.group_kind = "torus";
        raw.group_dims = {parse_dim(t1, size_binding, origin, lineno),
                          parse_dim(t2, size_binding, origin, lineno),
                          parse_dim(t3, size_binding, origin, lineno)};
      } else if (kind == "cyclic") {
        std::string t;
        if (!(ls >> t)) fail(origin, lineno, "cyclic needs an order");
        raw.group_kind = "cyclic";
        raw.group_dims = {parse_dim(t, size_binding, origin, lineno)};
      } else if (kind == "cayley") {
        std::string path;
        if (!(ls >> path)) fail(origin, lineno, "cayley needs a file path");
        raw.group_kind = "cayley";
        raw.cayley_path = path;
      } else {
        fail(origin, lineno, "unknown group kind \"" + kind + "\" (torus|cyclic|cayley)");
      }
    } else if (key == "q") {
      if (!(ls >> raw.q) || raw.q < 1) fail(origin, lineno, "q must be a positive integer");
    } else if (key == "d") {
      if (!(ls >> raw.d) || raw.d < 2) fail(origin, lineno, "d must be an integer >= 2");
    } else if ((key[0] == 'A' || key[0] == 'B') && key.size() > 1) {
      int ch = 0;
      try {
        ch = std::stoi(key.substr(1));
      } catch (...) {
        fail(origin, lineno, "unknown key \"" + key + "\"");
      }
      if (ch < 1) fail(origin, lineno, "set channels are numbered from 1");
      std::string rest;
      std::getline(ls, rest);
      auto open = rest.find('{');
      auto close = rest.rfind('}');
      if (open == std::string::npos || close == std::string::npos || close < open)
        fail(origin, lineno, "expected a {...} set");
      auto entries = parse_set_body(rest.substr(open + 1, close - open - 1), origin, lineno);
      auto& sets = key[0] == 'A' ? raw.a_sets : raw.b_sets;
      if (static_cast<int>(sets.size()) < ch) sets.resize(ch);
      sets[ch - 1] = std::move(entries);
    } else if (key == "matrix") {
      std::string rest;
      std::getline(ls, rest);
      auto open = rest.find('[');
      auto close = rest.rfind(']');
      if (open == std::string::npos || close == std::string::npos || close < open)
        fail(origin, lineno, "expected a [...] matrix");
      raw.matrices.push_back(
          parse_matrix_body(rest.substr(open + 1, close - open - 1), origin, lineno));
    } else {
      fail(origin, lineno, "unknown key \"" + key + "\"");
    }
  }
  return raw;
}

RawSpec parse_raw_json(const json& j, const std::string& origin,
                       std::optional<int> size_binding) {
  RawSpec raw;
  raw.origin = origin;
  auto dim_from = [&](const json& v) -> int {
    if (v.is_string()) return parse_dim(v.get<std::string>(), size_binding, origin, 0);
    if (v.is_number_integer()) return parse_dim(std::to_string(v.get<long>()), size_binding, origin, 0);
    fail(origin, 0, "bad group dimension");
  };
  try {
    if (!j.contains("group")) fail(origin, 0, "missing \"group\"");
    const json& g = j.at("group");
    if (g.contains("torus")) {
      raw.group_kind = "torus";
      for (const auto& v : g.at("torus")) raw.group_dims.push_back(dim_from(v));
      if (raw.group_dims.size() != 3) fail(origin, 0, "torus needs three dimensions");
    } else if (g.contains("cyclic")) {
      raw.group_kind = "cyclic";
      raw.group_dims.push_back(dim_from(g.at("cyclic")));
    } else if (g.contains("cayley_file")) {
      raw.group_kind = "cayley";
      raw.cayley_path = g.at("cayley_file").get<std::string>();
    } else if (g.contains("table")) {
      raw.group_kind = "table";
      raw.table = g.at("table").get<std::vector<std::vector<int>>>();
      if (g.contains("names"))
        raw.table_names = g.at("names").get<std::vector<std::string>>();
    } else {
      fail(origin, 0, "group must have torus, cyclic, cayley_file, or table");
    }

    raw.q = j.at("q").get<int>();
    raw.d = j.value("d", 2);

    auto read_sets = [&](const char* name, std::vector<std::vector<RawSetEntry>>& out) {
      for (const auto& s : j.at(name)) {
        std::vector<RawSetEntry> entries;
        if (s.is_object()) {
          for (auto it = s.begin(); it != s.end(); ++it)
            entries.push_back({it.key(), it.value().get<long>()});
        } else {
          for (const auto& e : s) entries.push_back({e.get<std::string>(), 1});
        }
        out.push_back(std::move(entries));
      }
    };
    read_sets("A", raw.a_sets);
    read_sets("B", raw.b_sets);

    for (const auto& m : j.at("matrices")) {
      std::vector<std::vector<RawMatrixEntry>> rows;
      for (const auto& r : m) {
        std::vector<RawMatrixEntry> row;
        for (const auto& e : r) {
          RawMatrixEntry entry;
          if (e.is_number_integer()) {
            entry.scalar = e.get<long>();
          } else if (e.is_array()) {
            entry.is_scalar = false;
            for (const auto& name : e) entry.elements.push_back(name.get<std::string>());
          } else {
            fail(origin, 0, "matrix entries are integers or element arrays");
          }
          row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
      }
      raw.matrices.push_back(std::move(rows));
    }
  } catch (const json::exception& e) {
    throw parse_error(origin + ": " + e.what());
  }
  return raw;
}

Group resolve_group(const RawSpec& raw) {
  if (raw.group_kind == "torus")
    return make_torus(raw.group_dims[0], raw.group_dims[1], raw.group_dims[2]);
  if (raw.group_kind == "cyclic") return make_cyclic(raw.group_dims[0]);
  if (raw.group_kind == "cayley") {
    std::filesystem::path p(raw.cayley_path);
    if (p.is_relative() && !raw.base_dir.empty())
      p = std::filesystem::path(raw.base_dir) / p;
    return load_cayley_file(p.string());
  }
  if (raw.group_kind == "table") return from_cayley_table(raw.table, raw.table_names);
  throw parse_error(raw.origin + ": no group block");
}

AnySpec realize(RawSpec raw) {
  if (raw.group_kind.empty()) throw parse_error(raw.origin + ": missing group");
  if (raw.q < 1) throw parse_error(raw.origin + ": missing or invalid q");
  if (static_cast<int>(raw.a_sets.size()) != raw.q ||
      static_cast<int>(raw.b_sets.size()) != raw.q)
    throw parse_error(raw.origin + ": expected q = " + std::to_string(raw.q) +
                      " A sets and B sets (found " + std::to_string(raw.a_sets.size()) +
                      " / " + std::to_string(raw.b_sets.size()) + ")");
  if (raw.matrices.empty()) throw parse_error(raw.origin + ": at least one matrix required");

  Group group = resolve_group(raw);

  auto resolve = [&](const std::string& tok) {
    try {
      return resolve_element(*group, tok);
    } catch (const validation_error& e) {
      throw parse_error(raw.origin + ": " + e.what());
    }
  };

  for (const auto& rows : raw.matrices) {
    if (static_cast<int>(rows.size()) != raw.q)
      throw parse_error(raw.origin + ": matrix must be " + std::to_string(raw.q) + "x" +
                        std::to_string(raw.q));
    for (const auto& row : rows)
      if (static_cast<int>(row.size()) != raw.q)
        throw parse_error(raw.origin + ": matrix must be " + std::to_string(raw.q) +
                          "x" + std::to_string(raw.q));
  }

  try {
    if (raw.d == 2) {
      std::vector<AlgebraElement> a, b;
      auto build_sets = [&](const std::vector<std::vector<RawSetEntry>>& src,
                            std::vector<AlgebraElement>& dst) {
        for (const auto& entries : src) {
          AlgebraElement s(group);
          for (const auto& e : entries) {
            if (e.count % 2 == 0) continue;  // counts mod 2
            s.toggle(resolve(e.element));
          }
          dst.push_back(std::move(s));
        }
      };
      build_sets(raw.a_sets, a);
      build_sets(raw.b_sets, b);

      const bool algebra_valued = std::any_of(
          raw.matrices.begin(), raw.matrices.end(), [](const auto& rows) {
            for (const auto& row : rows)
              for (const auto& e : row)
                if (!e.is_scalar) return true;
            return false;
          });
      std::vector<CodeMatrix> mats;
      for (const auto& rows : raw.matrices) {
        if (algebra_valued) {
          AlgebraMatrix m(group, raw.q);
          for (int r = 0; r < raw.q; ++r)
            for (int c = 0; c < raw.q; ++c) {
              AlgebraElement s(group);
              const auto& e = rows[r][c];
              if (e.is_scalar) {
                if (e.scalar != 0 && e.scalar != 1)
                  throw parse_error(raw.origin + ": binary matrix entries must be 0 or 1");
                if (e.scalar) s.insert(group->identity());
              } else {
                for (const auto& name : e.elements) s.toggle(resolve(name));
              }
              m.set(r, c, std::move(s));
            }
          mats.emplace_back(std::move(m));
        } else {
          BinaryMatrix m(raw.q);
          for (int r = 0; r < raw.q; ++r)
            for (int c = 0; c < raw.q; ++c) {
              if (rows[r][c].scalar != 0 && rows[r][c].scalar != 1)
                throw parse_error(raw.origin + ": binary matrix entries must be 0 or 1");
              m.set(r, c, static_cast<uint8_t>(rows[r][c].scalar));
            }
          mats.emplace_back(std::move(m));
        }
      }
      return CodeSpec::create(group, raw.q, std::move(a), std::move(b), std::move(mats));
    }

    // qudit path
    const auto d = static_cast<uint32_t>(raw.d);
    std::vector<WeightedAlgebraElement> a, b;
    auto build_sets = [&](const std::vector<std::vector<RawSetEntry>>& src,
                          std::vector<WeightedAlgebraElement>& dst) {
      for (const auto& entries : src) {
        WeightedAlgebraElement s(group, d);
        for (const auto& e : entries)
          s.add_coefficient(resolve(e.element),
                            static_cast<uint32_t>(((e.count % raw.d) + raw.d) % raw.d));
        dst.push_back(std::move(s));
      }
    };
    build_sets(raw.a_sets, a);
    build_sets(raw.b_sets, b);

    std::vector<ZdMatrix> mats;
    for (const auto& rows : raw.matrices) {
      ZdMatrix m(raw.q, d);
      for (int r = 0; r < raw.q; ++r)
        for (int c = 0; c < raw.q; ++c) {
          const auto& e = rows[r][c];
          if (!e.is_scalar)
            throw parse_error(raw.origin +
                              ": algebra-valued entries are not supported for d > 2");
          if (e.scalar < 0 || e.scalar >= raw.d)
            throw parse_error(raw.origin + ": matrix entries must lie in 0.." +
                              std::to_string(raw.d - 1));
          m.set(r, c, static_cast<uint32_t>(e.scalar));
        }
      mats.push_back(std::move(m));
    }
    return QuditCodeSpec::create(group, raw.q, d, std::move(a), std::move(b),
                                 std::move(mats));
  } catch (const validation_error& e) {
    // spec-level invariants failing at parse time are parse errors
    throw parse_error(raw.origin + ": " + e.what());
  }
}

}  // namespace

AnySpec parse_spec_text(const std::string& text, const std::string& origin,
                        std::optional<int> size_binding) {
  // sniff: first non-space character '{' means JSON
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw parse_error(origin + ": " + e.what());
    }
    return realize(parse_raw_json(j, origin, size_binding));
  }
  return realize(parse_raw_text(text, origin, size_binding));
}

AnySpec parse_spec_file(const std::string& path, std::optional<int> size_binding) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw parse_error(path + ": " + e.what());
    }
    RawSpec raw = parse_raw_json(j, path, size_binding);
    raw.base_dir = std::filesystem::path(path).parent_path().string();
    return realize(std::move(raw));
  }
  RawSpec raw = parse_raw_text(text, path, size_binding);
  raw.base_dir = std::filesystem::path(path).parent_path().string();
  return realize(std::move(raw));
}

namespace {

ordered_json group_to_json(const Group& g) {
  ordered_json out;
  const auto& desc = g->desc();
  if (desc.kind == GroupDesc::Kind::cyclic) {
    out["cyclic"] = desc.dims[0];
  } else if (desc.kind == GroupDesc::Kind::torus) {
    out["torus"] = desc.dims;
  } else {
    std::vector<std::vector<int>> table(g->order(), std::vector<int>(g->order()));
    for (int r = 0; r < g->order(); ++r)
      for (int c = 0; c < g->order(); ++c) table[r][c] = g->mul(r, c);
    out["table"] = table;
    out["names"] = g->names();
  }
  return out;
}

}  // namespace

std::string serialize_spec(const AnySpec& spec) {
  ordered_json out;
  if (const auto* s = std::get_if<CodeSpec>(&spec)) {
    out["group"] = group_to_json(s->group());
    out["q"] = s->q();
    out["d"] = 2;
    auto sets_json = [&](std::span<const AlgebraElement> sets) {
      ordered_json arr = ordered_json::array();
      for (const auto& set : sets) {
        ordered_json names = ordered_json::array();
        set.bits().for_each_set([&](int i) { names.push_back(s->group()->name(i)); });
        arr.push_back(std::move(names));
      }
      return arr;
    };
    out["A"] = sets_json(s->a_sets());
    out["B"] = sets_json(s->b_sets());
    ordered_json mats = ordered_json::array();
    for (const auto& m : s->matrices()) {
      ordered_json rows = ordered_json::array();
      if (const auto* bm = std::get_if<BinaryMatrix>(&m)) {
        for (int r = 0; r < bm->dim(); ++r) {
          ordered_json row = ordered_json::array();
          for (int c = 0; c < bm->dim(); ++c) row.push_back(static_cast<int>(bm->get(r, c)));
          rows.push_back(std::move(row));
        }
      } else {
        const auto& am = std::get<AlgebraMatrix>(m);
        for (int r = 0; r < am.dim(); ++r) {
          ordered_json row = ordered_json::array();
          for (int c = 0; c < am.dim(); ++c) {
            ordered_json names = ordered_json::array();
            am.get(r, c).bits().for_each_set(
                [&](int i) { names.push_back(s->group()->name(i)); });
            row.push_back(std::move(names));
          }
          rows.push_back(std::move(row));
        }
      }
      mats.push_back(std::move(rows));
    }
    out["matrices"] = std::move(mats);
  } else {
    const auto& s2 = std::get<QuditCodeSpec>(spec);
    out["group"] = group_to_json(s2.group());
    out["q"] = s2.q();
    out["d"] = s2.modulus();
    auto sets_json = [&](std::span<const WeightedAlgebraElement> sets) {
      ordered_json arr = ordered_json::array();
      for (const auto& set : sets) {
        ordered_json obj = ordered_json::object();
        for (int i : set.support())
          obj[s2.group()->name(i)] = set.coefficient(i);
        arr.push_back(std::move(obj));
      }
      return arr;
    };
    out["A"] = sets_json(s2.a_sets());
    out["B"] = sets_json(s2.b_sets());
    ordered_json mats = ordered_json::array();
    for (const auto& m : s2.matrices()) {
      ordered_json rows = ordered_json::array();
      for (int r = 0; r < m.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(m.get(r, c));
        rows.push_back(std::move(row));
      }
      mats.push_back(std::move(rows));
    }
    out["matrices"] = std::move(mats);
  }
  return out.dump(2) + "\n";
}

bool is_preset_name(const std::string& name) {
  return name == "haah-a" || name == "haah-b" || name == "lr-gcd" || name == "trivial";
}

AnySpec make_preset(const std::string& name, const PresetParams& params) {
  if (name == "haah-a") {
    if (params.size < 2) throw validation_error("haah-a: size must be >= 2");
    Group g = make_torus(params.size, params.size, params.size);
    auto set = [&](std::initializer_list<const char*> names) {
      AlgebraElement s(g);
      for (const char* n : names) s.insert(resolve_element(*g, n));
      return s;
    };
    std::vector<CodeMatrix> mats;
    mats.emplace_back(BinaryMatrix::identity(1));
    return CodeSpec::create(g, 1, {set({"1", "x", "y", "z"})},
                            {set({"1", "xy", "xz", "yz"})}, std::move(mats));
  }
  if (name == "haah-b") {
    if (params.size < 2) throw validation_error("haah-b: size must be >= 2");
    Group g = make_torus(params.size, params.size, params.size);
    auto set = [&](std::initializer_list<const char*> names) {
      AlgebraElement s(g);
      for (const char* n : names) s.insert(resolve_element(*g, n));
      return s;
    };
    BinaryMatrix second(2);
    second.set(0, 0, 1);
    second.set(0, 1, 1);
    second.set(1, 0, 1);
    std::vector<CodeMatrix> mats;
    mats.emplace_back(BinaryMatrix::identity(2));
    mats.emplace_back(std::move(second));
    return CodeSpec::create(g, 2, {set({"1", "-y"}), set({"1", "-x"})},
                            {set({"1", "-x"}), set({"1", "-z"})}, std::move(mats));
  }
  if (name == "lr-gcd") {
    if (params.n < 1) throw validation_error("lr-gcd: n must be positive");
    Group g = make_cyclic(params.n);
    AlgebraElement a(g), b(g);
    a.insert(0);
    a.insert(((params.a % params.n) + params.n) % params.n);
    b.insert(0);
    b.insert(((params.b % params.n) + params.n) % params.n);
    std::vector<CodeMatrix> mats;
    mats.emplace_back(BinaryMatrix::identity(1));
    return CodeSpec::create(g, 1, {std::move(a)}, {std::move(b)}, std::move(mats));
  }
  if (name == "trivial") {
    if (params.size < 1) throw validation_error("trivial: size must be positive");
    Group g = make_cyclic(params.size);
    AlgebraElement one(g);
    one.insert(g->identity());
    std::vector<CodeMatrix> mats;
    mats.emplace_back(BinaryMatrix::identity(1));
    return CodeSpec::create(g, 1, {one}, {one}, std::move(mats));
  }
  throw parse_error("unknown preset \"" + name +
                    "\" (haah-a, haah-b, lr-gcd, trivial)");
}

AnySpec load_spec(const std::string& source, const PresetParams& params,
                  std::optional<int> size_binding) {
  if (is_preset_name(source)) {
    PresetParams p = params;
    if (size_binding) p.size = *size_binding;
    return make_preset(source, p);
  }
  return parse_spec_file(source, size_binding);
}

std::vector<std::pair<std::string, AnySpec>> expand_sweep_sizes(
    const std::string& source, const std::vector<int>& sizes) {
  std::vector<std::pair<std::string, AnySpec>> out;
  for (int size : sizes) {
    PresetParams p;
    p.size = size;
    out.emplace_back("size=" + std::to_string(size), load_spec(source, p, size));
  }
  return out;
}

std::vector<std::pair<std::string, AnySpec>> expand_sweep_tuples(
    const std::vector<std::array<int, 3>>& tuples) {
  std::vector<std::pair<std::string, AnySpec>> out;
  for (const auto& t : tuples) {
    PresetParams p;
    p.n = t[0];
    p.a = t[1];
    p.b = t[2];
    out.emplace_back("n=" + std::to_string(t[0]) + ",a=" + std::to_string(t[1]) +
                         ",b=" + std::to_string(t[2]),
                     make_preset("lr-gcd", p));
  }
  return out;
}

}  // namespace xxz
