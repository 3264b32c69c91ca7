#include "homgd/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace homgd {

using nlohmann::json;

namespace {

std::string where_in(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(const std::string& at, const std::string& what) { throw DocumentError(at + ": " + what); }

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(key, "missing field");
  return *it;
}

std::size_t read_index(const json& v, const std::string& at, std::size_t bound) {
  if (!v.is_number_integer()) fail(at, "index must be an integer");
  const auto x = v.get<long long>();
  if (x < 0 || static_cast<std::size_t>(x) >= bound)
    fail(at, "index " + std::to_string(x) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(x);
}

std::size_t read_size(const json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(key, "must be a non-negative integer");
  return v.get<std::size_t>();
}

Scalar read_scalar(const json& v, const std::string& at) {
  if (v.is_number_integer()) return Scalar(v.get<long long>());
  if (!v.is_string()) fail(at, "coefficient must be a string");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(at, e.what());
  }
}

MPoly read_poly(const json& v, const std::string& at) {
  if (v.is_number_integer()) return MPoly(Scalar(v.get<long long>()));
  if (!v.is_string()) fail(at, "polynomial must be a string");
  try {
    return MPoly::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(at, e.what());
  }
}

std::vector<std::string> read_names(const json& obj, const char* key, std::size_t n) {
  std::vector<std::string> names;
  auto it = obj.find(key);
  if (it == obj.end()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    return names;
  }
  if (!it->is_array() || it->size() != n) fail(key, "expected " + std::to_string(n) + " names");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(*it)[i].is_string()) fail(std::string(key) + "[" + std::to_string(i) + "]", "name must be a string");
    names.push_back((*it)[i].get<std::string>());
  }
  return names;
}

template <class F>
void read_matrix(const json& rows, const std::string& at, std::size_t n, F&& set) {
  if (!rows.is_array() || rows.size() != n) fail(at, "expected " + std::to_string(n) + " rows");
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = rows[r];
    const std::string rat = at + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != n) fail(rat, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) set(r, c, row[c], rat + "[" + std::to_string(c) + "]");
  }
}

void parse_finite(const json& root, AlgebraDocument& doc) {
  doc.dim = read_size(require(root, "dim"), "dim");
  doc.names = read_names(root, "basis", doc.dim);
  if (auto it = root.find("ops"); it != root.end()) {
    if (!it->is_object()) fail("ops", "must be an object");
    for (const auto& [key, list] : it->items()) {
      const std::string at = "ops." + key;
      auto name = parse_op_name(key);
      if (!name) fail(at, "unknown operation");
      if (!list.is_array()) fail(at, "must be a list of [i, j, k, coefficient]");
      StructureTensor t(doc.dim);
      for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string eat = at + "[" + std::to_string(e) + "]";
        const json& entry = list[e];
        if (!entry.is_array() || entry.size() != 4) fail(eat, "expected [i, j, k, coefficient]");
        const auto i = read_index(entry[0], eat, doc.dim);
        const auto j = read_index(entry[1], eat, doc.dim);
        const auto k = read_index(entry[2], eat, doc.dim);
        t.add(i, j, k, read_scalar(entry[3], eat));
      }
      auto& out = doc.ops[*name];
      for (const auto& en : t.entries()) out.push_back({en.i, en.j, en.k, en.c});
    }
  }
  if (auto it = root.find("maps"); it != root.end()) {
    if (!it->is_object()) fail("maps", "must be an object");
    for (const auto& [key, rows] : it->items()) {
      const std::string at = "maps." + key;
      auto name = parse_map_name(key);
      if (!name) fail(at, "unknown map");
      Matrix m(doc.dim);
      read_matrix(rows, at, doc.dim,
                  [&](std::size_t r, std::size_t c, const json& v, const std::string& eat) { m(r, c) = read_scalar(v, eat); });
      doc.maps[*name] = std::move(m);
    }
  }
}

void parse_conformal(const json& root, AlgebraDocument& doc) {
  doc.dim = read_size(require(root, "rank"), "rank");
  doc.names = read_names(root, "generators", doc.dim);
  std::map<std::array<std::size_t, 3>, MPoly> acc;
  if (auto it = root.find("brackets"); it != root.end()) {
    if (!it->is_array()) fail("brackets", "must be a list of [i, j, generator, polynomial]");
    for (std::size_t e = 0; e < it->size(); ++e) {
      const std::string eat = "brackets[" + std::to_string(e) + "]";
      const json& entry = (*it)[e];
      if (!entry.is_array() || entry.size() != 4) fail(eat, "expected [i, j, generator, polynomial]");
      const auto i = read_index(entry[0], eat, doc.dim);
      const auto j = read_index(entry[1], eat, doc.dim);
      const auto g = read_index(entry[2], eat, doc.dim);
      MPoly p = read_poly(entry[3], eat);
      if (!p.uses_only({Var::d, Var::l})) fail(eat, "bracket polynomials may only use d and l");
      acc[{i, j, g}] += p;
    }
  }
  for (auto& [key, p] : acc)
    if (!p.is_zero()) doc.brackets.push_back({key[0], key[1], key[2], std::move(p)});
  if (auto it = root.find("maps"); it != root.end()) {
    if (!it->is_object()) fail("maps", "must be an object");
    for (const auto& [key, rows] : it->items()) {
      const std::string at = "maps." + key;
      if (key != "alpha") fail(at, "conformal documents only carry alpha");
      doc.conformal_alpha.assign(doc.dim * doc.dim, MPoly());
      read_matrix(rows, at, doc.dim, [&](std::size_t r, std::size_t c, const json& v, const std::string& eat) {
        MPoly p = read_poly(v, eat);
        if (!p.uses_only({Var::d})) fail(eat, "alpha entries may only use d");
        doc.conformal_alpha[r * doc.dim + c] = std::move(p);
      });
    }
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string names_line(const std::vector<std::string>& names) {
  std::string s = "[";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + quoted(names[i]);
  return s + "]";
}

template <class F>
std::string matrix_block(std::size_t n, F&& cell) {
  std::string s = "[";
  for (std::size_t r = 0; r < n; ++r) {
    s += r ? ",\n      [" : "\n      [";
    for (std::size_t c = 0; c < n; ++c) s += (c ? ", " : "") + quoted(cell(r, c));
    s += "]";
  }
  return s + (n ? "\n    ]" : "]");
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw DocumentError(where_in(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
  if (!root.is_object()) throw DocumentError("document must be a JSON object");

  AlgebraDocument doc;
  const json& schema = require(root, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kSchemaVersion)
    fail("schema", "expected \"" + std::string(kSchemaVersion) + "\"");
  const json& kind = require(root, "kind");
  if (kind == "finite_algebra") {
    doc.kind = DocumentKind::finite_algebra;
    parse_finite(root, doc);
  } else if (kind == "conformal_algebra") {
    doc.kind = DocumentKind::conformal_algebra;
    parse_conformal(root, doc);
  } else {
    fail("kind", "expected finite_algebra or conformal_algebra");
  }
  if (auto it = root.find("metadata"); it != root.end()) doc.metadata = *it;
  return doc;
}

std::string serialize(const AlgebraDocument& doc) {
  std::ostringstream os;
  const bool finite = doc.kind == DocumentKind::finite_algebra;
  os << "{\n";
  os << "  \"schema\": " << quoted(doc.schema) << ",\n";
  os << "  \"kind\": \"" << (finite ? "finite_algebra" : "conformal_algebra") << "\",\n";
  os << "  \"" << (finite ? "dim" : "rank") << "\": " << doc.dim << ",\n";
  os << "  \"" << (finite ? "basis" : "generators") << "\": " << names_line(doc.names) << ",\n";
  if (finite) {
    os << "  \"ops\": {";
    bool first = true;
    for (const auto& [name, list] : doc.ops) {
      os << (first ? "\n" : ",\n") << "    " << quoted(std::string(to_string(name))) << ": [";
      for (std::size_t e = 0; e < list.size(); ++e) {
        const auto& x = list[e];
        os << (e ? ",\n      " : "\n      ") << "[" << x.i << ", " << x.j << ", " << x.k << ", " << quoted(x.c.str())
           << "]";
      }
      os << (list.empty() ? "]" : "\n    ]");
      first = false;
    }
    os << (doc.ops.empty() ? "},\n" : "\n  },\n");
    os << "  \"maps\": {";
    first = true;
    for (const auto& [name, m] : doc.maps) {
      os << (first ? "\n" : ",\n") << "    " << quoted(std::string(to_string(name))) << ": "
         << matrix_block(doc.dim, [&](std::size_t r, std::size_t c) { return m(r, c).str(); });
      first = false;
    }
    os << (doc.maps.empty() ? "},\n" : "\n  },\n");
  } else {
    os << "  \"brackets\": [";
    for (std::size_t e = 0; e < doc.brackets.size(); ++e) {
      const auto& x = doc.brackets[e];
      os << (e ? ",\n    " : "\n    ") << "[" << x.i << ", " << x.j << ", " << x.g << ", " << quoted(x.p.str()) << "]";
    }
    os << (doc.brackets.empty() ? "],\n" : "\n  ],\n");
    os << "  \"maps\": {";
    if (!doc.conformal_alpha.empty())
      os << "\n    \"alpha\": "
         << matrix_block(doc.dim, [&](std::size_t r, std::size_t c) { return doc.conformal_alpha[r * doc.dim + c].str(); })
         << "\n  ";
    os << "},\n";
  }
  os << "  \"metadata\": " << doc.metadata.dump() << "\n";
  os << "}\n";
  return os.str();
}

AlgebraDocument to_document(const AlgebraCarrier& a, json metadata) {
  AlgebraDocument doc;
  doc.kind = DocumentKind::finite_algebra;
  doc.dim = a.dim();
  doc.names = a.basis_names();
  for (const auto& [name, t] : a.ops()) {
    auto& list = doc.ops[name];
    for (const auto& e : t.entries()) list.push_back({e.i, e.j, e.k, e.c});
  }
  doc.maps = a.maps();
  doc.metadata = std::move(metadata);
  return doc;
}

AlgebraDocument to_document(const ConformalAlgebra& r, json metadata) {
  AlgebraDocument doc;
  doc.kind = DocumentKind::conformal_algebra;
  doc.dim = r.rank();
  doc.names = r.generator_names();
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j)
      for (std::size_t g = 0; g < r.rank(); ++g)
        if (!r.bracket(i, j)[g].is_zero()) doc.brackets.push_back({i, j, g, r.bracket(i, j)[g]});
  for (std::size_t rr = 0; rr < r.rank(); ++rr)
    for (std::size_t c = 0; c < r.rank(); ++c) doc.conformal_alpha.push_back(r.alpha(rr, c));
  doc.metadata = std::move(metadata);
  return doc;
}

AlgebraCarrier load_finite(const AlgebraDocument& doc) {
  if (doc.kind != DocumentKind::finite_algebra) throw DocumentError("expected a finite_algebra document");
  AlgebraCarrier a(doc.dim, doc.names);
  for (const auto& [name, list] : doc.ops) {
    StructureTensor t(doc.dim);
    for (const auto& e : list) t.add(e.i, e.j, e.k, e.c);
    a.set_op(name, std::move(t));
  }
  for (const auto& [name, m] : doc.maps) a.set_map(name, m);
  return a;
}

ConformalAlgebra load_conformal(const AlgebraDocument& doc) {
  if (doc.kind != DocumentKind::conformal_algebra) throw DocumentError("expected a conformal_algebra document");
  ConformalAlgebra r(doc.dim, doc.names);
  std::vector<PolyVec> table(doc.dim * doc.dim, PolyVec(doc.dim));
  for (const auto& e : doc.brackets) table[e.i * doc.dim + e.j][e.g] += e.p;
  for (std::size_t i = 0; i < doc.dim; ++i)
    for (std::size_t j = 0; j < doc.dim; ++j) r.set_bracket(i, j, table[i * doc.dim + j]);
  if (doc.conformal_alpha.empty()) throw MissingSlot("alpha");
  for (std::size_t rr = 0; rr < doc.dim; ++rr)
    for (std::size_t c = 0; c < doc.dim; ++c) r.set_alpha(rr, c, doc.conformal_alpha[rr * doc.dim + c]);
  return r;
}

std::variant<AlgebraCarrier, ConformalAlgebra> load(const AlgebraDocument& doc) {
  if (doc.kind == DocumentKind::finite_algebra) return load_finite(doc);
  return load_conformal(doc);
}

AlgebraDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

void write_document(const std::string& path, const AlgebraDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize(doc);
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace homgd
