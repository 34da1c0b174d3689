#include "nakalab/parse.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nakalab/errors.hpp"

namespace nakalab {

namespace {

struct Token {
  std::string text;
  int col = 0;
};

std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> toks;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return toks;
}

long long parse_int(const Token& t, int line) {
  size_t pos = 0;
  long long v;
  try {
    v = std::stoll(t.text, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + t.text + "'", line, t.col);
  }
  if (pos != t.text.size())
    throw ParseError("expected an integer, got '" + t.text + "'", line, t.col);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Row-major matrix literal: [[1,0],[0,1]] or [] for an empty matrix.
// Whitespace-free by tokenization; entries may be negative.
Mat parse_matrix(const Token& t, int line, int rows, int cols, unsigned p,
                 const std::string& arrow) {
  const std::string& s = t.text;
  std::vector<std::vector<long long>> data;
  size_t i = 0;
  auto fail = [&](const std::string& msg) -> Mat {
    throw ParseError(msg + " in matrix for arrow " + arrow, line, t.col + static_cast<int>(i));
  };
  if (i >= s.size() || s[i] != '[') return fail("expected '['");
  ++i;
  if (i < s.size() && s[i] == ']') {
    ++i;
  } else {
    while (true) {
      if (i >= s.size() || s[i] != '[') return fail("expected '['");
      ++i;
      std::vector<long long> row;
      if (i < s.size() && s[i] == ']') {
        ++i;
      } else {
        while (true) {
          size_t j = i;
          if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          if (j == i) return fail("expected an entry");
          row.push_back(std::stoll(s.substr(i, j - i)));
          i = j;
          if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
          }
          if (i < s.size() && s[i] == ']') {
            ++i;
            break;
          }
          return fail("expected ',' or ']'");
        }
      }
      data.push_back(std::move(row));
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ']') {
        ++i;
        break;
      }
      return fail("expected ',' or ']'");
    }
  }
  if (i != s.size()) return fail("trailing characters");

  if (static_cast<int>(data.size()) != rows)
    throw ParseError("matrix for arrow " + arrow + " has " + std::to_string(data.size()) +
                         " rows, expected " + std::to_string(rows),
                     line, t.col);
  Mat m(rows, cols, p);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(data[r].size()) != cols)
      throw ParseError("matrix for arrow " + arrow + " has a row of length " +
                           std::to_string(data[r].size()) + ", expected " + std::to_string(cols),
                       line, t.col);
    for (int c = 0; c < cols; ++c) m.set(r, c, data[r][c]);
  }
  return m;
}

}  // namespace

AlgebraPtr parse_algebra_text(const std::string& text, std::optional<unsigned> override_field) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::optional<unsigned> field;
  std::vector<int> vertex_ids;
  std::set<int> vertex_seen;
  std::vector<Arrow> arrows;
  std::set<std::string> arrow_names;
  std::vector<std::vector<std::string>> rels;
  std::vector<int> rel_lines;

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = tokenize_line(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "field") {
      if (toks.size() != 2) throw ParseError("field takes one argument", lineno, toks[0].col);
      if (field) throw ParseError("duplicate field line", lineno, toks[0].col);
      long long v = parse_int(toks[1], lineno);
      if (v < 2 || !is_prime(static_cast<unsigned>(v)))
        throw ParseError("field characteristic must be a prime", lineno, toks[1].col);
      field = static_cast<unsigned>(v);
    } else if (kw == "vertex") {
      if (toks.size() < 2) throw ParseError("vertex needs at least one id", lineno, toks[0].col);
      for (size_t i = 1; i < toks.size(); ++i) {
        long long id = parse_int(toks[i], lineno);
        if (!vertex_seen.insert(static_cast<int>(id)).second)
          throw ParseError("duplicate vertex " + toks[i].text, lineno, toks[i].col);
        vertex_ids.push_back(static_cast<int>(id));
      }
    } else if (kw == "arrow") {
      if (toks.size() != 4)
        throw ParseError("arrow takes: name src tgt", lineno, toks[0].col);
      if (!arrow_names.insert(toks[1].text).second)
        throw ParseError("duplicate arrow " + toks[1].text, lineno, toks[1].col);
      int src = static_cast<int>(parse_int(toks[2], lineno));
      int tgt = static_cast<int>(parse_int(toks[3], lineno));
      int si = -1, ti = -1;
      for (size_t i = 0; i < vertex_ids.size(); ++i) {
        if (vertex_ids[i] == src) si = static_cast<int>(i);
        if (vertex_ids[i] == tgt) ti = static_cast<int>(i);
      }
      if (si < 0) throw ParseError("unknown vertex " + toks[2].text, lineno, toks[2].col);
      if (ti < 0) throw ParseError("unknown vertex " + toks[3].text, lineno, toks[3].col);
      arrows.push_back({toks[1].text, si, ti});
    } else if (kw == "rel") {
      if (toks.size() < 3)
        throw ParseError("relation needs at least two arrows", lineno, toks[0].col);
      std::vector<std::string> r;
      for (size_t i = 1; i < toks.size(); ++i) r.push_back(toks[i].text);
      rels.push_back(std::move(r));
      rel_lines.push_back(lineno);
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno, toks[0].col);
    }
  }

  Quiver q(vertex_ids, arrows);
  std::vector<Relation> relations;
  for (size_t r = 0; r < rels.size(); ++r) {
    Relation rel;
    for (const std::string& name : rels[r]) {
      int a = q.arrow_index(name);
      if (a < 0) throw ParseError("unknown arrow " + name, rel_lines[r]);
      rel.arrows.push_back(a);
    }
    for (size_t i = 0; i + 1 < rel.arrows.size(); ++i)
      if (q.arrow(rel.arrows[i]).tgt != q.arrow(rel.arrows[i + 1]).src)
        throw ParseError("relation is not a composable path", rel_lines[r]);
    relations.push_back(std::move(rel));
  }

  unsigned p = override_field.value_or(field.value_or(2));
  return std::make_shared<const BoundQuiverAlgebra>(std::move(q), std::move(relations), p);
}

AlgebraPtr parse_algebra_file(const std::string& path, std::optional<unsigned> override_field) {
  return parse_algebra_text(read_file(path), override_field);
}

Representation parse_module_text(const std::string& text, AlgebraPtr alg) {
  if (!alg) throw ParseError("module has no algebra ('use' line or explicit algebra required)");
  const Quiver& q = alg->quiver();
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::vector<int> dims(q.num_vertices(), 0);
  std::vector<char> dim_set(q.num_vertices(), 0);
  std::map<int, std::pair<Token, int>> map_lines;  // arrow -> literal token, line

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = tokenize_line(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "use") {
      continue;  // resolved by parse_module_file
    } else if (kw == "dim") {
      if (toks.size() != 3) throw ParseError("dim takes: vertex d", lineno, toks[0].col);
      int id = static_cast<int>(parse_int(toks[1], lineno));
      int v = q.vertex_index(id);
      if (v < 0) throw ParseError("unknown vertex " + toks[1].text, lineno, toks[1].col);
      long long d = parse_int(toks[2], lineno);
      if (d < 0) throw ParseError("negative dimension", lineno, toks[2].col);
      if (dim_set[v]) throw ParseError("duplicate dim for vertex " + toks[1].text, lineno);
      dims[v] = static_cast<int>(d);
      dim_set[v] = 1;
    } else if (kw == "map") {
      if (toks.size() != 3)
        throw ParseError("map takes: arrow matrix-literal", lineno, toks[0].col);
      int a = q.arrow_index(toks[1].text);
      if (a < 0) throw ParseError("unknown arrow " + toks[1].text, lineno, toks[1].col);
      if (map_lines.count(a))
        throw ParseError("duplicate map for arrow " + toks[1].text, lineno);
      map_lines[a] = {toks[2], lineno};
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno, toks[0].col);
    }
  }

  std::vector<Mat> mats;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    auto it = map_lines.find(a);
    if (it == map_lines.end()) {
      mats.emplace_back(dims[ar.src], dims[ar.tgt], alg->prime());
    } else {
      mats.push_back(parse_matrix(it->second.first, it->second.second, dims[ar.src],
                                  dims[ar.tgt], alg->prime(), ar.name));
    }
  }

  Representation m(alg, std::move(dims), std::move(mats));
  m.validate();
  return m;
}

Representation parse_module_file(const std::string& path, AlgebraPtr alg,
                                 std::optional<unsigned> override_field) {
  std::string text = read_file(path);
  if (!alg) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::vector<Token> toks = tokenize_line(line);
      if (toks.empty()) continue;
      if (toks[0].text == "use") {
        if (toks.size() != 2) throw ParseError("use takes one path", lineno, toks[0].col);
        std::filesystem::path base = std::filesystem::path(path).parent_path();
        alg = parse_algebra_file((base / toks[1].text).string(), override_field);
        break;
      }
    }
  }
  return parse_module_text(text, alg);
}

}  // namespace nakalab
