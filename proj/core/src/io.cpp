#include "resolvent/io.hpp"

#include <istream>
#include <sstream>

#include "json.hpp"
#include "resolvent/errors.hpp"

namespace resolvent::io {

using nlohmann::json;

Backend parse_backend(const std::string& s) {
  if (s == "vect") return {BackendKind::VectFp, 1};
  if (s == "repa2") return {BackendKind::RepA2, 1};
  if (s.rfind("nilp:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(s.substr(5));
    } catch (const std::exception&) {
      fail(ErrKind::ParseError, "bad nilpotency index in backend '" + s + "'");
    }
    require(n >= 1, ErrKind::ParseError, "nilpotency index must be >= 1");
    return {BackendKind::NilpMod, n};
  }
  fail(ErrKind::ParseError, "unknown backend '" + s + "' (expected vect, nilp:<n>, repa2)");
}

// ---------------------------------------------------------------- text output

namespace {

void put_matrix(std::ostream& os, const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
    os << "\n";
  }
}

void put_obj_body(std::ostream& os, const Obj& a) {
  if (a.backend.kind != BackendKind::VectFp && a.op.rows() * a.op.cols() > 0) {
    os << "op:\n";
    put_matrix(os, a.op);
  }
}

void put_mor_body(std::ostream& os, const Mor& f, const char* name) {
  int nv = vertex_count(f.dom.backend);
  for (int v = 0; v < nv; ++v) {
    if (f.comp[v].rows() * f.comp[v].cols() == 0) continue;
    os << name;
    if (nv > 1) os << (v + 1);
    os << ":\n";
    put_matrix(os, f.comp[v]);
  }
}

void put_dims(std::ostream& os, const Obj& a) {
  for (size_t v = 0; v < a.dims.size(); ++v) os << (v ? " " : "") << a.dims[v];
}

void put_complex_body(std::ostream& os, const Complex& x) {
  for (int n = x.lo; n <= x.hi(); ++n) {
    os << "degree " << n << ": ";
    put_dims(os, x.obj_at(n));
    os << "\n";
    put_obj_body(os, x.obj_at(n));
    if (n < x.hi()) put_mor_body(os, x.diffs[n - x.lo], "d");
  }
}

}  // namespace

std::string to_text(const Complex& x, int p) {
  std::ostringstream os;
  os << "backend " << backend_name(x.backend) << "\n";
  os << "p " << p << "\n";
  put_complex_body(os, x);
  return os.str();
}

std::string to_text(const ChainMap& f, int p) {
  std::ostringstream os;
  os << "chainmap\n";
  os << "backend " << backend_name(f.src.backend) << "\n";
  os << "p " << p << "\n";
  os << "src:\n";
  put_complex_body(os, f.src);
  os << "dst:\n";
  put_complex_body(os, f.dst);
  os << "map:\n";
  for (int n = f.src.lo; n <= f.src.hi(); ++n) {
    Mor c = f.at(n);
    int entries = 0;
    for (auto& m : c.comp) entries += m.rows() * m.cols();
    if (entries == 0) continue;
    os << "degree " << n << ":\n";
    put_mor_body(os, c, "m");
  }
  return os.str();
}

std::string grid_to_text(const Bicomplex& g, int p) {
  std::ostringstream os;
  os << "grid over " << backend_name(g.backend) << ", p " << p;
  os << ", rows " << g.r0 << ".." << g.r1 << ", cols " << g.c0 << ".." << g.c1 << "\n";
  for (int c = g.c0; c <= g.c1; ++c)
    for (int r = g.r0; r <= g.r1; ++r) {
      Obj a = g.obj_at(r, c);
      if (a.is_zero()) continue;
      os << "(" << r << "," << c << "): ";
      put_dims(os, a);
      os << "\n";
      put_obj_body(os, a);
      put_mor_body(os, g.d0_at(r, c), "d0_");
      put_mor_body(os, g.d1_at(r, c), "d1_");
    }
  return os.str();
}

// ---------------------------------------------------------------- text input

namespace {

/* Simple line lexer: skips blanks and '#' comments, supports one-line peek. */
struct Lines {
  std::istream& in;
  std::string buf;
  bool has = false;

  bool peek(std::string& out) {
    while (!has) {
      if (!std::getline(in, buf)) return false;
      size_t a = buf.find_first_not_of(" \t\r");
      if (a == std::string::npos || buf[a] == '#') continue;
      size_t b = buf.find_last_not_of(" \t\r");
      buf = buf.substr(a, b - a + 1);
      has = true;
    }
    out = buf;
    return true;
  }
  bool next(std::string& out) {
    if (!peek(out)) return false;
    has = false;
    return true;
  }
};

std::vector<int> parse_ints(const std::string& s) {
  std::istringstream is(s);
  std::vector<int> out;
  int v;
  while (is >> v) out.push_back(v);
  require(is.eof(), ErrKind::ParseError, "bad integer row: '" + s + "'");
  return out;
}

Matrix read_matrix(Lines& lx, int rows, int cols, const std::string& what) {
  Matrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  for (int r = 0; r < rows; ++r) {
    std::string line;
    require(lx.next(line), ErrKind::ParseError, "unexpected end of input in " + what);
    auto vals = parse_ints(line);
    require((int)vals.size() == cols, ErrKind::ParseError,
            what + ": expected " + std::to_string(cols) + " entries, got " + std::to_string(vals.size()));
    for (int c = 0; c < cols; ++c) m.set(r, c, vals[c]);
  }
  return m;
}

bool eat_label(Lines& lx, const std::string& label) {
  std::string line;
  if (!lx.peek(line) || line != label) return false;
  lx.next(line);
  return true;
}

/* "degree <n>: <dims>" -> (n, dims) */
bool parse_degree_header(const std::string& line, int nv, int& n, std::vector<int>& dims) {
  if (line.rfind("degree ", 0) != 0) return false;
  size_t colon = line.find(':');
  require(colon != std::string::npos, ErrKind::ParseError, "missing ':' in degree header");
  n = std::stoi(line.substr(7, colon - 7));
  dims = parse_ints(line.substr(colon + 1));
  require((int)dims.size() == nv, ErrKind::ParseError, "degree header: wrong number of dimensions");
  return true;
}

Obj read_obj(Lines& lx, const Backend& b, const std::vector<int>& dims) {
  switch (b.kind) {
    case BackendKind::VectFp:
      return vect_obj(dims[0]);
    case BackendKind::NilpMod: {
      Matrix x(dims[0], dims[0]);
      if (dims[0] > 0 && eat_label(lx, "op:")) x = read_matrix(lx, dims[0], dims[0], "op");
      return nilp_obj(b.nilp, x);
    }
    case BackendKind::RepA2: {
      Matrix f(dims[1], dims[0]);
      if (dims[0] * dims[1] > 0 && eat_label(lx, "op:")) f = read_matrix(lx, dims[1], dims[0], "op");
      return repa2_obj(dims[0], dims[1], f);
    }
  }
  fail(ErrKind::ParseError, "bad backend");
}

Mor read_mor(Lines& lx, const Obj& dom, const Obj& cod, const char* name) {
  int nv = vertex_count(dom.backend);
  std::vector<Matrix> comp;
  for (int v = 0; v < nv; ++v) {
    std::string label = name;
    if (nv > 1) label += std::to_string(v + 1);
    label += ":";
    Matrix m(cod.dims[v], dom.dims[v]);
    if (cod.dims[v] * dom.dims[v] > 0) {
      require(eat_label(lx, label), ErrKind::ParseError, "expected '" + label + "'");
      m = read_matrix(lx, cod.dims[v], dom.dims[v], label);
    }
    comp.push_back(m);
  }
  return make_mor(dom, cod, std::move(comp));
}

/* Reads "backend ..." / "p ..." header lines; sets the session modulus. */
void read_header(Lines& lx, Backend& b, int& p) {
  std::string line;
  require(lx.next(line) && line.rfind("backend ", 0) == 0, ErrKind::ParseError, "expected 'backend <name>'");
  b = parse_backend(line.substr(8));
  require(lx.next(line) && line.rfind("p ", 0) == 0, ErrKind::ParseError, "expected 'p <prime>'");
  p = std::stoi(line.substr(2));
  require(p >= 2, ErrKind::ParseError, "modulus must be >= 2");
  fp::set_modulus(p);
}

bool is_terminator(const std::string& line) {
  return line == "src:" || line == "dst:" || line == "map:" || line == "---" || line == "chainmap";
}

/* Degree blocks until a terminator or a line that is not a degree header.
   The rows of a d-section are sized by the *next* degree, so the section is
   buffered as raw text and parsed once the target object is known. */
Complex read_complex_body(Lines& lx, const Backend& b) {
  int nv = vertex_count(b);
  std::vector<Obj> objs;
  std::vector<std::vector<std::string>> sections;  // raw d-section per degree
  int lo = 0;
  std::string line;
  while (lx.peek(line)) {
    int n;
    std::vector<int> dims;
    if (is_terminator(line) || !parse_degree_header(line, nv, n, dims)) break;
    lx.next(line);
    if (objs.empty())
      lo = n;
    else
      require(n == lo + (int)objs.size(), ErrKind::ParseError, "degrees must be consecutive");
    objs.push_back(read_obj(lx, b, dims));
    sections.emplace_back();
    while (lx.peek(line) && !is_terminator(line)) {
      int n2;
      std::vector<int> d2;
      if (parse_degree_header(line, nv, n2, d2)) break;
      lx.next(line);
      sections.back().push_back(line);
    }
  }
  require(!objs.empty(), ErrKind::ParseError, "complex literal has no degree blocks");
  std::vector<Mor> diffs;
  for (size_t i = 0; i + 1 < objs.size(); ++i) {
    std::string joined;
    for (auto& s : sections[i]) joined += s + "\n";
    std::istringstream body(joined);
    Lines blx{body};
    diffs.push_back(read_mor(blx, objs[i], objs[i + 1], "d"));
    std::string left;
    require(!blx.peek(left), ErrKind::ParseError, "trailing text after differential rows");
  }
  require(sections.back().empty(), ErrKind::ParseError, "differential rows after the last degree");
  return make_complex(b, lo, std::move(objs), std::move(diffs));
}

ParsedComplex complex_from_lines(Lines& lx) {
  ParsedComplex out;
  Backend b;
  read_header(lx, b, out.p);
  out.cx = read_complex_body(lx, b);
  return out;
}

ParsedChainMap chain_map_from_lines(Lines& lx) {
  std::string line;
  require(lx.next(line) && line == "chainmap", ErrKind::ParseError, "expected 'chainmap'");
  Backend b;
  ParsedChainMap out;
  read_header(lx, b, out.p);
  require(eat_label(lx, "src:"), ErrKind::ParseError, "expected 'src:'");
  Complex src = read_complex_body(lx, b);
  require(eat_label(lx, "dst:"), ErrKind::ParseError, "expected 'dst:'");
  Complex dst = read_complex_body(lx, b);
  require(eat_label(lx, "map:"), ErrKind::ParseError, "expected 'map:'");
  std::vector<Mor> comps;
  for (int n = src.lo; n <= src.hi(); ++n) comps.push_back(zero_mor(src.obj_at(n), dst.obj_at(n)));
  while (lx.peek(line) && line != "---") {
    int n;
    size_t colon = line.find(':');
    require(line.rfind("degree ", 0) == 0 && colon != std::string::npos, ErrKind::ParseError,
            "expected 'degree <n>:' in map section");
    n = std::stoi(line.substr(7, colon - 7));
    require(n >= src.lo && n <= src.hi(), ErrKind::ParseError, "map degree outside the source window");
    lx.next(line);
    comps[n - src.lo] = read_mor(lx, src.obj_at(n), dst.obj_at(n), "m");
  }
  out.map = make_chain_map(src, dst, src.lo, std::move(comps));
  return out;
}

}  // namespace

ParsedComplex complex_from_text(std::istream& in) {
  Lines lx{in};
  return complex_from_lines(lx);
}

ParsedChainMap chain_map_from_text(std::istream& in) {
  Lines lx{in};
  return chain_map_from_lines(lx);
}

std::vector<ParsedComplex> complex_list_from_text(std::istream& in) {
  Lines lx{in};
  std::vector<ParsedComplex> out;
  std::string line;
  while (lx.peek(line)) {
    out.push_back(complex_from_lines(lx));
    if (lx.peek(line)) {
      require(line == "---", ErrKind::ParseError, "expected '---' between complexes");
      lx.next(line);
    }
  }
  require(!out.empty(), ErrKind::ParseError, "empty complex list");
  return out;
}

// ---------------------------------------------------------------------- json

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  if (m.rows() * m.cols() == 0) return rows;
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, int rows, int cols, const std::string& what) {
  Matrix m(rows, cols);
  if (j.empty()) return m;
  require((int)j.size() == rows, ErrKind::ParseError, what + ": wrong row count");
  for (int r = 0; r < rows; ++r) {
    require((int)j[r].size() == cols, ErrKind::ParseError, what + ": wrong column count");
    for (int c = 0; c < cols; ++c) m.set(r, c, j[r][c].get<int64_t>());
  }
  return m;
}

json obj_to_json(const Obj& a) {
  json j;
  j["dims"] = a.dims;
  if (a.backend.kind != BackendKind::VectFp) j["op"] = matrix_to_json(a.op);
  return j;
}

Obj obj_from_json(const json& j, const Backend& b) {
  auto dims = j.at("dims").get<std::vector<int>>();
  require((int)dims.size() == vertex_count(b), ErrKind::ParseError, "object: wrong number of dimensions");
  switch (b.kind) {
    case BackendKind::VectFp:
      return vect_obj(dims[0]);
    case BackendKind::NilpMod:
      return nilp_obj(b.nilp, matrix_from_json(j.value("op", json::array()), dims[0], dims[0], "op"));
    case BackendKind::RepA2:
      return repa2_obj(dims[0], dims[1], matrix_from_json(j.value("op", json::array()), dims[1], dims[0], "op"));
  }
  fail(ErrKind::ParseError, "bad backend");
}

json mor_to_json(const Mor& f) {
  json comps = json::array();
  for (auto& m : f.comp) comps.push_back(matrix_to_json(m));
  return json{{"comps", comps}};
}

Mor mor_from_json(const json& j, const Obj& dom, const Obj& cod) {
  const json& comps = j.at("comps");
  require((int)comps.size() == vertex_count(dom.backend), ErrKind::ParseError, "morphism: wrong component count");
  std::vector<Matrix> out;
  for (int v = 0; v < vertex_count(dom.backend); ++v)
    out.push_back(matrix_from_json(comps[v], cod.dims[v], dom.dims[v], "morphism component"));
  return make_mor(dom, cod, std::move(out));
}

json complex_body_to_json(const Complex& x) {
  json j;
  j["lo"] = x.lo;
  j["objects"] = json::array();
  for (auto& a : x.objs) j["objects"].push_back(obj_to_json(a));
  j["diffs"] = json::array();
  for (auto& d : x.diffs) j["diffs"].push_back(mor_to_json(d));
  return j;
}

Complex complex_body_from_json(const json& j, const Backend& b) {
  std::vector<Obj> objs;
  for (auto& oj : j.at("objects")) objs.push_back(obj_from_json(oj, b));
  require(!objs.empty(), ErrKind::ParseError, "complex has no objects");
  const json& dj = j.at("diffs");
  require(dj.size() + 1 == objs.size(), ErrKind::ParseError, "complex: need one differential per adjacent pair");
  std::vector<Mor> diffs;
  for (size_t i = 0; i + 1 < objs.size(); ++i) diffs.push_back(mor_from_json(dj[i], objs[i], objs[i + 1]));
  return make_complex(b, j.at("lo").get<int>(), std::move(objs), std::move(diffs));
}

std::pair<Backend, int> json_header(const json& j) {
  Backend b = parse_backend(j.at("backend").get<std::string>());
  int p = j.at("p").get<int>();
  require(p >= 2, ErrKind::ParseError, "modulus must be >= 2");
  fp::set_modulus(p);
  return {b, p};
}

ParsedComplex complex_from_json_value(const json& j) {
  auto [b, p] = json_header(j);
  return {p, complex_body_from_json(j, b)};
}

}  // namespace

std::string to_json(const Complex& x, int p) {
  json j = complex_body_to_json(x);
  j["backend"] = backend_name(x.backend);
  j["p"] = p;
  return j.dump(2) + "\n";
}

std::string to_json(const ChainMap& f, int p) {
  json j;
  j["backend"] = backend_name(f.src.backend);
  j["p"] = p;
  j["src"] = complex_body_to_json(f.src);
  j["dst"] = complex_body_to_json(f.dst);
  json map = json::array();
  for (int n = f.lo; n < f.lo + (int)f.comps.size(); ++n)
    map.push_back(json{{"degree", n}, {"comps", mor_to_json(f.comps[n - f.lo])["comps"]}});
  j["map"] = map;
  return j.dump(2) + "\n";
}

ParsedComplex complex_from_json(const std::string& text) {
  try {
    return complex_from_json_value(json::parse(text));
  } catch (const json::exception& e) {
    fail(ErrKind::ParseError, std::string("json: ") + e.what());
  }
}

ParsedChainMap chain_map_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    auto [b, p] = json_header(j);
    Complex src = complex_body_from_json(j.at("src"), b);
    Complex dst = complex_body_from_json(j.at("dst"), b);
    std::vector<Mor> comps;
    for (int n = src.lo; n <= src.hi(); ++n) comps.push_back(zero_mor(src.obj_at(n), dst.obj_at(n)));
    for (auto& ej : j.at("map")) {
      int n = ej.at("degree").get<int>();
      require(n >= src.lo && n <= src.hi(), ErrKind::ParseError, "map degree outside the source window");
      comps[n - src.lo] = mor_from_json(ej, src.obj_at(n), dst.obj_at(n));
    }
    return {p, make_chain_map(src, dst, src.lo, std::move(comps))};
  } catch (const json::exception& e) {
    fail(ErrKind::ParseError, std::string("json: ") + e.what());
  }
}

std::vector<ParsedComplex> complex_list_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    require(j.is_array() && !j.empty(), ErrKind::ParseError, "expected a nonempty json array of complexes");
    std::vector<ParsedComplex> out;
    for (auto& cj : j) out.push_back(complex_from_json_value(cj));
    return out;
  } catch (const json::exception& e) {
    fail(ErrKind::ParseError, std::string("json: ") + e.what());
  }
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace resolvent::io
