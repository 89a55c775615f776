#include "surfcomp/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace surfcomp {

namespace {

struct Field {
  std::string key;
  std::string value;
  int col = 0;
  int value_col = 0;
};

struct Line {
  int no = 0;
  std::string head;
  int head_col = 0;
  std::vector<std::pair<std::string, int>> pos;
  std::vector<Field> fields;

  std::string rest() const {
    std::string out;
    for (const auto& [w, c] : pos) out += (out.empty() ? "" : " ") + w;
    return out;
  }
  int rest_col() const { return pos.empty() ? head_col : pos[0].second; }
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> out;
  int no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++no;
    start = end + 1;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    line.no = no;
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      std::string w(raw.substr(i, j - i));
      int col = static_cast<int>(i) + 1;
      if (line.head.empty()) {
        line.head = w;
        line.head_col = col;
      } else if (size_t eq = w.find('='); eq != std::string::npos) {
        line.fields.push_back({w.substr(0, eq), w.substr(eq + 1), col, col + static_cast<int>(eq) + 1});
      } else if (!line.fields.empty()) {
        line.fields.back().value += " " + w;
      } else {
        line.pos.emplace_back(w, col);
      }
      i = j;
    }
    if (!line.head.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

[[noreturn]] void fail(const Line& l, int col, const std::string& msg) { throw ParseError(l.no, col, msg); }

long to_long(const Line& l, const std::string& s, int col) {
  if (s.empty()) fail(l, col, "expected an integer");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(l, col, "expected an integer, got '" + s + "'");
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) fail(l, col, "expected an integer, got '" + s + "'");
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    fail(l, col, "integer out of range '" + s + "'");
  }
}

FormalReal to_formal(const Line& l, const std::string& s, int col, const BasisPtr& basis) {
  try {
    return parse_formal(s, basis);
  } catch (const ParseError& e) {
    fail(l, col + e.column() - 1, "malformed value '" + s + "'");
  }
}

std::vector<FormalReal> to_formal_list(const Line& l, const std::string& s, int col, const BasisPtr& basis) {
  try {
    return parse_formal_list(s, basis);
  } catch (const ParseError& e) {
    fail(l, col + e.column() - 1, "malformed list '" + s + "'");
  }
}

Rational to_rational(const Line& l, const std::string& s, int col) {
  try {
    return parse_rational(s);
  } catch (const ParseError& e) {
    fail(l, col + e.column() - 1, "malformed rational '" + s + "'");
  }
}

std::vector<Rational> to_rational_list(const Line& l, const std::string& s, int col) {
  std::vector<Rational> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(to_rational(l, item, col + static_cast<int>(start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<long> to_long_list(const Line& l, const std::string& s, int col) {
  std::vector<long> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(to_long(l, item, col + static_cast<int>(start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

const Field* field(const Line& l, const std::string& key, bool required = false) {
  for (const auto& f : l.fields)
    if (f.key == key) return &f;
  if (required) fail(l, l.head_col, "missing " + key + "=");
  return nullptr;
}

void allow_keys(const Line& l, std::initializer_list<const char*> keys) {
  for (const auto& f : l.fields) {
    bool ok = false;
    for (const char* k : keys) ok = ok || f.key == k;
    if (!ok) fail(l, f.col, "unknown key '" + f.key + "'");
  }
}

void positional(const Line& l, size_t n) {
  if (l.pos.size() < n) fail(l, l.head_col, l.head + " needs " + std::to_string(n) + " argument(s)");
  if (l.pos.size() > n) fail(l, l.pos[n].second, "unexpected '" + l.pos[n].first + "'");
}

BasisPtr read_basis(const std::vector<Line>& lines) {
  std::vector<std::pair<std::string, std::string>> decl;
  for (const auto& l : lines) {
    if (l.head != "basis") continue;
    if (l.pos.size() != 3 || l.pos[1].first != "~") fail(l, l.rest_col(), "expected 'basis <name> ~ <witness>'");
    decl.emplace_back(l.pos[0].first, l.pos[2].first);
  }
  if (decl.empty()) return nullptr;
  return make_basis(decl);
}

struct GraphBuilder {
  GraphInput out;
  std::map<long, size_t> ids;

  bool take(const Line& l) {
    auto& g = out.graph;
    if (l.head == "vertex") {
      positional(l, 1);
      allow_keys(l, {"weight", "genus"});
      long id = to_long(l, l.pos[0].first, l.pos[0].second);
      const Field* w = field(l, "weight", true);
      long weight = to_long(l, w->value, w->value_col);
      long genus = 0;
      if (const Field* f = field(l, "genus")) genus = to_long(l, f->value, f->value_col);
      if (ids.count(id)) throw ValidationError("duplicate vertex " + std::to_string(id));
      ids[id] = g.add_vertex(weight, genus);
      return true;
    }
    if (l.head == "edge") {
      positional(l, 2);
      allow_keys(l, {});
      g.add_edge(vertex(l, l.pos[0].first, l.pos[0].second), vertex(l, l.pos[1].first, l.pos[1].second));
      return true;
    }
    if (l.head == "branch" && !field(l, "through")) {
      positional(l, 1);
      allow_keys(l, {"coeff"});
      const Field* c = field(l, "coeff", true);
      for (const auto& b : g.branches)
        if (b == l.pos[0].first) throw ValidationError("duplicate branch " + b);
      g.add_branch(l.pos[0].first);
      out.coeffs.push_back(to_formal(l, c->value, c->value_col, out.basis));
      return true;
    }
    if (l.head == "mark") {
      positional(l, 0);
      allow_keys(l, {"vertex", "vertex2", "branch", "mult"});
      MarkedPoint m;
      bool host = false;
      for (const auto& f : l.fields) {
        if (f.key == "vertex") {
          m.host = vertex(l, f.value, f.value_col);
          host = true;
        } else if (f.key == "vertex2") {
          m.host2 = vertex(l, f.value, f.value_col);
        } else if (f.key == "branch") {
          auto it = std::find(g.branches.begin(), g.branches.end(), f.value);
          if (it == g.branches.end()) throw ValidationError("unknown branch " + f.value);
          m.incidences.push_back({static_cast<size_t>(it - g.branches.begin()), 1});
        } else {
          if (m.incidences.empty()) fail(l, f.col, "mult= must follow branch=");
          m.incidences.back().mult = to_long(l, f.value, f.value_col);
        }
      }
      if (!host) fail(l, l.head_col, "missing vertex=");
      if (m.incidences.empty()) fail(l, l.head_col, "missing branch=");
      g.marks.push_back(m);
      return true;
    }
    return false;
  }

  size_t vertex(const Line& l, const std::string& s, int col) {
    long id = to_long(l, s, col);
    auto it = ids.find(id);
    if (it == ids.end()) throw ValidationError("unknown vertex " + s);
    return it->second;
  }
};

struct ClusterBuilder {
  ClusterInput out;

  bool take(const Line& l) {
    auto& cl = out.cluster;
    if (l.head == "point" && field(l, "host")) {
      positional(l, 1);
      allow_keys(l, {"host", "host2"});
      long id = to_long(l, l.pos[0].first, l.pos[0].second);
      if (id != static_cast<long>(cl.points.size()))
        throw ValidationError("points must be numbered 0, 1, 2, ... in order");
      const Field* h = field(l, "host");
      ClusterPoint p;
      if (h->value == "origin") {
        if (id != 0) throw ValidationError("only point 0 is the origin");
      } else {
        long host = to_long(l, h->value, h->value_col);
        if (host < 0) throw ValidationError("host must be a point id");
        p.host = static_cast<size_t>(host);
      }
      if (const Field* h2 = field(l, "host2")) {
        long host2 = to_long(l, h2->value, h2->value_col);
        if (host2 < 0) throw ValidationError("host2 must be a point id");
        p.host2 = static_cast<size_t>(host2);
      }
      cl.points.push_back(p);
      return true;
    }
    if (l.head == "branch" && field(l, "through")) {
      positional(l, 1);
      allow_keys(l, {"coeff", "through", "mults"});
      const Field* c = field(l, "coeff", true);
      const Field* t = field(l, "through");
      ClusterBranch br;
      br.name = l.pos[0].first;
      for (long x : to_long_list(l, t->value, t->value_col)) {
        if (x < 0) throw ValidationError("point ids are non-negative");
        br.through.push_back(static_cast<size_t>(x));
      }
      if (const Field* m = field(l, "mults"))
        br.mults = to_long_list(l, m->value, m->value_col);
      else
        br.mults.assign(br.through.size(), 1);
      for (const auto& b : cl.branches)
        if (b.name == br.name) throw ValidationError("duplicate branch " + b.name);
      cl.branches.push_back(br);
      out.coeffs.push_back(to_formal(l, c->value, c->value_col, out.basis));
      return true;
    }
    return false;
  }
};

[[noreturn]] void unknown(const Line& l) { fail(l, l.head_col, "unknown directive '" + l.head + "'"); }

std::string basis_block(const BasisPtr& b) {
  std::string out;
  if (b)
    for (size_t i = 1; i <= b->size(); ++i) out += "basis " + b->declaration(i) + "\n";
  return out;
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (!a || !b) return !a && !b;
  return a->same_as(*b);
}

std::string graph_lines(const DualGraph& g, const Boundary& coeffs) {
  std::ostringstream os;
  for (size_t k = 0; k < g.size(); ++k) {
    os << "vertex " << k + 1 << " weight=" << g.vertices[k].weight;
    if (g.vertices[k].genus) os << " genus=" << g.vertices[k].genus;
    os << "\n";
  }
  for (const auto& [a, b] : g.edges) os << "edge " << a + 1 << " " << b + 1 << "\n";
  for (size_t i = 0; i < g.branches.size(); ++i) os << "branch " << g.branches[i] << " coeff=" << coeffs[i].str() << "\n";
  for (const auto& m : g.marks) {
    os << "mark vertex=" << m.host + 1;
    if (m.host2) os << " vertex2=" << *m.host2 + 1;
    for (const auto& inc : m.incidences) os << " branch=" << g.branches[inc.branch] << " mult=" << inc.mult;
    os << "\n";
  }
  return os.str();
}

std::string cluster_lines(const Cluster& cl, const Boundary& coeffs) {
  std::ostringstream os;
  for (size_t p = 0; p < cl.points.size(); ++p) {
    os << "point " << p << " host=";
    if (cl.points[p].host)
      os << *cl.points[p].host;
    else
      os << "origin";
    if (cl.points[p].host2) os << " host2=" << *cl.points[p].host2;
    os << "\n";
  }
  for (size_t i = 0; i < cl.branches.size(); ++i) {
    const auto& br = cl.branches[i];
    os << "branch " << br.name << " coeff=" << coeffs[i].str() << " through=";
    for (size_t k = 0; k < br.through.size(); ++k) os << (k ? "," : "") << br.through[k];
    os << " mults=";
    for (size_t k = 0; k < br.mults.size(); ++k) os << (k ? "," : "") << br.mults[k];
    os << "\n";
  }
  return os.str();
}

}  // namespace

GraphInput parse_graph(std::string_view text) {
  auto lines = lex(text);
  GraphBuilder gb;
  gb.out.basis = read_basis(lines);
  for (const auto& l : lines)
    if (l.head != "basis" && !gb.take(l)) unknown(l);
  gb.out.graph.validate();
  return gb.out;
}

ClusterInput parse_cluster(std::string_view text) {
  auto lines = lex(text);
  ClusterBuilder cb;
  cb.out.basis = read_basis(lines);
  for (const auto& l : lines)
    if (l.head != "basis" && !cb.take(l)) unknown(l);
  cb.out.cluster.validate();
  return cb.out;
}

Dim1Input parse_dim1(std::string_view text) {
  auto lines = lex(text);
  Dim1Input out;
  out.basis = read_basis(lines);
  for (const auto& l : lines) {
    if (l.head == "basis") continue;
    if (l.head == "curve") {
      positional(l, 1);
      allow_keys(l, {});
      const auto& [w, c] = l.pos[0];
      if (w != "global" && w != "local") fail(l, c, "expected global or local");
      out.germ.local = w == "local";
    } else if (l.head == "point") {
      positional(l, 0);
      allow_keys(l, {"coeff"});
      const Field* c = field(l, "coeff", true);
      out.germ.coeffs.push_back(to_formal(l, c->value, c->value_col, out.basis));
    } else {
      unknown(l);
    }
  }
  for (const auto& b : out.germ.coeffs)
    if (sign(b) < 0 || b > FormalReal(1)) throw ValidationError("coefficients must lie in [0,1]");
  return out;
}

EllipticBase parse_elliptic(std::string_view text) {
  EllipticBase eb;
  eb.fibers.clear();
  for (const auto& l : lex(text)) {
    if (l.head == "base") {
      positional(l, 0);
      allow_keys(l, {"genus", "degL"});
      if (const Field* f = field(l, "genus")) eb.genus = to_long(l, f->value, f->value_col);
      if (const Field* f = field(l, "degL")) eb.degL = to_long(l, f->value, f->value_col);
    } else if (l.head == "fiber") {
      positional(l, 0);
      allow_keys(l, {"m", "b"});
      const Field* m = field(l, "m", true);
      SpecialFiber f{to_long(l, m->value, m->value_col), 0};
      if (const Field* b = field(l, "b")) f.b = to_rational(l, b->value, b->value_col);
      eb.fibers.push_back(f);
    } else {
      unknown(l);
    }
  }
  eb.validate();
  return eb;
}

WeightInput parse_weights(std::string_view text) {
  auto lines = lex(text);
  WeightInput out;
  out.basis = read_basis(lines);
  bool has_gamma = false, has_target = false;
  for (const auto& l : lines) {
    if (l.head == "basis") continue;
    if (l.head == "n0" || l.head == "p") {
      positional(l, 1);
      allow_keys(l, {});
      long v = to_long(l, l.pos[0].first, l.pos[0].second);
      (l.head == "n0" ? out.ws.n0 : out.p) = v;
    } else if (l.head == "target") {
      allow_keys(l, {});
      out.ws.target = to_formal(l, l.rest(), l.rest_col(), out.basis);
      has_target = true;
    } else if (l.head == "gamma") {
      allow_keys(l, {});
      out.gamma = to_formal_list(l, l.rest(), l.rest_col(), out.basis);
      has_gamma = true;
    } else if (l.head == "weight") {
      positional(l, 0);
      allow_keys(l, {"a", "eps", "b"});
      const Field* a = field(l, "a", true);
      const Field* e = field(l, "eps", true);
      const Field* b = field(l, "b", true);
      out.ws.a.push_back(to_formal(l, a->value, a->value_col, out.basis));
      out.ws.eps.push_back(to_rational(l, e->value, e->value_col));
      out.ws.b.push_back(to_rational_list(l, b->value, b->value_col));
    } else {
      unknown(l);
    }
  }
  if (!has_target) throw ValidationError("missing target line");
  out.ws.validate();
  if (!has_gamma)
    for (size_t j = 0; j < out.ws.s(); ++j) out.gamma.push_back(out.ws.column(j));
  return out;
}

DecompInput parse_decomposition(std::string_view text) {
  auto lines = lex(text);
  DecompInput out;
  out.basis = read_basis(lines);
  GraphBuilder gb;
  ClusterBuilder cb;
  gb.out.basis = cb.out.basis = out.basis;
  bool has_eps = false, has_boundary = false;
  for (const auto& l : lines) {
    if (l.head == "basis") continue;
    if (l.head == "eps") {
      allow_keys(l, {});
      out.eps = to_formal(l, l.rest(), l.rest_col(), out.basis);
      has_eps = true;
    } else if (l.head == "boundary") {
      allow_keys(l, {});
      out.boundary = to_formal_list(l, l.rest(), l.rest_col(), out.basis);
      has_boundary = true;
    } else if (l.head == "part") {
      positional(l, 0);
      allow_keys(l, {"a", "eps", "coeffs"});
      const Field* a = field(l, "a", true);
      const Field* e = field(l, "eps", true);
      const Field* c = field(l, "coeffs", true);
      out.parts.push_back({to_formal(l, a->value, a->value_col, out.basis), to_rational_list(l, c->value, c->value_col),
                           to_rational(l, e->value, e->value_col)});
    } else if (!gb.take(l) && !cb.take(l)) {
      unknown(l);
    }
  }
  if (!has_eps) throw ValidationError("missing eps line");
  const bool graph = !gb.out.graph.empty() || !gb.out.graph.branches.empty();
  const bool cluster = !cb.out.cluster.points.empty() || !cb.out.cluster.branches.empty();
  if (graph && cluster) throw ValidationError("give either a graph or a cluster, not both");
  if (graph) {
    gb.out.graph.validate();
    out.ctx.graph = gb.out.graph;
    if (!has_boundary) out.boundary = gb.out.coeffs;
  }
  if (cluster) {
    cb.out.cluster.validate();
    out.ctx.cluster = cb.out.cluster;
    if (!has_boundary) out.boundary = cb.out.coeffs;
  }
  for (const auto& p : out.parts)
    if (p.coeffs.size() != out.boundary.size()) throw ValidationError("every part needs one coefficient per component");
  return out;
}

AnyInput parse_input(std::string_view text) {
  bool part = false, vertex = false, host = false, curve = false, dim1_point = false, elliptic = false, weight = false;
  for (const auto& l : lex(text)) {
    part = part || l.head == "part" || l.head == "eps" || l.head == "boundary";
    vertex = vertex || l.head == "vertex" || l.head == "edge" || l.head == "mark";
    host = host || (l.head == "point" && field(l, "host")) || (l.head == "branch" && field(l, "through"));
    curve = curve || l.head == "curve";
    dim1_point = dim1_point || (l.head == "point" && field(l, "coeff"));
    elliptic = elliptic || l.head == "base" || l.head == "fiber";
    weight = weight || l.head == "weight" || l.head == "n0" || l.head == "target";
  }
  if (part) return parse_decomposition(text);
  if (weight) return parse_weights(text);
  if (elliptic) return parse_elliptic(text);
  if (curve || dim1_point) return parse_dim1(text);
  if (host) return parse_cluster(text);
  return parse_graph(text);
}

std::string print(const GraphInput& x) { return basis_block(x.basis) + graph_lines(x.graph, x.coeffs); }

std::string print(const ClusterInput& x) { return basis_block(x.basis) + cluster_lines(x.cluster, x.coeffs); }

std::string print(const Dim1Input& x) {
  std::string out = basis_block(x.basis) + "curve " + (x.germ.local ? "local" : "global") + "\n";
  for (const auto& b : x.germ.coeffs) out += "point coeff=" + b.str() + "\n";
  return out;
}

std::string print(const EllipticBase& x) {
  std::string out = "base genus=" + std::to_string(x.genus) + " degL=" + std::to_string(x.degL) + "\n";
  for (const auto& f : x.fibers) out += "fiber m=" + std::to_string(f.m) + " b=" + to_string(f.b) + "\n";
  return out;
}

std::string print(const WeightInput& x) {
  std::string out = basis_block(x.basis);
  out += "n0 " + to_string(x.ws.n0) + "\np " + to_string(x.p) + "\ntarget " + x.ws.target.str() + "\n";
  out += "gamma " + join(x.gamma, ", ") + "\n";
  for (size_t i = 0; i < x.ws.k(); ++i)
    out += "weight a=" + x.ws.a[i].str() + " eps=" + to_string(x.ws.eps[i]) + " b=" + join(x.ws.b[i]) + "\n";
  return out;
}

std::string print(const DecompInput& x) {
  std::string out = basis_block(x.basis);
  if (x.ctx.graph) out += graph_lines(*x.ctx.graph, x.boundary);
  if (x.ctx.cluster) out += cluster_lines(*x.ctx.cluster, x.boundary);
  if (!x.ctx.graph && !x.ctx.cluster) out += "boundary " + join(x.boundary, ", ") + "\n";
  out += "eps " + x.eps.str() + "\n";
  for (const auto& p : x.parts)
    out += "part a=" + p.a.str() + " eps=" + to_string(p.eps) + " coeffs=" + join(p.coeffs) + "\n";
  return out;
}

bool operator==(const GraphInput& a, const GraphInput& b) {
  return same_basis(a.basis, b.basis) && a.graph == b.graph && a.coeffs == b.coeffs;
}

bool operator==(const ClusterInput& a, const ClusterInput& b) {
  return same_basis(a.basis, b.basis) && a.cluster == b.cluster && a.coeffs == b.coeffs;
}

bool operator==(const Dim1Input& a, const Dim1Input& b) { return same_basis(a.basis, b.basis) && a.germ == b.germ; }

bool operator==(const WeightInput& a, const WeightInput& b) {
  return same_basis(a.basis, b.basis) && a.ws.a == b.ws.a && a.ws.b == b.ws.b && a.ws.eps == b.ws.eps &&
         a.ws.target == b.ws.target && a.ws.n0 == b.ws.n0 && a.gamma == b.gamma && a.p == b.p;
}

bool operator==(const DecompInput& a, const DecompInput& b) {
  if (!same_basis(a.basis, b.basis) || a.boundary != b.boundary || a.eps != b.eps) return false;
  if (a.ctx.graph != b.ctx.graph || a.ctx.cluster != b.ctx.cluster || a.parts.size() != b.parts.size()) return false;
  for (size_t i = 0; i < a.parts.size(); ++i)
    if (a.parts[i].a != b.parts[i].a || a.parts[i].coeffs != b.parts[i].coeffs || a.parts[i].eps != b.parts[i].eps)
      return false;
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace surfcomp
