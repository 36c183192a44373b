#include "lpa/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::regular: return "regular";
    case VertexKind::sink: return "sink";
    case VertexKind::infinite_emitter: return "infinite_emitter";
  }
  return "?";
}

namespace {

bool valid_id(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

DiGraph DiGraph::build(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                       std::vector<FamilySpec> families) {
  DiGraph g;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!valid_id(vertices[i])) throw PreconditionError("invalid vertex id '" + vertices[i] + "'");
    if (i > 0 && vertices[i] == vertices[i - 1])
      throw PreconditionError("duplicate vertex id '" + vertices[i] + "'");
  }
  g.vertices_ = std::move(vertices);
  std::set<std::string> ids(g.vertices_.begin(), g.vertices_.end());
  auto endpoint = [&](const std::string& name, const std::string& what) {
    auto v = g.find_vertex(name);
    if (!v) throw PreconditionError(what + " refers to undeclared vertex '" + name + "'");
    return *v;
  };
  for (const auto& a : arrows) {
    if (!valid_id(a.name)) throw PreconditionError("invalid arrow id '" + a.name + "'");
    if (!ids.insert(a.name).second) throw PreconditionError("duplicate id '" + a.name + "'");
    g.decls_.push_back({a.name, endpoint(a.src, "arrow " + a.name), endpoint(a.dst, "arrow " + a.name), false});
  }
  for (const auto& f : families) {
    if (!valid_id(f.name)) throw PreconditionError("invalid family id '" + f.name + "'");
    if (!ids.insert(f.name).second) throw PreconditionError("duplicate id '" + f.name + "'");
    g.decls_.push_back({f.name, endpoint(f.src, "family " + f.name), endpoint(f.dst, "family " + f.name), true});
  }
  std::sort(g.decls_.begin(), g.decls_.end(),
            [](const ArrowDecl& a, const ArrowDecl& b) { return a.name < b.name; });
  g.out_.assign(g.vertices_.size(), {});
  g.in_.assign(g.vertices_.size(), {});
  for (std::size_t i = 0; i < g.decls_.size(); ++i) {
    g.out_[g.decls_[i].src].push_back(i);
    g.in_[g.decls_[i].dst].push_back(i);
  }
  return g;
}

std::optional<VertexId> DiGraph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

VertexId DiGraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw PreconditionError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::optional<std::size_t> DiGraph::find_decl(std::string_view name) const {
  auto it = std::lower_bound(decls_.begin(), decls_.end(), name,
                             [](const ArrowDecl& a, std::string_view b) { return a.name < b; });
  if (it == decls_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - decls_.begin());
}

Arrow DiGraph::arrow(std::string_view name, std::int64_t index) const {
  auto d = find_decl(name);
  if (!d) throw PreconditionError("unknown arrow '" + std::string(name) + "'");
  Arrow a{*d, index};
  if (!valid(a)) {
    throw PreconditionError(decls_[*d].family ? "family '" + std::string(name) + "' needs an index >= 0"
                                              : "arrow '" + std::string(name) + "' takes no index");
  }
  return a;
}

bool DiGraph::valid(const Arrow& a) const {
  if (a.decl >= decls_.size()) return false;
  return decls_[a.decl].family ? a.index >= 0 : a.index == -1;
}

std::string DiGraph::arrow_name(const Arrow& a) const {
  const auto& d = decls_.at(a.decl);
  return d.family ? d.name + "[" + std::to_string(a.index) + "]" : d.name;
}

VertexKind DiGraph::classify(VertexId v) const {
  if (v >= vertices_.size()) throw PreconditionError("unknown vertex id " + std::to_string(v));
  if (out_[v].empty()) return VertexKind::sink;
  for (auto i : out_[v])
    if (decls_[i].family) return VertexKind::infinite_emitter;
  return VertexKind::regular;
}

bool DiGraph::has_families() const {
  return std::any_of(decls_.begin(), decls_.end(), [](const ArrowDecl& d) { return d.family; });
}

namespace {

std::vector<Arrow> expand(const std::vector<ArrowDecl>& decls, const std::vector<std::size_t>& ids,
                          std::int64_t window) {
  std::vector<Arrow> out;
  for (auto i : ids) {
    if (decls[i].family) {
      for (std::int64_t k = 0; k < window; ++k) out.push_back({i, k});
    } else {
      out.push_back({i, -1});
    }
  }
  return out;
}

}  // namespace

std::vector<Arrow> DiGraph::out_arrows(VertexId v, std::int64_t window) const {
  return expand(decls_, out_.at(v), window);
}

std::vector<Arrow> DiGraph::in_arrows(VertexId v, std::int64_t window) const {
  return expand(decls_, in_.at(v), window);
}

std::vector<Arrow> DiGraph::arrows(std::int64_t window) const {
  std::vector<std::size_t> all(decls_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return expand(decls_, all, window);
}

std::optional<Arrow> DiGraph::special_arrow(VertexId v) const {
  if (classify(v) != VertexKind::regular) return std::nullopt;
  return Arrow{out_[v].front(), -1};
}

std::string DiGraph::to_text() const {
  std::ostringstream os;
  os << "[vertices]\n";
  for (const auto& v : vertices_) os << v << "\n";
  os << "[arrows]\n";
  for (const auto& d : decls_)
    if (!d.family) os << d.name << ": " << vertices_[d.src] << " -> " << vertices_[d.dst] << "\n";
  if (has_families()) {
    os << "[families]\n";
    for (const auto& d : decls_)
      if (d.family) os << d.name << "[]: " << vertices_[d.src] << " -> " << vertices_[d.dst] << "\n";
  }
  return os.str();
}

DiGraph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<DiGraph::ArrowSpec> arrows;
  std::vector<DiGraph::FamilySpec> families;
  enum { none, vert, arr, fam } section = none;
  long lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("graph line " + std::to_string(lineno) + ": " + msg, lineno);
    };
    if (line == "[vertices]") { section = vert; continue; }
    if (line == "[arrows]") { section = arr; continue; }
    if (line == "[families]") { section = fam; continue; }
    if (line.front() == '[') throw fail("unknown section " + std::string(line));
    if (section == none) throw fail("content before any section");
    if (section == vert) {
      std::istringstream is{std::string(line)};
      std::string id;
      while (is >> id) {
        if (!valid_id(id)) throw fail("invalid vertex id '" + id + "'");
        vertices.push_back(id);
      }
      continue;
    }
    auto colon = line.find(':');
    auto arrow = line.find("->");
    if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon)
      throw fail("expected 'name: src -> dst'");
    std::string name(trim(line.substr(0, colon)));
    std::string src(trim(line.substr(colon + 1, arrow - colon - 1)));
    std::string dst(trim(line.substr(arrow + 2)));
    if (section == fam) {
      if (name.size() < 3 || name.substr(name.size() - 2) != "[]") throw fail("family id must end with []");
      name.resize(name.size() - 2);
      families.push_back({name, src, dst});
    } else {
      arrows.push_back({name, src, dst});
    }
    if (!valid_id(name) || !valid_id(src) || !valid_id(dst)) throw fail("invalid id");
  }
  try {
    return DiGraph::build(std::move(vertices), std::move(arrows), std::move(families));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

DiGraph load_graph(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read graph file '" + file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

DiGraph rose(std::size_t n) {
  std::vector<DiGraph::ArrowSpec> loops;
  for (std::size_t i = 1; i <= n; ++i) loops.push_back({"x" + std::to_string(i), "v", "v"});
  return DiGraph::build({"v"}, loops);
}

DiGraph rose_infinite() { return DiGraph::build({"v"}, {}, {{"a", "v", "v"}}); }

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
  if (auto c = a.arrows <=> b.arrows; c != 0) return c;
  return a.start <=> b.start;
}

Path vertex_path(VertexId v) { return Path{v, {}}; }

Path arrow_path(const DiGraph& g, const Arrow& a) { return Path{g.source(a), {a}}; }

VertexId path_source(const Path& p) { return p.start; }

VertexId path_range(const DiGraph& g, const Path& p) {
  return p.arrows.empty() ? p.start : g.range(p.arrows.back());
}

bool is_valid_path(const DiGraph& g, const Path& p) {
  if (p.start >= g.vertex_count()) return false;
  VertexId at = p.start;
  for (const auto& a : p.arrows) {
    if (!g.valid(a) || g.source(a) != at) return false;
    at = g.range(a);
  }
  return true;
}

bool is_closed(const DiGraph& g, const Path& p) { return path_range(g, p) == p.start; }

std::optional<Path> compose_paths(const DiGraph& g, const Path& a, const Path& b) {
  if (path_range(g, a) != b.start) return std::nullopt;
  Path r = a;
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

Path head(const Path& p, std::size_t l) {
  if (l > p.length()) throw PreconditionError("head length exceeds path length");
  return Path{p.start, std::vector<Arrow>(p.arrows.begin(), p.arrows.begin() + static_cast<long>(l))};
}

Path tail(const DiGraph& g, const Path& p, std::size_t l) {
  if (l > p.length()) throw PreconditionError("tail offset exceeds path length");
  VertexId s = l == 0 ? p.start : g.range(p.arrows[l - 1]);
  return Path{s, std::vector<Arrow>(p.arrows.begin() + static_cast<long>(l), p.arrows.end())};
}

bool is_head(const Path& prefix, const Path& p) {
  if (prefix.start != p.start || prefix.length() > p.length()) return false;
  return std::equal(prefix.arrows.begin(), prefix.arrows.end(), p.arrows.begin());
}

namespace {

// Length of the shortest root of the sequence via the border (failure) array.
std::size_t root_length(const std::vector<Arrow>& s) {
  std::size_t n = s.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = fail[k];
    if (s[i] == s[k]) ++k;
    fail[i + 1] = k;
  }
  std::size_t p = n - fail[n];
  return n % p == 0 ? p : n;
}

}  // namespace

bool is_period(const DiGraph& g, const Path& delta) {
  if (delta.empty()) throw PreconditionError("a period must have positive length");
  if (!is_valid_path(g, delta) || !is_closed(g, delta)) return false;
  return root_length(delta.arrows) == delta.length();
}

Path primitive_root(const Path& delta) {
  if (delta.empty()) return delta;
  return head(delta, root_length(delta.arrows));
}

std::string format_path(const DiGraph& g, const Path& p) {
  if (p.arrows.empty()) return g.vertex_name(p.start);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '.';
    out += g.arrow_name(p.arrows[i]);
  }
  return out;
}

Path parse_path(const DiGraph& g, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty path literal");
  if (auto v = g.find_vertex(text)) return vertex_path(*v);
  Path p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view tok = trim(text.substr(pos, dot - pos));
    std::int64_t index = -1;
    if (auto br = tok.find('['); br != std::string_view::npos) {
      if (tok.back() != ']') throw ParseError("bad family index in '" + std::string(tok) + "'", static_cast<long>(pos));
      auto num = tok.substr(br + 1, tok.size() - br - 2);
      if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("bad family index in '" + std::string(tok) + "'", static_cast<long>(pos));
      index = std::stoll(std::string(num));
      tok = tok.substr(0, br);
    }
    auto d = g.find_decl(tok);
    if (!d) throw ParseError("unknown arrow '" + std::string(tok) + "'", static_cast<long>(pos));
    Arrow a{*d, index};
    if (!g.valid(a)) throw ParseError("bad arrow reference '" + std::string(text.substr(pos, dot - pos)) + "'", static_cast<long>(pos));
    if (p.arrows.empty()) p.start = g.source(a);
    else if (g.range(p.arrows.back()) != g.source(a))
      throw ParseError("arrows do not compose at '" + std::string(tok) + "'", static_cast<long>(pos));
    p.arrows.push_back(a);
    pos = dot + 1;
  }
  return p;
}

}  // namespace lpa
