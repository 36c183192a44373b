#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpa/constructions.hpp"
#include "lpa/errors.hpp"
#include "lpa/probes.hpp"
#include "lpa/schreier.hpp"

using namespace lpa;

namespace {

struct Session {
  std::string graph_file;
  std::string field = "q";
  std::size_t degree = 4;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  std::string format = "text";
};

class Report {
 public:
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void print(const std::string& format) const {
    for (const auto& [k, v] : rows_) std::cout << k << (format == "kv" ? "=" : ": ") << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

GraphPtr session_graph(const Session& s) {
  if (s.graph_file.empty()) return std::make_shared<const DiGraph>(rose(2));
  return std::make_shared<const DiGraph>(load_graph(s.graph_file));
}

std::string graph_label(const Session& s) { return s.graph_file.empty() ? "R_2" : s.graph_file; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Arrow> loops_at(const DiGraph& g, VertexId v) {
  std::vector<Arrow> out;
  for (const Arrow& a : g.out_arrows(v, 1))
    if (g.range(a) == v) out.push_back(a);
  return out;
}

VertexId pick_vertex(const DiGraph& g, const std::string& name) {
  if (!name.empty()) return g.vertex(name);
  if (g.vertex_count() != 1) throw PreconditionError("--vertex is required on graphs with several vertices");
  return 0;
}

std::string dense_string(const DenseVector& v) {
  std::vector<std::string> xs;
  for (const Scalar& c : v) xs.push_back(c.to_string());
  return "(" + join(xs, ",") + ")";
}

int cmd_nf(const Session& s, const std::string& expr) {
  Field k = Field::parse(s.field);
  GraphPtr g = session_graph(s);
  AlgebraElement x = parse_element(g, k, expr);
  Report r;
  r.add("graph", graph_label(s));
  r.add("field", k.name());
  r.add("input", expr);
  r.add("nf", format_element(leavitt_normal_form(x)));
  r.print(s.format);
  return 0;
}

int cmd_schreier(const Session& s, const std::string& file) {
  Field k = Field::parse(s.field);
  GraphPtr g = session_graph(s);
  LeftIdealPresentation L = load_ideal(g, k, file);
  CosetBasis B = coset_basis(L, s.degree);
  std::vector<std::string> words;
  for (const Word& w : B.basis) words.push_back(format_word(*g, w));
  Report r;
  r.add("graph", graph_label(s));
  r.add("field", k.name());
  r.add("ideal", file);
  r.add("degree", std::to_string(s.degree));
  r.add("generators", std::to_string(L.generators.size()));
  r.add("cobasis", join(words, " "));
  r.add("codim", codimension(B).to_string());
  r.add("stable", B.stable ? "yes" : "no");
  r.add("certified", B.certified ? "yes" : "no");
  if (B.certified) {
    r.add("free_generators", std::to_string(free_generators(B).size()));
  }
  if (!g->has_families()) r.add("open", is_open(L, s.degree).to_string());
  r.print(s.format);
  return 0;
}

struct ModuleArgs {
  std::string construction;
  std::string probe = "verify";
  std::string vertex;
  std::string word;
  std::vector<std::string> quat;
  std::string ext;
  std::vector<std::string> images;
  std::string r;
  std::string period;
  std::string poly;
  std::string variant = "linear";
  std::string ideal;
  std::int64_t window = 3;
};

RepresentationSpace build_module(const Session& s, const ModuleArgs& m, const GraphPtr& g, const Field& k) {
  const std::string& c = m.construction;
  if (c == "chen") {
    if (m.word.empty()) throw PreconditionError("chen needs --word");
    return chen_module(g, parse_chen(*g, m.word), m.window);
  }
  if (c == "cohn-jacobson") return cohn_jacobson_module(g, pick_vertex(*g, m.vertex), m.window);
  if (c == "sink") return sink_module(g, g->vertex(m.vertex));
  if (c == "hilbert") {
    VertexId v = pick_vertex(*g, m.vertex);
    std::optional<StructureAlgebra> D;
    std::vector<DivisionAlgebraElement> defaults;
    if (!m.quat.empty()) {
      D.emplace(quaternion_algebra(k.parse_scalar(m.quat.at(0)), k.parse_scalar(m.quat.at(1))));
      defaults = {D->basis(1), D->basis(2)};
    } else if (!m.ext.empty()) {
      D.emplace(field_extension(parse_polynomial(k, m.ext)));
      defaults = {D->basis(D->dimension() > 1 ? 1 : 0), D->one()};
    } else {
      throw PreconditionError("hilbert needs --quat C D or --ext COEFFS");
    }
    std::map<Arrow, DivisionAlgebraElement> images;
    auto loops = loops_at(*g, v);
    for (std::size_t i = 0; i < loops.size() && i < defaults.size(); ++i) images[loops[i]] = defaults[i];
    if (!m.images.empty()) {
      images.clear();
      for (const std::string& spec : m.images) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw ParseError("image must look like ARROW=COORDS: " + spec);
        images[parse_path(*g, spec.substr(0, eq)).arrows.at(0)] = D->parse(k, spec.substr(eq + 1));
      }
    }
    return hilbert_module(g, v, *D, images, m.window);
  }
  if (c == "mantese") {
    VertexId v = pick_vertex(*g, m.vertex);
    auto loops = loops_at(*g, v);
    std::map<Arrow, Scalar> r;
    if (m.r.empty()) throw PreconditionError("mantese needs --r");
    auto parts = split(m.r, ',');
    if (parts.size() > loops.size()) throw PreconditionError("more coefficients than loops");
    for (std::size_t i = 0; i < parts.size(); ++i) r[loops[i]] = k.parse_scalar(parts[i]);
    return mantese_module(g, v, r, m.window);
  }
  if (c == "rangaswamy") {
    if (m.period.empty() || m.poly.empty()) throw PreconditionError("rangaswamy needs --period and --poly");
    Path delta = parse_path(*g, m.period);
    Polynomial q = parse_polynomial(k, m.poly);
    if (g->classify(delta.start) == VertexKind::infinite_emitter) return rangaswamy_module_infinite(g, delta, q, m.window);
    return rangaswamy_module_regular(g, delta, q, m.window);
  }
  if (c == "linear") {
    LinearVariant variant = m.variant == "nonlinear"   ? LinearVariant::nonlinear
                            : m.variant == "displayed" ? LinearVariant::displayed
                            : m.variant == "linear"    ? LinearVariant::linear
                                                       : throw PreconditionError("unknown variant " + m.variant);
    return linear_example_module(g, pick_vertex(*g, m.vertex), variant, m.window);
  }
  if (c == "quotient") {
    if (m.ideal.empty()) throw PreconditionError("quotient needs --ideal");
    LeftIdealPresentation L = load_ideal(g, k, m.ideal);
    return quotient_module(coset_basis(L, s.degree), m.window);
  }
  throw PreconditionError("unknown construction " + c);
}

int cmd_module(const Session& s, const ModuleArgs& m) {
  Field k = Field::parse(s.field);
  GraphPtr g = session_graph(s);
  RepresentationSpace R = build_module(s, m, g, k);
  Report r;
  r.add("construction", R.info().construction);
  for (const auto& [key, value] : R.info().params) r.add("param." + key, value);
  r.add("graph", graph_label(s));
  r.add("field", k.name());
  r.add("degree", std::to_string(s.degree));
  r.add("seed", std::to_string(s.seed));
  r.add("probe", m.probe);
  r.add("generator", R.format(R.info().generator));
  for (const std::string& note : R.info().notes) r.add("note", note);
  int rc = 0;
  if (m.probe == "verify") {
    VerifyReport v = verify_representation(R, s.degree);
    r.add("labels", std::to_string(v.labels_checked));
    r.add("verdict", v.pass ? "pass" : "fail");
    if (!v.pass) {
      r.add("violation", v.violation);
      rc = 4;
    }
  } else if (m.probe == "simplicity") {
    SimplicityVerdict v = simplicity_probe(R, s.degree, s.samples, s.seed);
    r.add("candidates", std::to_string(v.candidates));
    r.add("verdict", v.to_string());
    if (v.witness) r.add("witness", R.format(*v.witness));
  } else if (m.probe == "chain") {
    CompositionReport c = composition_probe(R, R.info().chain, s.degree);
    r.add("length", std::to_string(c.length()));
    r.add("increasing", c.increasing ? "yes" : "no");
    for (std::size_t i = 0; i < c.length(); ++i) {
      std::string type = c.typed[i] ? "S_" + g->vertex_name(*c.typed[i]) : "top";
      r.add("step." + std::to_string(i), R.format(R.info().chain[i]) + " | dim " + std::to_string(c.dimensions[i]) +
                                             " | " + type);
    }
    if (!c.problem.empty()) {
      r.add("problem", c.problem);
      rc = 4;
    }
  } else if (m.probe == "endo") {
    Endomorphisms E = endomorphism_probe(R, s.degree);
    r.add("dimension", std::to_string(E.dimension()));
    for (std::size_t i = 0; i < E.dimension(); ++i) r.add("basis." + std::to_string(i), R.format(E.basis[i]));
    for (std::size_t i = 0; i < E.dimension(); ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < E.dimension(); ++j)
        row.push_back(E.table[i][j] ? dense_string(*E.table[i][j]) : "?");
      r.add("table." + std::to_string(i), join(row, " "));
    }
  } else {
    throw PreconditionError("unknown probe " + m.probe);
  }
  r.print(s.format);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leavitt path algebra toolkit"};
  app.fallthrough();
  Session s;
  app.add_option("--graph", s.graph_file, "Graph file (default: rose with loops x1, x2)");
  app.add_option("--field", s.field, "q or gf:P");
  app.add_option("--degree", s.degree, "Degree bound")->check(CLI::PositiveNumber);
  app.add_option("--samples", s.samples, "Random samples for probes");
  app.add_option("--seed", s.seed, "Random seed");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "kv"}));
  app.require_subcommand(1);

  std::string expr;
  auto* nf = app.add_subcommand("nf", "Leavitt normal form of an element");
  nf->add_option("expr", expr, "Element expression")->required();

  std::string ideal_file;
  auto* sch = app.add_subcommand("schreier", "Co-basis, codimension and openness of a left ideal of KE*");
  sch->add_option("ideal", ideal_file, "Ideal file")->required();

  ModuleArgs m;
  auto* mod = app.add_subcommand("module", "Construct a module and run a probe");
  mod->require_subcommand(1);
  mod->add_option("--probe", m.probe, "verify, simplicity, chain or endo")
      ->check(CLI::IsMember({"verify", "simplicity", "chain", "endo"}));
  mod->add_option("--window", m.window, "Family members enumerated per infinite family");
  mod->add_option("--vertex", m.vertex, "Vertex carrying the construction");
  for (const char* name : {"chen", "cohn-jacobson", "sink", "hilbert", "mantese", "rangaswamy", "linear", "quotient"}) {
    auto* c = mod->add_subcommand(name, std::string(name) + " module");
    c->fallthrough();
    c->callback([&m, c] { m.construction = c->get_name(); });
  }
  mod->get_subcommand("chen")->add_option("--word", m.word, "Word literal");
  mod->get_subcommand("hilbert")->add_option("--quat", m.quat, "Quaternion parameters C D")->expected(2);
  mod->get_subcommand("hilbert")->add_option("--ext", m.ext, "Field extension polynomial coefficients");
  mod->get_subcommand("hilbert")->add_option("--image", m.images, "ARROW=COORDS");
  mod->get_subcommand("mantese")->add_option("--r", m.r, "Loop coefficients, comma separated");
  mod->get_subcommand("rangaswamy")->add_option("--period", m.period, "Period path");
  mod->get_subcommand("rangaswamy")->add_option("--poly", m.poly, "Polynomial coefficients, constant first");
  mod->get_subcommand("linear")->add_option("--variant", m.variant, "linear, nonlinear or displayed");
  mod->get_subcommand("quotient")->add_option("--ideal", m.ideal, "Ideal file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*nf) return cmd_nf(s, expr);
    if (*sch) return cmd_schreier(s, ideal_file);
    return cmd_module(s, m);
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.position() >= 0) std::cerr << " at " << e.position();
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  }
}
