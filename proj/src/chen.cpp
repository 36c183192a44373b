#include "lpa/chen.hpp"

#include <algorithm>
#include <bit>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

Path rotate(const DiGraph& g, const Path& delta, std::size_t r) {
  r %= delta.length();
  if (r == 0) return delta;
  Path out = tail(g, delta, r);
  out.arrows.insert(out.arrows.end(), delta.arrows.begin(), delta.arrows.begin() + static_cast<long>(r));
  return out;
}

}  // namespace

ChenWord ChenWord::rational(const DiGraph& g, Path prefix, Path delta) {
  if (delta.empty() || !is_valid_path(g, delta) || !is_closed(g, delta))
    throw PreconditionError("a rational Chen word needs a nonempty closed cycle");
  if (!is_valid_path(g, prefix) || path_range(g, prefix) != delta.start)
    throw PreconditionError("Chen word prefix does not end where the cycle starts");
  delta = primitive_root(delta);
  while (!prefix.empty() && prefix.arrows.back() == delta.arrows.back()) {
    prefix.arrows.pop_back();
    delta = rotate(g, delta, delta.length() - 1);
  }
  ChenWord w;
  w.prefix_ = std::move(prefix);
  w.tail_ = Cycle{std::move(delta)};
  return w;
}

ChenWord ChenWord::generated(const DiGraph& g, Path prefix, std::string rule, LetterFn letter,
                             bool provably_aperiodic) {
  if (!is_valid_path(g, prefix)) throw PreconditionError("invalid Chen word prefix");
  Arrow first = letter(0);
  if (!g.valid(first) || g.source(first) != path_range(g, prefix))
    throw PreconditionError("generator does not continue the prefix");
  ChenWord w;
  w.prefix_ = std::move(prefix);
  w.tail_ = Generator{std::move(rule), std::move(letter), 0, provably_aperiodic};
  return w;
}

Arrow ChenWord::letter(std::size_t i) const {
  if (i < prefix_.length()) return prefix_.arrows[i];
  i -= prefix_.length();
  if (auto c = cycle()) return c->delta.arrows[i % c->delta.length()];
  const auto& gen = *generator();
  return gen.letter(gen.offset + i);
}

Path ChenWord::head(std::size_t l) const {
  Path p{prefix_.start, {}};
  for (std::size_t i = 0; i < l; ++i) p.arrows.push_back(letter(i));
  return p;
}

ChenWord ChenWord::tail(const DiGraph& g, std::size_t l) const {
  if (l <= prefix_.length()) {
    ChenWord w = *this;
    w.prefix_ = lpa::tail(g, prefix_, l);
    return w;
  }
  std::size_t k = l - prefix_.length();
  if (auto c = cycle()) return rational(g, vertex_path(c->delta.start), rotate(g, c->delta, k));
  ChenWord w = *this;
  auto& gen = std::get<Generator>(w.tail_);
  gen.offset += k;
  w.prefix_ = vertex_path(g.source(gen.letter(gen.offset)));
  return w;
}

std::optional<std::size_t> ChenWord::distinct_tails() const {
  if (auto c = cycle()) return prefix_.length() + c->delta.length();
  return std::nullopt;
}

std::size_t ChenWord::tail_class(std::size_t l) const {
  auto c = cycle();
  if (!c || l < prefix_.length()) return l;
  return prefix_.length() + (l - prefix_.length()) % c->delta.length();
}

std::string ChenWord::describe(const DiGraph& g) const {
  std::string out;
  if (!prefix_.empty()) out = format_path(g, prefix_) + " ";
  if (auto c = cycle()) return out + "(" + format_path(g, c->delta) + ")^inf";
  const auto& gen = *generator();
  out += gen.rule;
  if (gen.offset) out += "+" + std::to_string(gen.offset);
  return out;
}

bool operator==(const ChenWord& a, const ChenWord& b) {
  if (!(a.prefix_ == b.prefix_)) return false;
  auto ca = a.cycle();
  auto cb = b.cycle();
  if (ca && cb) return ca->delta == cb->delta;
  if (ca || cb) return false;
  const auto& ga = *a.generator();
  const auto& gb = *b.generator();
  return ga.rule == gb.rule && ga.offset == gb.offset;
}

ChenWord thue_morse(const DiGraph& g, const Arrow& x, const Arrow& y) {
  for (const auto& a : {x, y})
    if (!g.valid(a) || g.source(a) != g.range(a) || g.source(a) != g.source(x))
      throw PreconditionError("Thue-Morse needs two loops at one vertex");
  if (x == y) throw PreconditionError("Thue-Morse needs two distinct loops");
  auto letter = [x, y](std::size_t i) { return std::popcount(i) % 2 == 0 ? x : y; };
  return ChenWord::generated(g, vertex_path(g.source(x)),
                             "thue-morse(" + g.arrow_name(x) + "," + g.arrow_name(y) + ")", letter, true);
}

ChenWord family_sequence(const DiGraph& g, std::size_t family_decl) {
  const auto& d = g.decl(family_decl);
  if (!d.family || d.src != d.dst) throw PreconditionError("family sequence needs a loop family");
  auto letter = [family_decl](std::size_t i) { return Arrow{family_decl, static_cast<std::int64_t>(i)}; };
  return ChenWord::generated(g, vertex_path(d.src), "sequence(" + d.name + ")", letter, true);
}

ChenWord parse_chen(const DiGraph& g, std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("Chen word literal needs 'kind:'");
  auto kind = text.substr(0, colon);
  auto body = text.substr(colon + 1);
  if (kind == "rational") {
    auto slash = body.find('/');
    if (slash == std::string_view::npos) {
      Path delta = parse_path(g, body);
      return ChenWord::rational(g, vertex_path(delta.start), delta);
    }
    Path prefix = parse_path(g, body.substr(0, slash));
    Path delta = parse_path(g, body.substr(slash + 1));
    return ChenWord::rational(g, prefix, delta);
  }
  if (kind == "thue-morse") {
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError("thue-morse needs two arrows 'x,y'");
    Path x = parse_path(g, body.substr(0, comma));
    Path y = parse_path(g, body.substr(comma + 1));
    if (x.length() != 1 || y.length() != 1) throw ParseError("thue-morse letters must be single arrows");
    return thue_morse(g, x.arrows[0], y.arrows[0]);
  }
  if (kind == "family") {
    auto d = g.find_decl(body);
    if (!d) throw ParseError("unknown family '" + std::string(body) + "'");
    return family_sequence(g, *d);
  }
  throw ParseError("unknown Chen word kind '" + std::string(kind) + "'");
}

ChenClass classify_chen(const ChenWord& w, std::size_t bound) {
  ChenClass out;
  if (auto c = w.cycle()) {
    out.kind = ChenClass::rational;
    out.period = c->delta;
    return out;
  }
  std::vector<Arrow> letters;
  for (std::size_t i = 0; i < bound; ++i) letters.push_back(w.letter(i));
  for (std::size_t p = 1; 2 * p <= bound && !out.candidate; ++p) {
    for (std::size_t o = 0; o + 2 * p <= bound; ++o) {
      bool ok = true;
      for (std::size_t i = o; i + p < bound && ok; ++i) ok = letters[i] == letters[i + p];
      if (ok) {
        out.candidate = {o, p};
        break;
      }
    }
  }
  out.kind = w.generator()->provably_aperiodic ? ChenClass::irrational_witnessed : ChenClass::unknown;
  return out;
}

TailEquivalence tail_equivalent(const DiGraph& g, const ChenWord& a, const ChenWord& b, std::size_t depth) {
  TailEquivalence out;
  auto ca = a.cycle();
  auto cb = b.cycle();
  if (ca && cb) {
    const Path& da = ca->delta;
    const Path& db = cb->delta;
    if (da.length() == db.length()) {
      for (std::size_t r = 0; r < db.length(); ++r) {
        if (rotate(g, db, r) == da) {
          out.kind = TailEquivalence::yes;
          out.n = a.prefix().length();
          out.m = b.prefix().length() + r;
          return out;
        }
      }
    }
    out.kind = TailEquivalence::no_up_to_depth;
    return out;
  }
  // Every shift pair (n, m) must disagree somewhere in a window of `depth` letters.
  for (std::size_t n = 0; n <= depth; ++n) {
    for (std::size_t m = 0; m <= depth; ++m) {
      bool differs = false;
      for (std::size_t k = 0; k < depth && !differs; ++k) differs = a.letter(n + k) != b.letter(m + k);
      if (!differs) return out;
    }
  }
  out.kind = TailEquivalence::no_up_to_depth;
  return out;
}

}  // namespace lpa
