#include <cctype>

#include "lpa/algebra.hpp"
#include "lpa/errors.hpp"

namespace lpa {

std::string format_monomial(const DiGraph& g, const Monomial& m) {
  if (m.alpha.empty() && m.beta.empty()) return g.vertex_name(m.alpha.start);
  std::string out;
  for (const auto& a : m.alpha.arrows) {
    if (!out.empty()) out += '.';
    out += g.arrow_name(a);
  }
  for (auto it = m.beta.arrows.rbegin(); it != m.beta.arrows.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += g.arrow_name(*it) + "*";
  }
  return out;
}

std::string format_element(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    bool negative = c.modulus() == 0 && c.value() < 0;
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.to_string() + " ";
    out += format_monomial(*x.graph(), m);
    first = false;
  }
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(GraphPtr g, const Field& k, std::string_view text) : g_(std::move(g)), k_(k), s_(text) {}

  AlgebraElement parse() {
    AlgebraElement total(g_);
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    total += term(negative);
    skip();
    while (pos_ < s_.size()) {
      char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', got '") + op + "'");
      ++pos_;
      total += term(op == '-');
      skip();
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), static_cast<long>(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  static bool id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  AlgebraElement term(bool negative) {
    skip();
    Scalar coeff = k_(1);
    bool has_scalar = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      try {
        coeff = k_.parse_scalar(s_.substr(start, pos_ - start));
      } catch (const ParseError& e) {
        pos_ = start;
        fail(e.what());
      }
      has_scalar = true;
      skip();
    }
    AlgebraElement x(g_);
    if (id_start(peek())) {
      x = factor();
      skip();
      while (peek() == '.') {
        ++pos_;
        skip();
        x = x * factor();
        skip();
      }
    } else if (has_scalar) {
      x = AlgebraElement::one(g_);
    } else {
      fail("expected a term");
    }
    return x * (negative ? -coeff : coeff);
  }

  AlgebraElement factor() {
    std::size_t start = pos_;
    if (!id_start(peek())) fail("expected an identifier");
    while (id_char(peek())) ++pos_;
    std::string id(s_.substr(start, pos_ - start));
    std::int64_t index = -1;
    if (peek() == '[') {
      ++pos_;
      std::size_t num = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (num == pos_ || peek() != ']') fail("bad family index");
      index = std::stoll(std::string(s_.substr(num, pos_ - num)));
      ++pos_;
    }
    bool star = false;
    if (peek() == '*') {
      star = true;
      ++pos_;
    }
    if (auto v = g_->find_vertex(id)) {
      if (index != -1) {
        pos_ = start;
        fail("vertex '" + id + "' takes no index");
      }
      return AlgebraElement::vertex(g_, *v);
    }
    auto d = g_->find_decl(id);
    if (!d) {
      pos_ = start;
      fail("unknown id '" + id + "'");
    }
    Arrow a{*d, index};
    if (!g_->valid(a)) {
      pos_ = start;
      fail(g_->decl(*d).family ? "family '" + id + "' needs an index" : "arrow '" + id + "' takes no index");
    }
    Path p = arrow_path(*g_, a);
    return star ? AlgebraElement::ghost(g_, p) : AlgebraElement::real(g_, p);
  }

  GraphPtr g_;
  Field k_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_element(GraphPtr g, const Field& k, std::string_view text) {
  return ElementParser(std::move(g), k, text).parse();
}

}  // namespace lpa
