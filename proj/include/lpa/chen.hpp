#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "lpa/digraph.hpp"

namespace lpa {

/// Infinite path (Chen word): a finite prefix followed by either a repeated
/// closed path or a letter-generating rule.
class ChenWord {
 public:
  using LetterFn = std::function<Arrow(std::size_t)>;

  struct Cycle {
    Path delta;
  };
  struct Generator {
    std::string rule;
    LetterFn letter;
    std::size_t offset = 0;
    bool provably_aperiodic = false;
  };

  /// prefix · delta^inf, normalized to the shortest prefix and primitive cycle.
  static ChenWord rational(const DiGraph& g, Path prefix, Path delta);
  /// prefix · (letter(0) letter(1) ...). The rule must compose at every index.
  static ChenWord generated(const DiGraph& g, Path prefix, std::string rule, LetterFn letter,
                            bool provably_aperiodic = false);

  const Path& prefix() const { return prefix_; }
  bool is_cycle() const { return std::holds_alternative<Cycle>(tail_); }
  const Cycle* cycle() const { return std::get_if<Cycle>(&tail_); }
  const Generator* generator() const { return std::get_if<Generator>(&tail_); }
  VertexId source() const { return prefix_.start; }

  Arrow letter(std::size_t i) const;
  Path head(std::size_t l) const;
  ChenWord tail(const DiGraph& g, std::size_t l) const;

  /// For a rational word the number of distinct tails is |prefix| + |delta|,
  /// and t(l) = t(l - |delta|) beyond it. Irrational words return nullopt.
  std::optional<std::size_t> distinct_tails() const;
  /// Canonical index of t(l) among the distinct tails (identity for generators).
  std::size_t tail_class(std::size_t l) const;

  std::string describe(const DiGraph& g) const;

  friend bool operator==(const ChenWord& a, const ChenWord& b);

 private:
  Path prefix_;
  std::variant<Cycle, Generator> tail_;
};

/// Thue-Morse word over the loops x (letter 0) and y (letter 1).
ChenWord thue_morse(const DiGraph& g, const Arrow& x, const Arrow& y);
/// a[0] a[1] a[2] ... for a loop family a.
ChenWord family_sequence(const DiGraph& g, std::size_t family_decl);

/// Word literal: `rational:DELTA`, `rational:PREFIX/DELTA`, `thue-morse:X,Y`
/// or `family:NAME`.
ChenWord parse_chen(const DiGraph& g, std::string_view text);

struct ChenClass {
  enum Kind { rational, irrational_witnessed, unknown } kind = unknown;
  std::optional<Path> period;
  /// Eventual-periodicity pattern (offset, length) seen in the scanned window.
  std::optional<std::pair<std::size_t, std::size_t>> candidate;
};

ChenClass classify_chen(const ChenWord& w, std::size_t bound);

struct TailEquivalence {
  enum Kind { yes, no_up_to_depth, unknown } kind = unknown;
  std::size_t n = 0, m = 0;
};

TailEquivalence tail_equivalent(const DiGraph& g, const ChenWord& a, const ChenWord& b,
                                std::size_t depth);

}  // namespace lpa
