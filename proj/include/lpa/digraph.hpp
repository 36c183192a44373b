#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

using VertexId = std::size_t;

/// A named arrow, or a countable family `name[0], name[1], ...` of parallel
/// arrows sharing a source and a range.
struct ArrowDecl {
  std::string name;
  VertexId src = 0;
  VertexId dst = 0;
  bool family = false;
};

/// A concrete arrow: declaration index plus family index (-1 for named arrows).
/// Declarations are stored sorted by name, so the natural order of `Arrow` is
/// the lexicographic order of arrow ids.
struct Arrow {
  std::size_t decl = 0;
  std::int64_t index = -1;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

enum class VertexKind { regular, sink, infinite_emitter };

std::string to_string(VertexKind k);

class DiGraph {
 public:
  struct FamilySpec {
    std::string name, src, dst;
  };
  struct ArrowSpec {
    std::string name, src, dst;
  };

  /// Validates ids and endpoints; vertices and arrows are re-sorted by name.
  static DiGraph build(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                       std::vector<FamilySpec> families = {});

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId vertex(std::string_view name) const;

  std::size_t decl_count() const { return decls_.size(); }
  const ArrowDecl& decl(std::size_t i) const { return decls_.at(i); }
  std::optional<std::size_t> find_decl(std::string_view name) const;

  /// Named arrow by id, or family member `name[index]`.
  Arrow arrow(std::string_view name, std::int64_t index = -1) const;
  bool valid(const Arrow& a) const;
  VertexId source(const Arrow& a) const { return decls_.at(a.decl).src; }
  VertexId range(const Arrow& a) const { return decls_.at(a.decl).dst; }
  std::string arrow_name(const Arrow& a) const;

  VertexKind classify(VertexId v) const;
  bool is_regular(VertexId v) const { return classify(v) == VertexKind::regular; }
  bool has_families() const;

  /// Arrows leaving / entering v, in arrow order. Family members are listed
  /// for indices below `window` only.
  std::vector<Arrow> out_arrows(VertexId v, std::int64_t window = 0) const;
  std::vector<Arrow> in_arrows(VertexId v, std::int64_t window = 0) const;
  /// All arrows, family members truncated at `window`.
  std::vector<Arrow> arrows(std::int64_t window = 0) const;

  /// Least arrow of s^{-1}(v); only defined at regular vertices.
  std::optional<Arrow> special_arrow(VertexId v) const;

  std::string to_text() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<ArrowDecl> decls_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

using GraphPtr = std::shared_ptr<const DiGraph>;

/// Graph text format: sections `[vertices]`, `[arrows]` (`name: src -> dst`)
/// and `[families]` (`name[]: src -> dst`). `#` starts a comment.
DiGraph parse_graph(std::string_view text);
DiGraph load_graph(const std::string& file);

/// One vertex `v` with loops `x1..xn`.
DiGraph rose(std::size_t n);
/// One vertex `v` with the loop family `a[]`.
DiGraph rose_infinite();

/// Finite path: start vertex plus arrow sequence.
struct Path {
  VertexId start = 0;
  std::vector<Arrow> arrows;

  std::size_t length() const { return arrows.size(); }
  bool empty() const { return arrows.empty(); }

  /// Length first, then lexicographic on arrows, then start vertex.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path&, const Path&) = default;
};

Path vertex_path(VertexId v);
Path arrow_path(const DiGraph& g, const Arrow& a);
VertexId path_source(const Path& p);
VertexId path_range(const DiGraph& g, const Path& p);
bool is_valid_path(const DiGraph& g, const Path& p);
bool is_closed(const DiGraph& g, const Path& p);

/// Concatenation when r(a) == s(b), nullopt otherwise.
std::optional<Path> compose_paths(const DiGraph& g, const Path& a, const Path& b);
Path head(const Path& p, std::size_t l);
Path tail(const DiGraph& g, const Path& p, std::size_t l);
/// True iff `prefix` is a head of `p` (same start vertex).
bool is_head(const Path& prefix, const Path& p);

/// Closed, nonempty, and not a proper power of a shorter closed path.
bool is_period(const DiGraph& g, const Path& delta);
/// Smallest root π with π^k == δ.
Path primitive_root(const Path& delta);

std::string format_path(const DiGraph& g, const Path& p);
/// Vertex id alone, or arrow ids joined by '.', family members as `name[3]`.
Path parse_path(const DiGraph& g, std::string_view text);

}  // namespace lpa
