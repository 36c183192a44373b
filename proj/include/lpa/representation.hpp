#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/linalg.hpp"

namespace lpa {

/// Basis vector mu · s: a real path mu ending in the sector of seed s.
/// An empty mu carries the sector vertex as its start.
struct Label {
  Path mu;
  std::size_t seed = 0;

  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.mu <=> b.mu; c != 0) return c;
    return a.seed <=> b.seed;
  }
  friend bool operator==(const Label&, const Label&) = default;
};

using ModuleVector = SparseVector<Label>;

/// Generator of L_K(E) acting on a module: a vertex, an arrow or a ghost arrow.
struct Action {
  enum Kind { vertex, real, ghost } kind = vertex;
  VertexId v = 0;
  Arrow a;

  static Action at(VertexId u) { return {vertex, u, {}}; }
  static Action of(const Arrow& x) { return {real, 0, x}; }
  static Action star(const Arrow& x) { return {ghost, 0, x}; }
  friend auto operator<=>(const Action&, const Action&) = default;
};

/// Finite data from which a module is generated: seeds with sectors, the
/// ghost action on seeds, and the rewrite of excluded products a · s.
/// Basis: all mu · s whose last arrow a has (a, s) not excluded.
class SeedModel {
 public:
  virtual ~SeedModel() = default;
  /// Seeds are numbered by nondecreasing degree; this is the count with
  /// degree <= d.
  virtual std::size_t seeds_up_to(std::size_t d) const = 0;
  virtual VertexId sector(std::size_t s) const = 0;
  virtual std::size_t seed_degree(std::size_t) const { return 0; }
  virtual std::string seed_name(std::size_t s) const = 0;
  /// Value of a · s when (a, s) is excluded from the basis, else nullopt.
  virtual std::optional<ModuleVector> rewrite(const Arrow& a, std::size_t s) const = 0;
  /// a* · s, for a with s(a) == sector(s).
  virtual ModuleVector ghost(const Arrow& a, std::size_t s) const = 0;
};

/// Finitely many degree-0 seeds given by explicit tables; unlisted ghost
/// products are zero and unlisted real products are basis labels.
class TableSeeds : public SeedModel {
 public:
  std::size_t add_seed(std::string name, VertexId sector);
  void set_ghost(const Arrow& a, std::size_t s, ModuleVector image);
  void set_rewrite(const Arrow& a, std::size_t s, ModuleVector image);

  std::size_t size() const { return names_.size(); }
  std::size_t seeds_up_to(std::size_t) const override { return names_.size(); }
  VertexId sector(std::size_t s) const override { return sectors_.at(s); }
  std::string seed_name(std::size_t s) const override { return names_.at(s); }
  std::optional<ModuleVector> rewrite(const Arrow& a, std::size_t s) const override;
  ModuleVector ghost(const Arrow& a, std::size_t s) const override;

 private:
  std::vector<std::string> names_;
  std::vector<VertexId> sectors_;
  std::map<std::pair<Arrow, std::size_t>, ModuleVector> ghost_, rewrite_;
};

struct ModuleInfo {
  std::string construction;
  std::vector<std::pair<std::string, std::string>> params;
  /// Designated cyclic generator.
  ModuleVector generator;
  /// Suggested increasing chain of submodule generators, ending with `generator`.
  std::vector<ModuleVector> chain;
  std::vector<std::string> notes;
  /// Degree at which verify_representation is documented to pass.
  std::size_t bound = 6;
};

/// A based module over L_K(E) presented by a seed model.
class RepresentationSpace {
 public:
  RepresentationSpace(GraphPtr g, std::shared_ptr<const SeedModel> seeds, std::int64_t window, ModuleInfo info = {});

  const GraphPtr& graph() const { return g_; }
  const SeedModel& seeds() const { return *seeds_; }
  std::int64_t window() const { return window_; }
  const ModuleInfo& info() const { return info_; }
  ModuleInfo& info() { return info_; }

  Label seed_label(std::size_t s) const;
  ModuleVector seed_vector(std::size_t s) const { return {{seed_label(s), Scalar(1)}}; }
  std::size_t degree(const Label& l) const;
  std::size_t degree(const ModuleVector& v) const;
  bool is_label(const Label& l) const;
  /// Labels of degree <= d, sorted.
  std::vector<Label> basis(std::size_t d) const;
  /// Vertices, window arrows and their ghosts.
  std::vector<Action> actions() const;

  ModuleVector act(const Action& x, const Label& l) const;
  ModuleVector act(const Action& x, const ModuleVector& v) const;
  /// Replaces the action of x on one label; used to build negative controls.
  void override_action(const Action& x, const Label& l, ModuleVector image);

  std::string format(const Label& l) const;
  std::string format(const ModuleVector& v) const;

 private:
  GraphPtr g_;
  std::shared_ptr<const SeedModel> seeds_;
  std::int64_t window_;
  ModuleInfo info_;
  std::map<std::pair<Action, Label>, ModuleVector> overrides_;
};

/// Linear extension of the action; monomials act right to left.
ModuleVector apply(const RepresentationSpace& R, const AlgebraElement& x, const ModuleVector& m);
/// Acts with the real path mu (last arrow first).
ModuleVector apply_path(const RepresentationSpace& R, const Path& mu, const ModuleVector& m);

struct VerifyReport {
  bool pass = true;
  std::size_t labels_checked = 0;
  std::string violation;
};

/// Vertex partition, CK1 for window arrow pairs, CK2 at regular vertices and
/// vertex/arrow compatibility on every label of degree <= d.
VerifyReport verify_representation(const RepresentationSpace& R, std::size_t d);

}  // namespace lpa
