#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/representation.hpp"

namespace lpa {

/// Truncated closure of a set of vectors under all actions, keeping only
/// images of degree <= d.
struct Closure {
  std::size_t degree = 0;
  Echelon<Label> span;
  std::vector<ModuleVector> vectors;
  /// Every ghost image stayed below the bound and every real image that left
  /// it is a plain prepend of a vector of degree exactly d. Then the slice is
  /// the degree <= d part of a genuine submodule.
  bool sealed = true;

  std::size_t dimension() const { return span.rank(); }
  bool contains(const ModuleVector& v) const { return span.contains(v); }
};

Closure cyclic_closure(const RepresentationSpace& R, const std::vector<ModuleVector>& start, std::size_t d);
/// Basis (reduced echelon rows) of the degree <= d slice of L·m.
std::vector<ModuleVector> cyclic_submodule(const RepresentationSpace& R, const ModuleVector& m, std::size_t d);

struct SimplicityVerdict {
  enum Kind { witnessed_simple_up_to, proper_submodule, inconclusive } kind = inconclusive;
  std::size_t degree = 0;
  std::size_t candidates = 0;
  /// Nonzero vector whose submodule misses the generator.
  std::optional<ModuleVector> witness;
  std::size_t witness_dimension = 0;
  std::string to_string() const;
};

/// Tries ghost-kernel vectors, basis labels and `samples` random vectors of
/// degree <= d; each must regenerate the designated generator.
SimplicityVerdict simplicity_probe(const RepresentationSpace& R, std::size_t d, std::size_t samples = 20,
                                   std::uint64_t seed = 1);

struct CompositionReport {
  bool increasing = true;
  std::vector<std::size_t> dimensions;
  /// Vertex u when chain[i] spans a copy of S_u modulo the previous step.
  std::vector<std::optional<VertexId>> typed;
  std::string problem;

  std::size_t length() const { return dimensions.size(); }
  std::size_t count_typed(VertexId u) const;
};

CompositionReport composition_probe(const RepresentationSpace& R, const std::vector<ModuleVector>& chain,
                                    std::size_t d);

struct Endomorphisms {
  std::size_t degree = 0;
  /// Images of the generator, one per basis endomorphism.
  std::vector<ModuleVector> basis;
  /// Images of the seeds under each basis endomorphism.
  std::vector<std::map<std::size_t, ModuleVector>> seed_images;
  /// table[i][j]: coordinates of basis[i] ∘ basis[j], when expressible.
  std::vector<std::vector<std::optional<DenseVector>>> table;
  /// Seeds of degree <= d that the generator does not reach below the bound.
  std::vector<std::size_t> unreached;

  std::size_t dimension() const { return basis.size(); }
  /// Coordinates of x ∘ y; nullopt if a needed product is missing.
  std::optional<DenseVector> compose(const DenseVector& x, const DenseVector& y) const;
};

/// Module maps fixed by the image of the generator, searched in V_{d-1}.
Endomorphisms endomorphism_probe(const RepresentationSpace& R, std::size_t d);
/// phi_i applied to v.
ModuleVector apply_endomorphism(const RepresentationSpace& R, const Endomorphisms& E, std::size_t i,
                                const ModuleVector& v);
/// Largest failure count of phi_i(x l) = x phi_i(l) over labels of degree
/// <= d and all actions x; zero means exact commutation.
std::size_t endomorphism_residual(const RepresentationSpace& R, const Endomorphisms& E, std::size_t i, std::size_t d);

}  // namespace lpa
