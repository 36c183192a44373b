#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lpa/chen.hpp"
#include "lpa/division.hpp"
#include "lpa/representation.hpp"
#include "lpa/schreier.hpp"

namespace lpa {

/// A module N over the ghost algebra given on finitely many seeds: sectors
/// plus the matrices of the ghost arrows (unlisted entries are zero).
struct GhostModule {
  std::vector<std::string> names;
  std::vector<VertexId> sectors;
  /// ghost[{a, s}] = a* s as a combination of seeds.
  std::map<std::pair<Arrow, std::size_t>, std::map<std::size_t, Scalar>> ghost;

  std::size_t add(std::string name, VertexId sector);
  void set(const Arrow& a, std::size_t s, std::size_t t, const Scalar& c);
};

/// L_K(E) ⊗ N. At each regular vertex w the map s -> (e* s)_e must be
/// injective; the pivot products e·t chosen from the last column backwards
/// are rewritten through the CK2 relation.
RepresentationSpace induced_module(const GraphPtr& g, const GhostModule& n, std::int64_t window, ModuleInfo info);

/// Chen module V_[alpha] with basis the tails of alpha.
RepresentationSpace chen_module(const GraphPtr& g, const ChenWord& alpha, std::int64_t window = 3);

/// Cohn-Jacobson module at an infinite emitter v: N = K with every ghost zero.
RepresentationSpace cohn_jacobson_module(const GraphPtr& g, VertexId v, std::int64_t window = 3);

/// One-dimensional module at a sink.
RepresentationSpace sink_module(const GraphPtr& g, VertexId w);

/// N = D at v with loop ghosts acting by left multiplication by their images.
RepresentationSpace hilbert_module(const GraphPtr& g, VertexId v, const StructureAlgebra& D,
                                   const std::map<Arrow, DivisionAlgebraElement>& images,
                                   std::int64_t window = 3);

/// N = K at v with a_i* acting by r_i on the loops at v.
RepresentationSpace mantese_module(const GraphPtr& g, VertexId v, const std::map<Arrow, Scalar>& r,
                                   std::int64_t window = 3);

/// Periodic module at an infinite emitter: N = K[delta*]/(q(delta*)) spread
/// along the period delta.
RepresentationSpace rangaswamy_module_infinite(const GraphPtr& g, const Path& delta, const Polynomial& q,
                                               std::int64_t window = 3);

/// Periodic module on a period through regular vertices, on the tails of delta^l.
RepresentationSpace rangaswamy_module_regular(const GraphPtr& g, const Path& delta, const Polynomial& q,
                                              std::int64_t window = 3);

enum class LinearVariant { linear, nonlinear, displayed };

/// Modules on the loops a, b at v for the ideal generated by the ghosts of
/// f = v - a - ab (linear) or f = v - a^2 - a - ab (nonlinear). `displayed`
/// uses the literal table with a·a* = v.
RepresentationSpace linear_example_module(const GraphPtr& g, VertexId v, LinearVariant variant,
                                          std::int64_t window = 3);

/// Quotient K E* / L as a ghost module, induced up; L must be certified.
RepresentationSpace quotient_module(const CosetBasis& B, std::int64_t window = 3);

/// Two copies of the trivial module on a one-vertex graph without arrows.
RepresentationSpace decomposable_toy();

}  // namespace lpa
