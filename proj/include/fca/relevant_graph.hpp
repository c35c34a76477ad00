#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fca/context.hpp"

namespace fca {

/// Directed edge drawn from the attribute with the larger extent to the one
/// with the strictly smaller extent: pre_weights[to] ⊊ pre_weights[from].
struct Arc {
  std::size_t from;
  std::size_t to;

  auto operator<=>(const Arc&) const = default;
};

/// Undirected edge between attributes with equal extents; x < y.
struct BiArc {
  std::size_t x;
  std::size_t y;

  auto operator<=>(const BiArc&) const = default;
};

/// Graph on the attribute universe with pre-weight ω(a) = a' (the attribute's
/// extent). Arcs hold every strict-inclusion pair between alive vertices, not
/// only covers, so they are transitively closed. Pre-weights of removed
/// vertices are retained; `alive` says which vertices are present.
struct PreWeightedGraph {
  std::vector<std::string> object_labels;
  std::vector<std::string> attribute_labels;
  std::vector<ObjectSet> pre_weights;
  std::vector<Arc> arcs;      // sorted by (from, to)
  std::vector<BiArc> bi_arcs; // sorted, x < y
  AttributeSet alive;

  std::size_t attribute_count() const { return pre_weights.size(); }
  bool is_alive(std::size_t a) const { return alive.test(a); }
};

PreWeightedGraph build_graph(const FormalContext& ctx);

/// Lower cone of `a` (N+): alive attributes other than `a` whose pre-weight
/// is contained in ω(a). Containment is non-strict, so ≡-duplicates fall
/// into the cone. `a` must be alive.
AttributeSet lower_cone(const PreWeightedGraph& g, std::size_t a);

/// Upper cone of `a` (the attributes reachable along arcs into `a`): alive
/// attributes other than `a` whose pre-weight contains ω(a). `a` must be
/// alive.
AttributeSet upper_cone(const PreWeightedGraph& g, std::size_t a);

/// Alive attributes with no alive strictly larger pre-weight.
AttributeSet maximal_attrs(const PreWeightedGraph& g);

/// Alive attributes with no alive strictly smaller pre-weight.
AttributeSet minimal_attrs(const PreWeightedGraph& g);

/// Returns the graph with `to_remove` taken out of `alive` and the edge sets
/// restricted accordingly; pre-weights are kept. `to_remove` must be a
/// subset of `alive`.
PreWeightedGraph remove_vertices(const PreWeightedGraph& g, const AttributeSet& to_remove);

/// DOT rendering of the alive part of the graph. Vertices carry the
/// attribute name and the pre-weight set, arcs point from the larger extent
/// to the smaller one, bi-arcs are drawn once with arrowheads on both ends.
/// Output is ordered by attribute index.
std::string to_dot(const PreWeightedGraph& g);

}  // namespace fca
