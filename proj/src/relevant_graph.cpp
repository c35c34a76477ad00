#include "fca/relevant_graph.hpp"

#include <algorithm>
#include <sstream>

namespace fca {

namespace {

void check_alive(const PreWeightedGraph& g, std::size_t a) {
  if (a >= g.attribute_count())
    throw ContractError("attribute index " + std::to_string(a) + " out of range");
  if (!g.is_alive(a))
    throw ContractError("attribute '" + g.attribute_labels[a] + "' is not alive");
}

}  // namespace

PreWeightedGraph build_graph(const FormalContext& ctx) {
  PreWeightedGraph g;
  g.object_labels = ctx.object_labels();
  g.attribute_labels = ctx.attribute_labels();
  const std::size_t m = ctx.attribute_count();
  g.pre_weights.reserve(m);
  for (std::size_t a = 0; a < m; ++a)
    g.pre_weights.push_back(derive_down(ctx, AttributeSet::single(m, a)));
  g.alive = AttributeSet::full(m);

  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (x == y) continue;
      if (g.pre_weights[x].is_proper_subset_of(g.pre_weights[y]))
        g.arcs.push_back(Arc{y, x});
      else if (x < y && g.pre_weights[x] == g.pre_weights[y])
        g.bi_arcs.push_back(BiArc{x, y});
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  std::sort(g.bi_arcs.begin(), g.bi_arcs.end());
  return g;
}

AttributeSet lower_cone(const PreWeightedGraph& g, std::size_t a) {
  check_alive(g, a);
  AttributeSet cone(g.attribute_count());
  for (std::size_t x : g.alive.members())
    if (x != a && g.pre_weights[x].is_subset_of(g.pre_weights[a])) cone.add(x);
  return cone;
}

AttributeSet upper_cone(const PreWeightedGraph& g, std::size_t a) {
  check_alive(g, a);
  AttributeSet cone(g.attribute_count());
  for (std::size_t x : g.alive.members())
    if (x != a && g.pre_weights[a].is_subset_of(g.pre_weights[x])) cone.add(x);
  return cone;
}

AttributeSet maximal_attrs(const PreWeightedGraph& g) {
  AttributeSet out(g.attribute_count());
  for (std::size_t a : g.alive.members()) {
    bool dominated = false;
    for (std::size_t b : g.alive.members())
      if (g.pre_weights[a].is_proper_subset_of(g.pre_weights[b])) {
        dominated = true;
        break;
      }
    if (!dominated) out.add(a);
  }
  return out;
}

AttributeSet minimal_attrs(const PreWeightedGraph& g) {
  AttributeSet out(g.attribute_count());
  for (std::size_t a : g.alive.members()) {
    bool dominates = false;
    for (std::size_t b : g.alive.members())
      if (g.pre_weights[b].is_proper_subset_of(g.pre_weights[a])) {
        dominates = true;
        break;
      }
    if (!dominates) out.add(a);
  }
  return out;
}

PreWeightedGraph remove_vertices(const PreWeightedGraph& g, const AttributeSet& to_remove) {
  if (!to_remove.is_subset_of(g.alive))
    throw ContractError("can only remove alive vertices");
  PreWeightedGraph out = g;
  out.alive -= to_remove;
  std::erase_if(out.arcs, [&](const Arc& e) {
    return !out.alive.test(e.from) || !out.alive.test(e.to);
  });
  std::erase_if(out.bi_arcs, [&](const BiArc& e) {
    return !out.alive.test(e.x) || !out.alive.test(e.y);
  });
  return out;
}

std::string to_dot(const PreWeightedGraph& g) {
  std::ostringstream out;
  out << "digraph relevant_graph {\n";
  for (std::size_t a : g.alive.members())
    out << "  \"" << g.attribute_labels[a] << "\" [label=\""
        << g.attribute_labels[a] << "\\n"
        << set_to_string(g.pre_weights[a], g.object_labels) << "\"];\n";
  for (const Arc& e : g.arcs)
    out << "  \"" << g.attribute_labels[e.from] << "\" -> \""
        << g.attribute_labels[e.to] << "\";\n";
  for (const BiArc& e : g.bi_arcs)
    out << "  \"" << g.attribute_labels[e.x] << "\" -> \""
        << g.attribute_labels[e.y] << "\" [dir=both];\n";
  out << "}\n";
  return out.str();
}

}  // namespace fca
