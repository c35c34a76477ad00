#include "fca/context.hpp"

#include <unordered_set>

namespace fca {

namespace {

void check_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw ContractError(std::string(what) + " label '" + l + "' duplicated");
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> object_labels,
                             std::vector<std::string> attribute_labels,
                             std::vector<AttributeSet> rows)
    : object_labels_(std::move(object_labels)),
      attribute_labels_(std::move(attribute_labels)),
      rows_(std::move(rows)) {
  if (object_labels_.empty()) throw ContractError("context needs at least one object");
  if (attribute_labels_.empty()) throw ContractError("context needs at least one attribute");
  if (rows_.size() != object_labels_.size())
    throw ContractError("row count does not match object count");
  check_unique(object_labels_, "object");
  check_unique(attribute_labels_, "attribute");

  const std::size_t m = attribute_labels_.size();
  for (const auto& r : rows_)
    if (r.universe_size() != m)
      throw ContractError("incidence row universe does not match attribute count");

  columns_.assign(m, ObjectSet(rows_.size()));
  for (std::size_t o = 0; o < rows_.size(); ++o)
    for (std::size_t a : rows_[o].members()) columns_[a].add(o);

  for (std::size_t o = 0; o < object_labels_.size(); ++o)
    object_by_label_.emplace(object_labels_[o], o);
  for (std::size_t a = 0; a < attribute_labels_.size(); ++a)
    attribute_by_label_.emplace(attribute_labels_[a], a);
}

FormalContext FormalContext::from_marks(std::vector<std::string> object_labels,
                                        std::vector<std::string> attribute_labels,
                                        const std::vector<std::string>& marks) {
  const std::size_t m = attribute_labels.size();
  std::vector<AttributeSet> rows;
  rows.reserve(marks.size());
  for (const auto& line : marks) {
    if (line.size() != m)
      throw ContractError("mark row '" + line + "' does not have " +
                          std::to_string(m) + " entries");
    AttributeSet row(m);
    for (std::size_t a = 0; a < m; ++a) {
      char c = line[a];
      if (c == 'X' || c == 'x')
        row.add(a);
      else if (c != '.')
        throw ContractError(std::string("illegal mark character '") + c + "'");
    }
    rows.push_back(std::move(row));
  }
  return FormalContext(std::move(object_labels), std::move(attribute_labels),
                       std::move(rows));
}

const AttributeSet& FormalContext::row(std::size_t object) const {
  if (object >= rows_.size())
    throw ContractError("object index " + std::to_string(object) + " out of range");
  return rows_[object];
}

const ObjectSet& FormalContext::column(std::size_t attribute) const {
  if (attribute >= columns_.size())
    throw ContractError("attribute index " + std::to_string(attribute) + " out of range");
  return columns_[attribute];
}

std::optional<std::size_t> FormalContext::object_index(const std::string& label) const {
  auto it = object_by_label_.find(label);
  if (it == object_by_label_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FormalContext::attribute_index(const std::string& label) const {
  auto it = attribute_by_label_.find(label);
  if (it == attribute_by_label_.end()) return std::nullopt;
  return it->second;
}

FormalContext FormalContext::restrict(const ObjectSet& objects,
                                      const AttributeSet& attributes) const {
  if (objects.universe_size() != object_count() ||
      attributes.universe_size() != attribute_count())
    throw ContractError("restriction sets must match the context universes");
  auto obj_idx = objects.members();
  auto attr_idx = attributes.members();
  if (obj_idx.empty() || attr_idx.empty())
    throw ContractError("restriction must keep at least one object and attribute");

  std::vector<std::string> olabels, alabels;
  for (std::size_t o : obj_idx) olabels.push_back(object_labels_[o]);
  for (std::size_t a : attr_idx) alabels.push_back(attribute_labels_[a]);

  std::vector<AttributeSet> rows;
  rows.reserve(obj_idx.size());
  for (std::size_t o : obj_idx) {
    AttributeSet row(attr_idx.size());
    for (std::size_t j = 0; j < attr_idx.size(); ++j)
      if (rows_[o].test(attr_idx[j])) row.add(j);
    rows.push_back(std::move(row));
  }
  return FormalContext(std::move(olabels), std::move(alabels), std::move(rows));
}

AttributeSet derive_up(const FormalContext& ctx, const ObjectSet& objects) {
  if (objects.universe_size() != ctx.object_count())
    throw ContractError("object set universe does not match context");
  AttributeSet shared = AttributeSet::full(ctx.attribute_count());
  for (std::size_t o : objects.members()) shared &= ctx.row(o);
  return shared;
}

ObjectSet derive_down(const FormalContext& ctx, const AttributeSet& attributes) {
  if (attributes.universe_size() != ctx.attribute_count())
    throw ContractError("attribute set universe does not match context");
  ObjectSet shared = ObjectSet::full(ctx.object_count());
  for (std::size_t a : attributes.members()) shared &= ctx.column(a);
  return shared;
}

FormalConcept close_intent(const FormalContext& ctx, const AttributeSet& attributes) {
  ObjectSet extent = derive_down(ctx, attributes);
  return FormalConcept{extent, derive_up(ctx, extent)};
}

bool is_concept(const FormalContext& ctx, const ObjectSet& extent,
                const AttributeSet& intent) {
  return derive_up(ctx, extent) == intent && derive_down(ctx, intent) == extent;
}

FormalConcept attribute_concept(const FormalContext& ctx, std::size_t attribute) {
  return close_intent(ctx, AttributeSet::single(ctx.attribute_count(), attribute));
}

ObjectSet full_rows(const FormalContext& ctx) {
  ObjectSet out(ctx.object_count());
  const AttributeSet all = AttributeSet::full(ctx.attribute_count());
  for (std::size_t o = 0; o < ctx.object_count(); ++o)
    if (ctx.row(o) == all) out.add(o);
  return out;
}

AttributeSet full_cols(const FormalContext& ctx) {
  AttributeSet out(ctx.attribute_count());
  const ObjectSet all = ObjectSet::full(ctx.object_count());
  for (std::size_t a = 0; a < ctx.attribute_count(); ++a)
    if (ctx.column(a) == all) out.add(a);
  return out;
}

}  // namespace fca
