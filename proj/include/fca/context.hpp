#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fca/bitset.hpp"

namespace fca {

/// A finite formal context: objects, attributes, and a boolean incidence
/// relation. Immutable after construction; the single source of truth for
/// everything else in the library. Labels map to indices here and all
/// computation downstream is index-based.
class FormalContext {
 public:
  /// `rows[o]` holds the attributes of object `o`. Requires at least one
  /// object and one attribute, unique labels, and rows over the attribute
  /// universe.
  FormalContext(std::vector<std::string> object_labels,
                std::vector<std::string> attribute_labels,
                std::vector<AttributeSet> rows);

  /// Builds from mark strings, one per object: 'X' or 'x' = cross,
  /// '.' = blank. Row length must equal the attribute count.
  static FormalContext from_marks(std::vector<std::string> object_labels,
                                  std::vector<std::string> attribute_labels,
                                  const std::vector<std::string>& marks);

  std::size_t object_count() const { return rows_.size(); }
  std::size_t attribute_count() const { return columns_.size(); }

  const std::vector<std::string>& object_labels() const { return object_labels_; }
  const std::vector<std::string>& attribute_labels() const { return attribute_labels_; }

  bool incidence(std::size_t object, std::size_t attribute) const {
    return rows_[object].test(attribute);
  }

  /// Attributes of one object.
  const AttributeSet& row(std::size_t object) const;
  /// Objects possessing one attribute.
  const ObjectSet& column(std::size_t attribute) const;

  std::optional<std::size_t> object_index(const std::string& label) const;
  std::optional<std::size_t> attribute_index(const std::string& label) const;

  /// Sub-context restricted to the given objects and attributes; labels are
  /// carried over. Both sets must be non-empty.
  FormalContext restrict(const ObjectSet& objects,
                         const AttributeSet& attributes) const;

  bool operator==(const FormalContext& o) const {
    return object_labels_ == o.object_labels_ &&
           attribute_labels_ == o.attribute_labels_ && rows_ == o.rows_;
  }

 private:
  std::vector<std::string> object_labels_;
  std::vector<std::string> attribute_labels_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
  std::unordered_map<std::string, std::size_t> object_by_label_;
  std::unordered_map<std::string, std::size_t> attribute_by_label_;
};

/// A pair closed under the derivation operators: extent' = intent and
/// intent' = extent in the owning context.
struct FormalConcept {
  ObjectSet extent;
  AttributeSet intent;

  bool operator==(const FormalConcept&) const = default;
};

/// All attributes shared by every object in `objects`. The empty object set
/// yields the full attribute universe.
AttributeSet derive_up(const FormalContext& ctx, const ObjectSet& objects);

/// All objects possessing every attribute in `attributes`. The empty
/// attribute set yields the full object universe.
ObjectSet derive_down(const FormalContext& ctx, const AttributeSet& attributes);

/// Closes an attribute set into the concept it generates:
/// ⟨B', B''⟩ with B ⊆ B''.
FormalConcept close_intent(const FormalContext& ctx, const AttributeSet& attributes);

bool is_concept(const FormalContext& ctx, const ObjectSet& extent,
                const AttributeSet& intent);

/// The concept generated by a single attribute.
FormalConcept attribute_concept(const FormalContext& ctx, std::size_t attribute);

/// Objects whose row is the full attribute universe.
ObjectSet full_rows(const FormalContext& ctx);

/// Attributes whose column is the full object universe.
AttributeSet full_cols(const FormalContext& ctx);

/// Labels of a set's members in ascending index order.
template <class Tag>
std::vector<std::string> labels_of(const IndexSet<Tag>& set,
                                   const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (std::size_t i : set.members()) out.push_back(labels.at(i));
  return out;
}

/// Renders "{a,b,c}" with members in ascending index order; "{}" when empty.
template <class Tag>
std::string set_to_string(const IndexSet<Tag>& set,
                          const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set.members()) {
    if (!first) out += ",";
    out += labels.at(i);
    first = false;
  }
  return out + "}";
}

}  // namespace fca
