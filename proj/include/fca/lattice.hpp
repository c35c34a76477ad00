#pragma once

#include <cstddef>
#include <vector>

#include "fca/context.hpp"

namespace fca {

/// Canonically ordered collection of formal concepts: ascending lexicographic
/// order on extent bitsets (lowest object index decides first), no duplicate
/// extents.
class ConceptSet {
 public:
  ConceptSet() = default;

  /// Sorts and deduplicates by extent.
  static ConceptSet from_unordered(std::vector<FormalConcept> items);

  const std::vector<FormalConcept>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  const FormalConcept* find_by_extent(const ObjectSet& extent) const;
  bool contains(const FormalConcept& c) const;

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const ConceptSet&) const = default;

 private:
  std::vector<FormalConcept> items_;
};

/// The core concept set: everything in the lattice except the top concept,
/// the bottom concept, and the attribute concepts. Split three ways around a
/// pivot attribute and its lower cone N+(pivot):
///   F — pivot in the intent, no cone member in the intent;
///   S — pivot in the intent, some cone member in the intent;
///   T — pivot not in the intent.
struct FSTPartition {
  ConceptSet F;
  ConceptSet S;
  ConceptSet T;
  std::size_t pivot;
};

/// Closes every subset of the attribute universe and deduplicates by extent.
/// Refuses contexts with more than `kBruteForceAttributeLimit` attributes.
ConceptSet enumerate_bruteforce(const FormalContext& ctx);

inline constexpr std::size_t kBruteForceAttributeLimit = 20;

/// Lectic-order closure enumeration (no subset blowup). Produces the same
/// concept set as enumerate_bruteforce wherever both run.
ConceptSet enumerate_lectic(const FormalContext& ctx);

/// Concept order: extent inclusion.
bool concept_leq(const FormalConcept& a, const FormalConcept& b);

/// The lattice minus its top concept, bottom concept, and attribute concepts.
/// When the lattice has a single concept it is removed once.
ConceptSet core_concepts(const FormalContext& ctx);

/// Splits core_concepts(ctx) around `pivot` per the F/S/T membership rules.
FSTPartition partition_fst(const FormalContext& ctx, std::size_t pivot);

/// All intersections of non-empty families of attribute pre-weights, plus the
/// full object set; canonically ordered, deduplicated. Equals the extent set
/// of the concept lattice. Same attribute-count guard as the brute-force
/// enumerator.
std::vector<ObjectSet> extents_from_preweight_intersections(const FormalContext& ctx);

}  // namespace fca
