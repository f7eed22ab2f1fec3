#pragma once

// Built-in regression catalogue: the classified form families with their
// known verdicts.

#include <optional>
#include <string>
#include <vector>

#include "vinberg/document.hpp"
#include "vinberg/engine.hpp"

namespace vinberg {

enum class Budget { Quick, Standard, Extended };
Budget parse_budget(const std::string& name);
std::string budget_name(Budget b);

struct Expected {
  Outcome outcome = Outcome::Reflective;
  std::optional<size_t> faces;
  std::optional<bool> compact;
  std::optional<long> symmetry_order;
  /// (norm, count) pairs over the final root set.
  std::vector<std::pair<long, size_t>> norm_counts;
  /// Face count recorded from an earlier verified run, not from the
  /// literature.
  std::optional<size_t> regression_faces;
};

struct CatalogueEntry {
  std::string name;
  FormDocument document;
  Expected expected;
  std::string provenance;
  /// Smallest budget that includes the entry.
  Budget budget = Budget::Quick;
  /// Root cap for the run; inconclusive fixtures use a small one.
  size_t max_roots = 1000;
};

const std::vector<CatalogueEntry>& catalogue();
const CatalogueEntry& catalogue_entry(const std::string& name);

/// "all", an entry name, or a prefix ending in '*'; "all" and prefixes
/// keep the entries within the budget. Throws on an unknown name.
std::vector<const CatalogueEntry*> select_entries(const std::string& selector, Budget budget);

struct EntryResult {
  bool passed = false;
  RunVerdict verdict;
  /// Mismatches against the expectation; empty on success.
  std::string detail;
};

EntryResult run_entry(const CatalogueEntry& e, const RunConfig& base = {}, bool check_arithmeticity = true);

/// Diagonal form diag(head, 1, ..., 1) of size n + 1.
GramForm unit_tail_form(FieldSpec field, const RingElement& head, size_t n);
/// The even sublattice of Z^{21,1} in the basis v0+v1, v_i-v_{i+1}, v20+v21.
FormDocument borcherds_document();

}  // namespace vinberg
