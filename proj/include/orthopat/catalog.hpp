// Embedded list of rational orthogonal matrices for every indecomposable SQ
// class with n <= 5, plus named patterns, and their verifier.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthopat/linalg.hpp"
#include "orthopat/parallel.hpp"

namespace orthopat {

struct CatalogEntry {
  int n = 0;
  int label_k = 0;
  std::optional<int> label_l;      // congruence sub-label
  std::optional<long long> trace_label;
  RatMatrix matrix;                // after errata
  RatMatrix printed;               // as stored in the data file
  bool symmetric_list = false;
  bool minimality_claimed = true;

  bool corrected() const { return !(matrix == printed); }
  /// "n=5 k=11 l=1 t=1" style label.
  std::string label() const;
};

struct NamedPattern {
  std::string name;
  ZeroPattern pattern;
};

/// Plain entries first, then symmetric ones, in file order. Reads from the
/// directory named by ORTHOPAT_DATA when that variable is set. Throws
/// CatalogError on malformed data.
std::vector<CatalogEntry> load_catalog();

/// bbs11, p14, p15, p16, open5a, open5b.
std::vector<NamedPattern> special_patterns();
/// Throws InvalidArgument for an unknown name.
ZeroPattern special_pattern(std::string_view name);

/// Parses catalog text (either list); used by load_catalog.
std::vector<CatalogEntry> parse_catalog(std::string_view text, bool symmetric_list);

struct EntryCheck {
  std::string list;  // "plain" or "symmetric"
  std::string label;
  bool orthogonal = false;
  bool support_class = false;
  std::optional<bool> symmetric;
  std::optional<bool> involutory;
  std::optional<bool> trace;
  std::optional<bool> quasi_normal;

  bool passed() const;
};

struct VerificationReport {
  std::vector<EntryCheck> entries;
  int plain_entries = 0;
  int symmetric_entries = 0;
  int failures = 0;

  bool passed() const { return failures == 0; }
};

/// Exact orthogonality, support-class consistency, and for the symmetric list
/// symmetry, involution, trace label and quasi-normal diagonal.
VerificationReport verify_all(const std::vector<CatalogEntry>& entries, Execution exec = Execution::parallel());

/// Resolves "@n=5,k=14", "@n=4,k=2,l=2,t=0" or "@p16" to a pattern. Plain
/// entries are used unless l or t is given; k in {14,15,16} at n=5 maps to the
/// named infeasible patterns.
ZeroPattern resolve_pattern_reference(std::string_view ref);

/// Same syntax, but the stored matrix (throws for the named patterns).
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view ref);

}  // namespace orthopat
