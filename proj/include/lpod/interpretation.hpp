#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lpod/truth_value.hpp"

namespace lpod {

/// A truth assignment with an explicitly stated finite domain; every atom
/// outside the stated domain is F. Two interpretations are equal when they
/// agree as total functions, regardless of which F-valued atoms they state.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::map<std::string, TruthValue> values)
      : values_(std::move(values)) {}

  TruthValue value(const std::string& atom) const {
    auto it = values_.find(atom);
    return it == values_.end() ? TruthValue::F : it->second;
  }

  /// Stated domain, including F entries, sorted by atom name.
  const std::map<std::string, TruthValue>& entries() const { return values_; }

  /// The non-F part; canonical form for equality and set membership.
  std::map<std::string, TruthValue> nondefault_entries() const;

  std::set<std::string> fstar_atoms() const;

  /// No atom maps to T* / no atom maps to F*. Off-domain atoms are F, so
  /// checking the stated domain covers any program it was built over.
  bool is_solid() const;
  bool is_three_valued() const;

  bool operator==(const Interpretation& other) const {
    return nondefault_entries() == other.nondefault_entries();
  }
  bool operator!=(const Interpretation& other) const { return !(*this == other); }

 private:
  std::map<std::string, TruthValue> values_;
};

/// Pointwise minimization order over the union of the stated domains.
bool interp_preceq(const Interpretation& a, const Interpretation& b);
bool interp_prec(const Interpretation& a, const Interpretation& b);

}  // namespace lpod
