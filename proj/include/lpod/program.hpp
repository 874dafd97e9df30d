#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lpod {

/// Atom names are nonempty, start with a lowercase letter, and continue with
/// letters, digits or underscores. "x" and "not" are keywords of the textual
/// format and are rejected as atom names.
bool is_valid_atom_name(std::string_view name);

/// One rule: an ordered-disjunctive head (at least one atom, order and
/// repetitions significant) over a conjunctive body of positive and negated
/// atoms.
struct Rule {
  std::vector<std::string> head;
  std::vector<std::string> body_pos;
  std::vector<std::string> body_neg;

  bool is_fact() const { return body_pos.empty() && body_neg.empty(); }
  bool is_normal() const { return head.size() == 1; }

  bool operator==(const Rule&) const = default;
};

/// A finite, duplicate-free list of rules with the set of occurring atoms
/// cached. Immutable after construction.
class Program {
 public:
  Program() = default;

  /// Validates every rule (nonempty head, well-formed atom names) and drops
  /// exact duplicates, keeping first occurrences in order.
  /// Throws std::invalid_argument on a malformed rule.
  explicit Program(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }

  /// Sorted, duplicate-free list of every atom occurring in the rules.
  const std::vector<std::string>& atoms() const { return atoms_; }

  bool mentions(const std::string& atom) const;
  bool is_normal() const;
  bool empty() const { return rules_.empty(); }
  std::size_t size() const { return rules_.size(); }

  /// Set union of rules; duplicates from `other` are dropped.
  Program union_with(const Program& other) const;

  bool operator==(const Program&) const = default;

 private:
  std::vector<Rule> rules_;
  std::vector<std::string> atoms_;
};

}  // namespace lpod
