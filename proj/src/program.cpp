#include "lpod/program.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lpod {

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name.substr(1)) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "x" && name != "not";
}

namespace {

void validate_rule(const Rule& rule) {
  if (rule.head.empty()) {
    throw std::invalid_argument("rule head must contain at least one atom");
  }
  auto check_names = [](const std::vector<std::string>& atoms) {
    for (const auto& name : atoms) {
      if (!is_valid_atom_name(name)) {
        throw std::invalid_argument("invalid atom name: '" + name + "'");
      }
    }
  };
  check_names(rule.head);
  check_names(rule.body_pos);
  check_names(rule.body_neg);
}

}  // namespace

Program::Program(std::vector<Rule> rules) {
  rules_.reserve(rules.size());
  for (auto& rule : rules) {
    validate_rule(rule);
    if (std::find(rules_.begin(), rules_.end(), rule) == rules_.end()) {
      rules_.push_back(std::move(rule));
    }
  }
  std::set<std::string> atom_set;
  for (const auto& rule : rules_) {
    atom_set.insert(rule.head.begin(), rule.head.end());
    atom_set.insert(rule.body_pos.begin(), rule.body_pos.end());
    atom_set.insert(rule.body_neg.begin(), rule.body_neg.end());
  }
  atoms_.assign(atom_set.begin(), atom_set.end());
}

bool Program::mentions(const std::string& atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

bool Program::is_normal() const {
  return std::all_of(rules_.begin(), rules_.end(),
                     [](const Rule& r) { return r.is_normal(); });
}

Program Program::union_with(const Program& other) const {
  std::vector<Rule> combined = rules_;
  combined.insert(combined.end(), other.rules_.begin(), other.rules_.end());
  return Program(std::move(combined));
}

}  // namespace lpod
