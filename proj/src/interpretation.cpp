#include "lpod/interpretation.hpp"

#include <algorithm>

namespace lpod {

std::map<std::string, TruthValue> Interpretation::nondefault_entries() const {
  std::map<std::string, TruthValue> out;
  for (const auto& [atom, v] : values_) {
    if (v != TruthValue::F) out.emplace(atom, v);
  }
  return out;
}

std::set<std::string> Interpretation::fstar_atoms() const {
  std::set<std::string> out;
  for (const auto& [atom, v] : values_) {
    if (v == TruthValue::FStar) out.insert(atom);
  }
  return out;
}

bool Interpretation::is_solid() const {
  return std::none_of(values_.begin(), values_.end(), [](const auto& kv) {
    return kv.second == TruthValue::TStar;
  });
}

bool Interpretation::is_three_valued() const {
  return std::none_of(values_.begin(), values_.end(), [](const auto& kv) {
    return kv.second == TruthValue::FStar;
  });
}

bool interp_preceq(const Interpretation& a, const Interpretation& b) {
  // Walk the union of the stated domains; missing atoms are F.
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea || ib != eb) {
    TruthValue va = TruthValue::F;
    TruthValue vb = TruthValue::F;
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      va = ia->second;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      vb = ib->second;
      ++ib;
    } else {
      va = ia->second;
      vb = ib->second;
      ++ia;
      ++ib;
    }
    if (!truth_preceq(va, vb)) return false;
  }
  return true;
}

bool interp_prec(const Interpretation& a, const Interpretation& b) {
  return a != b && interp_preceq(a, b);
}

}  // namespace lpod
