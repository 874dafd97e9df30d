#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace lpod {

/// The four truth values. The underlying codes are chosen so that the total
/// order F < F* < T* < T is the natural order on the underlying integer,
/// which makes min/max and rule satisfaction branch-free.
enum class TruthValue : std::uint8_t {
  F = 0,
  FStar = 1,
  TStar = 2,
  T = 3,
};

inline constexpr TruthValue kAllTruthValues[] = {
    TruthValue::F,
    TruthValue::FStar,
    TruthValue::TStar,
    TruthValue::T,
};

constexpr std::uint8_t code_of(TruthValue v) {
  return static_cast<std::uint8_t>(v);
}

constexpr TruthValue truth_value_of_code(std::uint8_t code) {
  return static_cast<TruthValue>(code & 0x3u);
}

/// Negation: T when the operand is at most F*, F otherwise.
constexpr TruthValue eval_not(TruthValue v) {
  return v <= TruthValue::FStar ? TruthValue::T : TruthValue::F;
}

/// Conjunction is min and disjunction is max under the total order.
constexpr TruthValue eval_and(TruthValue a, TruthValue b) { return a < b ? a : b; }
constexpr TruthValue eval_or(TruthValue a, TruthValue b) { return a < b ? b : a; }

/// Ordered disjunction: the second operand counts only when the first is F*.
constexpr TruthValue eval_ordered(TruthValue first, TruthValue second) {
  return first == TruthValue::FStar ? second : first;
}

/// The minimization (partial) order on truth values: F is below everything,
/// T* is below T, and F* is incomparable with both T* and T.
constexpr bool truth_prec(TruthValue a, TruthValue b) {
  return (a == TruthValue::F && b != TruthValue::F) ||
         (a == TruthValue::TStar && b == TruthValue::T);
}

constexpr bool truth_preceq(TruthValue a, TruthValue b) {
  return a == b || truth_prec(a, b);
}

constexpr std::string_view to_string(TruthValue v) {
  switch (v) {
    case TruthValue::F: return "F";
    case TruthValue::FStar: return "F*";
    case TruthValue::TStar: return "T*";
    case TruthValue::T: return "T";
  }
  return "?";
}

constexpr std::optional<TruthValue> truth_value_from_string(std::string_view s) {
  if (s == "F") return TruthValue::F;
  if (s == "F*") return TruthValue::FStar;
  if (s == "T*") return TruthValue::TStar;
  if (s == "T") return TruthValue::T;
  return std::nullopt;
}

}  // namespace lpod
