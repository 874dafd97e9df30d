#pragma once

// Internal exhaustive-enumeration engine. Interpretations over n atoms are
// packed two bits per atom into one 64-bit word (atom i at bits 2i..2i+1,
// atoms indexed in sorted name order, value codes F=0 F*=1 T*=2 T=3), so the
// natural integer order on words is the deterministic enumeration order.
//
// Atoms forced to T in every model (facts, and single-head positive rules
// whose body atoms are already forced) are pinned before enumeration, which
// prunes the scan exactly: context programs are fact-heavy and this is what
// keeps their verification cheap.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpod/errors.hpp"
#include "lpod/interpretation.hpp"
#include "lpod/program.hpp"

namespace lpod::detail {

using Word = std::uint64_t;

inline constexpr std::size_t kHardAtomLimit = 31;
inline constexpr Word kLoBits = 0x5555555555555555ull;

struct CompiledRule {
  std::vector<int> head;
  std::vector<int> body_pos;
  std::vector<int> body_neg;
  std::size_t size() const { return head.size() + body_pos.size() + body_neg.size(); }
};

inline unsigned lane(Word w, int atom) { return (w >> (2 * atom)) & 3u; }

/// Pointwise minimization order on packed words over the first n lanes.
inline bool word_preceq(Word a, Word b, Word lane_mask) {
  Word al = a & kLoBits, ah = (a >> 1) & kLoBits;
  Word bl = b & kLoBits, bh = (b >> 1) & kLoBits;
  Word d = a ^ b;
  Word eq = ~((d | (d >> 1)) & kLoBits) & kLoBits;
  Word a_is_f = ~(al | ah) & kLoBits;
  Word a2_b3 = ah & ~al & bh & bl;
  return ((eq | a_is_f | a2_b3) & lane_mask) == lane_mask;
}

/// Lane bitmaps (one bit per atom) of F*-valued and T*-valued atoms.
inline Word fstar_lanes(Word w) { return (w & kLoBits) & ~((w >> 1) & kLoBits); }
inline Word tstar_lanes(Word w) { return ((w >> 1) & kLoBits) & ~(w & kLoBits); }

class Engine {
 public:
  /// `atoms` must be sorted and cover every atom of `rules`.
  Engine(const std::vector<Rule>& rules, std::vector<std::string> atoms,
         bool pin_forced)
      : atoms_(std::move(atoms)) {
    if (atoms_.size() > kHardAtomLimit) {
      throw CapExceededError(atoms_.size(), kHardAtomLimit);
    }
    lane_mask_ = atoms_.empty() ? 0 : (kLoBits >> (64 - 2 * atoms_.size()));
    for (const auto& rule : rules) {
      CompiledRule cr;
      for (const auto& a : rule.head) cr.head.push_back(index_of(a));
      for (const auto& a : rule.body_pos) cr.body_pos.push_back(index_of(a));
      for (const auto& a : rule.body_neg) cr.body_neg.push_back(index_of(a));
      rules_.push_back(std::move(cr));
    }
    skipped_.assign(rules_.size(), false);
    if (pin_forced) compute_forced();
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (!(forced_word_ >> (2 * i) & 3u)) free_positions_.push_back(int(i));
    }
    // Cheap-to-check constraints first so failing candidates die early.
    eval_order_.reserve(rules_.size());
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (!skipped_[i]) eval_order_.push_back(i);
    }
    std::stable_sort(eval_order_.begin(), eval_order_.end(),
                     [this](std::size_t a, std::size_t b) {
                       return rules_[a].size() < rules_[b].size();
                     });
  }

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t num_atoms() const { return atoms_.size(); }
  Word lane_mask() const { return lane_mask_; }
  Word forced_word() const { return forced_word_; }
  std::size_t free_count() const { return free_positions_.size(); }
  const std::vector<int>& free_positions() const { return free_positions_; }

  bool satisfies(const CompiledRule& r, Word w) const {
    unsigned body = 3;
    for (int a : r.body_pos) {
      body = std::min(body, lane(w, a));
      if (body == 0) return true;
    }
    for (int a : r.body_neg) {
      body = std::min(body, lane(w, a) <= 1 ? 3u : 0u);
      if (body == 0) return true;
    }
    unsigned head = 1;
    for (int a : r.head) {
      unsigned v = lane(w, a);
      if (v != 1) {
        head = v;
        break;
      }
    }
    return head >= body;
  }

  /// All rules; valid for any word.
  bool is_model(Word w) const {
    for (const auto& r : rules_) {
      if (!satisfies(r, w)) return false;
    }
    return true;
  }

  /// Only the rules not discharged by pinning; valid for enumeration
  /// candidates (forced lanes set to T).
  bool is_model_pinned(Word w) const {
    for (std::size_t i : eval_order_) {
      if (!satisfies(rules_[i], w)) return false;
    }
    return true;
  }

  /// First candidate of the four-valued enumeration.
  Word first_word() const { return forced_word_; }

  /// Advances the free lanes as a base-4 odometer; false once exhausted.
  bool advance4(Word& w) const {
    for (int pos : free_positions_) {
      Word l = (w >> (2 * pos)) & 3u;
      if (l < 3) {
        w += Word(1) << (2 * pos);
        return true;
      }
      w &= ~(Word(3) << (2 * pos));
    }
    return false;
  }

  /// Same, over the three-valued codes {0, 2, 3}.
  bool advance3(Word& w) const {
    for (int pos : free_positions_) {
      Word l = (w >> (2 * pos)) & 3u;
      if (l == 0) {
        w += Word(2) << (2 * pos);
        return true;
      }
      if (l == 2) {
        w += Word(1) << (2 * pos);
        return true;
      }
      w &= ~(Word(3) << (2 * pos));
    }
    return false;
  }

  Interpretation to_interpretation(Word w) const {
    std::map<std::string, TruthValue> values;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      values.emplace(atoms_[i], truth_value_of_code(lane(w, int(i))));
    }
    return Interpretation(std::move(values));
  }

  Word from_interpretation(const Interpretation& interp) const {
    Word w = 0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      w |= Word(code_of(interp.value(atoms_[i]))) << (2 * i);
    }
    return w;
  }

 private:
  int index_of(const std::string& atom) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
    if (it == atoms_.end() || *it != atom) {
      throw std::invalid_argument("atom outside engine alphabet: " + atom);
    }
    return int(it - atoms_.begin());
  }

  void compute_forced() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (skipped_[i]) continue;
        const auto& r = rules_[i];
        if (r.head.size() != 1 || !r.body_neg.empty()) continue;
        bool body_forced = true;
        for (int a : r.body_pos) {
          if (lane(forced_word_, a) != 3) {
            body_forced = false;
            break;
          }
        }
        if (!body_forced) continue;
        forced_word_ |= Word(3) << (2 * r.head[0]);
        skipped_[i] = true;
        changed = true;
      }
    }
  }

  std::vector<std::string> atoms_;
  std::vector<CompiledRule> rules_;
  std::vector<bool> skipped_;
  std::vector<std::size_t> eval_order_;
  std::vector<int> free_positions_;
  Word forced_word_ = 0;
  Word lane_mask_ = 0;
};

/// Worker count for parallel scans; LPOD_LAB_THREADS overrides.
std::size_t worker_count();

std::vector<std::string> sorted_union_atoms(const Program& p1, const Program& p2);

void check_cap(std::size_t atoms, std::size_t cap);

}  // namespace lpod::detail
