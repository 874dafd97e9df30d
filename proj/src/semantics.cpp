#include "lpod/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "lpod/errors.hpp"
#include "packed_engine.hpp"

namespace lpod {

namespace detail {

std::size_t worker_count() {
  if (const char* env = std::getenv("LPOD_LAB_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1 && n <= 256) return static_cast<std::size_t>(n);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

std::vector<std::string> sorted_union_atoms(const Program& p1, const Program& p2) {
  std::vector<std::string> atoms = p1.atoms();
  atoms.insert(atoms.end(), p2.atoms().begin(), p2.atoms().end());
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

void check_cap(std::size_t atoms, std::size_t cap) {
  std::size_t effective = std::min(cap, kHardAtomLimit);
  if (atoms > effective) throw CapExceededError(atoms, effective);
}

namespace {

Word scatter4(Word index, const std::vector<int>& free_positions, Word base) {
  Word w = base;
  for (int pos : free_positions) {
    w |= (index & 3u) << (2 * pos);
    index >>= 2;
  }
  return w;
}

/// All four-valued models in ascending packed order. Splits the free-lane
/// counter range across workers; contiguous chunks keep the order.
std::vector<Word> collect_models(const Engine& engine) {
  std::size_t free_atoms = engine.free_count();
  Word total = Word(1) << (2 * free_atoms);
  std::size_t workers = worker_count();
  if (workers <= 1 || total < (Word(1) << 16)) {
    std::vector<Word> models;
    Word w = engine.first_word();
    do {
      if (engine.is_model_pinned(w)) models.push_back(w);
    } while (engine.advance4(w));
    return models;
  }

  std::vector<std::vector<Word>> chunks(workers);
  std::vector<std::thread> threads;
  Word per = total / workers + 1;
  for (std::size_t t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      Word begin = per * t;
      Word end = std::min(total, begin + per);
      if (begin >= end) return;
      Word w = scatter4(begin, engine.free_positions(), engine.first_word());
      for (Word i = begin; i < end; ++i) {
        if (engine.is_model_pinned(w)) chunks[t].push_back(w);
        engine.advance4(w);
      }
    });
  }
  for (auto& th : threads) th.join();
  std::vector<Word> models;
  for (auto& chunk : chunks) {
    models.insert(models.end(), chunk.begin(), chunk.end());
  }
  return models;
}

/// Words minimal in the pointwise order among `models`, restricted to the
/// given candidates. `models` must be sorted ascending; a dominating word is
/// always numerically smaller, so only the prefix needs scanning.
bool is_minimal(Word candidate, const std::vector<Word>& models, Word lane_mask) {
  for (Word other : models) {
    if (other >= candidate) break;
    if (word_preceq(other, candidate, lane_mask)) return false;
  }
  return true;
}

}  // namespace
}  // namespace detail

namespace {

using detail::Engine;
using detail::Word;

Engine make_engine(const Program& program, const EnumOptions& opts, bool pin) {
  detail::check_cap(program.atoms().size(), opts.atom_cap);
  return Engine(program.rules(), program.atoms(), pin);
}

}  // namespace

std::vector<Interpretation> enumerate_models(const Program& program,
                                             const EnumOptions& opts) {
  Engine engine = make_engine(program, opts, true);
  std::vector<Interpretation> out;
  for (Word w : detail::collect_models(engine)) {
    out.push_back(engine.to_interpretation(w));
  }
  return out;
}

std::vector<AnswerSet> answer_sets(const Program& program,
                                   const EnumOptions& opts) {
  Engine engine = make_engine(program, opts, true);
  std::vector<Word> models = detail::collect_models(engine);
  std::vector<AnswerSet> out;
  for (Word w : models) {
    if (detail::tstar_lanes(w) != 0) continue;  // not solid
    if (!detail::is_minimal(w, models, engine.lane_mask())) continue;
    out.emplace_back(engine.to_interpretation(w));
  }
  return out;
}

std::vector<AnswerSet> most_preferred(const Program& program,
                                      const EnumOptions& opts) {
  Engine engine = make_engine(program, opts, true);
  std::vector<Word> models = detail::collect_models(engine);
  std::vector<Word> answers;
  for (Word w : models) {
    if (detail::tstar_lanes(w) != 0) continue;
    if (detail::is_minimal(w, models, engine.lane_mask())) answers.push_back(w);
  }
  std::vector<AnswerSet> out;
  for (Word w : answers) {
    Word fw = detail::fstar_lanes(w);
    bool beaten = false;
    for (Word other : answers) {
      Word fo = detail::fstar_lanes(other);
      if (fo != fw && (fo & ~fw) == 0) {  // strict subset of F*-atoms
        beaten = true;
        break;
      }
    }
    if (!beaten) out.emplace_back(engine.to_interpretation(w));
  }
  return out;
}

std::vector<Interpretation> three_valued_models(const Program& program,
                                                const EnumOptions& opts) {
  Engine engine = make_engine(program, opts, true);
  std::vector<Interpretation> out;
  Word w = engine.first_word();
  do {
    if (engine.is_model_pinned(w)) out.push_back(engine.to_interpretation(w));
  } while (engine.advance3(w));
  return out;
}

std::vector<std::set<std::string>> gl_stable_models(const Program& program,
                                                    const EnumOptions& opts) {
  if (!program.is_normal()) throw NotNormalError();
  detail::check_cap(program.atoms().size(), opts.atom_cap);
  const auto& atoms = program.atoms();
  std::size_t n = atoms.size();

  struct MaskRule {
    std::uint32_t head = 0;
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  auto bit_of = [&](const std::string& atom) {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), atom);
    return std::uint32_t(1) << (it - atoms.begin());
  };
  std::vector<MaskRule> rules;
  for (const auto& rule : program.rules()) {
    MaskRule mr;
    mr.head = bit_of(rule.head.front());
    for (const auto& a : rule.body_pos) mr.pos |= bit_of(a);
    for (const auto& a : rule.body_neg) mr.neg |= bit_of(a);
    rules.push_back(mr);
  }

  std::vector<std::set<std::string>> out;
  std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    auto candidate = std::uint32_t(s);
    // Least model of the reduct by the immediate-consequence fixpoint.
    std::uint32_t least = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : rules) {
        if ((r.neg & candidate) != 0) continue;  // dropped by the reduct
        if ((r.pos & least) == r.pos && (least & r.head) == 0) {
          least |= r.head;
          changed = true;
        }
      }
    }
    if (least == candidate) {
      std::set<std::string> stable;
      for (std::size_t i = 0; i < n; ++i) {
        if (candidate >> i & 1u) stable.insert(atoms[i]);
      }
      out.push_back(std::move(stable));
    }
  }
  return out;
}

Interpretation embed_stable_model(const std::set<std::string>& stable,
                                  const std::vector<std::string>& atoms) {
  std::map<std::string, TruthValue> values;
  for (const auto& atom : atoms) {
    values.emplace(atom, stable.count(atom) ? TruthValue::T : TruthValue::F);
  }
  return Interpretation(std::move(values));
}

}  // namespace lpod
