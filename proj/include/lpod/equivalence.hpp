#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpod/interpretation.hpp"
#include "lpod/program.hpp"
#include "lpod/semantics.hpp"

namespace lpod {

enum class EqMode { most_preferred, all_answer_sets };
enum class Separated { first_only, second_only };
enum class ContextCase { case1, case2 };

std::string_view to_string(EqMode mode);
std::string_view to_string(Separated separated);
std::string_view to_string(ContextCase context_case);

/// Outcome of an equivalence decision. When the programs are not equivalent,
/// `witness` is a model of exactly the program named by `separated`, and the
/// strong-equivalence deciders additionally attach a context program plus the
/// interpretation that behaves differently under it.
struct EquivalenceVerdict {
  bool equivalent = true;
  std::optional<EqMode> mode;
  std::optional<Interpretation> witness;
  std::optional<Separated> separated;
  std::optional<Program> context;
  std::optional<ContextCase> context_case;
  std::optional<Interpretation> discriminating;
};

/// Everything the context construction produces: the fresh-atom scaffold, the
/// context program, and the interpretation that separates the two unions.
/// `swapped` records that the inputs were normalized so the witness models
/// the first program.
struct WitnessContext {
  Program context;
  Interpretation m_prime;
  ContextCase context_case = ContextCase::case1;
  std::optional<Interpretation> m_doubleprime;
  std::vector<std::string> t_atoms;
  std::vector<std::string> f_atoms;
  std::optional<std::string> d_atom;
  bool swapped = false;
};

/// Same model sets over the union alphabet, by exhaustive scan. On failure
/// the witness is the first disagreeing interpretation in enumeration order.
EquivalenceVerdict logically_equivalent(const Program& p1, const Program& p2,
                                        const EnumOptions& opts = {});

/// Builds the discriminating interpretation and context program for a witness
/// that models exactly one of the two programs, then machine-checks the
/// separation:
///   case 1 — the discriminating interpretation is a most-preferred answer
///            set of the modeled program's union and not a model of the
///            other's union;
///   case 2 — it is a most-preferred answer set of the other program's union
///            and not a most-preferred answer set of the modeled program's.
/// Throws PreconditionError when the witness models both or neither program,
/// and VerificationError if the constructed context fails its check.
WitnessContext build_witness_context(const Program& p1, const Program& p2,
                                     const Interpretation& witness,
                                     const EnumOptions& opts = {});

/// Strong equivalence in either sense; both reduce to logical equivalence,
/// so the mode is recorded in the verdict but does not change the decision.
/// Non-equivalent verdicts carry the verified witness context.
EquivalenceVerdict strong_eq(const Program& p1, const Program& p2, EqMode mode,
                             const EnumOptions& opts = {});

/// Strong equivalence of normal programs under the standard stable-model
/// semantics: equivalent exactly when the three-valued model sets coincide.
/// Non-equivalent verdicts carry a context built from the two-valued collapse
/// of the witness, verified against the stable-model engine.
EquivalenceVerdict normal_strong_eq(const Program& p1, const Program& p2,
                                    const EnumOptions& opts = {});

}  // namespace lpod
