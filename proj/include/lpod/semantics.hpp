#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "lpod/interpretation.hpp"
#include "lpod/program.hpp"

namespace lpod {

/// Guard for the exhaustive engines. Enumeration refuses programs whose atom
/// count exceeds `atom_cap`; the packed representation additionally imposes a
/// hard limit of 31 atoms. Worker count comes from LPOD_LAB_THREADS.
struct EnumOptions {
  std::size_t atom_cap = 12;
};

/// A solid minimal model together with its set of F*-valued atoms, the key
/// the preference comparison runs on.
struct AnswerSet {
  Interpretation interpretation;
  std::set<std::string> fstar_set;

  explicit AnswerSet(Interpretation interp)
      : interpretation(std::move(interp)),
        fstar_set(interpretation.fstar_atoms()) {}

  bool operator==(const AnswerSet& other) const {
    return interpretation == other.interpretation;
  }
};

/// All models of the program over its own atoms, in increasing packed-value
/// order (atoms indexed in sorted name order, F=0 < F*=1 < T*=2 < T=3).
std::vector<Interpretation> enumerate_models(const Program& program,
                                             const EnumOptions& opts = {});

/// Models that are minimal among all models of the program in the pointwise
/// minimization order, filtered to the solid ones.
std::vector<AnswerSet> answer_sets(const Program& program,
                                   const EnumOptions& opts = {});

/// Answer sets whose F*-set is not a strict superset of another answer set's.
std::vector<AnswerSet> most_preferred(const Program& program,
                                      const EnumOptions& opts = {});

/// Models assigning only F, T* and T, enumerated in increasing packed order.
std::vector<Interpretation> three_valued_models(const Program& program,
                                                const EnumOptions& opts = {});

/// Classical stable models of a normal program, computed via the reduct and
/// an immediate-consequence fixpoint. Each stable model is returned as the
/// set of true atoms; results are in increasing order of the subset encoding
/// (atoms indexed in sorted name order). Throws NotNormalError when some rule
/// has more than one head atom.
std::vector<std::set<std::string>> gl_stable_models(const Program& program,
                                                    const EnumOptions& opts = {});

/// The two-valued embedding of a stable model: every atom of `atoms` maps to
/// T when in `stable`, F otherwise.
Interpretation embed_stable_model(const std::set<std::string>& stable,
                                  const std::vector<std::string>& atoms);

}  // namespace lpod
