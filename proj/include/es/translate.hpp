#ifndef ES_TRANSLATE_HPP
#define ES_TRANSLATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "es/automaton.hpp"
#include "es/cdes.hpp"
#include "es/classical.hpp"

// Translations between the event-structure kinds: the canonical route
// through event automata, the direct per-kind constructions into
// context-dependent structures, and the growing-causality to inhibitor
// embedding. Every route preserves the configuration lattice, and that claim
// is verified rather than assumed.

namespace es {

// Raised when a translation's hypothesis fails (the input is valid but not
// in the translation's domain).
class HypothesisError : public std::runtime_error {
public:
  HypothesisError(std::string name, std::string detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

struct TranslationReport {
  std::string source_kind;
  bool equivalence_verified = false;
  // A mismatching state or transition, present exactly when verification
  // failed.
  std::optional<std::string> witness;
};

TranslationReport verify_translation(const EventAutomaton& source_automaton,
                                     const EventAutomaton& result_automaton,
                                     std::string source_kind);

// States from which `event` can be added by a transition.
std::vector<EventSet> ctr(const EventAutomaton& automaton, std::size_t event);

// Finite states whose extension by `event` leaves the state space.
std::vector<EventSet> rtc(const EventAutomaton& automaton, std::size_t event);

// Synthesizes a context-dependent structure from an event automaton: the
// conflict is the semantic one (pairs never sharing a state), and each event
// gets one entry listing its allowing contexts with no dependencies and its
// negative contexts with the event itself as an unsatisfiable dependency.
// Requires the automaton to be simple, complete, and to mention every event
// in some state (errors NotSimple / NotComplete / DanglingEvent).
Cdes ea_to_cdes(const EventAutomaton& automaton);

// Per event: a single element demanding the full set of proper causes.
Cdes pes_to_cdes(const Pes& structure);

// Per event: a single element demanding the immediate causes.
Cdes rpes_to_cdes(const Rpes& structure);

// Maximal conflict-free subsets of the flow predecessors of `event`.
std::vector<EventSet> maxfl(const Fes& structure, std::size_t event);

// Per event: one element per maximal conflict-free predecessor set, used as
// context. Requires a full and faithful input (errors NotFull / NotFaithful,
// both computed from the configurations, never trusted).
Cdes fes_to_cdes(const Fes& structure);

// Per event: one element per conflict-free subset of its modifiers, carrying
// the causes as adjusted by exactly those modifiers.
Cdes dces_to_cdes(const Dces& structure);

// Per triple: an entry blocking the target while the inhibitor is present
// without an escape. The conflict is the induced one.
Cdes ies_to_cdes(const Ies& structure);

// Growing-causality structures (dynamic causality with no shrinking part)
// embed into inhibitor structures (error NotGes when shrink is non-empty).
Ies ges_to_ies(const Dces& structure);

// The canonical route: configuration automaton, then automaton synthesis.
// The report records whether the round trip reproduced the source lattice.
struct CdesWithReport {
  Cdes result;
  TranslationReport report;
};

CdesWithReport any_to_cdes(const EventAutomaton& automaton);
CdesWithReport any_to_cdes(const Cdes& structure);
CdesWithReport any_to_cdes(const Pes& structure);
CdesWithReport any_to_cdes(const Fes& structure);
CdesWithReport any_to_cdes(const Rpes& structure);
CdesWithReport any_to_cdes(const Dces& structure);
CdesWithReport any_to_cdes(const Ies& structure);
CdesWithReport any_to_cdes(const Rces& structure);

}  // namespace es

#endif
