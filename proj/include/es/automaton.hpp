#ifndef ES_AUTOMATON_HPP
#define ES_AUTOMATON_HPP

#include <utility>
#include <variant>
#include <vector>

#include "es/cdes.hpp"
#include "es/classical.hpp"
#include "es/kernel.hpp"

// Event automata: states are event sets, transitions grow strictly, and
// equality of the automata derived from two structures decides their
// equivalence.

namespace es {

class EventAutomaton {
public:
  EventAutomaton(Universe universe, std::vector<EventSet> states,
                 std::vector<std::pair<EventSet, EventSet>> transitions,
                 EventSet initial);

  const Universe& universe() const { return universe_; }
  const std::vector<EventSet>& states() const { return states_; }
  const std::vector<std::pair<EventSet, EventSet>>& transitions() const {
    return transitions_;
  }
  EventSet initial() const { return initial_; }

  bool has_state(EventSet state) const;
  bool has_transition(EventSet from, EventSet to) const;

  bool operator==(const EventAutomaton& other) const = default;

private:
  Universe universe_;
  std::vector<EventSet> states_;                            // sorted
  std::vector<std::pair<EventSet, EventSet>> transitions_;  // sorted
  EventSet initial_ = 0;
};

// Every event can be added to some finite state by a single transition.
bool is_simple(const EventAutomaton& automaton);

// The states one transition away from `state`; throws on unknown states.
std::vector<EventSet> reach(const EventAutomaton& automaton, EventSet state);

// The least fixed point of the reach operator, seeded with the initial
// state, covers every state.
bool is_complete(const EventAutomaton& automaton);

// Transition labels only matter for display; the automaton drops them.
EventAutomaton from_lattice(const Lattice& lattice);

EventAutomaton from_structure(const Cdes& structure);
EventAutomaton from_structure(const Pes& structure);
EventAutomaton from_structure(const Fes& structure);
EventAutomaton from_structure(const Rpes& structure);
EventAutomaton from_structure(const Dces& structure);
EventAutomaton from_structure(const Ies& structure);
EventAutomaton from_structure(const Rces& structure);

// Literal component-wise equality: same events, states, transitions and
// initial state. Event identity matters; no isomorphism is attempted.
bool equivalent(const EventAutomaton& a, const EventAutomaton& b);

// First point where two automata disagree, for diagnostics.
struct AutomatonMismatch {
  enum class Kind { Events, State, Transition, Initial } kind;
  std::string description;
};
std::optional<AutomatonMismatch> first_mismatch(const EventAutomaton& a,
                                                const EventAutomaton& b);

}  // namespace es

#endif
