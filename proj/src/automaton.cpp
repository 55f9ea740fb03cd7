#include "es/automaton.hpp"

#include <algorithm>

namespace es {

EventAutomaton::EventAutomaton(
    Universe universe, std::vector<EventSet> states,
    std::vector<std::pair<EventSet, EventSet>> transitions, EventSet initial)
    : universe_(std::move(universe)), states_(std::move(states)),
      transitions_(std::move(transitions)), initial_(initial) {
  std::sort(states_.begin(), states_.end());
  states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                     transitions_.end());
  const EventSet all = universe_.all();
  for (EventSet s : states_)
    if (!subset(s, all))
      throw ValidationError("state-scope", "state outside universe");
  for (const auto& [from, to] : transitions_) {
    if (!has_state(from) || !has_state(to))
      throw ValidationError("transition-scope",
                            "transition endpoint is not a state");
    if (!proper_subset(from, to))
      throw ValidationError("transition-growth",
                            "transition from " + universe_.format_set(from) +
                                " to " + universe_.format_set(to) +
                                " does not grow the state");
  }
  if (!has_state(initial_))
    throw ValidationError("initial-state", "initial state not among states");
}

bool EventAutomaton::has_state(EventSet state) const {
  return std::binary_search(states_.begin(), states_.end(), state);
}

bool EventAutomaton::has_transition(EventSet from, EventSet to) const {
  return std::binary_search(transitions_.begin(), transitions_.end(),
                            std::make_pair(from, to));
}

bool is_simple(const EventAutomaton& automaton) {
  for (std::size_t e = 0; e < automaton.universe().size(); ++e) {
    bool witnessed = std::any_of(
        automaton.states().begin(), automaton.states().end(), [&](EventSet s) {
          return !contains(s, e) && automaton.has_state(with(s, e)) &&
                 automaton.has_transition(s, with(s, e));
        });
    if (!witnessed) return false;
  }
  return true;
}

std::vector<EventSet> reach(const EventAutomaton& automaton, EventSet state) {
  if (!automaton.has_state(state))
    throw PreconditionError("reach: unknown state " +
                            automaton.universe().format_set(state));
  std::vector<EventSet> out;
  for (const auto& [from, to] : automaton.transitions())
    if (from == state) out.push_back(to);
  return out;
}

bool is_complete(const EventAutomaton& automaton) {
  // Least fixed point of the reach operator extended to sets of states:
  // iterates form an increasing chain, so at most |states| rounds.
  std::vector<EventSet> fixed{automaton.initial()};
  for (;;) {
    std::vector<EventSet> grown = fixed;
    for (EventSet s : fixed)
      for (EventSet t : reach(automaton, s)) {
        auto it = std::lower_bound(grown.begin(), grown.end(), t);
        if (it == grown.end() || *it != t) grown.insert(it, t);
      }
    if (grown == fixed) break;
    fixed = std::move(grown);
  }
  return fixed == automaton.states();
}

EventAutomaton from_lattice(const Lattice& lattice) {
  std::vector<std::pair<EventSet, EventSet>> transitions;
  transitions.reserve(lattice.edges.size());
  for (const auto& edge : lattice.edges)
    transitions.emplace_back(edge.source, edge.target);
  return EventAutomaton(lattice.universe, lattice.states,
                        std::move(transitions), lattice.initial);
}

EventAutomaton from_structure(const Cdes& s) {
  return from_lattice(configurations(s));
}
EventAutomaton from_structure(const Pes& s) {
  return from_lattice(pes_configurations(s));
}
EventAutomaton from_structure(const Fes& s) {
  return from_lattice(fes_configurations(s));
}
EventAutomaton from_structure(const Rpes& s) {
  return from_lattice(rpes_configurations(s));
}
EventAutomaton from_structure(const Dces& s) {
  return from_lattice(dces_configurations(s));
}
EventAutomaton from_structure(const Ies& s) {
  return from_lattice(ies_configurations(s));
}
EventAutomaton from_structure(const Rces& s) {
  return from_lattice(rces_configurations(s));
}

bool equivalent(const EventAutomaton& a, const EventAutomaton& b) {
  return a == b;
}

std::optional<AutomatonMismatch> first_mismatch(const EventAutomaton& a,
                                                const EventAutomaton& b) {
  using Kind = AutomatonMismatch::Kind;
  if (!(a.universe() == b.universe()))
    return AutomatonMismatch{Kind::Events, "event sets differ"};
  const Universe& u = a.universe();
  for (EventSet s : a.states())
    if (!b.has_state(s))
      return AutomatonMismatch{Kind::State,
                               "state " + u.format_set(s) + " only on the left"};
  for (EventSet s : b.states())
    if (!a.has_state(s))
      return AutomatonMismatch{Kind::State,
                               "state " + u.format_set(s) + " only on the right"};
  for (const auto& [from, to] : a.transitions())
    if (!b.has_transition(from, to))
      return AutomatonMismatch{Kind::Transition,
                               "transition " + u.format_set(from) + " -> " +
                                   u.format_set(to) + " only on the left"};
  for (const auto& [from, to] : b.transitions())
    if (!a.has_transition(from, to))
      return AutomatonMismatch{Kind::Transition,
                               "transition " + u.format_set(from) + " -> " +
                                   u.format_set(to) + " only on the right"};
  if (a.initial() != b.initial())
    return AutomatonMismatch{Kind::Initial, "initial states differ"};
  return std::nullopt;
}

}  // namespace es
