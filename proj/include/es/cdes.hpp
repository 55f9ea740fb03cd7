#ifndef ES_CDES_HPP
#define ES_CDES_HPP

#include <optional>
#include <vector>

#include "es/kernel.hpp"

// Context-dependent event structures. Each event carries entries of
// (modifiers, dependencies) elements; the modifiers observed in the current
// state select which dependency set must be satisfied.

namespace es {

// One (X, Y) element of an entry: X are the modifiers, Y the dependencies.
struct EntryElement {
  EventSet modifiers = 0;
  EventSet dependencies = 0;

  friend bool operator==(const EntryElement&, const EntryElement&) = default;
  friend auto operator<=>(const EntryElement&, const EntryElement&) = default;
};

// An entry Z >> e: a non-empty element set whose modifier sets are pairwise
// distinct, attached to the target event e.
struct CdEntry {
  std::size_t target = 0;
  std::vector<EntryElement> elements;  // sorted, deduplicated

  friend bool operator==(const CdEntry&, const CdEntry&) = default;
  friend auto operator<=>(const CdEntry&, const CdEntry&) = default;
};

class Cdes {
public:
  Cdes(Universe universe, ConflictRelation conflict,
       std::vector<CdEntry> entries);

  const Universe& universe() const { return universe_; }
  const ConflictRelation& conflict() const { return conflict_; }
  const std::vector<CdEntry>& entries() const { return entries_; }

  // Entries targeting the given event.
  std::vector<const CdEntry*> entries_for(std::size_t event) const;
  bool has_entry_for(std::size_t event) const;

private:
  Universe universe_;
  ConflictRelation conflict_;
  std::vector<CdEntry> entries_;
};

// The union of an entry's modifier sets.
EventSet context(const CdEntry& entry);

// Whether `event` can be added to the set `state`. For every entry targeting
// the event there must be an element whose modifiers match the part of the
// entry's context already present and whose dependencies are all present.
// When no element matches that intersection exactly, the maximal modifier
// sets contained in the state decide instead (see the lattice examples:
// "the context {b,c}" still selects the element written for {b} or {c}).
// Events with no entry at all are never enabled.
//
// Preconditions: event declared, event not in state, state within the
// universe; violations raise PreconditionError.
bool enabled(const Cdes& structure, EventSet state, std::size_t event);

// A reachable configuration space: states plus the labelled single-event
// extension edges, rooted at the empty set.
struct LatticeEdge {
  EventSet source = 0;
  std::size_t event = 0;
  EventSet target = 0;

  friend bool operator==(const LatticeEdge&, const LatticeEdge&) = default;
  friend auto operator<=>(const LatticeEdge&, const LatticeEdge&) = default;
};

struct Lattice {
  Universe universe;
  std::vector<EventSet> states;    // sorted
  std::vector<LatticeEdge> edges;  // sorted
  EventSet initial = 0;

  bool has_state(EventSet state) const;
  // States with no incoming edge chain from the initial one, if any.
  std::vector<EventSet> unreachable_states() const;
};

// Breadth-first enumeration of all configurations: starting from the empty
// set, repeatedly add any enabled event that keeps the set conflict free.
Lattice configurations(const Cdes& structure);

// All unordered pairs of distinct events that never share a configuration.
ConflictRelation semantic_conflict(const Cdes& structure);

// Every event occurs in some configuration.
bool is_full(const Cdes& structure);

// Every semantic conflict is declared in the conflict relation.
bool is_faithful(const Cdes& structure);

// Shared helper for the declarative kinds and the builders: assembles a
// lattice from a state predicate (subset enumeration) or from a step
// function (worklist search). Used by `classical` as well.
namespace detail {

// Worklist construction: `step(state, event)` says whether `event` extends
// `state`; conflict-freeness of the extension is checked by the caller's
// predicate as part of `step`.
template <typename StepFn>
Lattice explore(const Universe& universe, StepFn&& step) {
  Lattice lattice;
  lattice.universe = universe;
  lattice.initial = kEmptySet;
  std::vector<EventSet> frontier{kEmptySet};
  lattice.states.push_back(kEmptySet);
  while (!frontier.empty()) {
    std::vector<EventSet> next;
    for (EventSet state : frontier) {
      for (std::size_t e = 0; e < universe.size(); ++e) {
        if (contains(state, e)) continue;
        if (!step(state, e)) continue;
        EventSet extended = with(state, e);
        lattice.edges.push_back({state, e, extended});
        auto it = std::lower_bound(lattice.states.begin(),
                                   lattice.states.end(), extended);
        if (it == lattice.states.end() || *it != extended) {
          lattice.states.insert(it, extended);
          next.push_back(extended);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(lattice.edges.begin(), lattice.edges.end());
  return lattice;
}

}  // namespace detail

}  // namespace es

#endif
