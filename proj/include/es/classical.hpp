#ifndef ES_CLASSICAL_HPP
#define ES_CLASSICAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "es/cdes.hpp"
#include "es/kernel.hpp"

// The classical event-structure kinds: prime, flow, relaxed prime, dynamic
// causality, inhibitor, and resolvable-conflict event structures, each with
// its validation rules and configuration semantics.

namespace es {

// A binary relation over a universe, one successor mask per event.
// rel[a] bit b set means (a, b) is in the relation.
using BinaryRelation = std::vector<EventSet>;

BinaryRelation reflexive_transitive_closure(BinaryRelation rel);
BinaryRelation transitive_closure(BinaryRelation rel);

// Prime event structure: a partial order of causes plus an inherited,
// irreflexive conflict. Construction accepts the generators of the order
// and closes them reflexively and transitively before validating.
class Pes {
public:
  Pes(Universe universe, const std::vector<std::pair<std::size_t, std::size_t>>&
                             causality_pairs,
      ConflictRelation conflict);

  const Universe& universe() const { return universe_; }
  const ConflictRelation& conflict() const { return conflict_; }
  // The full (reflexive, transitive) causality relation.
  const BinaryRelation& leq() const { return leq_; }

  bool le(std::size_t a, std::size_t b) const {
    return contains(leq_[a], b);
  }
  // The causes of `event`, itself included.
  EventSet cone(std::size_t event) const;

private:
  Universe universe_;
  BinaryRelation leq_;
  ConflictRelation conflict_;
};

Lattice pes_configurations(const Pes& structure);

// Flow event structure: an irreflexive flow relation and a merely symmetric
// conflict, so self-conflicting events are representable (they just never
// occur). Configurations are defined declaratively over subsets.
class Fes {
public:
  Fes(Universe universe,
      const std::vector<std::pair<std::size_t, std::size_t>>& flow_pairs,
      ConflictRelation conflict);

  const Universe& universe() const { return universe_; }
  const ConflictRelation& conflict() const { return conflict_; }
  const BinaryRelation& flow() const { return flow_; }

  // Flow predecessors of `event`.
  EventSet preceding(std::size_t event) const;

private:
  Universe universe_;
  BinaryRelation flow_;
  ConflictRelation conflict_;
};

struct FesConfigurationsResult {
  Lattice lattice;
  // Configurations that cannot be reached from the empty one by single-event
  // steps, violating the standing reachability assumption. Expected to stay
  // empty for finite structures; reported rather than assumed.
  std::vector<EventSet> unreachable;
};

FesConfigurationsResult fes_configurations_checked(const Fes& structure);
Lattice fes_configurations(const Fes& structure);

// Relaxed prime event structure: an enabling relation whose immediate causes
// must be acyclic per event, plus an irreflexive symmetric conflict.
class Rpes {
public:
  Rpes(Universe universe,
       const std::vector<std::pair<std::size_t, std::size_t>>& enabling_pairs,
       ConflictRelation conflict);

  const Universe& universe() const { return universe_; }
  const ConflictRelation& conflict() const { return conflict_; }
  const BinaryRelation& enabling() const { return enabling_; }

  // Immediate causes of `event`: all e' with e' -> event.
  EventSet immediate_causes(std::size_t event) const;

private:
  Universe universe_;
  BinaryRelation enabling_;  // enabling_[a] has bit b set when a -> b
  ConflictRelation conflict_;
};

Lattice rpes_configurations(const Rpes& structure);

// The reflexive-transitive enabling restricted to a configuration is a
// partial order; this checks antisymmetry of that restriction.
bool rpes_po_check(const Rpes& structure, EventSet configuration);

// One dynamic-causality triple, named fields to keep the three roles apart:
// the modifier drops (shrink) or adds (grow) the contribution as a cause of
// the target.
struct CausalityTriple {
  std::size_t modifier = 0;
  std::size_t target = 0;
  std::size_t contribution = 0;

  friend bool operator==(const CausalityTriple&, const CausalityTriple&) =
      default;
  friend auto operator<=>(const CausalityTriple&, const CausalityTriple&) =
      default;
};

// Dynamic causality event structure: a relaxed prime structure whose causes
// can shrink or grow as modifiers occur. Restricted to the single-state
// discipline: per (contribution, target) pair, shrinking and growing
// modifiers are mutually exclusive (conditions 1-4, checked on construction).
class Dces {
public:
  Dces(Rpes base, std::vector<CausalityTriple> shrink,
       std::vector<CausalityTriple> grow);

  const Rpes& base() const { return base_; }
  const Universe& universe() const { return base_.universe(); }
  const std::vector<CausalityTriple>& shrink() const { return shrink_; }
  const std::vector<CausalityTriple>& grow() const { return grow_; }

  bool is_growing_only() const { return shrink_.empty(); }

  // Modifiers registered for `target` in the shrinking / growing relation.
  EventSet shrink_modifiers(std::size_t target) const;
  EventSet grow_modifiers(std::size_t target) const;

  // Contributions dropped / added for `target` by one `modifier`.
  EventSet drop(std::size_t modifier, std::size_t target) const;
  EventSet add(std::size_t modifier, std::size_t target) const;

private:
  Rpes base_;
  std::vector<CausalityTriple> shrink_;
  std::vector<CausalityTriple> grow_;
};

// Dropped and added causes of `event` relative to the history `happened`.
struct DcesAux {
  EventSet dropped = 0;
  EventSet added = 0;
};

DcesAux dces_aux(const Dces& structure, EventSet happened, std::size_t event);

Lattice dces_configurations(const Dces& structure);

// One inhibitor triple a |- e ~> A: when the (at most one) event of `inhibitor`
// has occurred, some event of `escape` must have occurred too for `target`
// to be addable.
struct InhibitorTriple {
  EventSet inhibitor = 0;  // at most one event
  std::size_t target = 0;
  EventSet escape = 0;

  friend bool operator==(const InhibitorTriple&, const InhibitorTriple&) =
      default;
  friend auto operator<=>(const InhibitorTriple&, const InhibitorTriple&) =
      default;
};

class Ies {
public:
  Ies(Universe universe, std::vector<InhibitorTriple> triples);

  const Universe& universe() const { return universe_; }
  const std::vector<InhibitorTriple>& triples() const { return triples_; }

  // The conflict induced by paired empty-escape triples: e # e' iff both
  // ({e'}, e, {}) and ({e}, e', {}) are present.
  ConflictRelation induced_conflict() const;

private:
  Universe universe_;
  std::vector<InhibitorTriple> triples_;
};

Lattice ies_configurations(const Ies& structure);

// Event structure with resolvable conflicts: an unconstrained enabling
// relation between subsets.
class Rces {
public:
  Rces(Universe universe,
       std::vector<std::pair<EventSet, EventSet>> enabling);

  const Universe& universe() const { return universe_; }
  const std::vector<std::pair<EventSet, EventSet>>& enabling() const {
    return enabling_;
  }

  bool entails(EventSet premise, EventSet conclusion) const;

private:
  Universe universe_;
  std::vector<std::pair<EventSet, EventSet>> enabling_;  // sorted
};

// The single-event transition relation: from <= to, at most one event added,
// and every subset of `to` is enabled by some subset of `from`. Exponential
// in |to|; fine at desk scale.
bool rces_step(const Rces& structure, EventSet from, EventSet to);

Lattice rces_configurations(const Rces& structure);

}  // namespace es

#endif
