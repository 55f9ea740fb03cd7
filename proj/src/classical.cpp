#include "es/classical.hpp"

#include <algorithm>

namespace es {

namespace {

// All subsets of the universe that satisfy `predicate`, in sorted order,
// with the single-event-difference edges between them. The kinds defined
// declaratively (prime, flow, relaxed prime) use this. Exponential by
// nature; capped at 24 events.
constexpr std::size_t kSubsetEnumerationLimit = 24;

template <typename Pred>
Lattice filter_subsets(const Universe& universe, Pred&& predicate) {
  if (universe.size() > kSubsetEnumerationLimit)
    throw PreconditionError(
        "subset enumeration limited to 24 events, got " +
        std::to_string(universe.size()));
  Lattice lattice;
  lattice.universe = universe;
  lattice.initial = kEmptySet;
  const EventSet all = universe.all();
  for (EventSet s = 0;; ++s) {
    if (predicate(s)) lattice.states.push_back(s);
    if (s == all) break;
  }
  for (EventSet s : lattice.states) {
    for (std::size_t e = 0; e < universe.size(); ++e) {
      if (contains(s, e)) continue;
      EventSet t = with(s, e);
      if (std::binary_search(lattice.states.begin(), lattice.states.end(), t))
        lattice.edges.push_back({s, e, t});
    }
  }
  std::sort(lattice.edges.begin(), lattice.edges.end());
  return lattice;
}

void check_pairs_in_range(
    const Universe& universe,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    const char* rule) {
  for (auto [a, b] : pairs)
    if (a >= universe.size() || b >= universe.size())
      throw ValidationError(rule, "event index outside universe");
}

}  // namespace

BinaryRelation transitive_closure(BinaryRelation rel) {
  const std::size_t n = rel.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (contains(rel[a], k)) rel[a] |= rel[k];
  return rel;
}

BinaryRelation reflexive_transitive_closure(BinaryRelation rel) {
  rel = transitive_closure(std::move(rel));
  for (std::size_t a = 0; a < rel.size(); ++a) rel[a] = with(rel[a], a);
  return rel;
}

// ---------------------------------------------------------------------------
// Prime event structures

Pes::Pes(Universe universe,
         const std::vector<std::pair<std::size_t, std::size_t>>&
             causality_pairs,
         ConflictRelation conflict)
    : universe_(std::move(universe)), conflict_(std::move(conflict)) {
  check_pairs_in_range(universe_, causality_pairs, "causality-scope");
  if (conflict_.universe_size() != universe_.size())
    throw ValidationError("conflict-scope", "conflict sized for another universe");
  if (conflict_.allows_reflexive())
    throw ValidationError("conflict-irreflexive",
                          "prime structures need an irreflexive conflict");

  BinaryRelation generators(universe_.size(), 0);
  for (auto [a, b] : causality_pairs) generators[a] = with(generators[a], b);
  leq_ = reflexive_transitive_closure(std::move(generators));

  // Antisymmetry: a <= b <= a forces a == b.
  for (std::size_t a = 0; a < universe_.size(); ++a)
    for (std::size_t b : members(leq_[a]))
      if (b != a && contains(leq_[b], a))
        throw ValidationError("causality-partial-order",
                              "cycle through '" + universe_.name(a) + "' and '" +
                                  universe_.name(b) + "'");

  // Finite universe makes every cone finite; keep the assertion anyway.
  for (std::size_t e = 0; e < universe_.size(); ++e)
    if (set_size(cone(e)) > universe_.size())
      throw ValidationError("finite-cones", universe_.name(e));

  // Conflict inheritance (e # e' <= e'' implies e # e'') and # disjoint
  // from <=.
  for (auto [a, b] : conflict_.pairs()) {
    if (le(a, b) || le(b, a))
      throw ValidationError("conflict-causality-disjoint",
                            "'" + universe_.name(a) + "' and '" +
                                universe_.name(b) + "' are ordered and in conflict");
    for (std::size_t c : members(leq_[b]))
      if (c != a && !conflict_.in_conflict(a, c))
        throw ValidationError("conflict-inheritance",
                              "'" + universe_.name(a) + "' # '" +
                                  universe_.name(b) + "' <= '" +
                                  universe_.name(c) + "' but no conflict with '" +
                                  universe_.name(c) + "'");
  }
}

EventSet Pes::cone(std::size_t event) const {
  EventSet causes = 0;
  for (std::size_t a = 0; a < universe_.size(); ++a)
    if (contains(leq_[a], event)) causes = with(causes, a);
  return causes;
}

Lattice pes_configurations(const Pes& structure) {
  const auto& conflict = structure.conflict();
  std::vector<EventSet> cones(structure.universe().size());
  for (std::size_t e = 0; e < cones.size(); ++e) cones[e] = structure.cone(e);
  return filter_subsets(structure.universe(), [&](EventSet s) {
    if (!is_conflict_free(s, conflict)) return false;
    for (std::size_t e : members(s))
      if (!subset(cones[e], s)) return false;
    return true;
  });
}

// ---------------------------------------------------------------------------
// Flow event structures

Fes::Fes(Universe universe,
         const std::vector<std::pair<std::size_t, std::size_t>>& flow_pairs,
         ConflictRelation conflict)
    : universe_(std::move(universe)), flow_(universe_.size(), 0),
      conflict_(std::move(conflict)) {
  check_pairs_in_range(universe_, flow_pairs, "flow-scope");
  if (conflict_.universe_size() != universe_.size())
    throw ValidationError("conflict-scope", "conflict sized for another universe");
  for (auto [a, b] : flow_pairs) {
    if (a == b)
      throw ValidationError("flow-irreflexive",
                            "'" + universe_.name(a) + "' flows into itself");
    flow_[a] = with(flow_[a], b);
  }
}

EventSet Fes::preceding(std::size_t event) const {
  EventSet preds = 0;
  for (std::size_t a = 0; a < universe_.size(); ++a)
    if (contains(flow_[a], event)) preds = with(preds, a);
  return preds;
}

FesConfigurationsResult fes_configurations_checked(const Fes& structure) {
  const auto& conflict = structure.conflict();
  BinaryRelation reach = reflexive_transitive_closure(structure.flow());
  std::vector<EventSet> preds(structure.universe().size());
  for (std::size_t e = 0; e < preds.size(); ++e)
    preds[e] = structure.preceding(e);

  FesConfigurationsResult result;
  result.lattice = filter_subsets(structure.universe(), [&](EventSet s) {
    if (!is_conflict_free(s, conflict)) return false;
    // Every flow predecessor is present or overridden by a conflicting
    // predecessor that is.
    for (std::size_t e : members(s)) {
      for (std::size_t p : members(preds[e])) {
        if (contains(s, p)) continue;
        EventSet overriding = preds[e] & s & conflict.neighbours(p);
        if (overriding == 0) return false;
      }
    }
    // The reflexive-transitive flow restricted to s is a partial order.
    for (std::size_t a : members(s))
      for (std::size_t b : members(reach[a] & s))
        if (b != a && contains(reach[b], a)) return false;
    return true;
  });
  result.unreachable = result.lattice.unreachable_states();
  return result;
}

Lattice fes_configurations(const Fes& structure) {
  return fes_configurations_checked(structure).lattice;
}

// ---------------------------------------------------------------------------
// Relaxed prime event structures

Rpes::Rpes(Universe universe,
           const std::vector<std::pair<std::size_t, std::size_t>>&
               enabling_pairs,
           ConflictRelation conflict)
    : universe_(std::move(universe)), enabling_(universe_.size(), 0),
      conflict_(std::move(conflict)) {
  check_pairs_in_range(universe_, enabling_pairs, "enabling-scope");
  if (conflict_.universe_size() != universe_.size())
    throw ValidationError("conflict-scope", "conflict sized for another universe");
  if (conflict_.allows_reflexive())
    throw ValidationError("conflict-irreflexive",
                          "relaxed prime structures need an irreflexive conflict");
  for (auto [a, b] : enabling_pairs) enabling_[a] = with(enabling_[a], b);

  BinaryRelation plus = transitive_closure(enabling_);
  for (std::size_t e = 0; e < universe_.size(); ++e)
    for (std::size_t c : members(immediate_causes(e)))
      if (contains(plus[c], c))
        throw ValidationError("immediate-causes-acyclic",
                              "cause '" + universe_.name(c) + "' of '" +
                                  universe_.name(e) + "' lies on an enabling cycle");
}

EventSet Rpes::immediate_causes(std::size_t event) const {
  EventSet causes = 0;
  for (std::size_t a = 0; a < universe_.size(); ++a)
    if (contains(enabling_[a], event)) causes = with(causes, a);
  return causes;
}

Lattice rpes_configurations(const Rpes& structure) {
  const auto& conflict = structure.conflict();
  std::vector<EventSet> causes(structure.universe().size());
  for (std::size_t e = 0; e < causes.size(); ++e)
    causes[e] = structure.immediate_causes(e);
  return filter_subsets(structure.universe(), [&](EventSet s) {
    if (!is_conflict_free(s, conflict)) return false;
    for (std::size_t e : members(s))
      if (!subset(causes[e], s)) return false;
    return true;
  });
}

bool rpes_po_check(const Rpes& structure, EventSet configuration) {
  BinaryRelation star = reflexive_transitive_closure(structure.enabling());
  for (std::size_t a : members(configuration))
    for (std::size_t b : members(star[a] & configuration))
      if (b != a && contains(star[b], a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Dynamic causality event structures

Dces::Dces(Rpes base, std::vector<CausalityTriple> shrink,
           std::vector<CausalityTriple> grow)
    : base_(std::move(base)), shrink_(std::move(shrink)),
      grow_(std::move(grow)) {
  const Universe& u = base_.universe();
  auto check_scope = [&](const CausalityTriple& t, const char* rule) {
    if (t.modifier >= u.size() || t.target >= u.size() ||
        t.contribution >= u.size())
      throw ValidationError(rule, "event index outside universe");
    if (t.modifier == t.target || t.modifier == t.contribution)
      throw ValidationError(rule, "modifier '" + u.name(t.modifier) +
                                      "' coincides with target or contribution");
  };
  for (const auto& t : shrink_) check_scope(t, "shrink-triple");
  for (const auto& t : grow_) check_scope(t, "grow-triple");
  std::sort(shrink_.begin(), shrink_.end());
  shrink_.erase(std::unique(shrink_.begin(), shrink_.end()), shrink_.end());
  std::sort(grow_.begin(), grow_.end());
  grow_.erase(std::unique(grow_.begin(), grow_.end()), grow_.end());

  auto grows_pair = [&](std::size_t contribution, std::size_t target) {
    return std::any_of(grow_.begin(), grow_.end(), [&](const CausalityTriple& g) {
      return g.contribution == contribution && g.target == target;
    });
  };
  auto shrinks_pair = [&](std::size_t contribution, std::size_t target) {
    return std::any_of(shrink_.begin(), shrink_.end(),
                       [&](const CausalityTriple& s) {
                         return s.contribution == contribution &&
                                s.target == target;
                       });
  };

  // Condition 1: a dropped cause must be an enabling, unless some grow
  // triple introduces the same pair.
  for (const auto& t : shrink_) {
    if (!grows_pair(t.contribution, t.target) &&
        !contains(base_.enabling()[t.contribution], t.target))
      throw ValidationError("condition 1",
                            "shrink of '" + u.name(t.contribution) + "' for '" +
                                u.name(t.target) + "' without the enabling");
  }
  // Condition 2: an added cause must be absent from the enabling, unless
  // some shrink triple removes the same pair.
  for (const auto& t : grow_) {
    if (!shrinks_pair(t.contribution, t.target) &&
        contains(base_.enabling()[t.contribution], t.target))
      throw ValidationError("condition 2",
                            "grow of '" + u.name(t.contribution) + "' for '" +
                                u.name(t.target) + "' duplicates the enabling");
  }
  // Condition 3: the same modifier cannot both add and drop one pair.
  for (const auto& t : grow_) {
    if (std::binary_search(shrink_.begin(), shrink_.end(), t))
      throw ValidationError("condition 3",
                            "modifier '" + u.name(t.modifier) +
                                "' both adds and drops '" +
                                u.name(t.contribution) + "' for '" +
                                u.name(t.target) + "'");
  }
  // Condition 4 (single state): no (contribution, target) pair may have both
  // a shrinking and a growing modifier.
  for (const auto& t : shrink_) {
    if (grows_pair(t.contribution, t.target))
      throw ValidationError("condition 4",
                            "pair ('" + u.name(t.contribution) + "', '" +
                                u.name(t.target) +
                                "') is both shrinkable and growable");
  }
}

EventSet Dces::shrink_modifiers(std::size_t target) const {
  EventSet mods = 0;
  for (const auto& t : shrink_)
    if (t.target == target) mods = with(mods, t.modifier);
  return mods;
}

EventSet Dces::grow_modifiers(std::size_t target) const {
  EventSet mods = 0;
  for (const auto& t : grow_)
    if (t.target == target) mods = with(mods, t.modifier);
  return mods;
}

EventSet Dces::drop(std::size_t modifier, std::size_t target) const {
  EventSet out = 0;
  for (const auto& t : shrink_)
    if (t.modifier == modifier && t.target == target)
      out = with(out, t.contribution);
  return out;
}

EventSet Dces::add(std::size_t modifier, std::size_t target) const {
  EventSet out = 0;
  for (const auto& t : grow_)
    if (t.modifier == modifier && t.target == target)
      out = with(out, t.contribution);
  return out;
}

DcesAux dces_aux(const Dces& structure, EventSet happened, std::size_t event) {
  if (event >= structure.universe().size())
    throw PreconditionError("dces_aux: event outside universe");
  DcesAux aux;
  for (std::size_t m : members(happened & structure.shrink_modifiers(event)))
    aux.dropped |= structure.drop(m, event);
  for (std::size_t m : members(happened & structure.grow_modifiers(event)))
    aux.added |= structure.add(m, event);
  return aux;
}

Lattice dces_configurations(const Dces& structure) {
  const auto& conflict = structure.base().conflict();
  return detail::explore(structure.universe(), [&](EventSet state,
                                                   std::size_t event) {
    DcesAux aux = dces_aux(structure, state, event);
    EventSet required =
        (structure.base().immediate_causes(event) | aux.added) & ~aux.dropped;
    return subset(required, state) &&
           is_conflict_free(with(state, event), conflict);
  });
}

// ---------------------------------------------------------------------------
// Inhibitor event structures

Ies::Ies(Universe universe, std::vector<InhibitorTriple> triples)
    : universe_(std::move(universe)), triples_(std::move(triples)) {
  const EventSet all = universe_.all();
  for (const auto& t : triples_) {
    if (t.target >= universe_.size() || !subset(t.inhibitor, all) ||
        !subset(t.escape, all))
      throw ValidationError("inhibitor-scope", "event outside universe");
    if (set_size(t.inhibitor) > 1)
      throw ValidationError("inhibitor-at-most-one",
                            universe_.format_set(t.inhibitor));
    if ((t.inhibitor | t.escape) == 0)
      throw ValidationError("inhibitor-nonempty",
                            "triple for '" + universe_.name(t.target) +
                                "' has empty inhibitor and escape");
  }
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()),
                 triples_.end());

  // The escape set must be pairwise conflicting in the induced sense.
  ConflictRelation induced = induced_conflict();
  for (const auto& t : triples_) {
    auto es = members(t.escape);
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        if (!induced.in_conflict(es[i], es[j]))
          throw ValidationError(
              "escape-pairwise-conflicting",
              "'" + universe_.name(es[i]) + "' and '" + universe_.name(es[j]) +
                  "' share an escape set but are not in conflict");
  }
}

ConflictRelation Ies::induced_conflict() const {
  ConflictRelation induced(universe_.size());
  auto blocked_by = [&](std::size_t target, std::size_t inhibitor) {
    return std::any_of(triples_.begin(), triples_.end(),
                       [&](const InhibitorTriple& t) {
                         return t.target == target && t.escape == 0 &&
                                t.inhibitor ==
                                    (EventSet{1} << inhibitor);
                       });
  };
  for (std::size_t a = 0; a < universe_.size(); ++a)
    for (std::size_t b = a + 1; b < universe_.size(); ++b)
      if (blocked_by(a, b) && blocked_by(b, a)) induced.add(a, b);
  return induced;
}

Lattice ies_configurations(const Ies& structure) {
  return detail::explore(structure.universe(), [&](EventSet state,
                                                   std::size_t event) {
    for (const auto& t : structure.triples()) {
      if (t.target != event) continue;
      if (subset(t.inhibitor, state) && (state & t.escape) == 0) return false;
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Event structures with resolvable conflicts

Rces::Rces(Universe universe,
           std::vector<std::pair<EventSet, EventSet>> enabling)
    : universe_(std::move(universe)), enabling_(std::move(enabling)) {
  const EventSet all = universe_.all();
  for (const auto& [premise, conclusion] : enabling_)
    if (!subset(premise, all) || !subset(conclusion, all))
      throw ValidationError("enabling-scope", "event outside universe");
  std::sort(enabling_.begin(), enabling_.end());
  enabling_.erase(std::unique(enabling_.begin(), enabling_.end()),
                  enabling_.end());
}

bool Rces::entails(EventSet premise, EventSet conclusion) const {
  return std::binary_search(enabling_.begin(), enabling_.end(),
                            std::make_pair(premise, conclusion));
}

bool rces_step(const Rces& structure, EventSet from, EventSet to) {
  const EventSet all = structure.universe().all();
  if (!subset(from, all) || !subset(to, all))
    throw PreconditionError("rces_step: set outside universe");
  if (!subset(from, to) || set_size(to & ~from) > 1) return false;
  // Every subset of `to` needs a premise within `from`.
  EventSet z = 0;
  for (;;) {
    bool derivable = std::any_of(
        structure.enabling().begin(), structure.enabling().end(),
        [&](const auto& rule) {
          return rule.second == z && subset(rule.first, from);
        });
    if (!derivable) return false;
    if (z == to) break;
    z = (z - to) & to;  // next subset of `to`
  }
  return true;
}

Lattice rces_configurations(const Rces& structure) {
  if (!rces_step(structure, kEmptySet, kEmptySet))
    throw ValidationError("initial-configuration",
                          "the empty set does not enable itself; "
                          "the state space would be empty");
  // A single-event step from a self-enabled set yields a self-enabled set,
  // so the chain condition reduces to the steps themselves.
  return detail::explore(structure.universe(), [&](EventSet state,
                                                   std::size_t event) {
    return rces_step(structure, state, with(state, event));
  });
}

}  // namespace es
