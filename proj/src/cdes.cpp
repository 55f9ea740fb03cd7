#include "es/cdes.hpp"

#include <algorithm>
#include <cassert>

namespace es {

namespace {

void validate_entry(const Universe& universe, const ConflictRelation& conflict,
                    const CdEntry& entry) {
  if (entry.target >= universe.size())
    throw ValidationError("entry-target", "target event outside universe");
  if (entry.elements.empty())
    throw ValidationError("entry-nonempty",
                          "entry for '" + universe.name(entry.target) +
                              "' has no elements");
  EventSet all = universe.all();
  for (const auto& el : entry.elements) {
    if (!subset(el.modifiers, all) || !subset(el.dependencies, all))
      throw ValidationError("entry-scope", "entry element outside universe");
    if (!is_conflict_free(el.modifiers, conflict))
      throw ValidationError("entry-modifiers-conflict-free",
                            universe.format_set(el.modifiers));
    if (!is_conflict_free(el.dependencies, conflict))
      throw ValidationError("entry-dependencies-conflict-free",
                            universe.format_set(el.dependencies));
  }
  for (std::size_t i = 1; i < entry.elements.size(); ++i) {
    if (entry.elements[i - 1].modifiers == entry.elements[i].modifiers)
      throw ValidationError("entry-distinct-modifiers",
                            "entry for '" + universe.name(entry.target) +
                                "' repeats modifier set " +
                                universe.format_set(
                                    entry.elements[i].modifiers));
  }
}

}  // namespace

Cdes::Cdes(Universe universe, ConflictRelation conflict,
           std::vector<CdEntry> entries)
    : universe_(std::move(universe)), conflict_(std::move(conflict)),
      entries_(std::move(entries)) {
  if (conflict_.universe_size() != universe_.size())
    throw ValidationError("conflict-scope",
                          "conflict relation sized for another universe");
  if (conflict_.allows_reflexive())
    throw ValidationError("conflict-irreflexive",
                          "reflexive conflict relation not permitted here");
  for (auto& entry : entries_) {
    std::sort(entry.elements.begin(), entry.elements.end());
    entry.elements.erase(
        std::unique(entry.elements.begin(), entry.elements.end()),
        entry.elements.end());
    validate_entry(universe_, conflict_, entry);
  }
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()),
                 entries_.end());
}

std::vector<const CdEntry*> Cdes::entries_for(std::size_t event) const {
  std::vector<const CdEntry*> out;
  for (const auto& entry : entries_)
    if (entry.target == event) out.push_back(&entry);
  return out;
}

bool Cdes::has_entry_for(std::size_t event) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const CdEntry& e) { return e.target == event; });
}

EventSet context(const CdEntry& entry) {
  EventSet cxt = 0;
  for (const auto& el : entry.elements) cxt |= el.modifiers;
  return cxt;
}

namespace {

// One entry is satisfied at `state` when, among the elements whose modifier
// set is contained in the state, a maximal one has its dependencies present.
// When the observed context (Cxt n state) is itself a listed modifier set,
// it is the unique maximal candidate, so this coincides with selecting the
// element that matches the observed context exactly.
bool entry_satisfied(const CdEntry& entry, EventSet state) {
  EventSet observed = context(entry) & state;
  // Modifier sets are pairwise distinct, so at most one element can match
  // the observed context exactly.
  assert(std::count_if(entry.elements.begin(), entry.elements.end(),
                       [&](const EntryElement& el) {
                         return el.modifiers == observed;
                       }) <= 1);
  (void)observed;
  for (const auto& el : entry.elements) {
    if (!subset(el.modifiers, state)) continue;
    bool maximal =
        std::none_of(entry.elements.begin(), entry.elements.end(),
                     [&](const EntryElement& other) {
                       return proper_subset(el.modifiers, other.modifiers) &&
                              subset(other.modifiers, state);
                     });
    if (maximal && subset(el.dependencies, state)) return true;
  }
  return false;
}

}  // namespace

bool enabled(const Cdes& structure, EventSet state, std::size_t event) {
  const Universe& universe = structure.universe();
  if (event >= universe.size())
    throw PreconditionError("enabled: event outside universe");
  if (!subset(state, universe.all()))
    throw PreconditionError("enabled: state outside universe");
  if (contains(state, event))
    throw PreconditionError("enabled: event '" + universe.name(event) +
                            "' already in the state");

  bool has_entry = false;
  for (const auto& entry : structure.entries()) {
    if (entry.target != event) continue;
    has_entry = true;
    if (!entry_satisfied(entry, state)) return false;
  }
  // An event the cd-relation never mentions can never happen.
  return has_entry;
}

bool Lattice::has_state(EventSet state) const {
  return std::binary_search(states.begin(), states.end(), state);
}

std::vector<EventSet> Lattice::unreachable_states() const {
  std::vector<EventSet> reached{initial};
  std::vector<EventSet> frontier{initial};
  while (!frontier.empty()) {
    std::vector<EventSet> next;
    for (EventSet s : frontier) {
      for (const auto& edge : edges) {
        if (edge.source != s) continue;
        if (!std::binary_search(reached.begin(), reached.end(), edge.target)) {
          reached.insert(std::lower_bound(reached.begin(), reached.end(),
                                          edge.target),
                         edge.target);
          next.push_back(edge.target);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<EventSet> missing;
  for (EventSet s : states)
    if (!std::binary_search(reached.begin(), reached.end(), s))
      missing.push_back(s);
  return missing;
}

Lattice configurations(const Cdes& structure) {
  return detail::explore(structure.universe(), [&](EventSet state,
                                                   std::size_t event) {
    return enabled(structure, state, event) &&
           is_conflict_free(with(state, event), structure.conflict());
  });
}

ConflictRelation semantic_conflict(const Cdes& structure) {
  Lattice lattice = configurations(structure);
  const std::size_t n = structure.universe().size();
  ConflictRelation result(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      EventSet both = with(with(kEmptySet, a), b);
      bool together = std::any_of(lattice.states.begin(), lattice.states.end(),
                                  [&](EventSet s) { return subset(both, s); });
      if (!together) result.add(a, b);
    }
  }
  return result;
}

bool is_full(const Cdes& structure) {
  Lattice lattice = configurations(structure);
  EventSet seen = 0;
  for (EventSet s : lattice.states) seen |= s;
  return seen == structure.universe().all();
}

bool is_faithful(const Cdes& structure) {
  ConflictRelation semantic = semantic_conflict(structure);
  for (auto [a, b] : semantic.pairs())
    if (!structure.conflict().in_conflict(a, b)) return false;
  return true;
}

}  // namespace es
