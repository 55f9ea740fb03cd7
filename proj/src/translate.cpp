#include "es/translate.hpp"

#include <algorithm>

namespace es {

TranslationReport verify_translation(const EventAutomaton& source_automaton,
                                     const EventAutomaton& result_automaton,
                                     std::string source_kind) {
  TranslationReport report;
  report.source_kind = std::move(source_kind);
  auto mismatch = first_mismatch(source_automaton, result_automaton);
  report.equivalence_verified = !mismatch.has_value();
  if (mismatch) report.witness = mismatch->description;
  return report;
}

std::vector<EventSet> ctr(const EventAutomaton& automaton, std::size_t event) {
  if (event >= automaton.universe().size())
    throw PreconditionError("ctr: event outside universe");
  std::vector<EventSet> out;
  for (EventSet s : automaton.states()) {
    if (contains(s, event)) continue;
    EventSet t = with(s, event);
    if (automaton.has_state(t) && automaton.has_transition(s, t))
      out.push_back(s);
  }
  return out;
}

std::vector<EventSet> rtc(const EventAutomaton& automaton, std::size_t event) {
  if (event >= automaton.universe().size())
    throw PreconditionError("rtc: event outside universe");
  std::vector<EventSet> out;
  for (EventSet s : automaton.states()) {
    if (contains(s, event)) continue;  // s u {e} = s is a state already
    if (!automaton.has_state(with(s, event))) out.push_back(s);
  }
  return out;
}

namespace {

ConflictRelation semantic_conflict_of(const EventAutomaton& automaton) {
  const std::size_t n = automaton.universe().size();
  ConflictRelation conflict(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      EventSet both = with(with(kEmptySet, a), b);
      bool together =
          std::any_of(automaton.states().begin(), automaton.states().end(),
                      [&](EventSet s) { return subset(both, s); });
      if (!together) conflict.add(a, b);
    }
  return conflict;
}

}  // namespace

Cdes ea_to_cdes(const EventAutomaton& automaton) {
  if (!is_simple(automaton))
    throw HypothesisError("NotSimple",
                          "some event is never added by a single transition");
  if (!is_complete(automaton))
    throw HypothesisError("NotComplete",
                          "some state is unreachable from the initial one");
  EventSet mentioned = 0;
  for (EventSet s : automaton.states()) mentioned |= s;
  if (mentioned != automaton.universe().all()) {
    EventSet dangling = automaton.universe().all() & ~mentioned;
    throw HypothesisError("DanglingEvent",
                          "events outside every state: " +
                              automaton.universe().format_set(dangling));
  }

  std::vector<CdEntry> entries;
  for (std::size_t e = 0; e < automaton.universe().size(); ++e) {
    CdEntry entry;
    entry.target = e;
    for (EventSet s : ctr(automaton, e)) entry.elements.push_back({s, 0});
    for (EventSet s : rtc(automaton, e))
      entry.elements.push_back({s, automaton.universe().singleton(e)});
    entries.push_back(std::move(entry));
  }
  return Cdes(automaton.universe(), semantic_conflict_of(automaton),
              std::move(entries));
}

Cdes pes_to_cdes(const Pes& structure) {
  std::vector<CdEntry> entries;
  for (std::size_t e = 0; e < structure.universe().size(); ++e) {
    EventSet proper_causes = without(structure.cone(e), e);
    entries.push_back({e, {{kEmptySet, proper_causes}}});
  }
  return Cdes(structure.universe(), structure.conflict(), std::move(entries));
}

Cdes rpes_to_cdes(const Rpes& structure) {
  std::vector<CdEntry> entries;
  for (std::size_t e = 0; e < structure.universe().size(); ++e)
    entries.push_back({e, {{kEmptySet, structure.immediate_causes(e)}}});
  return Cdes(structure.universe(), structure.conflict(), std::move(entries));
}

std::vector<EventSet> maxfl(const Fes& structure, std::size_t event) {
  if (event >= structure.universe().size())
    throw PreconditionError("maxfl: event outside universe");
  const EventSet preds = structure.preceding(event);
  const auto& conflict = structure.conflict();
  std::vector<EventSet> out;
  // Subsets of the predecessors, conflict-free and maximal within them.
  EventSet x = 0;
  for (;;) {
    if (is_conflict_free(x, conflict)) {
      bool maximal = true;
      for (std::size_t extra : members(preds & ~x))
        if (is_conflict_free(with(x, extra), conflict)) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(x);
    }
    if (x == preds) break;
    x = (x - preds) & preds;
  }
  return out;
}

Cdes fes_to_cdes(const Fes& structure) {
  Lattice lattice = fes_configurations(structure);
  EventSet seen = 0;
  for (EventSet s : lattice.states) seen |= s;
  if (seen != structure.universe().all())
    throw HypothesisError("NotFull",
                          "events outside every configuration: " +
                              structure.universe().format_set(
                                  structure.universe().all() & ~seen));
  const std::size_t n = structure.universe().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      EventSet both = with(with(kEmptySet, a), b);
      bool together = std::any_of(lattice.states.begin(), lattice.states.end(),
                                  [&](EventSet s) { return subset(both, s); });
      if (!together && !structure.conflict().in_conflict(a, b))
        throw HypothesisError("NotFaithful",
                              "'" + structure.universe().name(a) + "' and '" +
                                  structure.universe().name(b) +
                                  "' never occur together but are not in conflict");
    }

  // A full structure has no self-conflicting events, so the conflict can be
  // carried over into the strict relation.
  ConflictRelation strict(n);
  for (auto [a, b] : structure.conflict().pairs()) strict.add(a, b);

  std::vector<CdEntry> entries;
  for (std::size_t e = 0; e < n; ++e) {
    CdEntry entry;
    entry.target = e;
    for (EventSet x : maxfl(structure, e)) entry.elements.push_back({x, 0});
    entries.push_back(std::move(entry));
  }
  return Cdes(structure.universe(), std::move(strict), std::move(entries));
}

Cdes dces_to_cdes(const Dces& structure) {
  const Universe& u = structure.universe();
  const auto& conflict = structure.base().conflict();
  std::vector<CdEntry> entries;
  for (std::size_t e = 0; e < u.size(); ++e) {
    EventSet modifiers =
        structure.shrink_modifiers(e) | structure.grow_modifiers(e);
    CdEntry entry;
    entry.target = e;
    EventSet x = 0;
    for (;;) {
      // Modifier subsets with internal conflicts can never be observed in a
      // conflict-free state; skipping them keeps the elements well formed.
      if (is_conflict_free(x, conflict)) {
        EventSet dropped = 0, added = 0;
        for (std::size_t m : members(x)) {
          dropped |= structure.drop(m, e);
          added |= structure.add(m, e);
        }
        EventSet deps =
            (structure.base().immediate_causes(e) & ~dropped) | added;
        if (!is_conflict_free(deps, conflict)) {
          // Conflicting causes can never all be present; encode the dead
          // context as a dependency on the target itself.
          deps = u.singleton(e);
        }
        entry.elements.push_back({x, deps});
      }
      if (x == modifiers) break;
      x = (x - modifiers) & modifiers;
    }
    entries.push_back(std::move(entry));
  }
  return Cdes(u, conflict, std::move(entries));
}

Cdes ies_to_cdes(const Ies& structure) {
  const Universe& u = structure.universe();
  ConflictRelation conflict = structure.induced_conflict();
  std::vector<CdEntry> entries;
  EventSet constrained = 0;

  for (const auto& triple : structure.triples()) {
    constrained = with(constrained, triple.target);
    CdEntry entry;
    entry.target = triple.target;
    const EventSet self = u.singleton(triple.target);
    if (triple.escape == 0) {
      // Pure inhibition: free until the inhibitor occurs, dead afterwards.
      entry.elements.push_back({kEmptySet, kEmptySet});
      entry.elements.push_back({triple.inhibitor, self});
    } else if (set_size(triple.escape) == 1) {
      if (triple.inhibitor == 0) {
        entry.elements.push_back({kEmptySet, triple.escape});
      } else {
        entry.elements.push_back({kEmptySet, kEmptySet});
        entry.elements.push_back({triple.inhibitor, triple.escape});
      }
    } else {
      // Several escapes: they are pairwise conflicting, so a conflict-free
      // state contains at most one, and the observed context decides.
      if (triple.inhibitor == 0) {
        entry.elements.push_back({kEmptySet, self});
      } else {
        entry.elements.push_back({kEmptySet, kEmptySet});
        entry.elements.push_back({triple.inhibitor, self});
      }
      for (std::size_t escape : members(triple.escape)) {
        entry.elements.push_back({u.singleton(escape), kEmptySet});
        if (triple.inhibitor != 0) {
          EventSet both = triple.inhibitor | u.singleton(escape);
          if (is_conflict_free(both, conflict))
            entry.elements.push_back({both, kEmptySet});
        }
      }
    }
    entries.push_back(std::move(entry));
  }

  // Events no triple mentions are unconditionally enabled.
  for (std::size_t e = 0; e < u.size(); ++e)
    if (!contains(constrained, e))
      entries.push_back({e, {{kEmptySet, kEmptySet}}});

  return Cdes(u, std::move(conflict), std::move(entries));
}

Ies ges_to_ies(const Dces& structure) {
  if (!structure.is_growing_only())
    throw HypothesisError("NotGes",
                          "the shrinking causality relation is not empty");
  const Universe& u = structure.universe();
  std::vector<InhibitorTriple> triples;
  for (auto [a, b] : structure.base().conflict().pairs()) {
    triples.push_back({u.singleton(a), b, kEmptySet});
    triples.push_back({u.singleton(b), a, kEmptySet});
  }
  for (std::size_t cause = 0; cause < u.size(); ++cause)
    for (std::size_t e : members(structure.base().enabling()[cause]))
      triples.push_back({kEmptySet, e, u.singleton(cause)});
  for (const auto& t : structure.grow())
    triples.push_back(
        {u.singleton(t.modifier), t.target, u.singleton(t.contribution)});
  return Ies(u, std::move(triples));
}

namespace {

CdesWithReport via_automaton(const EventAutomaton& automaton,
                             std::string kind) {
  Cdes result = ea_to_cdes(automaton);
  EventAutomaton round_trip = from_structure(result);
  TranslationReport report =
      verify_translation(automaton, round_trip, std::move(kind));
  return {std::move(result), std::move(report)};
}

}  // namespace

CdesWithReport any_to_cdes(const EventAutomaton& a) {
  return via_automaton(a, "ea");
}
CdesWithReport any_to_cdes(const Cdes& s) {
  return via_automaton(from_structure(s), "cdes");
}
CdesWithReport any_to_cdes(const Pes& s) {
  return via_automaton(from_structure(s), "pes");
}
CdesWithReport any_to_cdes(const Fes& s) {
  return via_automaton(from_structure(s), "fes");
}
CdesWithReport any_to_cdes(const Rpes& s) {
  return via_automaton(from_structure(s), "rpes");
}
CdesWithReport any_to_cdes(const Dces& s) {
  return via_automaton(from_structure(s), "dces");
}
CdesWithReport any_to_cdes(const Ies& s) {
  return via_automaton(from_structure(s), "ies");
}
CdesWithReport any_to_cdes(const Rces& s) {
  return via_automaton(from_structure(s), "rces");
}

}  // namespace es
