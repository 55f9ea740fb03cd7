#ifndef ES_KERNEL_HPP
#define ES_KERNEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Core vocabulary shared by every event-structure kind: the event universe,
// finite event sets, and the binary conflict relation with its
// conflict-freeness predicate.

namespace es {

// A set of events, encoded as a bitmask over the indices of a Universe.
// Bit i set means the event with index i is a member.
using EventSet = std::uint64_t;

constexpr EventSet kEmptySet = 0;

// Thrown when a model breaks a structural rule (undeclared event,
// reflexive conflict, broken side conditions of a relation, ...).
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string rule, std::string witness)
      : std::runtime_error(rule + ": " + witness),
        rule_(std::move(rule)), witness_(std::move(witness)) {}

  const std::string& rule() const { return rule_; }
  const std::string& witness() const { return witness_; }

private:
  std::string rule_;
  std::string witness_;
};

// Thrown when an operation is called outside its stated precondition
// (e.g. enabling queried for an event already in the set).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// The finite, immutable event universe of one model. Event names are opaque
// tokens (letters, digits, '_'); indices are assigned in lexicographic name
// order so that every derived output is deterministic.
class Universe {
public:
  Universe() = default;

  // Builds a universe from the given names. Sorts, rejects duplicates,
  // empty or ill-formed names, and more than 64 events.
  static Universe from_names(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }

  // Index of a declared event; throws ValidationError for unknown names.
  std::size_t index(const std::string& name) const;
  bool contains(const std::string& name) const;

  // Mask with one bit per declared event.
  EventSet all() const {
    return names_.empty() ? 0
                          : (names_.size() == 64
                                 ? ~EventSet{0}
                                 : ((EventSet{1} << names_.size()) - 1));
  }

  EventSet singleton(std::size_t index) const;

  // Renders a set as "{a,b,c}" ("{}" for the empty set), members in
  // lexicographic order.
  std::string format_set(EventSet set) const;

  bool operator==(const Universe& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
};

// True iff `name` is a valid event token: nonempty, [A-Za-z0-9_]+.
bool is_valid_event_name(const std::string& name);

inline bool contains(EventSet set, std::size_t index) {
  return (set >> index) & 1u;
}

inline EventSet with(EventSet set, std::size_t index) {
  return set | (EventSet{1} << index);
}

inline EventSet without(EventSet set, std::size_t index) {
  return set & ~(EventSet{1} << index);
}

inline bool subset(EventSet lhs, EventSet rhs) { return (lhs & ~rhs) == 0; }

inline bool proper_subset(EventSet lhs, EventSet rhs) {
  return lhs != rhs && subset(lhs, rhs);
}

std::size_t set_size(EventSet set);

// Members of `set`, in increasing index order.
std::vector<std::size_t> members(EventSet set);

// An irreflexive (unless explicitly relaxed) symmetric conflict relation,
// stored as one adjacency mask per event. The relaxed form, where an event
// may conflict with itself, exists for the flow event structures whose
// conflict relation is only required to be symmetric.
class ConflictRelation {
public:
  explicit ConflictRelation(std::size_t universe_size = 0,
                            bool allow_reflexive = false)
      : adjacency_(universe_size, 0), allow_reflexive_(allow_reflexive) {}

  std::size_t universe_size() const { return adjacency_.size(); }
  bool allows_reflexive() const { return allow_reflexive_; }

  // Adds the unordered pair {a, b}; rejects a == b unless reflexive pairs
  // are allowed. Duplicates are absorbed.
  void add(std::size_t a, std::size_t b);

  bool in_conflict(std::size_t a, std::size_t b) const {
    return contains(adjacency_.at(a), b);
  }

  // Events conflicting with `event`, as a mask.
  EventSet neighbours(std::size_t event) const { return adjacency_.at(event); }

  // All unordered pairs (a < b), plus reflexive pairs (a, a) if present.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool empty() const;
  bool operator==(const ConflictRelation& other) const {
    return adjacency_ == other.adjacency_;
  }

private:
  std::vector<EventSet> adjacency_;
  bool allow_reflexive_;
};

// True iff no two members of `set` (including an event with itself, when the
// relation is reflexive-relaxed) are in conflict.
bool is_conflict_free(EventSet set, const ConflictRelation& conflict);

}  // namespace es

#endif
