#include "es/kernel.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace es {

bool is_valid_event_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

Universe Universe::from_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  for (const auto& n : names) {
    if (!is_valid_event_name(n))
      throw ValidationError("event-name", "'" + n + "' is not a valid token");
  }
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw ValidationError("event-name", "duplicate event declaration");
  if (names.size() > 64)
    throw ValidationError("universe-size",
                          "models are limited to 64 events, got " +
                              std::to_string(names.size()));
  Universe u;
  u.names_ = std::move(names);
  return u;
}

std::size_t Universe::index(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    throw ValidationError("unknown-event", "'" + name + "' is not declared");
  return static_cast<std::size_t>(it - names_.begin());
}

bool Universe::contains(const std::string& name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

EventSet Universe::singleton(std::size_t index) const {
  if (index >= names_.size())
    throw PreconditionError("event index out of range");
  return EventSet{1} << index;
}

std::string Universe::format_set(EventSet set) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : es::members(set)) {
    if (!first) out += ',';
    out += name(i);
    first = false;
  }
  out += '}';
  return out;
}

std::size_t set_size(EventSet set) {
  return static_cast<std::size_t>(std::popcount(set));
}

std::vector<std::size_t> members(EventSet set) {
  std::vector<std::size_t> out;
  out.reserve(set_size(set));
  while (set != 0) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(set));
    out.push_back(i);
    set &= set - 1;
  }
  return out;
}

void ConflictRelation::add(std::size_t a, std::size_t b) {
  if (a >= adjacency_.size() || b >= adjacency_.size())
    throw PreconditionError("conflict pair outside universe");
  if (a == b && !allow_reflexive_)
    throw ValidationError("conflict-irreflexive",
                          "event in conflict with itself");
  adjacency_[a] = with(adjacency_[a], b);
  adjacency_[b] = with(adjacency_[b], a);
}

std::vector<std::pair<std::size_t, std::size_t>> ConflictRelation::pairs()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adjacency_.size(); ++a)
    for (std::size_t b : members(adjacency_[a]))
      if (a <= b) out.emplace_back(a, b);
  return out;
}

bool ConflictRelation::empty() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](EventSet s) { return s == 0; });
}

bool is_conflict_free(EventSet set, const ConflictRelation& conflict) {
  for (std::size_t i : members(set)) {
    // Covers self-conflict too: a reflexive pair puts i in its own mask.
    if ((conflict.neighbours(i) & set) != 0) return false;
  }
  return true;
}

}  // namespace es
