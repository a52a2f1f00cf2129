#pragma once

#include <optional>

#include "mixcay/atoms.hpp"
#include "mixcay/class_algebra.hpp"
#include "mixcay/group.hpp"
#include "mixcay/group_spec.hpp"

namespace mixcay {

struct ContextOptions {
  std::size_t max_order = kDefaultMaxOrder;
  CharacterTableOptions characters;
};

/// A group together with everything derived from it once: conjugacy classes,
/// the character table and the atom partitions.
struct GroupContext {
  GroupSpec spec;
  Group group;
  ClassData classes;
  CharacterTable characters;
  AtomSystem atoms;

  static GroupContext build(const GroupSpec& spec, const ContextOptions& options = {});
  /// Uses `table` verbatim instead of computing one. Throws BadInput when its
  /// shape does not match the class count.
  static GroupContext with_table(const GroupSpec& spec, CharacterTable table, const ContextOptions& options = {});

  std::string spec_string() const { return to_string(spec); }
};

}  // namespace mixcay
