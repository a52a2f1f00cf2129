#include "mixcay/context.hpp"

#include "mixcay/errors.hpp"

namespace mixcay {

GroupContext GroupContext::build(const GroupSpec& spec, const ContextOptions& options) {
  Group group = build_group(spec, options.max_order);
  ClassData classes = conjugacy_classes(group);
  CharacterTable table = character_table(group, classes, options.characters);
  AtomSystem atoms = build_atom_system(group);
  return GroupContext{spec, std::move(group), std::move(classes), std::move(table), std::move(atoms)};
}

GroupContext GroupContext::with_table(const GroupSpec& spec, CharacterTable table, const ContextOptions& options) {
  Group group = build_group(spec, options.max_order);
  ClassData classes = conjugacy_classes(group);
  if (table.size() != classes.num_classes()) {
    throw Error(ErrorCode::BadInput, "character table has " + std::to_string(table.size()) + " rows but the group has " +
                                         std::to_string(classes.num_classes()) + " classes");
  }
  AtomSystem atoms = build_atom_system(group);
  return GroupContext{spec, std::move(group), std::move(classes), std::move(table), std::move(atoms)};
}

}  // namespace mixcay
