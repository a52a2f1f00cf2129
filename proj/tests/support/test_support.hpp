#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixcay/atoms.hpp"
#include "mixcay/class_algebra.hpp"
#include "mixcay/context.hpp"
#include "mixcay/errors.hpp"
#include "mixcay/group.hpp"

namespace mixcay::testing {

inline const std::complex<double> kW3{-0.5, std::numbers::sqrt3 / 2.0};

/// Permutation from 1-based comma cycle notation such as "(1,2)(3,4)".
inline Permutation one_based_permutation(std::string_view cycles, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  std::vector<std::size_t> cycle;
  std::size_t number = 0;
  bool in_number = false;
  for (const char ch : cycles) {
    if (ch >= '0' && ch <= '9') {
      number = number * 10 + static_cast<std::size_t>(ch - '0');
      in_number = true;
      continue;
    }
    if (in_number) {
      cycle.push_back(number - 1);
      number = 0;
      in_number = false;
    }
    if (ch == ')') {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        p[cycle[i]] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()]);
      }
      cycle.clear();
    }
  }
  return p;
}

/// Element of a permutation group named in 1-based notation, e.g. "(1,2,3)".
inline Element element_1based(const Group& group, std::string_view cycles, std::size_t degree) {
  const auto label = cycle_notation(one_based_permutation(cycles, degree));
  const auto e = group.find_label(label);
  if (!e) throw Error(ErrorCode::BadInput, "no element " + label);
  return *e;
}

inline ElementSet elements_1based(const Group& group, const std::vector<std::string>& cycles, std::size_t degree) {
  ElementSet s(group.order());
  for (const auto& c : cycles) s.set(element_1based(group, c, degree));
  return s;
}

inline ElementSet class_set(const ClassData& classes, Element x) {
  ElementSet s(classes.group_order);
  for (const auto e : classes.members[classes.class_of[x]]) s.set(e);
  return s;
}

inline ElementSet element_set(std::size_t n, const std::vector<Element>& elements) {
  ElementSet s(n);
  for (const auto e : elements) s.set(e);
  return s;
}

/// Character table of A4 in the class order I, (1,2)(3,4), (1,2,3), (1,3,2).
inline std::vector<std::vector<std::complex<double>>> a4_golden_table() {
  const std::complex<double> w = kW3;
  const std::complex<double> w2 = kW3 * kW3;
  return {{1, 1, 1, 1}, {1, 1, w, w2}, {1, 1, w2, w}, {3, -1, 0, 0}};
}

/// Row of the computed table matching the golden row `golden` on the given
/// classes, within tol; nullopt if none.
inline std::optional<std::size_t> matching_row(const CharacterTable& table, const std::vector<ClassIndex>& columns,
                                               const std::vector<std::complex<double>>& golden, double tol) {
  for (std::size_t j = 0; j < table.size(); ++j) {
    bool ok = true;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (std::abs(table.value(j, columns[c]) - golden[c]) > tol) ok = false;
    }
    if (ok) return j;
  }
  return std::nullopt;
}

/// The four A4 classes in the golden table's column order.
inline std::vector<ClassIndex> a4_golden_columns(const Group& a4, const ClassData& classes) {
  return {classes.class_of[0], classes.class_of[element_1based(a4, "(1,2)(3,4)", 4)],
          classes.class_of[element_1based(a4, "(1,2,3)", 4)], classes.class_of[element_1based(a4, "(1,3,2)", 4)]};
}

/// Golden character index (0-based) -> computed row.
inline std::vector<std::size_t> a4_golden_rows(const GroupContext& ctx) {
  const auto cols = a4_golden_columns(ctx.group, ctx.classes);
  std::vector<std::size_t> rows;
  for (const auto& g : a4_golden_table()) rows.push_back(*matching_row(ctx.characters, cols, g, 1e-8));
  return rows;
}

/// The mixed A4 connection set Cl((1,2)(3,4)) u Cl((1,2,3)).
inline ElementSet a4_mixed_set(const GroupContext& ctx) {
  return class_set(ctx.classes, element_1based(ctx.group, "(1,2)(3,4)", 4)) |
         class_set(ctx.classes, element_1based(ctx.group, "(1,2,3)", 4));
}

inline ElementSet a4_oriented_set(const GroupContext& ctx) {
  return class_set(ctx.classes, element_1based(ctx.group, "(1,2,3)", 4));
}

}  // namespace mixcay::testing
