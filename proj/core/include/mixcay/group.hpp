#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mixcay {

/// Dense element index; the identity is always 0.
using Element = std::uint32_t;

/// A permutation of {0, ..., degree-1} in image form: p[i] is the image of i.
using Permutation = std::vector<std::uint16_t>;

inline constexpr std::size_t kDefaultMaxOrder = 2000;

/// Finite group materialized as a full multiplication table.
///
/// Immutable after construction. Elements are dense indices 0..n-1 with the
/// identity pinned at 0. Permutation groups additionally keep the faithful
/// action of every element, which is what their labels are derived from.
class Group {
 public:
  /// `table` is row-major n x n with table[a*n + b] = a*b. Validates the
  /// identity position and the existence of inverses; associativity is the
  /// caller's responsibility (builders guarantee it, tests spot-check it).
  Group(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
        std::vector<Permutation> action = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[std::size_t(a) * order_ + b]; }
  Element inv(Element g) const noexcept { return inverse_[g]; }

  /// Least m >= 1 with g^m = 1.
  std::size_t element_order(Element g) const noexcept { return orders_[g]; }

  /// Exact k-th power; k may be negative or exceed ord(g).
  Element power(Element g, long long k) const noexcept;

  /// lcm of all element orders.
  std::size_t exponent() const noexcept { return exponent_; }

  bool is_abelian() const noexcept;

  const std::string& label(Element g) const { return labels_[g]; }
  std::optional<Element> find_label(std::string_view label) const;

  bool has_action() const noexcept { return !action_.empty(); }
  const Permutation& action(Element g) const { return action_.at(g); }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> orders_;
  std::size_t exponent_ = 1;
  std::vector<std::string> labels_;
  std::vector<Permutation> action_;
};

// Permutation helpers (composition is right-to-left: (p*q)(x) = p(q(x))).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation identity_permutation(std::size_t degree);
bool is_even(const Permutation& p);
/// Cycle notation over 0-based points, e.g. "(0 1 2)(3 4)"; identity is "()".
std::string cycle_notation(const Permutation& p);

Group make_cyclic(std::size_t k);
Group make_dihedral(std::size_t k);
Group make_dicyclic(std::size_t k);
Group make_symmetric(std::size_t degree, std::size_t max_order = kDefaultMaxOrder);
Group make_alternating(std::size_t degree, std::size_t max_order = kDefaultMaxOrder);
/// Breadth-first closure of the generators, identity first.
Group make_permutation_group(std::size_t degree, const std::vector<Permutation>& generators,
                             std::size_t max_order = kDefaultMaxOrder);
/// Pairs (a, b) flattened row-major: index = a * |H| + b.
Group make_direct_product(const Group& lhs, const Group& rhs,
                          std::size_t max_order = kDefaultMaxOrder);

/// True iff every element is conjugate to its inverse (computed from the
/// conjugacy classes of the materialized group).
bool is_ambivalent(const Group& group);

/// Ambivalence of A_degree decided on explicit permutations without building
/// the group: for each even cycle type, a permutation inverting the
/// representative is constructed, and the parities of it and of the standard
/// generators of the S_n-centralizer decide whether an even conjugator exists.
bool is_alternating_ambivalent(std::size_t degree);

}  // namespace mixcay
