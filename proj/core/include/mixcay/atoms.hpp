#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "mixcay/class_algebra.hpp"
#include "mixcay/group.hpp"

namespace mixcay {

/// Subset of a group as a bit set indexed by element.
using ElementSet = boost::dynamic_bitset<>;

ElementSet make_element_set(const Group& group, const std::vector<Element>& elements);
std::vector<Element> elements_of(const ElementSet& set);
/// {s^-1 : s in set}
ElementSet inverse_set(const Group& group, const ElementSet& set);
/// Union of the full conjugacy classes listed.
ElementSet union_of_classes(const ClassData& classes, const std::vector<ClassIndex>& class_list);

/// Identity-free subset S with its symmetric part S \ Sbar and skew part
/// Sbar = {u in S : u^-1 not in S}.
class ConnectionSet {
 public:
  /// Throws IdentityInSet when the identity is a member.
  ConnectionSet(const Group& group, ElementSet members);

  const ElementSet& members() const noexcept { return members_; }
  const ElementSet& symmetric_part() const noexcept { return symmetric_; }
  const ElementSet& skew_part() const noexcept { return skew_; }
  std::size_t size() const noexcept { return members_.count(); }
  bool empty() const noexcept { return members_.none(); }

 private:
  ElementSet members_;
  ElementSet symmetric_;
  ElementSet skew_;
};

/// True iff the set is a union of full conjugacy classes.
bool is_normal(const ClassData& classes, const ElementSet& set);

/// G_n(d) = {k : 1 <= k <= n-1, gcd(k, n) = d}. Throws NotADivisor.
std::vector<long long> divisor_set(long long n, long long d);

/// G^r_{n,3}(d) = {dk : k = r (mod 3), gcd(dk, n) = d, 1 <= dk <= n-1}.
/// Throws NotADivisor (3 does not divide n, or d does not divide n/3) or BadResidue.
std::vector<long long> divisor_set_mod3(long long n, long long d, int r);

/// [x] = {x^k : k in G_m(1)}, m = ord(x). Throws IdentityElement.
ElementSet atom(const Group& group, Element x);

/// <<x>> = {x^k : k in G^1_{m,3}(1)}, m = ord(x). Throws NotInGamma3.
ElementSet atom3(const Group& group, Element x);

bool in_gamma3(const Group& group, Element x);

/// S is a union of atoms [x].
bool in_boolean_algebra(const Group& group, const ElementSet& set);

/// S is skew-symmetric, contained in Gamma(3), and a union of both <<x>>
/// classes and conjugacy classes. The empty set is always accepted.
bool in_e_algebra(const Group& group, const ClassData& classes, const ElementSet& set);

/// Smallest symmetric set containing x closed under conjugation and ~.
ElementSet closure_s1(const Group& group, const ClassData& classes, Element x);

/// Smallest set containing y closed under conjugation and the relation
/// behind <<y>>; nullopt when that set meets its own inverse (no
/// skew-symmetric closed superset exists). Throws NotInGamma3.
std::optional<ElementSet> closure_s2(const Group& group, const ClassData& classes, Element y);

/// Precomputed atom partitions of a group.
struct AtomSystem {
  ElementSet gamma3;
  std::vector<std::size_t> atom_of;   // element -> atom id (identity gets npos)
  std::vector<ElementSet> atoms;      // atom id -> members
  std::vector<std::size_t> atom3_of;  // element -> class id under <<.>>, npos outside Gamma(3)
  std::vector<ElementSet> atoms3;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

AtomSystem build_atom_system(const Group& group);

}  // namespace mixcay
