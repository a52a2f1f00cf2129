#include "mixcay/atoms.hpp"

#include <numeric>

#include "mixcay/errors.hpp"

namespace mixcay {

ElementSet make_element_set(const Group& group, const std::vector<Element>& elements) {
  ElementSet s(group.order());
  for (const auto e : elements) s.set(e);
  return s;
}

std::vector<Element> elements_of(const ElementSet& set) {
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(static_cast<Element>(i));
  return out;
}

ElementSet inverse_set(const Group& group, const ElementSet& set) {
  ElementSet out(set.size());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    out.set(group.inv(static_cast<Element>(i)));
  }
  return out;
}

ElementSet union_of_classes(const ClassData& classes, const std::vector<ClassIndex>& class_list) {
  ElementSet s(classes.group_order);
  for (const auto c : class_list) {
    for (const auto e : classes.members.at(c)) s.set(e);
  }
  return s;
}

ConnectionSet::ConnectionSet(const Group& group, ElementSet members) : members_(std::move(members)) {
  if (members_.size() != group.order()) throw Error(ErrorCode::BadInput, "set size does not match group order");
  if (members_.test(group.identity())) throw Error(ErrorCode::IdentityInSet, "connection set contains the identity");
  const ElementSet inv = inverse_set(group, members_);
  symmetric_ = members_ & inv;
  skew_ = members_ - inv;
}

bool is_normal(const ClassData& classes, const ElementSet& set) {
  for (std::size_t c = 0; c < classes.num_classes(); ++c) {
    const auto& m = classes.members[c];
    const bool first = set.test(m.front());
    for (const auto e : m) {
      if (set.test(e) != first) return false;
    }
  }
  return true;
}

std::vector<long long> divisor_set(long long n, long long d) {
  if (n < 2 || d < 1 || n % d != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(d) + " is not a divisor of " + std::to_string(n));
  }
  std::vector<long long> out;
  for (long long k = 1; k < n; ++k) {
    if (std::gcd(k, n) == d) out.push_back(k);
  }
  return out;
}

std::vector<long long> divisor_set_mod3(long long n, long long d, int r) {
  if (r != 1 && r != 2) throw Error(ErrorCode::BadResidue, "residue must be 1 or 2, got " + std::to_string(r));
  if (n < 3 || n % 3 != 0 || d < 1 || (n / 3) % d != 0) {
    throw Error(ErrorCode::NotADivisor,
                "need 3 | n and d | n/3 (n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
  }
  std::vector<long long> out;
  for (long long k = 1; d * k < n; ++k) {
    if (k % 3 == r && std::gcd(d * k, n) == d) out.push_back(d * k);
  }
  return out;
}

bool in_gamma3(const Group& group, Element x) { return group.element_order(x) % 3 == 0; }

ElementSet atom(const Group& group, Element x) {
  if (x == group.identity()) throw Error(ErrorCode::IdentityElement, "atom of the identity is undefined");
  const auto m = static_cast<long long>(group.element_order(x));
  ElementSet s(group.order());
  for (const auto k : divisor_set(m, 1)) s.set(group.power(x, k));
  return s;
}

ElementSet atom3(const Group& group, Element x) {
  if (!in_gamma3(group, x)) {
    throw Error(ErrorCode::NotInGamma3, "element " + group.label(x) + " has order not divisible by 3");
  }
  const auto m = static_cast<long long>(group.element_order(x));
  ElementSet s(group.order());
  for (const auto k : divisor_set_mod3(m, 1, 1)) s.set(group.power(x, k));
  return s;
}

bool in_boolean_algebra(const Group& group, const ElementSet& set) {
  if (set.test(group.identity())) return false;
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    if (!atom(group, static_cast<Element>(i)).is_subset_of(set)) return false;
  }
  return true;
}

bool in_e_algebra(const Group& group, const ClassData& classes, const ElementSet& set) {
  if (set.none()) return true;
  if (set.test(group.identity())) return false;
  if (set.intersects(inverse_set(group, set))) return false;
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    const auto y = static_cast<Element>(i);
    if (!in_gamma3(group, y)) return false;
    if (!atom3(group, y).is_subset_of(set)) return false;
    for (const auto z : classes.members[classes.class_of[y]]) {
      if (!set.test(z)) return false;
    }
  }
  return true;
}

namespace {

/// Least superset of `seed` closed under conjugation and under `expand`,
/// which maps one element to the set it must drag along.
template <typename Expand>
ElementSet close_under(const ClassData& classes, ElementSet seed, Expand expand) {
  std::vector<Element> frontier = elements_of(seed);
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    ElementSet add = expand(x);
    for (const auto z : classes.members[classes.class_of[x]]) add.set(z);
    add -= seed;
    for (auto i = add.find_first(); i != ElementSet::npos; i = add.find_next(i)) {
      frontier.push_back(static_cast<Element>(i));
    }
    seed |= add;
  }
  return seed;
}

}  // namespace

ElementSet closure_s1(const Group& group, const ClassData& classes, Element x) {
  if (x == group.identity()) throw Error(ErrorCode::IdentityElement, "S1 closure of the identity is undefined");
  ElementSet seed(group.order());
  seed.set(x);
  seed.set(group.inv(x));
  // Atoms are inverse-closed and classes of inverses are inverse classes,
  // so the closure stays symmetric.
  return close_under(classes, std::move(seed), [&](Element e) { return atom(group, e); });
}

std::optional<ElementSet> closure_s2(const Group& group, const ClassData& classes, Element y) {
  if (!in_gamma3(group, y)) {
    throw Error(ErrorCode::NotInGamma3, "element " + group.label(y) + " has order not divisible by 3");
  }
  ElementSet seed(group.order());
  seed.set(y);
  ElementSet closed = close_under(classes, std::move(seed), [&](Element e) { return atom3(group, e); });
  if (closed.intersects(inverse_set(group, closed))) return std::nullopt;
  return closed;
}

AtomSystem build_atom_system(const Group& group) {
  const std::size_t n = group.order();
  AtomSystem sys;
  sys.gamma3 = ElementSet(n);
  sys.atom_of.assign(n, AtomSystem::npos);
  sys.atom3_of.assign(n, AtomSystem::npos);
  for (Element x = 1; x < n; ++x) {
    if (in_gamma3(group, x)) sys.gamma3.set(x);
    if (sys.atom_of[x] == AtomSystem::npos) {
      auto a = atom(group, x);
      for (auto i = a.find_first(); i != ElementSet::npos; i = a.find_next(i)) sys.atom_of[i] = sys.atoms.size();
      sys.atoms.push_back(std::move(a));
    }
    if (sys.gamma3.test(x) && sys.atom3_of[x] == AtomSystem::npos) {
      auto a = atom3(group, x);
      for (auto i = a.find_first(); i != ElementSet::npos; i = a.find_next(i)) sys.atom3_of[i] = sys.atoms3.size();
      sys.atoms3.push_back(std::move(a));
    }
  }
  return sys;
}

}  // namespace mixcay
