#include "mixcay/class_algebra.hpp"

#include <algorithm>
#include <limits>

#include "mixcay/errors.hpp"

namespace mixcay {

ClassIndex ClassData::power_class(ClassIndex c, long long k) const {
  const auto m = static_cast<long long>(rep_order[c]);
  long long r = k % m;
  if (r < 0) r += m;
  return power_map[c][static_cast<std::size_t>(r)];
}

ClassData conjugacy_classes(const Group& group) {
  constexpr auto unset = std::numeric_limits<ClassIndex>::max();
  const std::size_t n = group.order();
  ClassData cd;
  cd.group_order = n;
  cd.class_of.assign(n, unset);

  for (Element g = 0; g < n; ++g) {
    if (cd.class_of[g] != unset) continue;
    const ClassIndex c = cd.reps.size();
    std::vector<Element> orbit;
    for (Element x = 0; x < n; ++x) {
      const Element y = group.mul(group.mul(x, g), group.inv(x));
      if (cd.class_of[y] == unset) {
        cd.class_of[y] = c;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cd.reps.push_back(g);
    cd.sizes.push_back(orbit.size());
    cd.members.push_back(std::move(orbit));
  }

  const std::size_t h = cd.reps.size();
  cd.inverse_class.resize(h);
  cd.centralizer_order.resize(h);
  cd.rep_order.resize(h);
  cd.power_map.resize(h);
  for (ClassIndex c = 0; c < h; ++c) {
    const Element rep = cd.reps[c];
    cd.inverse_class[c] = cd.class_of[group.inv(rep)];
    cd.centralizer_order[c] = n / cd.sizes[c];
    cd.rep_order[c] = group.element_order(rep);
    auto& row = cd.power_map[c];
    row.resize(cd.rep_order[c]);
    Element x = group.identity();
    for (std::size_t r = 0; r < row.size(); ++r) {
      row[r] = cd.class_of[x];
      x = group.mul(x, rep);
    }
  }
  return cd;
}

bool is_ambivalent(const Group& group) {
  const auto cd = conjugacy_classes(group);
  for (ClassIndex c = 0; c < cd.num_classes(); ++c) {
    if (cd.inverse_class[c] != c) return false;
  }
  return true;
}

std::size_t structure_constant(const Group& group, const ClassData& classes, ClassIndex i, ClassIndex j,
                               ClassIndex k) {
  const std::size_t h = classes.num_classes();
  if (i >= h || j >= h || k >= h) throw Error(ErrorCode::BadInput, "class index out of range");

  auto count_for = [&](Element z) {
    std::size_t count = 0;
    for (const Element x : classes.members[i]) {
      if (classes.class_of[group.mul(group.inv(x), z)] == j) ++count;
    }
    return count;
  };
  const auto& zs = classes.members[k];
  const std::size_t count = count_for(zs.front());
  if (zs.size() > 1 && count_for(zs.back()) != count) {
    throw Error(ErrorCode::InvariantViolation, "structure constant depends on the chosen class element");
  }
  return count;
}

}  // namespace mixcay
