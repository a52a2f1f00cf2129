#include "mixcay/group.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "mixcay/errors.hpp"

namespace mixcay {

Group::Group(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
             std::vector<Permutation> action)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)), action_(std::move(action)) {
  if (order_ == 0 || table_.size() != order_ * order_) {
    throw Error(ErrorCode::BadInput, "multiplication table has wrong shape");
  }
  if (labels_.size() != order_) {
    throw Error(ErrorCode::BadInput, "one label per element required");
  }
  if (!action_.empty() && action_.size() != order_) {
    throw Error(ErrorCode::BadInput, "action must cover every element");
  }
  for (Element g = 0; g < order_; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g) {
      throw Error(ErrorCode::BadInput, "element 0 is not the identity");
    }
  }

  inverse_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    const Element* row = &table_[std::size_t(a) * order_];
    const auto it = std::find(row, row + order_, Element{0});
    if (it == row + order_) {
      throw Error(ErrorCode::BadInput, "element " + std::to_string(a) + " has no inverse");
    }
    inverse_[a] = static_cast<Element>(it - row);
  }

  orders_.assign(order_, 1);
  for (Element g = 1; g < order_; ++g) {
    std::size_t m = 1;
    for (Element x = g; x != 0; x = mul(x, g)) {
      if (++m > order_) {
        throw Error(ErrorCode::BadInput, "element " + std::to_string(g) + " has no finite order");
      }
    }
    orders_[g] = m;
  }
  exponent_ = 1;
  for (const auto m : orders_) exponent_ = std::lcm(exponent_, m);
}

Element Group::power(Element g, long long k) const noexcept {
  const auto m = static_cast<long long>(orders_[g]);
  long long e = k % m;
  if (e < 0) e += m;
  Element result = 0;
  Element base = g;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Group::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::optional<Element> Group::find_label(std::string_view label) const {
  for (Element g = 0; g < order_; ++g) {
    if (labels_[g] == label) return g;
  }
  return std::nullopt;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

bool is_even(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

void check_order(std::size_t order, std::size_t max_order, const std::string& what) {
  if (order > max_order) {
    throw Error(ErrorCode::SizeExceeded,
                what + " has order " + std::to_string(order) + " > bound " + std::to_string(max_order));
  }
}

/// Builds the table of a group given as an explicit list of permutations with
/// the identity first. The list must be closed under composition.
Group from_permutations(std::vector<Permutation> elements) {
  const std::size_t n = elements.size();
  std::unordered_map<Permutation, Element, boost::hash<Permutation>> index;
  index.reserve(n);
  for (Element i = 0; i < n; ++i) index.emplace(elements[i], i);

  std::vector<Element> table(n * n);
  Permutation product(n == 0 ? 0 : elements[0].size());
  for (Element a = 0; a < n; ++a) {
    const Permutation& p = elements[a];
    for (Element b = 0; b < n; ++b) {
      const Permutation& q = elements[b];
      for (std::size_t i = 0; i < product.size(); ++i) product[i] = p[q[i]];
      const auto it = index.find(product);
      if (it == index.end()) {
        throw Error(ErrorCode::BadInput, "permutation list is not closed under composition");
      }
      table[std::size_t(a) * n + b] = it->second;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(cycle_notation(p));
  return Group(n, std::move(table), std::move(labels), std::move(elements));
}

std::size_t factorial_bounded(std::size_t k, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

std::string power_label(const char* base, std::size_t e) {
  if (e == 1) return base;
  return std::string(base) + "^" + std::to_string(e);
}

}  // namespace

Group make_cyclic(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::UnsupportedFamily, "cyclic group needs k >= 1");
  std::vector<Element> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = static_cast<Element>((a + b) % k);
  }
  return Group(k, std::move(table), std::move(labels));
}

Group make_dihedral(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::UnsupportedFamily, "dihedral group needs k >= 1");
  // r^a s^b stored at index b*k + a; s r s = r^-1.
  const std::size_t n = 2 * k;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a1 = x % k, b1 = x / k;
    if (b1 == 0) {
      labels[x] = a1 == 0 ? "e" : power_label("r", a1);
    } else {
      labels[x] = a1 == 0 ? "s" : power_label("r", a1) + " s";
    }
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a2 = y % k, b2 = y / k;
      const std::size_t a = b1 == 0 ? (a1 + a2) % k : (a1 + k - a2) % k;
      table[x * n + y] = static_cast<Element>(((b1 + b2) % 2) * k + a);
    }
  }
  return Group(n, std::move(table), std::move(labels));
}

Group make_dicyclic(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::UnsupportedFamily, "dicyclic group needs k >= 1");
  // a^i x^j at index j*2k + i with a^{2k} = 1, x^2 = a^k, x^-1 a x = a^-1.
  const std::size_t m = 2 * k;
  const std::size_t n = 4 * k;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t i = u % m, j = u / m;
    if (j == 0) {
      labels[u] = i == 0 ? "e" : power_label("a", i);
    } else {
      labels[u] = i == 0 ? "x" : power_label("a", i) + " x";
    }
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t l = v % m, t = v / m;
      std::size_t ri, rj;
      if (j == 0) {
        ri = (i + l) % m;
        rj = t;
      } else if (t == 0) {
        ri = (i + m - l) % m;
        rj = 1;
      } else {
        ri = (i + m - l + k) % m;
        rj = 0;
      }
      table[u * n + v] = static_cast<Element>(rj * m + ri);
    }
  }
  return Group(n, std::move(table), std::move(labels));
}

Group make_symmetric(std::size_t degree, std::size_t max_order) {
  check_order(factorial_bounded(degree, max_order), max_order, "symmetric:" + std::to_string(degree));
  std::vector<Permutation> elements;
  Permutation p = identity_permutation(degree);
  do {
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(std::move(elements));
}

Group make_alternating(std::size_t degree, std::size_t max_order) {
  const std::size_t full = factorial_bounded(degree, 2 * max_order + 1);
  check_order(degree < 2 ? 1 : full / 2, max_order, "alternating:" + std::to_string(degree));
  std::vector<Permutation> elements;
  Permutation p = identity_permutation(degree);
  do {
    if (is_even(p)) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(std::move(elements));
}

Group make_permutation_group(std::size_t degree, const std::vector<Permutation>& generators,
                             std::size_t max_order) {
  for (const auto& g : generators) {
    std::vector<bool> hit(degree, false);
    if (g.size() != degree) throw Error(ErrorCode::BadInput, "generator has wrong degree");
    for (const auto x : g) {
      if (x >= degree || hit[x]) throw Error(ErrorCode::BadInput, "generator is not a permutation");
      hit[x] = true;
    }
  }
  std::vector<Permutation> elements{identity_permutation(degree)};
  std::map<Permutation, Element> seen{{elements.front(), 0}};
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(elements[cur], g);
      if (seen.contains(next)) continue;
      check_order(elements.size() + 1, max_order, "permutation group");
      seen.emplace(next, static_cast<Element>(elements.size()));
      queue.push_back(static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  return from_permutations(std::move(elements));
}

Group make_direct_product(const Group& lhs, const Group& rhs, std::size_t max_order) {
  const std::size_t n1 = lhs.order(), n2 = rhs.order();
  check_order(n1 * n2, max_order, "direct product");
  const std::size_t n = n1 * n2;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto a1 = static_cast<Element>(x / n2), b1 = static_cast<Element>(x % n2);
    labels[x] = "(" + lhs.label(a1) + "," + rhs.label(b1) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto a2 = static_cast<Element>(y / n2), b2 = static_cast<Element>(y % n2);
      table[x * n + y] = static_cast<Element>(std::size_t(lhs.mul(a1, a2)) * n2 + rhs.mul(b1, b2));
    }
  }
  return Group(n, std::move(table), std::move(labels));
}

namespace {

void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint16_t>(i);
  return r;
}

}  // namespace

bool is_alternating_ambivalent(std::size_t degree) {
  std::vector<std::vector<std::size_t>> types;
  std::vector<std::size_t> scratch;
  partitions(degree, degree, scratch, types);

  for (const auto& type : types) {
    // Lay the cycles out on consecutive points.
    std::vector<std::vector<std::uint16_t>> cycles;
    std::uint16_t next = 0;
    for (const auto len : type) {
      std::vector<std::uint16_t> c(len);
      for (auto& x : c) x = next++;
      cycles.push_back(std::move(c));
    }
    Permutation g = identity_permutation(degree);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) g[c[i]] = c[(i + 1) % c.size()];
    }
    if (!is_even(g)) continue;

    // pi(a_i) = a_{-i} on every cycle conjugates g to g^-1.
    Permutation pi = identity_permutation(degree);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) pi[c[i]] = c[(c.size() - i) % c.size()];
    }
    const Permutation g_inv = inverse_permutation(g);
    if (compose(compose(pi, g), inverse_permutation(pi)) != g_inv) {
      throw Error(ErrorCode::InvariantViolation, "inverting conjugator construction failed");
    }
    if (is_even(pi)) continue;

    // Need an odd element of C_{S_n}(g): cycles themselves and swaps of
    // equal-length cycles generate it.
    bool has_odd = false;
    for (std::size_t a = 0; a < cycles.size() && !has_odd; ++a) {
      Permutation z = identity_permutation(degree);
      const auto& c = cycles[a];
      for (std::size_t i = 0; i < c.size(); ++i) z[c[i]] = c[(i + 1) % c.size()];
      has_odd = !is_even(z);
      if (a + 1 < cycles.size() && cycles[a + 1].size() == c.size() && !has_odd) {
        Permutation swap = identity_permutation(degree);
        const auto& d = cycles[a + 1];
        for (std::size_t i = 0; i < c.size(); ++i) {
          swap[c[i]] = d[i];
          swap[d[i]] = c[i];
        }
        if (compose(swap, g) != compose(g, swap)) {
          throw Error(ErrorCode::InvariantViolation, "cycle swap does not centralize");
        }
        has_odd = !is_even(swap);
      }
    }
    if (!has_odd) return false;
  }
  return true;
}

}  // namespace mixcay
