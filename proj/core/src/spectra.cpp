#include "mixcay/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "mixcay/errors.hpp"

namespace mixcay {

std::size_t Spectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

namespace {

std::string format_number(double x, int precision) {
  if (std::abs(x - std::round(x)) < std::pow(10.0, -precision)) {
    const long long r = std::llround(x);
    return std::to_string(r);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  return buf;
}

}  // namespace

std::string Spectrum::to_string(int precision) const {
  std::string out = "{";
  const double eps = std::pow(10.0, -precision);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    const auto& v = entries[i].value;
    if (std::abs(v.imag()) < eps) {
      out += format_number(v.real(), precision);
    } else {
      out += "(" + format_number(v.real(), precision) + (v.imag() < 0 ? "-" : "+") +
             format_number(std::abs(v.imag()), precision) + "i)";
    }
    out += "^" + std::to_string(entries[i].multiplicity);
  }
  return out + "}";
}

Spectrum merge_spectrum(std::vector<SpectrumEntry> raw, double gap) {
  std::sort(raw.begin(), raw.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  struct Cluster {
    Complex anchor;
    Complex sum;
    std::size_t multiplicity;
  };
  std::vector<Cluster> clusters;
  for (const auto& e : raw) {
    Cluster* hit = nullptr;
    // Sorted by real part, so only trailing clusters can be within the gap.
    for (auto it = clusters.rbegin(); it != clusters.rend(); ++it) {
      if (e.value.real() - it->anchor.real() >= gap) break;
      if (std::abs(e.value.imag() - it->anchor.imag()) < gap) {
        hit = &*it;
        break;
      }
    }
    if (hit) {
      hit->sum += e.value * static_cast<double>(e.multiplicity);
      hit->multiplicity += e.multiplicity;
    } else {
      clusters.push_back({e.value, e.value * static_cast<double>(e.multiplicity), e.multiplicity});
    }
  }
  Spectrum s;
  for (const auto& c : clusters) {
    if (c.multiplicity == 0) continue;
    s.entries.push_back({c.sum / static_cast<double>(c.multiplicity), c.multiplicity});
  }
  std::sort(s.entries.begin(), s.entries.end(), [gap](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (std::abs(a.value.real() - b.value.real()) >= gap) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return s;
}

bool spectra_agree(const Spectrum& lhs, const Spectrum& rhs, double tol) {
  if (lhs.entries.size() != rhs.entries.size()) return false;
  for (std::size_t i = 0; i < lhs.entries.size(); ++i) {
    if (lhs.entries[i].multiplicity != rhs.entries[i].multiplicity) return false;
    if (std::abs(lhs.entries[i].value - rhs.entries[i].value) > tol) return false;
  }
  return true;
}

Spectrum CharacterSpectrum::merged(double gap) const {
  std::vector<SpectrumEntry> raw;
  for (std::size_t j = 0; j < values.size(); ++j) raw.push_back({values[j], multiplicities[j]});
  return merge_spectrum(std::move(raw), gap);
}

HermitianAdjacency build_h_matrix(const Group& group, const ConnectionSet& set) {
  const std::size_t n = group.order();
  HermitianAdjacency h(n);
  const auto& sym = set.symmetric_part();
  const auto& skew = set.skew_part();
  for (Element u = 0; u < n; ++u) {
    const Element u_inv = group.inv(u);
    for (Element v = 0; v < n; ++v) {
      const Element d = group.mul(v, u_inv);
      if (sym.test(d)) {
        h(u, v) = 1.0;
      } else if (skew.test(d)) {
        h(u, v) = unity::omega6;
      } else if (skew.test(group.inv(d))) {
        h(u, v) = unity::omega6_5;
      }
    }
  }
  return h;
}

ZeroOneAdjacency build_a_matrix(const Group& group, const ConnectionSet& set) {
  const std::size_t n = group.order();
  ZeroOneAdjacency a(n);
  for (Element u = 0; u < n; ++u) {
    const Element u_inv = group.inv(u);
    for (Element v = 0; v < n; ++v) {
      if (set.members().test(group.mul(v, u_inv))) a(u, v) = 1.0;
    }
  }
  return a;
}

Complex normalized_character_sum(const ClassData& classes, const CharacterTable& table, const ElementSet& set,
                                 std::size_t j) {
  Complex s = 0.0;
  for (ClassIndex c = 0; c < classes.num_classes(); ++c) {
    std::size_t count = 0;
    for (const auto e : classes.members[c]) count += set.test(e) ? 1 : 0;
    if (count) s += static_cast<double>(count) * table.value(j, c);
  }
  return s / static_cast<double>(table.degree(j));
}

namespace {

void require_normal(const ClassData& classes, const ConnectionSet& set) {
  if (!is_normal(classes, set.members())) {
    throw Error(ErrorCode::NotNormal, "connection set is not a union of conjugacy classes");
  }
}

std::vector<std::size_t> squared_degrees(const CharacterTable& table) {
  std::vector<std::size_t> m;
  for (std::size_t j = 0; j < table.size(); ++j) {
    m.push_back(static_cast<std::size_t>(table.degree(j)) * static_cast<std::size_t>(table.degree(j)));
  }
  return m;
}

/// The inverse set of a normal set, expressed classwise.
ElementSet inverse_of_normal(const ClassData& classes, const ElementSet& set) {
  ElementSet out(set.size());
  for (ClassIndex c = 0; c < classes.num_classes(); ++c) {
    if (set.test(classes.reps[c])) {
      for (const auto e : classes.members[classes.inverse_class[c]]) out.set(e);
    }
  }
  return out;
}

}  // namespace

CharacterSpectrum hs_spectrum_by_characters(const ClassData& classes, const CharacterTable& table,
                                            const ConnectionSet& set) {
  require_normal(classes, set);
  const ElementSet skew_inv = inverse_of_normal(classes, set.skew_part());
  CharacterSpectrum out;
  out.multiplicities = squared_degrees(table);
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Complex lambda = normalized_character_sum(classes, table, set.symmetric_part(), j);
    const Complex mu = unity::omega6 * normalized_character_sum(classes, table, set.skew_part(), j) +
                       unity::omega6_5 * normalized_character_sum(classes, table, skew_inv, j);
    out.values.push_back(lambda + mu);
  }
  return out;
}

CharacterSpectrum adjacency_spectrum_by_characters(const ClassData& classes, const CharacterTable& table,
                                                   const ConnectionSet& set) {
  require_normal(classes, set);
  CharacterSpectrum out;
  out.multiplicities = squared_degrees(table);
  for (std::size_t j = 0; j < table.size(); ++j) {
    out.values.push_back(normalized_character_sum(classes, table, set.members(), j));
  }
  return out;
}

Spectrum hs_spectrum_direct(const HermitianAdjacency& h) {
  const auto eig = hermitian_eigen(h, false);
  std::vector<SpectrumEntry> raw;
  raw.reserve(eig.values.size());
  for (const double v : eig.values) raw.push_back({Complex(v, 0.0), 1});
  return merge_spectrum(std::move(raw));
}

namespace {

template <typename T>
MomentCheck moment_check_impl(const Matrix<T>& m, const Spectrum& spectrum, int kmax) {
  const std::size_t n = m.size();
  double max_abs = 1.0;
  for (const auto& e : spectrum.entries) max_abs = std::max(max_abs, std::abs(e.value));

  Matrix<T> power = m;
  Matrix<T> next(n);
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) next(i, j) = T{};
        for (std::size_t l = 0; l < n; ++l) {
          const T a = power(i, l);
          if (a == T{}) continue;
          for (std::size_t j = 0; j < n; ++j) next(i, j) += a * m(l, j);
        }
      }
      std::swap(power, next);
    }
    Complex trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += power(i, i);
    Complex moment = 0.0;
    for (const auto& e : spectrum.entries) moment += static_cast<double>(e.multiplicity) * std::pow(e.value, k);
    const double tol = 1e-6 * static_cast<double>(n) * std::pow(max_abs, k);
    if (std::abs(trace - moment) > tol) return {false, k};
  }
  return {};
}

}  // namespace

MomentCheck moment_check(const ComplexMatrix& m, const Spectrum& spectrum, int kmax) {
  return moment_check_impl(m, spectrum, kmax);
}

MomentCheck moment_check(const ZeroOneAdjacency& m, const Spectrum& spectrum, int kmax) {
  return moment_check_impl(m, spectrum, kmax);
}

EisensteinRational GroupAlgebraElement::class_sum(const ClassData& classes, ClassIndex c) const {
  EisensteinRational s;
  for (const auto e : classes.members[c]) s += coefficients_[e];
  return s;
}

long long GroupAlgebraElement::common_denominator() const {
  long long d = 1;
  for (const auto& c : coefficients_) {
    d = std::lcm(d, c.a().denominator());
    d = std::lcm(d, c.b().denominator());
  }
  return d;
}

Complex evaluate_character_sum(const ClassData& classes, const CharacterTable& table, const GroupAlgebraElement& x,
                               std::size_t j) {
  Complex s = 0.0;
  for (ClassIndex c = 0; c < classes.num_classes(); ++c) {
    const auto sum = x.class_sum(classes, c);
    if (!sum.is_zero()) s += sum.to_complex() * table.value(j, c);
  }
  return s;
}

}  // namespace mixcay
