#include "mixcay/integrality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mixcay/errors.hpp"

namespace mixcay {

double integer_distance(double x) { return std::abs(x - std::round(x)); }

namespace {

void require_normal(const ClassData& classes, const ConnectionSet& set) {
  if (!is_normal(classes, set.members())) {
    throw Error(ErrorCode::NotNormal, "connection set is not a union of conjugacy classes");
  }
}

double complex_integer_distance(Complex z) { return std::max(std::abs(z.imag()), integer_distance(z.real())); }

}  // namespace

RationalityConditions check_rationality_conditions(const Group& group, const ClassData& classes,
                                                   const GroupAlgebraElement& x) {
  const std::size_t h = classes.num_classes();
  std::vector<EisensteinRational> sigma(h);
  for (ClassIndex c = 0; c < h; ++c) sigma[c] = x.class_sum(classes, c);

  RationalityConditions r;
  for (ClassIndex c = 0; c < h; ++c) {
    const ClassIndex ci = classes.inverse_class[c];
    const auto m = static_cast<long long>(classes.rep_order[c]);
    if (!(sigma[c] == sigma[ci].conj())) r.conjugate_symmetric = false;
    if (in_gamma3(group, classes.reps[c])) {
      for (const auto k : divisor_set_mod3(m, 1, 1)) {
        if (!(sigma[classes.power_class(c, k)] == sigma[c])) r.constant_on_gamma3_orbits = false;
      }
    } else {
      if (sigma[c].real_part() != sigma[ci].real_part()) r.inverse_real_parts_equal = false;
      if (!sigma[c].is_rational()) r.real_outside_gamma3 = false;
      if (m > 1) {
        for (const auto k : divisor_set(m, 1)) {
          if (!(sigma[classes.power_class(c, k)] == sigma[c])) r.constant_on_atoms_outside_gamma3 = false;
        }
      }
    }
  }
  return r;
}

NumericRationality characters_rational(const ClassData& classes, const CharacterTable& table,
                                       const GroupAlgebraElement& x, double tol) {
  const auto denominator = static_cast<double>(x.common_denominator());
  NumericRationality out;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Complex z = evaluate_character_sum(classes, table, x, j);
    const double d = std::max(std::abs(z.imag()), integer_distance(denominator * z.real()) / denominator);
    out.distances.push_back(d);
    if (d > tol) out.rational = false;
  }
  return out;
}

StructuralVerdict is_hs_integral_structural(const Group& group, const ClassData& classes, const ConnectionSet& set) {
  require_normal(classes, set);
  StructuralVerdict v;
  const auto& sym = set.symmetric_part();
  const auto& skew = set.skew_part();

  v.symmetric_part_in_b = true;
  for (auto i = sym.find_first(); i != ElementSet::npos; i = sym.find_next(i)) {
    const auto x = static_cast<Element>(i);
    if (!atom(group, x).is_subset_of(sym)) {
      v.symmetric_part_in_b = false;
      v.offending = x;
      v.witness = "atom of " + group.label(x) + " is not contained in the symmetric part";
      break;
    }
  }

  v.skew_part_in_e = true;
  for (auto i = skew.find_first(); i != ElementSet::npos; i = skew.find_next(i)) {
    const auto y = static_cast<Element>(i);
    if (!in_gamma3(group, y)) {
      v.skew_part_in_e = false;
      if (!v.offending) {
        v.offending = y;
        v.witness = "skew element " + group.label(y) + " has order not divisible by 3";
      }
      break;
    }
    if (!atom3(group, y).is_subset_of(skew)) {
      v.skew_part_in_e = false;
      if (!v.offending) {
        v.offending = y;
        v.witness = "class <<" + group.label(y) + ">> is not contained in the skew part";
      }
      break;
    }
  }

  v.integral = v.symmetric_part_in_b && v.skew_part_in_e;
  if (v.integral) v.witness = "symmetric part in B, skew part in E";
  return v;
}

SpectralVerdict is_hs_integral_spectral(const ClassData& classes, const CharacterTable& table,
                                        const ConnectionSet& set, double tol) {
  SpectralVerdict v;
  v.spectrum = hs_spectrum_by_characters(classes, table, set);
  v.integral = true;
  for (const auto& z : v.spectrum.values) {
    const double d = complex_integer_distance(z);
    v.distances.push_back(d);
    if (d > tol) v.integral = false;
  }
  return v;
}

IntegralityReport integrality_report(const GroupContext& ctx, const ConnectionSet& set, double tol) {
  IntegralityReport r;
  r.structural = is_hs_integral_structural(ctx.group, ctx.classes, set);
  r.spectral = is_hs_integral_spectral(ctx.classes, ctx.characters, set, tol);
  r.agree = r.structural.integral == r.spectral.integral;
  return r;
}

DecompositionCheck decompose_check(const Group& group, const ClassData& classes, const CharacterTable& table,
                                   const ConnectionSet& set, double tol) {
  DecompositionCheck d;
  d.whole = is_hs_integral_spectral(classes, table, set, tol).integral;
  d.symmetric_part = is_hs_integral_spectral(classes, table, ConnectionSet(group, set.symmetric_part()), tol).integral;
  d.skew_part = is_hs_integral_spectral(classes, table, ConnectionSet(group, set.skew_part()), tol).integral;
  return d;
}

FGValues f_g_values(const ClassData& classes, const CharacterTable& table, const ConnectionSet& set) {
  require_normal(classes, set);
  FGValues v;
  const std::size_t h = table.size();
  for (std::size_t j = 0; j < h; ++j) {
    v.f.push_back(normalized_character_sum(classes, table, set.symmetric_part(), j).real());
    const Complex skew_sum = normalized_character_sum(classes, table, set.skew_part(), j);
    v.g.push_back(2.0 * (unity::eisenstein_split * skew_sum).real());
  }
  for (std::size_t j = 0; j < h; ++j) v.g_minus_conjugate.push_back(v.g[j] - v.g[table.conjugate(j)]);
  return v;
}

EisensteinCoordinates eisenstein_coordinates(Complex z) {
  const double b = z.imag() / (std::numbers::sqrt3 / 2.0);
  return {z.real() + b / 2.0, b};
}

EisensteinReport is_eisenstein_integral(const ClassData& classes, const CharacterTable& table,
                                        const ConnectionSet& set, double tol) {
  EisensteinReport r;
  r.values = f_g_values(classes, table, set);
  r.verdict = true;
  for (std::size_t j = 0; j < table.size(); ++j) {
    r.f_snapped.push_back(std::llround(r.values.f[j]));
    r.g_snapped.push_back(std::llround(r.values.g[j]));
    r.f_distance.push_back(integer_distance(r.values.f[j]));
    r.g_distance.push_back(integer_distance(r.values.g[j]));
    if (r.f_distance.back() > tol || r.g_distance.back() > tol) r.verdict = false;
  }
  r.adjacency = adjacency_spectrum_by_characters(classes, table, set);
  r.adjacency_verdict = true;
  for (const auto& z : r.adjacency.values) {
    const auto e = eisenstein_coordinates(z);
    if (integer_distance(e.a) > tol || integer_distance(e.b) > tol) r.adjacency_verdict = false;
  }
  r.routes_agree = r.verdict == r.adjacency_verdict;
  r.hs_integral = is_hs_integral_spectral(classes, table, set, tol).integral;
  r.implication_holds = !r.verdict || r.hs_integral;
  return r;
}

namespace {

std::vector<double> normalized_real_sums(const ClassData& classes, const CharacterTable& table,
                                         const ElementSet& set) {
  std::vector<double> out;
  for (std::size_t j = 0; j < table.size(); ++j) {
    out.push_back(normalized_character_sum(classes, table, set, j).real());
  }
  return out;
}

std::vector<double> block_t_values(const Group& group, const ClassData& classes, const CharacterTable& table,
                                   const ElementSet& block) {
  const ElementSet inv = inverse_set(group, block);
  std::vector<double> out;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Complex diff =
        normalized_character_sum(classes, table, block, j) - normalized_character_sum(classes, table, inv, j);
    out.push_back(-std::numbers::sqrt3 * diff.imag());
  }
  return out;
}

}  // namespace

std::vector<double> c_values(const Group& group, const ClassData& classes, const CharacterTable& table, Element x) {
  return normalized_real_sums(classes, table, closure_s1(group, classes, x));
}

double c_value(const Group& group, const ClassData& classes, const CharacterTable& table, Element x, std::size_t j) {
  return c_values(group, classes, table, x).at(j);
}

std::optional<std::vector<double>> t_values(const Group& group, const ClassData& classes, const CharacterTable& table,
                                            Element y) {
  const auto block = closure_s2(group, classes, y);
  if (!block) return std::nullopt;
  return block_t_values(group, classes, table, *block);
}

std::optional<double> t_value(const Group& group, const ClassData& classes, const CharacterTable& table, Element y,
                              std::size_t j) {
  const auto t = t_values(group, classes, table, y);
  if (!t) return std::nullopt;
  return t->at(j);
}

void conjecture_scan(const GroupContext& ctx, ConjectureScanResult& out, double tol, bool keep_records) {
  const Group& group = ctx.group;
  const std::string name = ctx.spec_string();
  out.groups.push_back(name);
  ElementSet covered(group.order());
  for (Element y = 1; y < group.order(); ++y) {
    if (covered.test(y) || !ctx.atoms.gamma3.test(y)) continue;
    const auto block = closure_s2(group, ctx.classes, y);
    if (!block) continue;
    covered |= *block;
    ++out.blocks_scanned;
    const ElementSet s1 = *block | inverse_set(group, *block);
    const auto c = normalized_real_sums(ctx.classes, ctx.characters, s1);
    const auto t = block_t_values(group, ctx.classes, ctx.characters, *block);
    for (std::size_t j = 0; j < t.size(); ++j) {
      ConjectureRecord rec;
      rec.group = name;
      rec.y = y;
      rec.y_label = group.label(y);
      rec.character = j;
      rec.c = c[j];
      rec.t = t[j];
      rec.t_over_3_distance = integer_distance(t[j] / 3.0);
      rec.c_distance = integer_distance(c[j]);
      rec.t_distance = integer_distance(t[j]);
      rec.parity_ok = (std::llround(c[j]) - std::llround(t[j])) % 2 == 0;
      if (rec.t_over_3_distance > tol) out.counterexamples.push_back(rec);
      if (rec.c_distance > tol || rec.t_distance > tol || !rec.parity_ok) out.invariant_failures.push_back(rec);
      if (keep_records) out.records.push_back(std::move(rec));
    }
  }
}

ConjectureScanResult conjecture_scan(const std::vector<GroupSpec>& groups, const ContextOptions& options, double tol,
                                     bool keep_records) {
  ConjectureScanResult out;
  for (const auto& spec : groups) conjecture_scan(GroupContext::build(spec, options), out, tol, keep_records);
  return out;
}

BlockCheck block_decomposition_check(const Group& group, const ClassData& classes, const CharacterTable& table,
                                     const ConnectionSet& set, double tol) {
  BlockCheck r;
  const FGValues fg = f_g_values(classes, table, set);
  const std::size_t h = table.size();
  r.g_direct = fg.g;

  const ElementSet& skew = set.skew_part();
  ElementSet uncovered = skew;
  r.partitioned = true;
  std::vector<double> acc(h, 0.0);
  while (uncovered.any()) {
    const auto y = static_cast<Element>(uncovered.find_first());
    const auto block = in_gamma3(group, y) ? closure_s2(group, classes, y) : std::nullopt;
    if (!block || !block->is_subset_of(uncovered)) {
      r.partitioned = false;
      break;
    }
    uncovered -= *block;
    r.block_reps.push_back(y);
    const auto c = normalized_real_sums(classes, table, *block | inverse_set(group, *block));
    const auto t = block_t_values(group, classes, table, *block);
    for (std::size_t j = 0; j < h; ++j) acc[j] += 0.5 * (c[j] - t[j] / 3.0);
  }
  if (!r.partitioned) r.block_reps.clear();

  // The hypothesis covers every y in Sbar whose block exists, whether or
  // not those blocks tile Sbar.
  ElementSet seen(group.order());
  for (auto i = skew.find_first(); i != ElementSet::npos; i = skew.find_next(i)) {
    const auto y = static_cast<Element>(i);
    if (seen.test(y) || !in_gamma3(group, y)) continue;
    const auto block = closure_s2(group, classes, y);
    if (!block) continue;
    seen |= *block;
    for (const double t : block_t_values(group, classes, table, *block)) {
      if (integer_distance(t / 3.0) > tol) r.hypothesis_holds = false;
    }
  }

  if (r.partitioned) {
    r.g_from_blocks = acc;
    for (std::size_t j = 0; j < h; ++j) r.max_g_gap = std::max(r.max_g_gap, std::abs(acc[j] - fg.g[j]));
    r.g_agree = r.max_g_gap <= tol;
  }

  r.hs_integral = is_hs_integral_spectral(classes, table, set, tol).integral;
  r.eisenstein_integral = true;
  for (std::size_t j = 0; j < h; ++j) {
    if (integer_distance(fg.f[j]) > tol || integer_distance(fg.g[j]) > tol) r.eisenstein_integral = false;
  }
  r.implication_holds = !(r.hypothesis_holds && r.hs_integral) || r.eisenstein_integral;
  return r;
}

}  // namespace mixcay
