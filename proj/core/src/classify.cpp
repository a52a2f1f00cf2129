#include "mixcay/classify.hpp"

#include <algorithm>

#include "mixcay/errors.hpp"

namespace mixcay {

std::string describe_set(const GroupContext& ctx, ClassMask mask) {
  if (mask == 0) return "∅";
  const auto& classes = ctx.classes;
  const ClassMask inv = inverse_mask(classes, mask);
  std::string out;
  for (ClassIndex c = 0; c < classes.num_classes(); ++c) {
    if (!(mask >> c & 1U)) continue;
    if (!out.empty()) out += " + ";
    out += "Cl[" + ctx.group.label(classes.reps[c]) + "]";
    if (!(inv >> c & 1U)) out += "→";
  }
  return out;
}

std::string set_argument(const GroupContext& ctx, ClassMask mask) {
  std::string out;
  for (ClassIndex c = 0; c < ctx.classes.num_classes(); ++c) {
    if (!(mask >> c & 1U)) continue;
    if (!out.empty()) out += ";";
    out += "Cl[" + ctx.group.label(ctx.classes.reps[c]) + "]";
  }
  return out;
}

void classify(const GroupContext& ctx, const ClassifyOptions& options, std::vector<ClassificationRow>& rows) {
  const NormalSetEvaluator evaluator(ctx, options.tol);
  const std::string name = ctx.spec_string();
  evaluator.for_each(options.mode, options.bound, [&](const NormalSetEvaluator::View& v) {
    const SetVerdicts r = evaluator.verdicts(v);
    const char* broken = nullptr;
    if (r.structural != r.spectral) {
      broken = "structural and spectral HS-integrality disagree";
    } else if (r.spectral != (r.symmetric_spectral && r.skew_spectral)) {
      broken = "HS-integrality differs from the conjunction over the symmetric and skew parts";
    } else if (r.symmetric_spectral != r.symmetric_structural) {
      broken = "symmetric part: integrality differs from membership in B";
    } else if (r.skew_spectral != r.skew_structural) {
      broken = "skew part: HS-integrality differs from membership in E";
    } else if (r.eisenstein && !r.spectral) {
      broken = "Eisenstein integral but not HS-integral";
    } else if (r.eisenstein != r.eisenstein_by_adjacency) {
      broken = "f/g route and adjacency route disagree on Eisenstein integrality";
    }
    if (broken) {
      throw Error(ErrorCode::InvariantViolation, std::string(broken) + " for " + describe_set(ctx, v.members) +
                                                     " in " + name + "; reproduce with: mixcay check --group '" +
                                                     name + "' --set '" + set_argument(ctx, v.members) + "'");
    }
    ClassificationRow row;
    row.group = name;
    row.descriptor = describe_set(ctx, v.members);
    row.symmetric_part = describe_set(ctx, v.symmetric);
    row.skew_part = describe_set(ctx, v.skew);
    row.hs_integral = r.spectral;
    row.eisenstein_integral = r.eisenstein;
    row.spectrum = evaluator.hs_spectrum(v).merged().to_string();
    row.mask = v.members;
    rows.push_back(std::move(row));
  });
}

std::vector<ClassificationRow> classify(const std::vector<GroupSpec>& groups, const ClassifyOptions& options,
                                        const ContextOptions& context_options) {
  std::vector<ClassificationRow> rows;
  for (const auto& spec : groups) {
    const auto ctx = GroupContext::build(spec, context_options);
    std::vector<ClassificationRow> group_rows;
    classify(ctx, options, group_rows);
    std::sort(group_rows.begin(), group_rows.end(),
              [](const ClassificationRow& a, const ClassificationRow& b) { return a.mask < b.mask; });
    rows.insert(rows.end(), std::make_move_iterator(group_rows.begin()), std::make_move_iterator(group_rows.end()));
  }
  return rows;
}

std::vector<GroupSpec> builtin_catalog(std::size_t max_order) {
  std::vector<GroupSpec> out;
  auto add = [&](const std::string& text) {
    auto spec = parse_group_spec(text);
    if (spec.expected_order(max_order) <= max_order) out.push_back(std::move(spec));
  };
  for (std::size_t k = 2; k <= max_order; ++k) add("cyclic:" + std::to_string(k));
  for (std::size_t k = 3; 2 * k <= max_order; ++k) add("dihedral:" + std::to_string(k));
  for (std::size_t k = 2; 4 * k <= max_order; ++k) add("dicyclic:" + std::to_string(k));
  for (std::size_t n = 3; n <= 8; ++n) add("symmetric:" + std::to_string(n));
  for (std::size_t n = 4; n <= 8; ++n) add("alternating:" + std::to_string(n));
  for (std::size_t a = 2; a * a <= max_order; ++a) {
    for (std::size_t b = a; a * b <= max_order; b += a) {
      add("product:cyclic:" + std::to_string(a) + ",cyclic:" + std::to_string(b));
    }
  }
  for (const char* base : {"dihedral:3", "dihedral:4", "dicyclic:2", "alternating:4", "dihedral:5"}) {
    add(std::string("product:") + base + ",cyclic:3");
  }
  std::vector<std::pair<std::size_t, std::string>> keys;
  for (const auto& s : out) keys.emplace_back(s.expected_order(max_order), to_string(s));
  std::vector<std::size_t> idx(out.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  std::vector<GroupSpec> sorted;
  for (const auto i : idx) sorted.push_back(out[i]);
  return sorted;
}

}  // namespace mixcay
