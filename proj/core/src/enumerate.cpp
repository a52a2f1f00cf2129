#include "mixcay/enumerate.hpp"

#include <bit>
#include <cmath>

#include "mixcay/errors.hpp"

namespace mixcay {

EnumerationMode parse_enumeration_mode(std::string_view text) {
  if (text == "all") return EnumerationMode::All;
  if (text == "mixed-only") return EnumerationMode::MixedOnly;
  if (text == "oriented-only") return EnumerationMode::OrientedOnly;
  if (text == "symmetric-only") return EnumerationMode::SymmetricOnly;
  throw Error(ErrorCode::BadInput, "unknown enumeration mode '" + std::string(text) + "'");
}

std::string_view to_string(EnumerationMode mode) noexcept {
  switch (mode) {
    case EnumerationMode::All: return "all";
    case EnumerationMode::MixedOnly: return "mixed-only";
    case EnumerationMode::OrientedOnly: return "oriented-only";
    case EnumerationMode::SymmetricOnly: return "symmetric-only";
  }
  return "all";
}

ElementSet mask_to_set(const ClassData& classes, ClassMask mask) {
  ElementSet s(classes.group_order);
  for (ClassIndex c = 0; c < classes.num_classes() && c < 64; ++c) {
    if (mask >> c & 1U) {
      for (const auto e : classes.members[c]) s.set(e);
    }
  }
  return s;
}

ClassMask set_to_mask(const ClassData& classes, const ElementSet& set) {
  if (!is_normal(classes, set)) throw Error(ErrorCode::NotNormal, "set is not a union of conjugacy classes");
  if (classes.num_classes() > 64) throw Error(ErrorCode::EnumerationTooLarge, "more than 64 classes");
  ClassMask m = 0;
  for (ClassIndex c = 0; c < classes.num_classes(); ++c) {
    if (set.test(classes.reps[c])) m |= ClassMask{1} << c;
  }
  return m;
}

ClassMask inverse_mask(const ClassData& classes, ClassMask mask) {
  ClassMask out = 0;
  for (ClassIndex c = 0; c < classes.num_classes() && c < 64; ++c) {
    if (mask >> c & 1U) out |= ClassMask{1} << classes.inverse_class[c];
  }
  return out;
}

std::size_t normal_set_count(const ClassData& classes, std::size_t bound) {
  const std::size_t free_classes = classes.num_classes() - 1;
  if (free_classes >= 63 || (std::size_t{1} << free_classes) > bound) {
    throw Error(ErrorCode::EnumerationTooLarge, "2^" + std::to_string(free_classes) +
                                                    " normal sets exceed the enumeration bound " +
                                                    std::to_string(bound));
  }
  return (std::size_t{1} << free_classes) - 1;
}

namespace {

bool mode_accepts(EnumerationMode mode, ClassMask symmetric, ClassMask skew) {
  switch (mode) {
    case EnumerationMode::All: return true;
    case EnumerationMode::MixedOnly: return symmetric != 0 && skew != 0;
    case EnumerationMode::OrientedOnly: return symmetric == 0;
    case EnumerationMode::SymmetricOnly: return skew == 0;
  }
  return true;
}

}  // namespace

void for_each_normal_set(const ClassData& classes, EnumerationMode mode, std::size_t bound,
                         const std::function<void(ClassMask)>& visit) {
  normal_set_count(classes, bound);
  const auto h = classes.num_classes();
  // Plain binary counting over the non-identity classes; the symmetric and
  // skew parts follow from the inverse mask.
  const ClassMask total = ClassMask{1} << (h - 1);
  for (ClassMask bits = 1; bits < total; ++bits) {
    const ClassMask m = bits << 1;
    const ClassMask inv = inverse_mask(classes, m);
    if (mode_accepts(mode, m & inv, m & ~inv)) visit(m);
  }
}

std::vector<ClassMask> enumerate_normal_sets(const ClassData& classes, EnumerationMode mode, std::size_t bound) {
  std::vector<ClassMask> out;
  for_each_normal_set(classes, mode, bound, [&](ClassMask m) { out.push_back(m); });
  return out;
}

double NormalSetEvaluator::View::mu(std::size_t j) const { return 2.0 * (unity::omega6 * skew_sum[j]).real(); }

double NormalSetEvaluator::View::g(std::size_t j) const {
  return 2.0 * (unity::eisenstein_split * skew_sum[j]).real();
}

double NormalSetEvaluator::View::hs_value(std::size_t j) const { return lambda[j] + mu(j); }

namespace {

ClassMask classes_meeting(const ClassData& classes, const ElementSet& set) {
  ClassMask m = 0;
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    m |= ClassMask{1} << classes.class_of[i];
  }
  return m;
}

}  // namespace

NormalSetEvaluator::NormalSetEvaluator(const GroupContext& ctx, double tol)
    : ctx_(ctx), tol_(tol), h_(ctx.classes.num_classes()) {
  const auto& classes = ctx.classes;
  const auto& table = ctx.characters;
  if (h_ > 64) throw Error(ErrorCode::EnumerationTooLarge, "more than 64 classes");

  for (ClassIndex c = 1; c < h_; ++c) {
    const ClassIndex ci = classes.inverse_class[c];
    if (ci == c) {
      units_.push_back({c, c});
    } else if (c < ci) {
      units_.push_back({c, ci});
    }
  }

  column_.assign(h_, std::vector<Complex>(table.size()));
  for (ClassIndex c = 0; c < h_; ++c) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      column_[c][j] = static_cast<double>(classes.sizes[c]) * table.value(j, c) / static_cast<double>(table.degree(j));
    }
  }

  need_atom_.assign(h_, 0);
  need_atom3_.assign(h_, 0);
  for (ClassIndex c = 1; c < h_; ++c) {
    const Element rep = classes.reps[c];
    need_atom_[c] = classes_meeting(classes, ctx.atoms.atoms[ctx.atoms.atom_of[rep]]);
    if (ctx.atoms.gamma3.test(rep)) {
      gamma3_ |= ClassMask{1} << c;
      need_atom3_[c] = classes_meeting(classes, ctx.atoms.atoms3[ctx.atoms.atom3_of[rep]]);
    }
  }
}

bool NormalSetEvaluator::symmetric_in_b(ClassMask symmetric) const {
  for (ClassMask rest = symmetric; rest; rest &= rest - 1) {
    const auto c = static_cast<ClassIndex>(std::countr_zero(rest));
    if ((need_atom_[c] & ~symmetric) != 0) return false;
  }
  return true;
}

bool NormalSetEvaluator::skew_in_e(ClassMask skew) const {
  if (skew == 0) return true;
  if ((skew & ~gamma3_) != 0) return false;
  for (ClassMask rest = skew; rest; rest &= rest - 1) {
    const auto c = static_cast<ClassIndex>(std::countr_zero(rest));
    if ((need_atom3_[c] & ~skew) != 0) return false;
  }
  return true;
}

SetVerdicts NormalSetEvaluator::verdicts(const View& v) const {
  SetVerdicts r;
  r.symmetric_structural = symmetric_in_b(v.symmetric);
  r.skew_structural = skew_in_e(v.skew);
  r.structural = r.symmetric_structural && r.skew_structural;
  r.spectral = r.symmetric_spectral = r.skew_spectral = true;
  r.eisenstein = r.eisenstein_by_adjacency = true;
  for (std::size_t j = 0; j < v.characters; ++j) {
    const double lambda = v.lambda[j];
    const double mu = v.mu(j);
    if (integer_distance(lambda + mu) > tol_) r.spectral = false;
    if (integer_distance(lambda) > tol_) r.symmetric_spectral = false;
    if (integer_distance(mu) > tol_) r.skew_spectral = false;
    if (integer_distance(lambda) > tol_ || integer_distance(v.g(j)) > tol_) r.eisenstein = false;
    const auto e = eisenstein_coordinates(v.adjacency_value(j));
    if (integer_distance(e.a) > tol_ || integer_distance(e.b) > tol_) r.eisenstein_by_adjacency = false;
  }
  return r;
}

CharacterSpectrum NormalSetEvaluator::hs_spectrum(const View& v) const {
  CharacterSpectrum s;
  for (std::size_t j = 0; j < v.characters; ++j) {
    const auto d = static_cast<std::size_t>(ctx_.characters.degree(j));
    s.values.emplace_back(v.hs_value(j), 0.0);
    s.multiplicities.push_back(d * d);
  }
  return s;
}

CharacterSpectrum NormalSetEvaluator::adjacency_spectrum(const View& v) const {
  CharacterSpectrum s;
  for (std::size_t j = 0; j < v.characters; ++j) {
    const auto d = static_cast<std::size_t>(ctx_.characters.degree(j));
    s.values.push_back(v.adjacency_value(j));
    s.multiplicities.push_back(d * d);
  }
  return s;
}

void NormalSetEvaluator::for_each(EnumerationMode mode, std::size_t bound,
                                  const std::function<void(const View&)>& visit) const {
  normal_set_count(ctx_.classes, bound);
  const std::size_t k = ctx_.characters.size();
  const std::size_t depth = units_.size();
  std::vector<std::vector<double>> lambda(depth + 1, std::vector<double>(k, 0.0));
  std::vector<std::vector<Complex>> skew(depth + 1, std::vector<Complex>(k, 0.0));

  const bool want_symmetric = mode != EnumerationMode::OrientedOnly;
  const bool want_skew = mode != EnumerationMode::SymmetricOnly;

  struct Frame {
    ClassMask symmetric;
    ClassMask skew;
  };

  const std::function<void(std::size_t, Frame)> descend = [&](std::size_t level, Frame f) {
    if (level == depth) {
      if (f.symmetric == 0 && f.skew == 0) return;
      if (!mode_accepts(mode, f.symmetric, f.skew)) return;
      View v{f.symmetric | f.skew, f.symmetric, f.skew, lambda[level].data(), skew[level].data(), k};
      visit(v);
      return;
    }
    const Unit u = units_[level];
    const auto& lam_in = lambda[level];
    const auto& skew_in = skew[level];
    auto& lam_out = lambda[level + 1];
    auto& skew_out = skew[level + 1];
    const ClassMask bit_a = ClassMask{1} << u.first;
    const ClassMask bit_b = ClassMask{1} << u.second;

    lam_out = lam_in;
    skew_out = skew_in;
    descend(level + 1, f);

    if (want_symmetric) {
      for (std::size_t j = 0; j < k; ++j) {
        const Complex add = u.first == u.second ? column_[u.first][j] : column_[u.first][j] + column_[u.second][j];
        lam_out[j] = lam_in[j] + add.real();
        skew_out[j] = skew_in[j];
      }
      descend(level + 1, {f.symmetric | bit_a | bit_b, f.skew});
    }
    if (want_skew && u.first != u.second) {
      for (const ClassIndex c : {u.first, u.second}) {
        for (std::size_t j = 0; j < k; ++j) {
          lam_out[j] = lam_in[j];
          skew_out[j] = skew_in[j] + column_[c][j];
        }
        descend(level + 1, {f.symmetric, f.skew | (ClassMask{1} << c)});
      }
    }
  };
  descend(0, {0, 0});
}

}  // namespace mixcay
