#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "mixcay/atoms.hpp"
#include "mixcay/context.hpp"
#include "mixcay/integrality.hpp"
#include "mixcay/spectra.hpp"

namespace mixcay {

/// Bit c set iff conjugacy class c is in the set. Limits enumeration to
/// groups with at most 64 classes, far above any enumerable bound.
using ClassMask = std::uint64_t;

enum class EnumerationMode { All, MixedOnly, OrientedOnly, SymmetricOnly };

/// "all", "mixed-only", "oriented-only", "symmetric-only". Throws BadInput.
EnumerationMode parse_enumeration_mode(std::string_view text);
std::string_view to_string(EnumerationMode mode) noexcept;

inline constexpr std::size_t kDefaultEnumerationBound = std::size_t{1} << 20;

ElementSet mask_to_set(const ClassData& classes, ClassMask mask);
/// Throws NotNormal when the set is not a union of classes.
ClassMask set_to_mask(const ClassData& classes, const ElementSet& set);
ClassMask inverse_mask(const ClassData& classes, ClassMask mask);

/// 2^(h-1) - 1 nonempty normal sets without the identity. Throws
/// EnumerationTooLarge when 2^(h-1) exceeds `bound`.
std::size_t normal_set_count(const ClassData& classes, std::size_t bound = kDefaultEnumerationBound);

/// Visits every nonempty union of non-identity classes that passes `mode`:
/// oriented-only keeps skew-symmetric sets, symmetric-only keeps symmetric
/// sets and mixed-only keeps the rest. The visiting order is deterministic.
/// Throws EnumerationTooLarge.
void for_each_normal_set(const ClassData& classes, EnumerationMode mode, std::size_t bound,
                         const std::function<void(ClassMask)>& visit);

std::vector<ClassMask> enumerate_normal_sets(const ClassData& classes, EnumerationMode mode,
                                             std::size_t bound = kDefaultEnumerationBound);

struct SetVerdicts {
  bool structural = false;
  bool symmetric_structural = false;
  bool skew_structural = false;
  bool spectral = false;
  bool symmetric_spectral = false;
  bool skew_spectral = false;
  bool eisenstein = false;
  bool eisenstein_by_adjacency = false;
};

/// Class-level evaluation of every normal set of one group. Character sums
/// are accumulated along the enumeration tree, so each set costs O(h) on top
/// of its parent.
class NormalSetEvaluator {
 public:
  /// Partial sums of one set: lambda_j over the symmetric part and the raw
  /// normalized character sum over the skew part.
  struct View {
    ClassMask members = 0;
    ClassMask symmetric = 0;
    ClassMask skew = 0;
    const double* lambda = nullptr;
    const Complex* skew_sum = nullptr;
    std::size_t characters = 0;

    /// lambda_j + mu_j
    double hs_value(std::size_t j) const;
    /// lambda_j + (1/d_j) sum_{Sbar} chi_j
    Complex adjacency_value(std::size_t j) const { return lambda[j] + skew_sum[j]; }
    double mu(std::size_t j) const;
    double g(std::size_t j) const;
  };

  explicit NormalSetEvaluator(const GroupContext& ctx, double tol = kSnapTolerance);

  void for_each(EnumerationMode mode, std::size_t bound, const std::function<void(const View&)>& visit) const;

  SetVerdicts verdicts(const View& view) const;
  bool symmetric_in_b(ClassMask symmetric) const;
  bool skew_in_e(ClassMask skew) const;

  CharacterSpectrum hs_spectrum(const View& view) const;
  CharacterSpectrum adjacency_spectrum(const View& view) const;

  const GroupContext& context() const noexcept { return ctx_; }

 private:
  struct Unit {
    ClassIndex first;
    ClassIndex second;  // == first for self-inverse classes
  };

  const GroupContext& ctx_;
  double tol_;
  std::size_t h_;
  std::vector<Unit> units_;
  std::vector<std::vector<Complex>> column_;  // class -> (|Cl_c| chi_j(rep_c) / d_j)_j
  std::vector<ClassMask> need_atom_;
  std::vector<ClassMask> need_atom3_;
  ClassMask gamma3_ = 0;
};

}  // namespace mixcay
