#include "mixcay/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mixcay/errors.hpp"

namespace mixcay {

using cd = std::complex<double>;

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

namespace {

double offdiag_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return s;
}

}  // namespace

HermitianEigenResult hermitian_eigen(const ComplexMatrix& input, bool want_vectors, const JacobiOptions& options) {
  const std::size_t n = input.size();
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cd v = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }

  ComplexMatrix v;
  if (want_vectors) {
    v = ComplexMatrix(n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  }

  const double norm = frobenius_norm(a);
  const double target = options.relative_offdiag * norm;
  HermitianEigenResult result;

  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    const double off = std::sqrt(offdiag_norm2(a));
    if (off <= target || off == 0.0) break;
    // Skip tiny pivots on early sweeps, all of them later.
    const double threshold = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cd apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0 || mag < threshold) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (sweep > 3 && std::abs(app) + 100.0 * mag == std::abs(app) &&
            std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const cd phase = apq / mag;  // e^{i phi}
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cd sp = s * std::conj(phase);  // s e^{-i phi}

        // Columns p and q of A J, with J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cd akp = a(k, p);
          const cd akq = a(k, q);
          const cd nkp = c * akp - sp * akq;
          const cd nkq = s * akp + c * std::conj(phase) * akq;
          a(k, p) = nkp;
          a(p, k) = std::conj(nkp);
          a(k, q) = nkq;
          a(q, k) = std::conj(nkq);
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const cd vkp = v(k, p);
            const cd vkq = v(k, q);
            v(k, p) = c * vkp - sp * vkq;
            v(k, q) = s * vkp + c * std::conj(phase) * vkq;
          }
        }
      }
    }
  }
  if (sweep == options.max_sweeps && std::sqrt(offdiag_norm2(a)) > target) {
    throw Error(ErrorCode::ConvergenceFailure,
                "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
  }
  result.sweeps = sweep;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  result.values.reserve(n);
  for (const auto i : order) result.values.push_back(a(i, i).real());
  if (want_vectors) {
    result.vectors.reserve(n);
    for (const auto i : order) {
      std::vector<cd> col(n);
      for (std::size_t k = 0; k < n; ++k) col[k] = v(k, i);
      result.vectors.push_back(std::move(col));
    }
  }
  return result;
}

double max_residual(const ComplexMatrix& a, const HermitianEigenResult& eig) {
  const std::size_t n = a.size();
  double worst = 0.0;
  for (std::size_t e = 0; e < eig.vectors.size(); ++e) {
    const auto& x = eig.vectors[e];
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * x[j];
      s += std::norm(acc - eig.values[e] * x[i]);
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

}  // namespace mixcay
