#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>

#include "mixcay/class_algebra.hpp"
#include "mixcay/errors.hpp"
#include "mixcay/hermitian_eigen.hpp"

namespace mixcay {

namespace {

std::vector<std::size_t> nearest_conjugates(const std::vector<std::vector<Complex>>& values, double* worst) {
  const std::size_t h = values.size();
  std::vector<std::size_t> pair(h);
  double worst_dist = 0.0;
  for (std::size_t j = 0; j < h; ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < h; ++l) {
      double d = 0.0;
      for (std::size_t c = 0; c < values[j].size(); ++c) {
        d = std::max(d, std::abs(values[l][c] - std::conj(values[j][c])));
      }
      if (d < best) {
        best = d;
        pair[j] = l;
      }
    }
    worst_dist = std::max(worst_dist, best);
  }
  if (worst) *worst = worst_dist;
  return pair;
}

using RowKey = std::vector<std::pair<long long, long long>>;

RowKey row_key(const std::vector<Complex>& row) {
  RowKey key;
  key.reserve(row.size());
  for (const auto& v : row) key.emplace_back(std::llround(v.real() * 1e6), std::llround(v.imag() * 1e6));
  return key;
}

struct Attempt {
  std::optional<CharacterTable> table;
  ErrorCode failure = ErrorCode::DegenerateCombination;
  std::string detail;
};

}  // namespace

CharacterTable CharacterTable::from_values(std::vector<std::vector<Complex>> values) {
  CharacterTable t;
  for (const auto& row : values) {
    if (row.size() != values.size()) throw Error(ErrorCode::BadInput, "character table must be square");
    t.degrees_.push_back(static_cast<int>(std::lround(row.front().real())));
  }
  t.conj_pair_ = nearest_conjugates(values, nullptr);
  t.values_ = std::move(values);
  return t;
}

OrthogonalityResidual orthogonality_residual(const ClassData& classes, const CharacterTable& table) {
  OrthogonalityResidual r;
  const std::size_t h = table.size();
  const auto n = static_cast<double>(classes.group_order);
  for (std::size_t j = 0; j < h; ++j) {
    for (std::size_t l = 0; l < h; ++l) {
      Complex s = 0.0;
      for (ClassIndex c = 0; c < h; ++c) {
        s += static_cast<double>(classes.sizes[c]) * table.value(j, c) * std::conj(table.value(l, c));
      }
      r.rows = std::max(r.rows, std::abs(s / n - (j == l ? 1.0 : 0.0)));
    }
  }
  for (ClassIndex c = 0; c < h; ++c) {
    for (ClassIndex c2 = 0; c2 < h; ++c2) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < h; ++j) s += table.value(j, c) * std::conj(table.value(j, c2));
      s /= static_cast<double>(classes.centralizer_order[c]);
      r.columns = std::max(r.columns, std::abs(s - (c == c2 ? 1.0 : 0.0)));
    }
  }
  return r;
}

CharacterTable character_table(const Group& group, const ClassData& classes, const CharacterTableOptions& options) {
  const std::size_t h = classes.num_classes();
  const std::size_t n = group.order();
  if (h > options.max_classes) {
    throw Error(ErrorCode::SizeExceeded, std::to_string(h) + " classes exceed the character-table bound " +
                                             std::to_string(options.max_classes));
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coeff(1, 1'000'000);
  Attempt last;

  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    // Random combination sum_i c_i M_i with c_{i*} = conj(c_i), which makes the
    // size-rescaled matrix Hermitian.
    std::vector<Complex> c(h);
    for (ClassIndex i = 0; i < h; ++i) {
      const ClassIndex inv = classes.inverse_class[i];
      if (inv == i) {
        c[i] = static_cast<double>(coeff(rng));
      } else if (i < inv) {
        c[i] = Complex(coeff(rng), coeff(rng));
        c[inv] = std::conj(c[i]);
      }
    }

    ComplexMatrix m(h);
    for (ClassIndex k = 0; k < h; ++k) {
      const Element z = classes.reps[k];
      for (Element x = 0; x < n; ++x) {
        const Element y = group.mul(group.inv(x), z);
        m(classes.class_of[y], k) += c[classes.class_of[x]];
      }
    }
    ComplexMatrix b(h);
    for (std::size_t j = 0; j < h; ++j) {
      for (std::size_t k = 0; k < h; ++k) {
        b(j, k) = m(j, k) * std::sqrt(static_cast<double>(classes.sizes[k]) / static_cast<double>(classes.sizes[j]));
      }
    }
    const double bnorm = frobenius_norm(b);
    for (std::size_t j = 0; j < h; ++j) {
      for (std::size_t k = 0; k < h; ++k) {
        if (std::abs(b(j, k) - std::conj(b(k, j))) > 1e-9 * bnorm) {
          throw Error(ErrorCode::InvariantViolation, "rescaled class matrix combination is not Hermitian");
        }
      }
    }

    const auto eig = hermitian_eigen(b, true);
    const double scale = std::max(1.0, std::max(std::abs(eig.values.front()), std::abs(eig.values.back())));
    bool separated = true;
    for (std::size_t i = 0; i + 1 < h; ++i) {
      if (eig.values[i + 1] - eig.values[i] < 1e-9 * scale) separated = false;
    }
    if (!separated) {
      last = {std::nullopt, ErrorCode::DegenerateCombination, "repeated eigenvalue in random class combination"};
      continue;
    }
    if (max_residual(b, eig) > 1e-9 * bnorm) {
      last = {std::nullopt, ErrorCode::DegenerateCombination, "eigenvector residual above contract"};
      continue;
    }

    std::vector<std::vector<Complex>> rows;
    std::vector<int> degrees;
    bool degrees_ok = true;
    for (const auto& u : eig.vectors) {
      std::vector<Complex> w(h);
      for (std::size_t k = 0; k < h; ++k) w[k] = u[k] * std::sqrt(static_cast<double>(classes.sizes[k]));
      if (std::abs(w[0]) < 1e-12) {
        degrees_ok = false;
        break;
      }
      const Complex w0 = w[0];
      double norm = 0.0;
      for (std::size_t k = 0; k < h; ++k) {
        w[k] /= w0;
        norm += std::norm(w[k]) / static_cast<double>(classes.sizes[k]);
      }
      const double deg = std::sqrt(static_cast<double>(n) / norm);
      const long d = std::lround(deg);
      if (d < 1 || std::abs(deg - static_cast<double>(d)) > 1e-6) {
        degrees_ok = false;
        break;
      }
      std::vector<Complex> row(h);
      for (std::size_t k = 0; k < h; ++k) row[k] = static_cast<double>(d) * w[k] / static_cast<double>(classes.sizes[k]);
      row[0] = static_cast<double>(d);
      rows.push_back(std::move(row));
      degrees.push_back(static_cast<int>(d));
    }
    if (!degrees_ok) {
      last = {std::nullopt, ErrorCode::OrthogonalityFailure, "eigenvector does not normalize to an integral degree"};
      continue;
    }

    std::vector<std::size_t> order(h);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<RowKey> keys;
    for (const auto& r : rows) keys.push_back(row_key(r));
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      if (degrees[x] != degrees[y]) return degrees[x] < degrees[y];
      return keys[x] > keys[y];
    });

    CharacterTable table;
    for (const auto i : order) {
      table.values_.push_back(rows[i]);
      table.degrees_.push_back(degrees[i]);
    }
    double conj_dist = 0.0;
    table.conj_pair_ = nearest_conjugates(table.values_, &conj_dist);

    std::size_t sum_sq = 0;
    for (const int d : table.degrees_) sum_sq += static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    const auto resid = orthogonality_residual(classes, table);
    bool involution = true;
    for (std::size_t j = 0; j < h; ++j) involution = involution && table.conj_pair_[table.conj_pair_[j]] == j;

    if (sum_sq != n || resid.rows > options.tolerance || resid.columns > options.tolerance ||
        conj_dist > options.tolerance || !involution) {
      last = {std::nullopt, ErrorCode::OrthogonalityFailure,
              "verification failed (row residual " + std::to_string(resid.rows) + ", column residual " +
                  std::to_string(resid.columns) + ")"};
      continue;
    }
    return table;
  }
  throw Error(last.failure, last.detail + " after " + std::to_string(options.retries) + " retries");
}

}  // namespace mixcay
