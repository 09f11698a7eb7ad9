// Copyright 2026 The lapsep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAPSEP_DENSITY_HPP_
#define LAPSEP_DENSITY_HPP_

#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "lapsep/graph.hpp"
#include "lapsep/labeling.hpp"
#include "lapsep/pt_graph.hpp"

namespace lapsep {

using IntMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using BigInt = boost::multiprecision::cpp_int;

/// L = D - A with rows and columns ordered by flat index: row i belongs to
/// the vertex labeled i.
struct LaplacianMatrix {
  IntMatrix entries;
  int edge_count = 0;

  std::int64_t trace() const { return entries.trace(); }
};

/// numerator / denominator, with denominator = tr(L) = 2|E| so the trace is
/// exactly one.
struct DensityMatrix {
  IntMatrix numerator;
  std::int64_t denominator = 1;

  int dimension() const { return static_cast<int>(numerator.rows()); }

  Eigen::MatrixXd ToDouble() const {
    return numerator.cast<double>() / static_cast<double>(denominator);
  }

  /// One row per line, entries as reduced "num/den" separated by spaces.
  std::string Dump() const {
    std::ostringstream out;
    for (int i = 0; i < numerator.rows(); ++i) {
      for (int j = 0; j < numerator.cols(); ++j) {
        std::int64_t num = numerator(i, j);
        std::int64_t den = denominator;
        const std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        if (j > 0) out << ' ';
        out << num << '/' << den;
      }
      out << '\n';
    }
    return out.str();
  }
};

inline LaplacianMatrix Laplacian(const Graph& g, const VertexLabeling& lab) {
  if (lab.order() != g.order()) {
    throw std::invalid_argument("labeling does not cover the graph");
  }
  if (g.empty()) throw EmptyGraphError();
  const int n = g.order();
  LaplacianMatrix out;
  out.edge_count = g.edge_count();
  out.entries = IntMatrix::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    const int i = lab.index(u);
    out.entries(i, i) = g.degree(u);
    for (int v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) out.entries(i, lab.index(v)) = -1;
    }
  }
  return out;
}

inline DensityMatrix Normalize(const LaplacianMatrix& laplacian) {
  const std::int64_t tr = laplacian.trace();
  if (tr <= 0) throw EmptyGraphError();
  return DensityMatrix{laplacian.entries, tr};
}

inline DensityMatrix NormalizedLaplacian(const Graph& g,
                                         const VertexLabeling& lab) {
  return Normalize(Laplacian(g, lab));
}

/// Entry ((u,v),(w,y)) of the result is entry ((u,y),(w,v)) of `m`, i.e.
/// transposition on the right block of the split.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
PartialTranspose(const Eigen::MatrixBase<Derived>& m,
                 const BipartiteSplit& split) {
  const int n = split.shape().size();
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("matrix dimension does not match split");
  }
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int src_row = split.flat(split.v_of(i), split.w_of(j));
      const int src_col = split.flat(split.v_of(j), split.w_of(i));
      out(i, j) = m(src_row, src_col);
    }
  }
  return out;
}

inline DensityMatrix PartialTranspose(const DensityMatrix& rho,
                                      const BipartiteSplit& split) {
  return DensityMatrix{PartialTranspose(rho.numerator, split),
                       rho.denominator};
}

class ArithmeticOverflow : public std::overflow_error {
 public:
  ArithmeticOverflow() : std::overflow_error("128-bit overflow") {}
};

namespace internal {

struct CheckedOps {
  using T = __int128;
  static T Add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
  }
  static T Mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
  }
};

struct BigOps {
  using T = BigInt;
  static T Add(const T& a, const T& b) { return a + b; }
  static T Mul(const T& a, const T& b) { return a * b; }
};

// Samuelson-Berkowitz: division-free, so the whole computation stays in the
// integers. Returns det(xI - M), highest degree first.
template <typename Ops>
std::vector<typename Ops::T> BerkowitzHighFirst(const IntMatrix& m) {
  using T = typename Ops::T;
  const int n = static_cast<int>(m.rows());
  std::vector<T> poly{T(1)};
  for (int r = 0; r < n; ++r) {
    std::vector<T> toeplitz(r + 2, T(0));
    toeplitz[0] = T(1);
    toeplitz[1] = T(-m(r, r));
    std::vector<T> vec(r);
    for (int i = 0; i < r; ++i) vec[i] = T(m(i, r));
    for (int k = 2; k <= r + 1; ++k) {
      T dot(0);
      for (int i = 0; i < r; ++i) dot = Ops::Add(dot, Ops::Mul(T(m(r, i)), vec[i]));
      toeplitz[k] = T(0) - dot;
      if (k == r + 1) break;
      std::vector<T> next(r, T(0));
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          next[i] = Ops::Add(next[i], Ops::Mul(T(m(i, j)), vec[j]));
        }
      }
      vec = std::move(next);
    }
    std::vector<T> grown(r + 2, T(0));
    for (int i = 0; i <= r + 1; ++i) {
      for (int j = 0; j <= std::min(i, r); ++j) {
        grown[i] = Ops::Add(grown[i], Ops::Mul(toeplitz[i - j], poly[j]));
      }
    }
    poly = std::move(grown);
  }
  return poly;
}

template <typename T>
bool AlternatingSigns(const std::vector<T>& high_first) {
  // For a real-rooted polynomial, all roots are >= 0 iff (-1)^i c_i >= 0
  // where c_i multiplies x^(n-i).
  for (std::size_t i = 0; i < high_first.size(); ++i) {
    const bool odd = i % 2 == 1;
    if (odd ? high_first[i] > 0 : high_first[i] < 0) return false;
  }
  return true;
}

inline void CheckSymmetric(const IntMatrix& m) {
  if (m.rows() != m.cols() || m != m.transpose()) {
    throw std::invalid_argument("matrix is not symmetric");
  }
}

}  // namespace internal

/// Coefficients of det(xI - M) as c_0, c_1, ..., c_n (c_k multiplies x^k).
inline std::vector<BigInt> CharacteristicPolynomial(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  std::vector<BigInt> out;
  try {
    for (const __int128 c : internal::BerkowitzHighFirst<internal::CheckedOps>(m)) {
      const bool neg = c < 0;
      unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(c)
                                  : static_cast<unsigned __int128>(c);
      BigInt value = static_cast<std::uint64_t>(mag >> 64);
      value <<= 64;
      value += static_cast<std::uint64_t>(mag);
      out.push_back(neg ? BigInt(-value) : value);
    }
  } catch (const ArithmeticOverflow&) {
    out = internal::BerkowitzHighFirst<internal::BigOps>(m);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Exact positive-semidefiniteness of a symmetric integer matrix from the
/// signs of its characteristic polynomial.
inline bool IsPositiveSemidefiniteExact(const IntMatrix& m) {
  internal::CheckSymmetric(m);
  try {
    return internal::AlternatingSigns(
        internal::BerkowitzHighFirst<internal::CheckedOps>(m));
  } catch (const ArithmeticOverflow&) {
    return internal::AlternatingSigns(
        internal::BerkowitzHighFirst<internal::BigOps>(m));
  }
}

inline Eigen::VectorXd Eigenvalues(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      rho.ToDouble(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

struct PptOptions {
  /// Band around zero for the smallest eigenvalue of the normalized partial
  /// transpose inside which the floating result is not trusted.
  double tolerance = 1e-9;
  /// Always run the exact tier, not only inside the tolerance band.
  bool exact = true;
  bool want_witness = true;
};

struct PptResult {
  bool ppt = true;
  double min_eigenvalue = 0.0;
  bool float_ppt = true;
  bool in_tolerance_band = false;
  bool exact_checked = false;
  bool exact_ppt = true;
  /// Integer vector x with x^T N x < 0 where N is the integer numerator of
  /// the partial transpose. Empty when PPT or when no witness was verified.
  std::vector<std::int64_t> witness;
  BigInt witness_value = 0;

  bool tiers_agree() const {
    return !exact_checked || in_tolerance_band || exact_ppt == float_ppt;
  }
};

namespace internal {

inline BigInt QuadraticForm(const IntMatrix& m,
                            const std::vector<std::int64_t>& x) {
  BigInt sum = 0;
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    BigInt row = 0;
    for (int j = 0; j < m.cols(); ++j) row += BigInt(m(i, j)) * x[j];
    sum += row * x[i];
  }
  return sum;
}

/// Rounds a floating eigenvector to integers at increasing precision until
/// the quadratic form is verified negative.
inline bool ExtractWitness(const IntMatrix& m, const Eigen::VectorXd& direction,
                           PptResult& result) {
  const double scale = direction.cwiseAbs().maxCoeff();
  if (!(scale > 0)) return false;
  for (int bits = 4; bits <= 48; bits += 4) {
    std::vector<std::int64_t> x(direction.size());
    const double factor = std::ldexp(1.0, bits) / scale;
    for (int i = 0; i < direction.size(); ++i) {
      x[i] = std::llround(direction[i] * factor);
    }
    std::int64_t g = 0;
    for (auto v : x) g = std::gcd(g, v);
    if (g == 0) continue;
    for (auto& v : x) v /= g;
    BigInt value = QuadraticForm(m, x);
    if (value < 0) {
      result.witness = std::move(x);
      result.witness_value = std::move(value);
      return true;
    }
  }
  return false;
}

}  // namespace internal

/// Peres-Horodecki test across `split`: is the partial transpose of rho
/// positive semidefinite?
inline PptResult IsPpt(const DensityMatrix& rho, const BipartiteSplit& split,
                       const PptOptions& options = {}) {
  PptResult result;
  const IntMatrix pt = PartialTranspose(rho.numerator, split);
  const Eigen::MatrixXd pt_double =
      pt.cast<double>() / static_cast<double>(rho.denominator);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(pt_double);
  result.min_eigenvalue = solver.eigenvalues()(0);
  result.float_ppt = result.min_eigenvalue >= -options.tolerance;
  result.in_tolerance_band = std::abs(result.min_eigenvalue) <= options.tolerance;
  if (options.exact || result.in_tolerance_band) {
    result.exact_checked = true;
    result.exact_ppt = IsPositiveSemidefiniteExact(pt);
    result.ppt = result.exact_ppt;
  } else {
    result.ppt = result.min_eigenvalue >= 0.0;
  }
  if (!result.ppt && options.want_witness) {
    internal::ExtractWitness(pt, solver.eigenvectors().col(0), result);
  }
  return result;
}

}  // namespace lapsep

#endif  // LAPSEP_DENSITY_HPP_
