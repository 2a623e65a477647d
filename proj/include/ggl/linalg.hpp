#ifndef GGL_LINALG_HPP
#define GGL_LINALG_HPP

// Small dense complex linear algebra: the substrate every other module uses
// for its oracle computations. Matrices here are tiny (dimension <= the dense
// cap) and immutable once built.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ggl {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr Complex imag_unit{0.0, 1.0};

/// Thrown when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
public:
   using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates a mathematical precondition
/// (non-Hermitian, non-projector, index out of range, ...).
class DomainError : public std::invalid_argument {
public:
   using std::invalid_argument::invalid_argument;
};

/// Thrown when a derived integer quantity does not fit its representation.
class OverflowError : public std::overflow_error {
public:
   using std::overflow_error::overflow_error;
};

struct Tolerances {
   double hermitian = 1e-10;
   double unitary = 1e-10;
   double projector = 1e-10;
};

inline constexpr std::size_t default_dense_cap = 4096;

/// Largest dimension for which dense N x N matrices are materialized.
/// GGL_DENSE_CAP overrides the default.
inline std::size_t dense_cap() {
   static const std::size_t cap = [] {
      if (const char* env = std::getenv("GGL_DENSE_CAP"); env && *env) {
         char* end = nullptr;
         const unsigned long long v = std::strtoull(env, &end, 10);
         if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
      }
      return default_dense_cap;
   }();
   return cap;
}

inline void require_dense(std::uint64_t n, const char* what) {
   if (n > dense_cap())
      throw DomainError(std::string(what) + ": dimension " + std::to_string(n) +
                        " exceeds dense cap " + std::to_string(dense_cap()));
}

/// Row-major dense complex matrix. Column vectors are rows x 1 matrices.
class ComplexMatrix {
public:
   ComplexMatrix(std::size_t rows, std::size_t cols)
       : rows_(rows), cols_(cols), data_(rows * cols, Complex{}) {
      if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: empty shape");
   }

   ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
       : rows_(rows), cols_(cols), data_(std::move(entries)) {
      if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: empty shape");
      if (data_.size() != rows * cols)
         throw DimensionError("ComplexMatrix: entry count does not match shape");
   }

   ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
      rows_ = rows.size();
      cols_ = rows_ ? rows.begin()->size() : 0;
      if (rows_ == 0 || cols_ == 0) throw DimensionError("ComplexMatrix: empty shape");
      data_.reserve(rows_ * cols_);
      for (const auto& r : rows) {
         if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged rows");
         data_.insert(data_.end(), r.begin(), r.end());
      }
   }

   static ComplexMatrix identity(std::size_t n) {
      ComplexMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
      return m;
   }

   static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

   static ComplexMatrix column(std::span<const Complex> v) {
      return {v.size(), 1, std::vector<Complex>(v.begin(), v.end())};
   }

   /// |u><v|
   static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
      ComplexMatrix m(u.size(), v.size());
      for (std::size_t i = 0; i < u.size(); ++i)
         for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
      return m;
   }

   std::size_t rows() const noexcept { return rows_; }
   std::size_t cols() const noexcept { return cols_; }
   bool square() const noexcept { return rows_ == cols_; }

   Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
   const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

   std::span<const Complex> entries() const noexcept { return data_; }

   ComplexMatrix adjoint() const {
      ComplexMatrix out(cols_, rows_);
      for (std::size_t r = 0; r < rows_; ++r)
         for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
      return out;
   }

   ComplexMatrix& operator+=(const ComplexMatrix& o) {
      same_shape(o, "operator+");
      for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
      return *this;
   }
   ComplexMatrix& operator-=(const ComplexMatrix& o) {
      same_shape(o, "operator-");
      for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
      return *this;
   }
   ComplexMatrix& operator*=(Complex s) {
      for (auto& x : data_) x *= s;
      return *this;
   }

   friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
   friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
   friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
   friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
   friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

   friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
   void same_shape(const ComplexMatrix& o, const char* what) const {
      if (rows_ != o.rows_ || cols_ != o.cols_)
         throw DimensionError(std::string(what) + ": shape mismatch");
   }

   std::size_t rows_ = 0;
   std::size_t cols_ = 0;
   std::vector<Complex> data_;
};

/// 2x2 operator in the ordered basis {|w>, |r>}.
using TwoLevelOp = ComplexMatrix;

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
   if (a.cols() != b.rows())
      throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                           " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
   ComplexMatrix out(a.rows(), b.cols());
   for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t l = 0; l < a.cols(); ++l) {
         const Complex ail = a(i, l);
         if (ail == Complex{}) continue;
         for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
      }
   return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }

/// M^p by binary exponentiation; M^0 = I.
inline ComplexMatrix mat_power(const ComplexMatrix& m, std::uint64_t p) {
   if (!m.square()) throw DimensionError("mat_power: matrix is not square");
   ComplexMatrix result = ComplexMatrix::identity(m.rows());
   ComplexMatrix base = m;
   while (p > 0) {
      if (p & 1u) result = result * base;
      p >>= 1u;
      if (p > 0) base = base * base;
   }
   return result;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
   if (!a.square() || !b.square() || a.rows() != b.rows())
      throw DimensionError("commutator: operands must be square of equal dimension");
   return a * b - b * a;
}

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
   if (a.rows() != b.rows() || a.cols() != b.cols())
      throw DimensionError("max_abs_diff: shape mismatch");
   double m = 0.0;
   const auto x = a.entries();
   const auto y = b.entries();
   for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
   return m;
}

inline bool is_hermitian(const ComplexMatrix& h, double tol = Tolerances{}.hermitian) {
   return h.square() && max_abs_diff(h, h.adjoint()) <= tol;
}

inline bool is_unitary(const ComplexMatrix& u, double tol = Tolerances{}.unitary) {
   return u.square() && max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

namespace detail {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
   Eigen::MatrixXcd e(m.rows(), m.cols());
   for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
   return e;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
   ComplexMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
   for (Eigen::Index r = 0; r < e.rows(); ++r)
      for (Eigen::Index c = 0; c < e.cols(); ++c)
         m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
   return m;
}

}  // namespace detail

/// exp(scale * H) for Hermitian H, through the unitary eigendecomposition
/// H = V diag(lambda) V^dagger. With purely imaginary scale the result is
/// unitary up to rounding.
inline ComplexMatrix herm_expm(const ComplexMatrix& h, Complex scale,
                               double herm_tol = Tolerances{}.hermitian) {
   if (!h.square()) throw DimensionError("herm_expm: matrix is not square");
   if (!is_hermitian(h, herm_tol)) throw DomainError("herm_expm: matrix is not Hermitian");
   const Eigen::MatrixXcd e = detail::to_eigen(h);
   // Solve on the exactly Hermitian part; the lower triangle is what Eigen reads.
   const Eigen::MatrixXcd sym = 0.5 * (e + e.adjoint());
   Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
   if (solver.info() != Eigen::Success) throw DomainError("herm_expm: eigensolver failed");
   const Eigen::VectorXd& lambda = solver.eigenvalues();
   const Eigen::MatrixXcd& v = solver.eigenvectors();
   Eigen::VectorXcd phases(lambda.size());
   for (Eigen::Index i = 0; i < lambda.size(); ++i) phases(i) = std::exp(scale * lambda(i));
   return detail::from_eigen(v * phases.asDiagonal() * v.adjoint());
}

/// Largest singular value, from the top eigenvalue of M^dagger M.
inline double spectral_norm(const ComplexMatrix& m) {
   const Eigen::MatrixXcd e = detail::to_eigen(m);
   const Eigen::MatrixXcd gram = e.adjoint() * e;
   Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
   if (solver.info() != Eigen::Success) throw DomainError("spectral_norm: eigensolver failed");
   return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

}  // namespace ggl

#endif
