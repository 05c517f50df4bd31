#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace veech {

// Dense linear algebra over Z_d. Matrices act on column vectors; subgroups of
// Z_d^n are given by generating row vectors.

template <typename Scalar>
using ModMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ModVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixModD = ModMatrix<std::int64_t>;
using VectorModD = ModVector<std::int64_t>;

/// Residue of a in [0, d).
template <typename Scalar>
constexpr Scalar mod(Scalar a, Scalar d) {
  Scalar r = a % d;
  return r < 0 ? r + d : r;
}

/// Entrywise residues of an Eigen expression.
template <typename Derived>
auto reduced(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar d) {
  return m.unaryExpr([d](typename Derived::Scalar x) { return mod(x, d); });
}

/// (A * B) mod d, evaluated.
template <typename DerivedA, typename DerivedB>
ModMatrix<typename DerivedA::Scalar> mod_product(const Eigen::MatrixBase<DerivedA>& a,
                                                 const Eigen::MatrixBase<DerivedB>& b,
                                                 typename DerivedA::Scalar d) {
  return reduced(a * b, d);
}

MatrixModD identity_mod(Eigen::Index n, std::int64_t d);

/// Determinant mod d by unimodular row elimination (no division by zero
/// divisors).
std::int64_t determinant_mod(const MatrixModD& m, std::int64_t d);

/// Number of elements of SL(n, Z_d), saturated at UINT64_MAX.
std::uint64_t sl_order(int n, std::int64_t d);

/// Howell normal form of a subgroup of Z_d^n. Two generating sets of the same
/// subgroup give identical forms, and reduce() maps every vector to a
/// canonical representative of its coset.
class SubgroupCanonicalForm {
 public:
  SubgroupCanonicalForm(Eigen::Index dimension, std::int64_t modulus, MatrixModD rows,
                        std::vector<Eigen::Index> pivots);

  /// Rows of the form; row r has its leading entry at pivot_columns()[r].
  const MatrixModD& rows() const { return rows_; }
  const std::vector<Eigen::Index>& pivot_columns() const { return pivots_; }
  Eigen::Index dimension() const { return dimension_; }
  std::int64_t modulus() const { return modulus_; }

  std::uint64_t cardinality() const;

  VectorModD reduce(const VectorModD& v) const;
  bool contains(const VectorModD& v) const;

  std::size_t hash() const;

  friend bool operator==(const SubgroupCanonicalForm& a, const SubgroupCanonicalForm& b) {
    return a.modulus_ == b.modulus_ && a.dimension_ == b.dimension_ &&
           a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  Eigen::Index dimension_;
  std::int64_t modulus_;
  MatrixModD rows_;
  std::vector<Eigen::Index> pivots_;
};

/// Howell form of the subgroup generated by the rows of `generators`.
SubgroupCanonicalForm canonicalize(const MatrixModD& generators, std::int64_t d);

SubgroupCanonicalForm canonicalize(std::span<const VectorModD> generators, std::int64_t d,
                                   Eigen::Index n);

struct SubgroupCanonicalFormHash {
  std::size_t operator()(const SubgroupCanonicalForm& f) const { return f.hash(); }
};

}  // namespace veech
