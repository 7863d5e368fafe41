#pragma once

#include "leibniz/field.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

Vec zero_vec(FieldSpec f, std::size_t n);
Vec unit_vec(FieldSpec f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_less(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);
Vec parse_vec(const std::string& text, FieldSpec f, std::size_t n);

/// Reduced row echelon form in place. Zero rows are removed; the returned
/// list holds the pivot column of each remaining row, strictly increasing.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

/// Row convention: a linear operator is a matrix whose i-th row is the image
/// of the i-th basis vector, and vectors act from the left.
Vec apply_op(const Mat& op, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(FieldSpec f, std::size_t n);
Mat mat_transpose(const Mat& m);

/// A linear subspace of F^n held in reduced-echelon canonical form: two
/// equal subspaces always have bitwise-identical bases.
class Subspace {
 public:
  static Subspace span(FieldSpec f, std::size_t ambient_dim, const Mat& vectors);
  static Subspace zero(FieldSpec f, std::size_t ambient_dim);
  static Subspace full(FieldSpec f, std::size_t ambient_dim);

  FieldSpec field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const Mat& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  /// v with its components along this subspace eliminated; zero iff v lies
  /// in the subspace.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool leq(const Subspace& other) const;

  /// Coefficients of v over the canonical basis rows, if v lies here.
  std::optional<Vec> coords(const Vec& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool less(const Subspace& o) const;

  std::string to_string() const;

 private:
  Subspace(FieldSpec f, std::size_t ambient) : field_(f), ambient_(ambient) {}
  FieldSpec field_;
  std::size_t ambient_;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// Solution space of the homogeneous system eqs . x = 0 (each row of eqs is
/// one equation over ncols unknowns).
Subspace kernel_space(FieldSpec f, std::size_t ncols, Mat eqs);

/// Linear quotient ambient/modulus with an explicit projection and a
/// section splitting it. project . section is the identity and the kernel
/// of project is exactly the modulus.
class QuotientMap {
 public:
  QuotientMap(const Subspace& ambient, const Subspace& modulus);

  std::size_t dim() const { return free_cols_.size(); }
  const Subspace& ambient() const { return ambient_; }
  const Subspace& modulus() const { return modulus_; }

  Vec project(const Vec& v) const;
  Vec section(const Vec& q) const;

  /// Image of a subspace of the ambient space.
  Subspace push(const Subspace& u) const;
  /// Preimage of a subspace of the quotient.
  Subspace pull(const Subspace& w) const;

 private:
  Subspace ambient_;
  Subspace modulus_;
  Mat mod_in_amb_;                    // modulus rewritten in ambient coordinates, RREF
  std::vector<std::size_t> mod_pivots_;
  std::vector<std::size_t> free_cols_;
};

/// Visits every k-dimensional subspace of F^n exactly once, in a fixed
/// order: pivot patterns lexicographically, then free entries
/// odometer-style. Requires a finite field.
void for_each_subspace(FieldSpec f, std::size_t n, std::size_t k,
                       const std::function<void(const Subspace&)>& fn);

/// Memoized list of all k-dimensional subspaces, in enumeration order.
const std::vector<Subspace>& all_subspaces(FieldSpec f, std::size_t n, std::size_t k);

/// All subspaces of every dimension 0..n, ascending dimension.
std::vector<Subspace> all_subspaces_all_dims(FieldSpec f, std::size_t n);

/// Visits all p^n coordinate vectors of F^n (finite field).
void for_each_vector(FieldSpec f, std::size_t n, const std::function<void(const Vec&)>& fn);

/// Coefficients of det(xI - op), highest degree first (monic). Exact, over
/// any supported field; used for rational eigenvalue searches.
std::vector<Scalar> char_poly(const Mat& op);

/// All rational eigenvalues of a square operator over Q.
std::vector<Rational> rational_eigenvalues(const Mat& op);

/// Eigenspace {v : v . op = lambda v} under the row convention.
Subspace eigenspace(const Mat& op, const Scalar& lambda);

}  // namespace leibniz
