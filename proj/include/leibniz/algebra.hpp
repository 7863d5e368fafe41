#pragma once

#include "leibniz/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

/// Three-valued result for predicates that cannot always be decided by
/// enumeration (typically over the rationals).
enum class Outcome { True, False, Unknown };

std::string outcome_str(Outcome o);

/// A finite-dimensional algebra over an exact field, given by structure
/// constants: [e_i, e_j] = sum_k c(i,j,k) e_k. The table is the single
/// source of truth for all brackets. Identity verdicts are computed lazily
/// and frozen; the object is immutable afterwards.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra(FieldSpec f, std::size_t dim, std::vector<std::string> labels,
                 std::vector<Scalar> table);

  static std::vector<std::string> default_labels(std::size_t dim);

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  /// The product [e_i, e_j] as a coordinate vector.
  Vec basis_product(std::size_t i, std::size_t j) const;

  Subspace full_space() const { return Subspace::full(field_, dim_); }
  Subspace zero_space() const { return Subspace::zero(field_, dim_); }

  Vec bracket(const Vec& x, const Vec& y) const;
  Subspace bracket_spaces(const Subspace& a, const Subspace& b) const;

  /// Right multiplication R_x : v -> [v, x], as a matrix in row convention.
  Mat right_mult(const Vec& x) const;
  /// Left multiplication L_x : v -> [x, v].
  Mat left_mult(const Vec& x) const;

  bool check_right_leibniz() const;
  bool check_left_leibniz() const;
  /// Both identities plus, in characteristic two, [[x,y],[x,y]] = 0 checked
  /// over all pairs; in other characteristics that condition is implied.
  Outcome check_symmetric() const;
  /// First basis triple violating the right identity, if any.
  std::optional<std::array<std::size_t, 3>> first_right_violation() const;

  /// The opposite algebra [x,y]' = [y,x]; turns a left Leibniz table into a
  /// right one and vice versa.
  LeibnizAlgebra opposite() const;

  /// L^1 = L, L^{k+1} = [L^k, L], until stabilization.
  std::vector<Subspace> lower_central_series() const;
  /// L^(0) = L, L^(k+1) = [L^(k), L^(k)], until stabilization.
  std::vector<Subspace> derived_series() const;
  bool is_nilpotent() const;
  bool is_solvable() const;
  /// [L, L].
  Subspace square() const;

  /// span{x^2 : x in L}; checks [L, I] = 0 and throws if violated (which
  /// signals a non-Leibniz table upstream).
  Subspace leibniz_kernel() const;
  bool in_J(const Vec& x) const;

  Subspace center() const;
  /// C_B(A) = {b in B : [b,A] + [A,b] = 0}.
  Subspace centralizer(const Subspace& b, const Subspace& a) const;
  /// N_B(A) = {b in B : [b,A] + [A,b] <= A}.
  Subspace normalizer(const Subspace& b, const Subspace& a) const;

  struct Restriction {
    LeibnizAlgebra algebra;
    Subspace space;  // in parent coordinates
    Vec to_parent(const Vec& v) const;
    Vec to_sub(const Vec& v) const;
    Subspace lift(const Subspace& s) const;
    Subspace push_down(const Subspace& s) const;
  };
  /// Subalgebra on an adapted basis; throws if h is not closed.
  Restriction restrict_to(const Subspace& h) const;

  struct Quotient {
    LeibnizAlgebra algebra;
    QuotientMap map;
  };
  /// Factor algebra by a two-sided ideal; throws if a is not an ideal.
  Quotient quotient_by(const Subspace& a) const;

  std::string to_string() const;
  bool same_table(const LeibnizAlgebra& o) const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Scalar> table_;
  mutable std::optional<bool> right_flag_;
  mutable std::optional<bool> left_flag_;
  mutable std::optional<Outcome> symmetric_flag_;
};

/// Incremental construction from sparse entries.
class AlgebraBuilder {
 public:
  AlgebraBuilder(FieldSpec f, std::size_t dim);
  AlgebraBuilder& labels(std::vector<std::string> names);
  AlgebraBuilder& set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  AlgebraBuilder& set(std::size_t i, std::size_t j, std::size_t k, long long v);
  AlgebraBuilder& set_product(std::size_t i, std::size_t j, const Vec& image);
  LeibnizAlgebra build() const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Scalar> table_;
};

}  // namespace leibniz
