#include "leibniz/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace leibniz {

std::string outcome_str(Outcome o) {
  switch (o) {
    case Outcome::True: return "True";
    case Outcome::False: return "False";
    default: return "Unknown";
  }
}

std::vector<std::string> LeibnizAlgebra::default_labels(std::size_t dim) {
  std::vector<std::string> l;
  for (std::size_t i = 1; i <= dim; ++i) l.push_back("e" + std::to_string(i));
  return l;
}

LeibnizAlgebra::LeibnizAlgebra(FieldSpec f, std::size_t dim, std::vector<std::string> labels,
                               std::vector<Scalar> table)
    : field_(f), dim_(dim), labels_(std::move(labels)), table_(std::move(table)) {
  if (labels_.empty()) labels_ = default_labels(dim);
  if (labels_.size() != dim) throw std::invalid_argument("label count must equal dimension");
  if (table_.size() != dim * dim * dim)
    throw std::invalid_argument("structure constant table must have dim^3 entries");
  for (const auto& s : table_)
    if (s.field() != field_) throw std::invalid_argument("table scalar over the wrong field");
}

Vec LeibnizAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v;
  v.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v.push_back(c(i, j, k));
  return v;
}

Vec LeibnizAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket operand dimension mismatch");
  Vec r = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar cij = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) r[k] += cij * c(i, j, k);
    }
  }
  return r;
}

Subspace LeibnizAlgebra::bracket_spaces(const Subspace& a, const Subspace& b) const {
  Mat products;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) products.push_back(bracket(u, v));
  return Subspace::span(field_, dim_, products);
}

Mat LeibnizAlgebra::right_mult(const Vec& x) const {
  Mat m;
  m.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) m.push_back(bracket(unit_vec(field_, dim_, i), x));
  return m;
}

Mat LeibnizAlgebra::left_mult(const Vec& x) const {
  Mat m;
  m.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) m.push_back(bracket(x, unit_vec(field_, dim_, i)));
  return m;
}

std::optional<std::array<std::size_t, 3>> LeibnizAlgebra::first_right_violation() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        Vec ei = unit_vec(field_, dim_, i), ej = unit_vec(field_, dim_, j),
            ek = unit_vec(field_, dim_, k);
        Vec lhs = bracket(ei, bracket(ej, ek));
        Vec rhs = vec_sub(bracket(bracket(ei, ej), ek), bracket(bracket(ei, ek), ej));
        if (lhs != rhs) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

bool LeibnizAlgebra::check_right_leibniz() const {
  if (!right_flag_) right_flag_ = !first_right_violation().has_value();
  return *right_flag_;
}

bool LeibnizAlgebra::check_left_leibniz() const {
  if (left_flag_) return *left_flag_;
  bool ok = true;
  for (std::size_t i = 0; i < dim_ && ok; ++i)
    for (std::size_t j = 0; j < dim_ && ok; ++j)
      for (std::size_t k = 0; k < dim_ && ok; ++k) {
        Vec ei = unit_vec(field_, dim_, i), ej = unit_vec(field_, dim_, j),
            ek = unit_vec(field_, dim_, k);
        Vec lhs = bracket(ei, bracket(ej, ek));
        Vec rhs = vec_add(bracket(bracket(ei, ej), ek), bracket(ej, bracket(ei, ek)));
        if (lhs != rhs) ok = false;
      }
  left_flag_ = ok;
  return ok;
}

Outcome LeibnizAlgebra::check_symmetric() const {
  if (symmetric_flag_) return *symmetric_flag_;
  Outcome out;
  if (!check_right_leibniz() || !check_left_leibniz()) {
    out = Outcome::False;
  } else if (field_.characteristic() != 2) {
    // [[x,y],[x,y]] = 0 follows from the two identities away from char 2.
    out = Outcome::True;
  } else {
    // Characteristic two: the quadratic condition is independent; check all
    // pairs exhaustively (the condition is not multilinear).
    bool ok = true;
    for_each_vector(field_, dim_, [&](const Vec& x) {
      if (!ok) return;
      for_each_vector(field_, dim_, [&](const Vec& y) {
        if (!ok) return;
        Vec b = bracket(x, y);
        if (!is_zero_vec(bracket(b, b))) ok = false;
      });
    });
    out = ok ? Outcome::True : Outcome::False;
  }
  symmetric_flag_ = out;
  return out;
}

LeibnizAlgebra LeibnizAlgebra::opposite() const {
  std::vector<Scalar> t(table_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) t[(i * dim_ + j) * dim_ + k] = c(j, i, k);
  return LeibnizAlgebra(field_, dim_, labels_, std::move(t));
}

std::vector<Subspace> LeibnizAlgebra::lower_central_series() const {
  std::vector<Subspace> series{full_space()};
  for (std::size_t step = 0; step <= dim_; ++step) {
    Subspace next = bracket_spaces(series.back(), full_space());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
  }
  return series;
}

std::vector<Subspace> LeibnizAlgebra::derived_series() const {
  std::vector<Subspace> series{full_space()};
  for (std::size_t step = 0; step <= dim_; ++step) {
    Subspace next = bracket_spaces(series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
  }
  return series;
}

bool LeibnizAlgebra::is_nilpotent() const { return lower_central_series().back().is_zero(); }

bool LeibnizAlgebra::is_solvable() const { return derived_series().back().is_zero(); }

Subspace LeibnizAlgebra::square() const { return bracket_spaces(full_space(), full_space()); }

Subspace LeibnizAlgebra::leibniz_kernel() const {
  // span{x^2} = span{e_i^2} + span{[e_i,e_j] + [e_j,e_i]} by polarization,
  // valid in every characteristic.
  Mat gens;
  for (std::size_t i = 0; i < dim_; ++i) gens.push_back(basis_product(i, i));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      gens.push_back(vec_add(basis_product(i, j), basis_product(j, i)));
  Subspace kernel = Subspace::span(field_, dim_, gens);
  for (std::size_t i = 0; i < dim_; ++i)
    for (const auto& w : kernel.basis())
      if (!is_zero_vec(bracket(unit_vec(field_, dim_, i), w)))
        throw std::logic_error("[L, I] != 0: the table does not satisfy the right identity");
  return kernel;
}

bool LeibnizAlgebra::in_J(const Vec& x) const { return is_zero_vec(bracket(x, x)); }

Subspace LeibnizAlgebra::center() const {
  Subspace l = full_space();
  return centralizer(l, l);
}

Subspace LeibnizAlgebra::centralizer(const Subspace& b, const Subspace& a) const {
  // Unknowns: coefficients over b's basis. Conditions: [v, a_s] = 0 and
  // [a_s, v] = 0 coordinatewise.
  const auto& rows = b.basis();
  Mat eqs;
  for (const auto& as : a.basis()) {
    for (std::size_t coord = 0; coord < dim_; ++coord) {
      Vec eq_r, eq_l;
      for (const auto& u : rows) {
        eq_r.push_back(bracket(u, as)[coord]);
        eq_l.push_back(bracket(as, u)[coord]);
      }
      eqs.push_back(eq_r);
      eqs.push_back(eq_l);
    }
  }
  Subspace coeffs = kernel_space(field_, rows.size(), eqs);
  Mat out;
  for (const auto& t : coeffs.basis()) {
    Vec v = zero_vec(field_, dim_);
    for (std::size_t r = 0; r < rows.size(); ++r) v = vec_add(v, vec_scale(t[r], rows[r]));
    out.push_back(v);
  }
  return Subspace::span(field_, dim_, out);
}

Subspace LeibnizAlgebra::normalizer(const Subspace& b, const Subspace& a) const {
  // Same as the centralizer but conditions are taken modulo a.
  QuotientMap q(full_space(), a);
  const auto& rows = b.basis();
  Mat eqs;
  for (const auto& as : a.basis()) {
    for (std::size_t coord = 0; coord < q.dim(); ++coord) {
      Vec eq_r, eq_l;
      for (const auto& u : rows) {
        eq_r.push_back(q.project(bracket(u, as))[coord]);
        eq_l.push_back(q.project(bracket(as, u))[coord]);
      }
      eqs.push_back(eq_r);
      eqs.push_back(eq_l);
    }
  }
  Subspace coeffs = kernel_space(field_, rows.size(), eqs);
  Mat out;
  for (const auto& t : coeffs.basis()) {
    Vec v = zero_vec(field_, dim_);
    for (std::size_t r = 0; r < rows.size(); ++r) v = vec_add(v, vec_scale(t[r], rows[r]));
    out.push_back(v);
  }
  return Subspace::span(field_, dim_, out);
}

Vec LeibnizAlgebra::Restriction::to_parent(const Vec& v) const {
  if (v.size() != space.dim()) throw std::invalid_argument("restriction coordinate mismatch");
  Vec out = zero_vec(space.field(), space.ambient_dim());
  for (std::size_t i = 0; i < v.size(); ++i)
    out = vec_add(out, vec_scale(v[i], space.basis()[i]));
  return out;
}

Vec LeibnizAlgebra::Restriction::to_sub(const Vec& v) const {
  auto c = space.coords(v);
  if (!c) throw std::invalid_argument("vector outside the subalgebra");
  return *c;
}

Subspace LeibnizAlgebra::Restriction::lift(const Subspace& s) const {
  Mat rows;
  for (const auto& r : s.basis()) rows.push_back(to_parent(r));
  return Subspace::span(space.field(), space.ambient_dim(), rows);
}

Subspace LeibnizAlgebra::Restriction::push_down(const Subspace& s) const {
  Mat rows;
  for (const auto& r : s.basis()) rows.push_back(to_sub(r));
  return Subspace::span(space.field(), space.dim(), rows);
}

LeibnizAlgebra::Restriction LeibnizAlgebra::restrict_to(const Subspace& h) const {
  const std::size_t m = h.dim();
  std::vector<Scalar> table(m * m * m, Scalar::zero(field_));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec prod = bracket(h.basis()[i], h.basis()[j]);
      auto coords = h.coords(prod);
      if (!coords) throw std::invalid_argument("subspace is not closed under the bracket");
      for (std::size_t k = 0; k < m; ++k) table[(i * m + j) * m + k] = (*coords)[k];
    }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("u" + std::to_string(i));
  return Restriction{LeibnizAlgebra(field_, m, std::move(labels), std::move(table)), h};
}

LeibnizAlgebra::Quotient LeibnizAlgebra::quotient_by(const Subspace& a) const {
  Subspace l = full_space();
  Subspace side = sum(bracket_spaces(a, l), bracket_spaces(l, a));
  if (!side.leq(a)) throw std::invalid_argument("quotient modulus is not a two-sided ideal");
  QuotientMap q(l, a);
  const std::size_t m = q.dim();
  std::vector<Scalar> table(m * m * m, Scalar::zero(field_));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec prod = q.project(bracket(q.section(unit_vec(field_, m, i)), q.section(unit_vec(field_, m, j))));
      for (std::size_t k = 0; k < m; ++k) table[(i * m + j) * m + k] = prod[k];
    }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("q" + std::to_string(i));
  return Quotient{LeibnizAlgebra(field_, m, std::move(labels), std::move(table)), std::move(q)};
}

std::string LeibnizAlgebra::to_string() const {
  std::ostringstream out;
  out << "dim " << dim_ << " over " << field_.to_string() << ":";
  bool any = false;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec p = basis_product(i, j);
      if (is_zero_vec(p)) continue;
      any = true;
      out << " [" << labels_[i] << "," << labels_[j] << "]=";
      bool first = true;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (p[k].is_zero()) continue;
        if (!first) out << "+";
        first = false;
        if (!p[k].is_one()) out << p[k].str() << "*";
        out << labels_[k];
      }
    }
  if (!any) out << " abelian";
  return out.str();
}

bool LeibnizAlgebra::same_table(const LeibnizAlgebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && table_ == o.table_;
}

AlgebraBuilder::AlgebraBuilder(FieldSpec f, std::size_t dim)
    : field_(f), dim_(dim), table_(dim * dim * dim, Scalar::zero(f)) {}

AlgebraBuilder& AlgebraBuilder::labels(std::vector<std::string> names) {
  labels_ = std::move(names);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("table index out of range");
  table_[(i * dim_ + j) * dim_ + k] = v;
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set(std::size_t i, std::size_t j, std::size_t k, long long v) {
  return set(i, j, k, Scalar::of_int(field_, v));
}

AlgebraBuilder& AlgebraBuilder::set_product(std::size_t i, std::size_t j, const Vec& image) {
  if (image.size() != dim_) throw std::invalid_argument("product image dimension mismatch");
  for (std::size_t k = 0; k < dim_; ++k) set(i, j, k, image[k]);
  return *this;
}

LeibnizAlgebra AlgebraBuilder::build() const {
  return LeibnizAlgebra(field_, dim_, labels_.empty() ? LeibnizAlgebra::default_labels(dim_) : labels_,
                        table_);
}

}  // namespace leibniz
