#include "leibniz/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace leibniz {

Vec zero_vec(FieldSpec f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(FieldSpec f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

static void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}

Vec vec_add(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

bool vec_less(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].less(b[i])) return true;
    if (b[i].less(a[i])) return false;
  }
  return false;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += v[i].str();
  }
  return s + ")";
}

Vec parse_vec(const std::string& text, FieldSpec f, std::size_t n) {
  std::istringstream in(text);
  Vec v;
  std::string tok;
  while (in >> tok) v.push_back(parse_scalar(tok, f));
  if (v.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " coordinates in '" + text + "'");
  return v;
}

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t ncols = m[0].size();
  for (const auto& row : m)
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    Scalar inv = m[r][c].inv();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);  // remaining rows are zero
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Vec apply_op(const Mat& op, const Vec& v) {
  if (op.size() != v.size()) throw std::invalid_argument("operator/vector size mismatch");
  if (op.empty()) return {};
  Vec r = zero_vec(v.empty() ? FieldSpec::rationals() : v[0].field(), op[0].size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r = vec_add(r, vec_scale(v[i], op[i]));
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat r;
  r.reserve(a.size());
  for (const auto& row : a) r.push_back(apply_op(b, row));
  return r;
}

Mat mat_identity(FieldSpec f, std::size_t n) {
  Mat m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(unit_vec(f, n, i));
  return m;
}

Mat mat_transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat t(m[0].size(), Vec(m.size(), Scalar::zero(m[0][0].field())));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Subspace Subspace::span(FieldSpec f, std::size_t ambient_dim, const Mat& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw std::invalid_argument("ragged spanning set");
  Subspace s(f, ambient_dim);
  s.rows_ = vectors;
  s.pivots_ = rref(s.rows_);
  return s;
}

Subspace Subspace::zero(FieldSpec f, std::size_t ambient_dim) {
  return span(f, ambient_dim, {});
}

Subspace Subspace::full(FieldSpec f, std::size_t ambient_dim) {
  return span(f, ambient_dim, mat_identity(f, ambient_dim));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = r[pivots_[i]];
    if (!c.is_zero()) r = vec_sub(r, vec_scale(c, rows_[i]));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::leq(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient dimension mismatch");
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const Vec& r) { return other.contains(r); });
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c;
  c.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c.push_back(v[pivots_[i]]);
  return c;
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && rows_ == o.rows_;
}

bool Subspace::less(const Subspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (vec_less(rows_[i], o.rows_[i])) return true;
    if (vec_less(o.rows_[i], rows_[i])) return false;
  }
  return false;
}

std::string Subspace::to_string() const {
  if (rows_.empty()) return "{0}";
  std::string s = "span{";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ", ";
    s += vec_str(rows_[i]);
  }
  return s + "}";
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field())
    throw std::invalid_argument("subspace ambient mismatch");
  Mat rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.field(), u.ambient_dim(), rows);
}

// Zassenhaus: row-reduce [U|U; V|0]; rows whose left half vanishes carry the
// intersection in their right half.
Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field())
    throw std::invalid_argument("subspace ambient mismatch");
  const std::size_t n = u.ambient_dim();
  Mat m;
  for (const auto& row : u.basis()) {
    Vec wide = row;
    wide.insert(wide.end(), row.begin(), row.end());
    m.push_back(std::move(wide));
  }
  for (const auto& row : v.basis()) {
    Vec wide = row;
    Vec zeros = zero_vec(u.field(), n);
    wide.insert(wide.end(), zeros.begin(), zeros.end());
    m.push_back(std::move(wide));
  }
  std::vector<std::size_t> pivots = rref(m);
  Mat inter;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (pivots[i] >= n) inter.push_back(Vec(m[i].begin() + n, m[i].end()));
  }
  return Subspace::span(u.field(), n, inter);
}

Subspace kernel_space(FieldSpec f, std::size_t ncols, Mat eqs) {
  std::vector<std::size_t> pivots = rref(eqs);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  Mat basis;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    Vec x = zero_vec(f, ncols);
    x[c] = Scalar::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -eqs[r][c];
    basis.push_back(std::move(x));
  }
  return Subspace::span(f, ncols, basis);
}

QuotientMap::QuotientMap(const Subspace& ambient, const Subspace& modulus)
    : ambient_(ambient), modulus_(modulus) {
  if (!modulus.leq(ambient))
    throw std::invalid_argument("quotient modulus not contained in ambient space");
  for (const auto& row : modulus.basis()) {
    auto c = ambient.coords(row);
    mod_in_amb_.push_back(*c);
  }
  mod_pivots_ = rref(mod_in_amb_);
  std::vector<bool> is_pivot(ambient.dim(), false);
  for (std::size_t p : mod_pivots_) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient.dim(); ++c)
    if (!is_pivot[c]) free_cols_.push_back(c);
}

Vec QuotientMap::project(const Vec& v) const {
  auto c = ambient_.coords(v);
  if (!c) throw std::invalid_argument("vector outside the ambient space of the quotient");
  Vec r = *c;
  for (std::size_t i = 0; i < mod_in_amb_.size(); ++i) {
    const Scalar& x = r[mod_pivots_[i]];
    if (!x.is_zero()) r = vec_sub(r, vec_scale(x, mod_in_amb_[i]));
  }
  Vec q;
  q.reserve(free_cols_.size());
  for (std::size_t c2 : free_cols_) q.push_back(r[c2]);
  return q;
}

Vec QuotientMap::section(const Vec& q) const {
  if (q.size() != free_cols_.size()) throw std::invalid_argument("quotient coordinate mismatch");
  Vec v = zero_vec(ambient_.field(), ambient_.ambient_dim());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q[i].is_zero()) v = vec_add(v, vec_scale(q[i], ambient_.basis()[free_cols_[i]]));
  }
  return v;
}

Subspace QuotientMap::push(const Subspace& u) const {
  Mat rows;
  for (const auto& r : u.basis()) rows.push_back(project(r));
  return Subspace::span(ambient_.field(), dim(), rows);
}

Subspace QuotientMap::pull(const Subspace& w) const {
  Mat rows = modulus_.basis();
  for (const auto& r : w.basis()) rows.push_back(section(r));
  return Subspace::span(ambient_.field(), ambient_.ambient_dim(), rows);
}

namespace {

// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (comb[i] + (k - i) < n) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_subspace(FieldSpec f, std::size_t n, std::size_t k,
                       const std::function<void(const Subspace&)>& fn) {
  if (!f.is_finite()) throw std::invalid_argument("subspace enumeration needs a finite field");
  if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
  const std::uint32_t p = f.modulus();
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  bool more = true;
  while (more) {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    // Free entries of the echelon pattern, row-major.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) slots.emplace_back(r, c);
    std::vector<std::uint32_t> vals(slots.size(), 0);
    while (true) {
      Mat rows;
      for (std::size_t r = 0; r < k; ++r) rows.push_back(unit_vec(f, n, piv[r]));
      for (std::size_t s = 0; s < slots.size(); ++s)
        rows[slots[s].first][slots[s].second] = Scalar::of_int(f, vals[s]);
      fn(Subspace::span(f, n, rows));
      // Odometer, last slot fastest.
      std::size_t i = slots.size();
      while (i > 0 && vals[i - 1] + 1 == p) vals[--i] = 0;
      if (i == 0) break;
      ++vals[i - 1];
    }
    more = next_combination(piv, n);
  }
}

namespace {
std::map<std::tuple<std::uint32_t, std::size_t, std::size_t>, std::vector<Subspace>> g_subspace_cache;
std::mutex g_subspace_mutex;
}  // namespace

const std::vector<Subspace>& all_subspaces(FieldSpec f, std::size_t n, std::size_t k) {
  std::lock_guard<std::mutex> lock(g_subspace_mutex);
  auto key = std::make_tuple(f.modulus(), n, k);
  auto it = g_subspace_cache.find(key);
  if (it != g_subspace_cache.end()) return it->second;
  std::vector<Subspace> out;
  for_each_subspace(f, n, k, [&](const Subspace& s) { out.push_back(s); });
  return g_subspace_cache.emplace(key, std::move(out)).first->second;
}

std::vector<Subspace> all_subspaces_all_dims(FieldSpec f, std::size_t n) {
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& layer = all_subspaces(f, n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

void for_each_vector(FieldSpec f, std::size_t n, const std::function<void(const Vec&)>& fn) {
  if (!f.is_finite()) throw std::invalid_argument("vector enumeration needs a finite field");
  const std::uint32_t p = f.modulus();
  std::vector<std::uint32_t> digits(n, 0);
  while (true) {
    Vec v;
    v.reserve(n);
    for (std::uint32_t d : digits) v.push_back(Scalar::of_int(f, d));
    fn(v);
    std::size_t i = n;
    while (i > 0 && digits[i - 1] + 1 == p) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
}

namespace {

using Poly = std::vector<Scalar>;  // ascending degree

Poly poly_mul(const Poly& a, const Poly& b, FieldSpec f) {
  Poly r(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_add(const Poly& a, const Poly& b, FieldSpec f) {
  Poly r(std::max(a.size(), b.size()), Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

// Laplace expansion of a polynomial-entry determinant; fine for dim <= 6.
Poly poly_det(const std::vector<std::vector<Poly>>& m, std::vector<std::size_t> cols, std::size_t row,
              FieldSpec f) {
  if (cols.empty()) return {Scalar::one(f)};
  Poly acc{Scalar::zero(f)};
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const Poly& entry = m[row][cols[i]];
    bool zero = std::all_of(entry.begin(), entry.end(), [](const Scalar& s) { return s.is_zero(); });
    if (zero) continue;
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != i) rest.push_back(cols[j]);
    Poly sub = poly_det(m, rest, row + 1, f);
    Poly term = poly_mul(entry, sub, f);
    if (i % 2 == 1)
      for (auto& c : term) c = -c;
    acc = poly_add(acc, term, f);
  }
  return acc;
}

}  // namespace

std::vector<Scalar> char_poly(const Mat& op) {
  const std::size_t n = op.size();
  if (n == 0) return {};
  FieldSpec f = op[0][0].field();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // (xI - op) entry
      Poly e{-op[i][j]};
      if (i == j) e.push_back(Scalar::one(f));
      m[i][j] = e;
    }
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  Poly det = poly_det(m, cols, 0, f);
  det.resize(n + 1, Scalar::zero(f));
  std::vector<Scalar> out(det.rbegin(), det.rend());  // highest degree first
  return out;
}

namespace {

std::vector<boost::multiprecision::cpp_int> positive_divisors(boost::multiprecision::cpp_int v) {
  using boost::multiprecision::cpp_int;
  if (v < 0) v = -v;
  std::vector<cpp_int> divs;
  if (v == 0) return divs;
  for (cpp_int d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_eigenvalues(const Mat& op) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = op.size();
  std::vector<Rational> roots;
  if (n == 0) return roots;
  if (op[0][0].field().is_finite())
    throw std::invalid_argument("rational_eigenvalues expects an operator over Q");
  std::vector<Scalar> cp = char_poly(op);  // monic, highest first
  // Integer coefficients: multiply by the lcm of denominators.
  cpp_int l = 1;
  for (const auto& c : cp) l = boost::multiprecision::lcm(l, denominator(c.rational()));
  std::vector<cpp_int> ic;
  for (const auto& c : cp) {
    Rational scaled = c.rational() * Rational(l);
    ic.push_back(numerator(scaled));
  }
  // Strip trailing zero coefficients: each contributes the root 0.
  bool has_zero_root = false;
  while (ic.size() > 1 && ic.back() == 0) {
    ic.pop_back();
    has_zero_root = true;
  }
  if (has_zero_root) roots.push_back(Rational(0));
  if (ic.size() <= 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  auto eval_zero = [&](const Rational& x) {
    Rational acc = 0;
    for (const cpp_int& c : ic) acc = acc * x + Rational(c);
    return acc.is_zero();
  };
  for (const cpp_int& a : positive_divisors(ic.back())) {
    for (const cpp_int& b : positive_divisors(ic.front())) {
      Rational cand(a, b);
      for (int sign = 0; sign < 2; ++sign) {
        Rational x = sign ? -cand : cand;
        if (eval_zero(x) && std::find(roots.begin(), roots.end(), x) == roots.end())
          roots.push_back(x);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Subspace eigenspace(const Mat& op, const Scalar& lambda) {
  const std::size_t n = op.size();
  FieldSpec f = lambda.field();
  Mat shifted = op;
  for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= lambda;
  return kernel_space(f, n, mat_transpose(shifted));
}

}  // namespace leibniz
