#include "leibniz/ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace leibniz {

bool is_subalgebra(const LeibnizAlgebra& l, const Subspace& b) {
  return l.bracket_spaces(b, b).leq(b);
}

bool is_ideal(const LeibnizAlgebra& l, const Subspace& b) {
  Subspace full = l.full_space();
  return l.bracket_spaces(b, full).leq(b) && l.bracket_spaces(full, b).leq(b);
}

bool is_ideal_in(const LeibnizAlgebra& l, const Subspace& b, const Subspace& k) {
  return b.leq(k) && l.bracket_spaces(b, k).leq(b) && l.bracket_spaces(k, b).leq(b);
}

Subspace core(const LeibnizAlgebra& l, const Subspace& b) {
  Subspace x = b;
  for (std::size_t guard = 0; guard <= l.dim() + 1; ++guard) {
    // Next step: {v in x : [v,L] + [L,v] <= x}, a linear solve modulo x.
    QuotientMap q(l.full_space(), x);
    const Mat& rows = x.basis();
    Mat eqs;
    for (std::size_t j = 0; j < l.dim(); ++j) {
      Vec ej = unit_vec(l.field(), l.dim(), j);
      for (std::size_t coord = 0; coord < q.dim(); ++coord) {
        Vec eq_r, eq_l;
        for (const auto& u : rows) {
          eq_r.push_back(q.project(l.bracket(u, ej))[coord]);
          eq_l.push_back(q.project(l.bracket(ej, u))[coord]);
        }
        eqs.push_back(eq_r);
        eqs.push_back(eq_l);
      }
    }
    Subspace coeffs = kernel_space(l.field(), rows.size(), eqs);
    Mat next_rows;
    for (const auto& t : coeffs.basis()) {
      Vec v = zero_vec(l.field(), l.dim());
      for (std::size_t r = 0; r < rows.size(); ++r) v = vec_add(v, vec_scale(t[r], rows[r]));
      next_rows.push_back(v);
    }
    Subspace next = Subspace::span(l.field(), l.dim(), next_rows);
    if (next == x) return x;
    x = next;
  }
  throw std::logic_error("core fixpoint failed to stabilize");
}

Subspace ideal_closure(const LeibnizAlgebra& l, const Subspace& s) {
  Subspace x = s;
  Subspace full = l.full_space();
  for (std::size_t guard = 0; guard <= l.dim() + 1; ++guard) {
    Subspace next = sum(x, sum(l.bracket_spaces(x, full), l.bracket_spaces(full, x)));
    if (next == x) return x;
    x = next;
  }
  throw std::logic_error("ideal closure failed to stabilize");
}

bool SubidealChain::validate(const LeibnizAlgebra& l, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (links.empty()) return fail("empty chain");
  if (!(links.back() == l.full_space())) return fail("chain does not end at L");
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (!is_subalgebra(l, links[i]))
      return fail("link " + std::to_string(i) + " is not a subalgebra");
    if (i + 1 < links.size()) {
      if (!(links[i].leq(links[i + 1])) || links[i].dim() >= links[i + 1].dim())
        return fail("chain is not strictly increasing at link " + std::to_string(i));
      if (!is_ideal_in(l, links[i], links[i + 1]))
        return fail("link " + std::to_string(i) + " is not an ideal of the next link");
    }
  }
  return true;
}

std::optional<SubidealChain> subideal_chain(const LeibnizAlgebra& l, const Subspace& b) {
  if (!is_subalgebra(l, b)) throw std::invalid_argument("subideal test needs a subalgebra");
  SubidealChain chain{{b}};
  Subspace full = l.full_space();
  while (!(chain.links.back() == full)) {
    Subspace next = l.normalizer(full, chain.links.back());
    if (next == chain.links.back()) return std::nullopt;  // idealizer series stabilized below L
    chain.links.push_back(next);
  }
  return chain;
}

bool is_subideal(const LeibnizAlgebra& l, const Subspace& b) {
  return subideal_chain(l, b).has_value();
}

std::vector<Subspace> all_subalgebras(const LeibnizAlgebra& l) {
  std::vector<Subspace> out;
  for (const auto& s : all_subspaces_all_dims(l.field(), l.dim()))
    if (is_subalgebra(l, s)) out.push_back(s);
  return out;
}

namespace {

// Simultaneous rational eigenspace refinement over Q: leaves are spaces on
// which every left/right multiplication acts as a (rational) scalar, so
// every line inside a leaf is an ideal. Complete for ideal lines, since a
// one-dimensional ideal forces rational eigenvalues on all 2n operators.
void refine_eigen_leaves(const std::vector<Mat>& ops, std::size_t t, const Subspace& w,
                         std::vector<Subspace>& leaves) {
  if (w.is_zero()) return;
  if (t == ops.size()) {
    leaves.push_back(w);
    return;
  }
  for (const Rational& lam : rational_eigenvalues(ops[t])) {
    Subspace e = eigenspace(ops[t], Scalar::of_rational(lam));
    refine_eigen_leaves(ops, t + 1, intersect(w, e), leaves);
  }
}

std::vector<Subspace> eigen_leaves_q(const LeibnizAlgebra& l) {
  std::vector<Mat> ops;
  for (std::size_t j = 0; j < l.dim(); ++j)
    ops.push_back(l.right_mult(unit_vec(l.field(), l.dim(), j)));
  for (std::size_t j = 0; j < l.dim(); ++j)
    ops.push_back(l.left_mult(unit_vec(l.field(), l.dim(), j)));
  std::vector<Subspace> leaves;
  refine_eigen_leaves(ops, 0, l.full_space(), leaves);
  std::sort(leaves.begin(), leaves.end(), [](const Subspace& a, const Subspace& b) { return a.less(b); });
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  return leaves;
}

}  // namespace

std::vector<Subspace> ideal_line_families(const LeibnizAlgebra& l) {
  std::vector<Subspace> out;
  if (l.field().is_finite()) {
    for (const auto& line : all_subspaces(l.field(), l.dim(), 1))
      if (is_ideal(l, line)) out.push_back(line);
    return out;
  }
  for (const auto& leaf : eigen_leaves_q(l)) {
    // Everything in a leaf already scales under right/left multiplication.
    if (leaf.dim() >= 1) out.push_back(leaf);
  }
  return out;
}

IdealSet all_ideals(const LeibnizAlgebra& l) {
  IdealSet set;
  if (l.field().is_finite()) {
    for (const auto& s : all_subspaces_all_dims(l.field(), l.dim()))
      if (is_ideal(l, s)) set.ideals.push_back(s);
    set.complete = true;
    return set;
  }
  // Verified supply over Q.
  std::vector<Subspace> candidates{l.zero_space(), l.full_space(), l.leibniz_kernel(), l.square()};
  for (const auto& s : l.lower_central_series()) candidates.push_back(s);
  for (const auto& s : l.derived_series()) candidates.push_back(s);
  for (const auto& fam : ideal_line_families(l))
    for (const auto& row : fam.basis())
      candidates.push_back(Subspace::span(l.field(), l.dim(), {row}));
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Subspace line = Subspace::span(l.field(), l.dim(), {unit_vec(l.field(), l.dim(), i)});
    candidates.push_back(ideal_closure(l, line));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Subspace& a, const Subspace& b) { return a.less(b); });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& c : candidates)
    if (is_ideal(l, c)) set.ideals.push_back(c);
  set.complete = false;
  return set;
}

IdealSet minimal_ideals(const LeibnizAlgebra& l) {
  IdealSet set;
  if (l.field().is_finite()) {
    IdealSet ideals = all_ideals(l);
    for (const auto& d : ideals.ideals) {
      if (d.is_zero()) continue;
      bool minimal = true;
      for (const auto& e : ideals.ideals) {
        if (e.is_zero() || e == d) continue;
        if (e.leq(d) && e.dim() < d.dim()) {
          minimal = false;
          break;
        }
      }
      if (minimal) set.ideals.push_back(d);
    }
    set.complete = true;
    return set;
  }
  // Over Q: one-dimensional ideals are minimal outright; completeness is
  // not claimed.
  for (const auto& fam : ideal_line_families(l))
    for (const auto& row : fam.basis())
      set.ideals.push_back(Subspace::span(l.field(), l.dim(), {row}));
  set.complete = false;
  return set;
}

AsocResult asoc(const LeibnizAlgebra& l) {
  AsocResult r{l.zero_space(), false};
  if (l.field().is_finite()) {
    IdealSet mins = minimal_ideals(l);
    for (const auto& d : mins.ideals)
      if (l.bracket_spaces(d, d).is_zero()) r.space = sum(r.space, d);
    r.complete = true;
    return r;
  }
  // Abelian locus of each eigen leaf: [v,v] = rho(v) v on a leaf, with rho
  // linear, so the abelian lines in the leaf form the kernel of rho.
  for (const auto& fam : ideal_line_families(l)) {
    Vec rho;
    bool scales = true;
    for (std::size_t i = 0; i < fam.dim() && scales; ++i) {
      const Vec& w = fam.basis()[i];
      Vec sq = l.bracket(w, w);
      Scalar coeff = sq[fam.pivots()[i]];  // RREF rows have 1 at their pivot
      if (sq != vec_scale(coeff, w)) scales = false;
      rho.push_back(coeff);
    }
    if (!scales) continue;
    Subspace t = kernel_space(l.field(), fam.dim(), Mat{rho});
    Mat rows;
    for (const auto& tv : t.basis()) {
      Vec v = zero_vec(l.field(), l.dim());
      for (std::size_t i = 0; i < fam.dim(); ++i) v = vec_add(v, vec_scale(tv[i], fam.basis()[i]));
      rows.push_back(v);
    }
    r.space = sum(r.space, Subspace::span(l.field(), l.dim(), rows));
  }
  r.complete = false;
  return r;
}

std::optional<std::vector<Subspace>> maximal_subalgebras(const LeibnizAlgebra& l) {
  if (!l.field().is_finite()) return std::nullopt;
  std::vector<Subspace> subs = all_subalgebras(l);
  std::vector<Subspace> maximal;
  for (const auto& m : subs) {
    if (m.is_full()) continue;
    bool is_max = true;
    for (const auto& bigger : subs) {
      if (bigger.is_full() || bigger == m) continue;
      if (m.leq(bigger) && m.dim() < bigger.dim()) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(m);
  }
  return maximal;
}

std::optional<std::pair<Subspace, Subspace>> frattini(const LeibnizAlgebra& l) {
  if (l.field().is_finite()) {
    auto maximal = maximal_subalgebras(l);
    Subspace f = l.full_space();
    for (const auto& m : *maximal) f = intersect(f, m);
    return std::make_pair(f, core(l, f));
  }
  if (l.is_nilpotent()) {
    // Classical fast path: F(L) = L^2 for nilpotent L; L^2 is an ideal.
    Subspace f = l.square();
    return std::make_pair(f, f);
  }
  return std::nullopt;
}

std::vector<SubalgebraHandle> maximal_nilpotent_subalgebras(const LeibnizAlgebra& l) {
  if (!l.field().is_finite())
    throw std::invalid_argument("maximal nilpotent subalgebras need a finite field");
  std::vector<Subspace> nilpotent;
  for (const auto& s : all_subalgebras(l))
    if (l.restrict_to(s).algebra.is_nilpotent()) nilpotent.push_back(s);
  std::vector<SubalgebraHandle> out;
  for (const auto& m : nilpotent) {
    bool is_max = true;
    for (const auto& bigger : nilpotent) {
      if (bigger == m) continue;
      if (m.leq(bigger) && m.dim() < bigger.dim()) {
        is_max = false;
        break;
      }
    }
    if (is_max) out.push_back(SubalgebraHandle{m, true});
  }
  return out;
}

bool is_cartan(const LeibnizAlgebra& l, const Subspace& h) {
  if (!is_subalgebra(l, h)) return false;
  if (!l.restrict_to(h).algebra.is_nilpotent()) return false;
  return l.normalizer(l.full_space(), h) == h;
}

CartanSearch cartan_subalgebras(const LeibnizAlgebra& l, const std::vector<Vec>& extra_candidates) {
  CartanSearch search;
  if (l.field().is_finite()) {
    for (const auto& s : all_subalgebras(l))
      if (is_cartan(l, s)) search.cartans.push_back(SubalgebraHandle{s, true});
    search.exhaustive = true;
    return search;
  }
  // Heuristic over Q: Fitting null component of R_x for candidate x, then
  // full verification of both Cartan conditions.
  std::vector<Vec> candidates = extra_candidates;
  for (std::size_t i = 0; i < l.dim(); ++i) candidates.push_back(unit_vec(l.field(), l.dim(), i));
  Vec sum_all = zero_vec(l.field(), l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    sum_all = vec_add(sum_all, unit_vec(l.field(), l.dim(), i));
  candidates.push_back(sum_all);
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      candidates.push_back(vec_add(unit_vec(l.field(), l.dim(), i), unit_vec(l.field(), l.dim(), j)));

  std::vector<Subspace> seen;
  for (const auto& x : candidates) {
    if (is_zero_vec(x)) continue;
    Mat power = l.right_mult(x);
    for (std::size_t k = 1; k < l.dim(); ++k) power = mat_mul(power, l.right_mult(x));
    Subspace fitting_null = kernel_space(l.field(), l.dim(), mat_transpose(power));
    if (!is_subalgebra(l, fitting_null)) continue;
    if (!is_cartan(l, fitting_null)) continue;
    if (std::find(seen.begin(), seen.end(), fitting_null) != seen.end()) continue;
    seen.push_back(fitting_null);
    search.cartans.push_back(SubalgebraHandle{fitting_null, true});
  }
  search.exhaustive = false;
  return search;
}

CartanComposition cartan_compose(const LeibnizAlgebra& l, const Subspace& h, const Subspace& b) {
  Subspace composed = sum(h, b);
  CartanComposition out{SubalgebraHandle{composed, is_subalgebra(l, composed)}, false};
  out.verified_cartan = out.handle.verified_closed && is_cartan(l, composed);
  return out;
}

}  // namespace leibniz
