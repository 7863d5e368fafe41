#pragma once

#include "leibniz/algebra.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace leibniz {

/// [B,B] <= B.
bool is_subalgebra(const LeibnizAlgebra& l, const Subspace& b);
/// Two-sided: [B,L] + [L,B] <= B.
bool is_ideal(const LeibnizAlgebra& l, const Subspace& b);
/// B is an ideal of the subalgebra K (both given in L coordinates).
bool is_ideal_in(const LeibnizAlgebra& l, const Subspace& b, const Subspace& k);

struct SubalgebraHandle {
  Subspace space;
  bool verified_closed = true;
};

/// Largest ideal of L contained in the subalgebra b: the descending
/// fixpoint of X -> {v in X : [v,L] + [L,v] <= X}.
Subspace core(const LeibnizAlgebra& l, const Subspace& b);

/// Smallest ideal of L containing s: the ascending fixpoint adding
/// [X,L] + [L,X].
Subspace ideal_closure(const LeibnizAlgebra& l, const Subspace& s);

/// Chain B = links[0] < links[1] < ... < links.back() = L with each link a
/// two-sided ideal of the next.
struct SubidealChain {
  std::vector<Subspace> links;
  bool validate(const LeibnizAlgebra& l, std::string* why = nullptr) const;
};

/// Decides subideal status through the ascending idealizer series
/// N_0 = B, N_{k+1} = N_L(N_k); B is a subideal iff the series reaches L,
/// and the stabilized series is returned as the witnessing chain.
std::optional<SubidealChain> subideal_chain(const LeibnizAlgebra& l, const Subspace& b);
bool is_subideal(const LeibnizAlgebra& l, const Subspace& b);

/// All subalgebras, ascending dimension (finite fields only).
std::vector<Subspace> all_subalgebras(const LeibnizAlgebra& l);

struct IdealSet {
  std::vector<Subspace> ideals;
  bool complete = false;
};

/// Exhaustive over finite fields. Over Q: a verified supply (series terms,
/// kernel, one-dimensional ideals from the rational eigenvector search,
/// closures of basis lines), with complete = false.
IdealSet all_ideals(const LeibnizAlgebra& l);

/// Spaces in which every line is a one-dimensional (two-sided) ideal of L,
/// covering all such lines. Over finite fields the spaces are the ideal
/// lines themselves; over Q they are the simultaneous rational eigenspaces
/// of all left/right multiplications.
std::vector<Subspace> ideal_line_families(const LeibnizAlgebra& l);

IdealSet minimal_ideals(const LeibnizAlgebra& l);

struct AsocResult {
  Subspace space;
  bool complete = false;
};
/// Sum of the minimal abelian ideals. Over Q only the one-dimensional
/// contribution is collected and the result is flagged incomplete.
AsocResult asoc(const LeibnizAlgebra& l);

/// Proper subalgebras maximal under inclusion; nullopt over infinite fields.
std::optional<std::vector<Subspace>> maximal_subalgebras(const LeibnizAlgebra& l);

/// (F(L), phi(L)) = (intersection of maximal subalgebras, its core).
/// Over Q decided only for nilpotent algebras, where F(L) = L^2.
std::optional<std::pair<Subspace, Subspace>> frattini(const LeibnizAlgebra& l);

/// Subalgebras maximal among the nilpotent ones (finite fields).
std::vector<SubalgebraHandle> maximal_nilpotent_subalgebras(const LeibnizAlgebra& l);

struct CartanSearch {
  std::vector<SubalgebraHandle> cartans;
  bool exhaustive = false;
};
/// Nilpotent self-normalizing subalgebras. Exhaustive over finite fields;
/// over Q, Fitting null components of right multiplications by candidate
/// elements (plus any provided candidates), each fully verified.
CartanSearch cartan_subalgebras(const LeibnizAlgebra& l, const std::vector<Vec>& extra_candidates = {});

bool is_cartan(const LeibnizAlgebra& l, const Subspace& h);

struct CartanComposition {
  SubalgebraHandle handle;
  bool verified_cartan = false;
};
/// H + B for a Cartan H of the Levi factor and a Cartan B of its
/// centralizer in the radical; verification failure is a reported property
/// violation, not an error.
CartanComposition cartan_compose(const LeibnizAlgebra& l, const Subspace& h, const Subspace& b);

}  // namespace leibniz
