#pragma once

#include "leibniz/ideals.hpp"

#include <optional>
#include <string>

namespace leibniz {

enum class DecisionMethod { Certificate, Exhaustive, SimpleShortcut, QuotientReduction };
std::string method_str(DecisionMethod m);

/// Replayable witness that b is a weak c-ideal: a subideal C (given by its
/// chain up to L) with L = B + C and B cap C <= B_L.
struct WeakCCertificate {
  Subspace b;
  SubidealChain chain;  // chain.links.front() = C, chain.links.back() = L
  Subspace core_b;
  const Subspace& complement() const { return chain.links.front(); }
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  DecisionMethod method = DecisionMethod::Exhaustive;
  std::optional<WeakCCertificate> witness;
  std::string note;
};

std::string verdict_str(const Verdict& v);

/// Checks every certificate invariant exactly; on failure reports the
/// violated clause through `why`.
bool verify_weak_c(const LeibnizAlgebra& l, const WeakCCertificate& cert, std::string* why = nullptr);

/// Simplicity, decided exhaustively over finite fields, and over Q for
/// dim <= 3 (one-dimensional ideals come from the rational eigenvector
/// search; codimension-one ideals are exactly the subspaces containing L^2).
/// The literal form asks only that the ideal set be {0, I, L}; is_simple
/// additionally requires L^2 != 0 and dim > 1.
std::optional<bool> decide_simple_literal(const LeibnizAlgebra& l);
std::optional<bool> decide_simple(const LeibnizAlgebra& l);

Verdict is_c_ideal(const LeibnizAlgebra& l, const Subspace& b);
Verdict is_weak_c_ideal(const LeibnizAlgebra& l, const Subspace& b);

enum class OneDimKind { IdealCase, ComplementedCase, NotCIdeal };
std::string one_dim_kind_str(OneDimKind k);

struct OneDimClassification {
  OneDimKind kind;
  std::optional<Subspace> complement;  // the ideal B with L = B + Fx, when complemented
};

/// Trichotomy for a line Fx (x nonzero with x^2 in Fx): an ideal, or
/// complemented by an ideal containing L^2 (possible exactly when x lies
/// outside L^2), or not a c-ideal. Decidable over any field.
OneDimClassification classify_one_dim(const LeibnizAlgebra& l, const Vec& x);

/// Both finite-field decision routes: `direct` loops over all lines through
/// classify_one_dim; `criterion` tests L^2 cap J <= Asoc(L).
struct OneDimRoutes {
  bool direct = false;
  bool criterion = false;
};
OneDimRoutes all_one_dim_routes(const LeibnizAlgebra& l);

/// Is every one-dimensional subalgebra a c-ideal? Decided two independent
/// ways over finite fields (which must agree); over Q, certified through
/// the criterion when the cone L^2 cap J is itself a subspace, else
/// Unknown.
Verdict all_one_dim_c_ideals(const LeibnizAlgebra& l);

}  // namespace leibniz
