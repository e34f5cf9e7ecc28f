#pragma once

#include "erne/enumeration.hpp"
#include "erne/families.hpp"
#include "erne/poset.hpp"

namespace erne {

/// Re-validate the image's family membership after a map (slow; for
/// debugging and `--check`).
enum class Postcheck { Off, On };

/// Φ(f) = S(f) ∪ Q ∪ ⋃_{y ∈ Y} f(y) × {y}. The result lies in 𝔐_Q(X, Y), and
/// in 𝔐*_Q(X, Y) when f is starred.
/// Throws CarrierMismatch if c(Q) is not f's domain, NotMonotone if f
/// violates (a, b) ∈ Q ⇒ f(a) ⊆ f(b).
PartialOrder phi(const MonotoneLowerEndMap& f, const PartialOrder& q);

/// y ↦ (↓_R y) ∖ Y over the base R|_X. Requires Y = `context.upper` to be an
/// upper end of R (which makes it convex); throws NotInFamily otherwise.
MonotoneLowerEndMap phi_inverse(const PartialOrder& r, const SplitContext& context);

/// Dualizes R|_X and R|_Y and complements the cross pairs X × Y. Requires Y to
/// be an upper end of R; the result again has Y as an upper end, and
/// tau(tau(R)) = R.
PartialOrder tau(const PartialOrder& r, const SplitContext& context);

/// The main bijection 𝔐*_{Q+A_y}(X, Z ∪ {y}) → ℭ_{Q^d}(X, Z) with
/// X = `context.lower`, Z = `context.upper`, y = `*context.apex`:
/// drops y and applies tau split at W ∩ ↓y versus W ∖ ↓y, W = X ∪ Z.
/// The precondition is validated in full; throws NotInFamily with a witness.
PartialOrder sigma(const PartialOrder& r, const SplitContext& context, Postcheck postcheck = Postcheck::Off);

/// Inverse of sigma: with Y = ↑Z and X' = X ∖ Y, returns
/// tau_{X',Y}(R') ∪ {(y, y)} ∪ (X' × {y}). Requires Z convex in R' and the
/// apex outside c(R').
PartialOrder sigma_inverse(const PartialOrder& r_prime, const SplitContext& context,
                           Postcheck postcheck = Postcheck::Off);

/// Counts #𝔑*_{Q+A_y}(X, Z ∪ {y}) and #𝔍_{Q^d}(X, Z) by two independent
/// enumerations (no bijection involved), with role-preserving class tables
/// (roles X, Z, y) and the per-G block table over G ∈ 𝔊_Q(X).
CountReport theorem_count_check(const PartialOrder& q, ElementSet x, Id apex, int max_size = kDefaultMaxSize);

}  // namespace erne
