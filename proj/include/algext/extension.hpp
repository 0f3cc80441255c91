#pragma once

#include "algext/cohomology.hpp"
#include "algext/finite_abelian.hpp"
#include "algext/lie.hpp"

namespace algext {

// The algebra a ⊕_w g carrying the bracket
// [(a,x), (a',x')] = (x.a' - x'.a + w(x,x'), [x,x']), with the coefficient
// block first; Jacobi holds exactly when w is a 2-cocycle.
struct ExtensionAlgebra {
  LieAlgebra total;
  std::vector<std::size_t> a_indices;
  std::vector<std::size_t> g_indices;
};

// Builds the bracket without the cocycle check (so the Jacobi <-> cocycle
// equivalence stays testable from outside).
LieAlgebra extension_structure(const Cochain& omega, const LieAlgebra& g, const LieModule& a);

// Throws Error(NotACocycle) when d omega != 0 (equivalently, Jacobi fails).
ExtensionAlgebra extension_algebra_from_cocycle(const Cochain& omega, const LieAlgebra& g,
                                                const LieModule& a);

// Cocycle-level Baer sum: coordinate-wise addition.
Cochain baer_sum(const Cochain& c1, const Cochain& c2);

// Post-composition of coefficients with an equivariant map gamma: a1 -> a2;
// throws Error(NotEquivariant) unless gamma intertwines the two actions.
Cochain pushforward_cocycle(const RatMatrix& gamma, const Cochain& c, const LieModule& a1,
                            const LieModule& a2);

// Hom(F, A) for A with torus rank t: every factor Z/d contributes (Z/d)^t and
// the unipotent part of A contributes nothing; the result is renormalized to
// an invariant-factor chain.
FiniteAbelianGroup hom_finite_part(const FiniteAbelianGroup& pi1, const CoeffGroupData& coeff);

struct ExtResult {
  FiniteAbelianGroup finite_part;
  std::size_t vector_part_dim = 0;
  std::vector<Cochain> vector_representatives;  // relative 2-cocycles over a_u
};

// The classifier: finite part Hom(pi1, A), vector part the relative H^2 of
// the pair with unipotent coefficients.
ExtResult ext_alg(const AlgGroupData& group, const CoeffGroupData& coeff);

// Torus-by-torus extensions vanish; encoded by running the classifier on the
// corresponding abelian data and asserting the trivial result.
ExtResult torus_torus_check(std::size_t g_torus_dim, std::size_t a_torus_dim);

// The two independent factors the classifier treats separately.
std::pair<LieModule, std::size_t> split_coefficients(const CoeffGroupData& coeff);

}  // namespace algext
