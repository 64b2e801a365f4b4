#pragma once

#include "hopfkit/catalog.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

enum class Side { left, right };
std::string to_string(Side s);
Side parse_side(const std::string& s);

/// An algebra with a Hopf action. action(x, a, b) is the coefficient of e_b
/// in e_x ⇀ e_a (left) or e_a ↼ e_x (right).
struct ModuleAlgebra {
    Algebra algebra;
    HopfAlgebra hopf;
    Side side = Side::left;
    Tensor3 action;

    /// x ⇀ a for a left action, a ↼ x for a right action.
    Vector act(const Vector& x, const Vector& a) const;
    Vector act_basis(std::size_t x, const Vector& a) const;
    /// Matrix of a ↦ (action of e_x on a).
    Matrix operator_of(std::size_t x) const;
};

ModuleAlgebra make_module_algebra(Algebra a, HopfAlgebra h, Side side, Tensor3 action);
ModuleAlgebra trivial_action(const Algebra& a, const HopfAlgebra& h, Side side = Side::left);

/// Module laws, 1 acting as identity, the module-algebra identity, and
/// x ⇀ 1 = ε(x)1, plus the algebra axioms of the underlying algebra.
CheckList verify_module_algebra(const ModuleAlgebra& m);

/// Right coaction A → A⊗H (row a*dimH + h) or left coaction A → H⊗A
/// (row h*dimA + a).
struct Coaction {
    Algebra algebra;
    HopfAlgebra hopf;
    Side side = Side::right;
    Matrix delta;
};

CheckList verify_coaction(const Coaction& c);

/// Right H-coaction ↦ left Ĥ-action α⇀a = Σ α(a₁)a₀, left coaction ↦ right
/// action a↼α = Σ α(a₋₁)a₀. The acting algebra is dual(hopf).
ModuleAlgebra coaction_to_action(const Coaction& c);
/// Inverse dictionary: a left K-action gives the right K̂-coaction
/// δ(a) = Σ_j (e_j⇀a)⊗δʲ, and mirrored for right actions.
Coaction action_to_coaction(const ModuleAlgebra& m);

/// Left Ĥ-action α⇀h = Σ h₁α(h₂) and right Ĥ-action h↼μ = Σ μ(h₁)h₂.
std::pair<ModuleAlgebra, ModuleAlgebra> regular_actions(const HopfAlgebra& h);
/// The left Ĥ-action computed as α⇀x = (ι⊗φ)((1⊗y)Δ(x)) with α = φʸ.
ModuleAlgebra integral_form_left_action(const HopfAlgebra& h);

/// λ_U = (π⊗ι)Δ, a left U-coaction on H.
Coaction subgroup_coaction(const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi);
/// x↼β = Σ β(π(x₁))x₂, a right Û-action on H. Throws VerificationError when
/// (H, U, π) is not a compact quantum subgroup.
ModuleAlgebra subgroup_restriction_action(const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi);

/// (a⊗h)↼β = Σ S̄(β₁)⇀a ⊗ h↼β₂ on A⊗H, index a*dimH + h. `a` must be a left
/// module algebra over a Hopf algebra with the structure of dual(U).
ModuleAlgebra tensor_action(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi);

struct Invariants {
    Subalgebra sub;
    Subspace bimodule_space;  // {m : (my)↼β = m(y↼β), (ym)↼β = (y↼β)m}
    bool agree = false;       // sub.space == bimodule_space
};
/// {m : m↼β = ε(β)m} for a right module algebra. Throws VerificationError when
/// the space is not a subalgebra.
Invariants invariants(const ModuleAlgebra& m);

struct InducedAction {
    ModuleAlgebra action;  // left Ĥ on the invariant subalgebra
    CheckList checks;      // preservation and agreement with the two-sided formulas
};
/// α⇀(a⊗h) = a⊗(α⇀h) restricted to the invariants of tensor_action.
InducedAction induced_hat_action(const Invariants& inv, const ModuleAlgebra& tensor, const HopfAlgebra& h);

/// A#K for a left module algebra; basis a#x at index a*dimK + x.
Algebra smash_product(const ModuleAlgebra& m);

/// A module over a finite-dimensional algebra. action(r, m, m') is the
/// coefficient of e_m' in e_m·e_r (right) or e_r·e_m (left).
struct FiniteModule {
    Algebra ring;
    std::size_t dim = 0;
    Side side = Side::right;
    Tensor3 action;
    std::vector<std::string> labels;

    Vector act(const Vector& r, const Vector& m) const;
    Matrix operator_of(std::size_t r) const;
};
CheckList verify_module(const FiniteModule& m);

/// The ring acting on itself by right multiplication.
FiniteModule regular_right_module(const Algebra& r);
/// A⊗H as a right A#Û-module: a⊗h ↼ b#β = Σ S̄(β₁)⇀(ab) ⊗ h↼β₂.
FiniteModule smash_module(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi);

struct EndAlgebra {
    Algebra algebra;                // composition product
    Subspace space;                 // flattened T (row-major dim x dim)
    std::vector<Matrix> basis_maps;
    Matrix map_of(const Vector& coords) const;
    std::optional<Vector> coords_of(const Matrix& t) const;
};
/// Commutant of the ring action.
EndAlgebra endomorphism_algebra(const FiniteModule& m);

struct HomModule {
    Subspace space;  // flattened F (row-major ringdim x moddim)
    std::vector<Matrix> basis_maps;
    std::optional<Vector> coords_of(const Matrix& f) const;
};
/// Hom_R(M, R) for a right module M.
HomModule hom_module(const FiniteModule& m);

/// Named algebras: base-field, dual-numbers, split:n (kⁿ), or any Hopf name.
Algebra algebra_by_name(const std::string& name);
/// Named module algebras: swap, swap-broken, graded, graded-involution,
/// trivial:<hopf>, translation:<group>, translation-group:<group>.
ModuleAlgebra action_by_name(const std::string& name);
std::vector<std::string> catalog_action_names();

}  // namespace hopfkit
