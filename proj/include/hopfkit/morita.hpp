#pragma once

#include "hopfkit/actions.hpp"
#include "hopfkit/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

/// A bimodule given by its two action tensors. left(r, m, m') is the
/// coefficient of e_m' in e_r·e_m, right(s, m, m') the coefficient of e_m' in
/// e_m·e_s.
struct Bimodule {
    std::size_t dim = 0;
    Tensor3 left;
    Tensor3 right;
    std::vector<std::string> labels;

    Vector act_left(const Vector& r, const Vector& m) const;
    Vector act_right(const Vector& m, const Vector& s) const;
    Matrix left_operator(const Vector& r) const;
    Matrix right_operator(const Vector& s) const;
};

/// Rings R, S; an R-S bimodule P and an S-R bimodule Q; pairings
/// Γ: P⊗Q → R (gamma(p, q, r)) and Λ: Q⊗P → S (lambda(q, p, s)).
struct MoritaContext {
    std::string name;
    Algebra R, S;
    Bimodule P, Q;
    Tensor3 gamma, lambda;

    Vector Gamma(const Vector& p, const Vector& q) const;
    Vector Lambda(const Vector& q, const Vector& p) const;
};

/// Module laws on both sides of P and Q and commuting actions.
CheckList verify_bimodules(const MoritaContext& c);

/// eq-3.2-left: Γ(p⊗q)·p′ = p·Λ(q⊗p′); eq-3.2-right: Λ(q⊗p)·q′ = q·Γ(p⊗q′);
/// plus balancedness and outer linearity of both pairings. Exhaustive over
/// basis triples.
CheckList verify_compatibility(const MoritaContext& c);

struct PairingTerm {
    Rational coefficient;
    Vector left;   // first tensor factor
    Vector right;  // second tensor factor
};

struct SurjectivityHit {
    std::size_t target = 0;  // basis index in the target ring
    std::vector<PairingTerm> terms;
};

struct SurjectivityCertificate {
    bool surjective = false;
    std::size_t rank = 0;  // dimension of the span of the image
    std::vector<SurjectivityHit> hits;
    bool verified = false;  // every hit re-evaluated to its target
    std::string missing;    // first target label outside the image
};

struct SurjectivityResult {
    SurjectivityCertificate gamma, lambda;
    bool both() const { return gamma.surjective && gamma.verified && lambda.surjective && lambda.verified; }
};

/// Spans the pairing images of all basis pairs and expresses every basis
/// element of R and S in them.
SurjectivityResult verify_surjectivity(const MoritaContext& c);

/// Re-evaluates every hit of a certificate. `gamma` selects which pairing.
bool check_certificate(const MoritaContext& c, const SurjectivityCertificate& cert, bool gamma);

Json certificate_to_json(const MoritaContext& c, const SurjectivityCertificate& cert, bool gamma);

/// R = S = P = Q = k with both pairings multiplication. `lambda_scale`
/// rescales Λ to produce a corrupted context.
MoritaContext trivial_context(const Rational& lambda_scale = Rational(1));

/// Everything the imprimitivity pipeline derives from (A, H, U, π).
struct ImprimitivityData {
    ModuleAlgebra coeff;  // left Û-module algebra A
    HopfAlgebra h, u;
    Matrix pi;
    ModuleAlgebra tensor;   // right Û-action on A⊗H
    Invariants inv;         // (A⊗H)^Û
    InducedAction induced;  // left Ĥ-action on the invariants
    Algebra smash_inv;      // (A⊗H)^Û#Ĥ, basis v#α at v*dimĤ + α
    Algebra smash_a;        // A#Û
    FiniteModule module;    // A⊗H as a right A#Û-module
    EndAlgebra end;
    HomModule hom;
    Matrix phi;  // flattened endomorphism (dim²) of each smash_inv basis element

    static ImprimitivityData build(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u,
                                   const Matrix& pi);

    std::size_t module_dim() const { return module.dim; }
    /// The endomorphism (Σ vᵢ#αᵢ)(b⊗k) = Σ vᵢ(b⊗αᵢ⇀k).
    Matrix smash_to_end(const Vector& r) const;
    Vector unit_of_smash_inv() const;
};

/// Homomorphism, unit, commutant membership, injectivity and surjectivity of
/// the smash-to-End map.
CheckList verify_smash_to_end(const ImprimitivityData& d);

struct Decomposition {
    Vector element;                 // coordinates in smash_inv
    std::vector<Vector> components;  // Xˡ = Σ_a e_a⊗q_aˡ in A⊗H, one per dual basis element
    CheckList checks;
};

/// Writes an equivariant T as Σ_l Xˡ#δˡ with qˡ = Σ f(v₂ˡ)S̄(v₁ˡ). The optional
/// basis change gives the vˡ as columns; the δˡ are then the rows of its
/// inverse. Throws VerificationError when T is not in the commutant.
Decomposition decompose_endomorphism(const ImprimitivityData& d, const Matrix& t,
                                     const std::optional<Matrix>& basis = std::nullopt);

/// A seeded random element of End_{A#Û}(A⊗H).
Matrix random_equivariant(const ImprimitivityData& d, std::uint64_t seed);

/// R = End_{A#Û}(A⊗H), S = A#Û, P = A⊗H, Q = Hom_{A#Û}(A⊗H, A#Û),
/// Γ(p⊗f)(m) = p↼f(m), Λ(f⊗p) = f(p).
MoritaContext hom_context(const ImprimitivityData& d);
MoritaContext hom_context(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi);

/// The same context with R replaced by (A⊗H)^Û#Ĥ through smash_to_end; Γ is
/// computed by decompose_endomorphism.
MoritaContext theorem_context(const ImprimitivityData& d);

bool has_trivial_action(const ModuleAlgebra& a);

struct GeneratorCertificate {
    Matrix p;  // dim(A#Û) x dim(A⊗H)
    std::size_t rank = 0;
    CheckList checks;
};
/// p(a⊗h) = a⊗γ^{S(π(h))} into the regular right A⊗Û-module, γ the
/// normalized invariant functional of U. Requires a trivial action.
GeneratorCertificate trivial_action_generator(const ImprimitivityData& d);

struct ProjectivityCertificate {
    std::size_t free_rank = 0;
    std::vector<Vector> sigma;  // coordinates in Hom, one per free summand
    CheckList checks;
};
/// A⊗H as a direct summand of (A#Û)^dimH: ρ(s) = Σ_h (1⊗e_h)↼s_h and an
/// A#Û-linear σ with ρσ = id.
ProjectivityCertificate projectivity(const ImprimitivityData& d);

/// Surjectivity lifted from the context over the invariant subalgebra A^Û,
/// via a#β = (a#ε)(1#β) and v#α = (v#ε̂)(1#α).
SurjectivityResult reduce_to_invariants(const ImprimitivityData& d, const MoritaContext& ctx);

enum class SurjectivityStrategy { direct, reduce_to_invariants };
std::string to_string(SurjectivityStrategy s);
SurjectivityStrategy parse_strategy(const std::string& s);

struct TheoremOptions {
    SurjectivityStrategy strategy = SurjectivityStrategy::direct;
    std::uint64_t seed = 42;
    std::size_t random_endomorphisms = 5;
    bool include_hom_context = true;
};

/// The whole pipeline as report stages.
Report verify_theorem_morita(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi,
                             const TheoremOptions& opt = {});

}  // namespace hopfkit
