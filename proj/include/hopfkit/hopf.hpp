#pragma once

#include "hopfkit/algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfkit {

/// Failure to derive Hopf structure from a bialgebra.
class HopfError : public std::runtime_error {
public:
    enum class Kind { no_counit, counit_mismatch, no_antipode, antipode_not_invertible, antipode_mismatch };
    HopfError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Algebra plus comultiplication Δ(e_i) = Σ comult(i, j, k) e_j ⊗ e_k.
class Bialgebra {
public:
    Bialgebra() = default;
    Bialgebra(Algebra algebra, Tensor3 comult, std::optional<Vector> counit = std::nullopt);

    const Algebra& algebra() const { return algebra_; }
    std::size_t dim() const { return algebra_.dim(); }
    const std::vector<std::string>& labels() const { return algebra_.labels(); }
    const Tensor3& comult() const { return comult_; }
    const std::optional<Vector>& counit() const { return counit_; }

    /// Δ(x) in H⊗H coordinates (index j*dim + k).
    Vector comultiply(const Vector& x) const;
    Vector comultiply_basis(std::size_t i) const;

    friend bool operator==(const Bialgebra& a, const Bialgebra& b) = default;

private:
    Algebra algebra_;
    Tensor3 comult_;
    std::optional<Vector> counit_;
};

/// Product in A⊗B of two tensors given in A⊗B coordinates.
Vector tensor_multiply(const Algebra& a, const Algebra& b, const Vector& x, const Vector& y);

/// Associativity, unitality, coassociativity, Δ multiplicative and unital,
/// and the counit laws when a counit is supplied.
CheckList verify_bialgebra(const Bialgebra& b);

/// Unique ε with (ε⊗ι)Δ = ι = (ι⊗ε)Δ. Throws HopfError.
Vector solve_counit(const Bialgebra& b);

/// Unique S with Σ S(x₁)x₂ = ε(x)1 = Σ x₁S(x₂), solved as one joint system.
/// Column j of the result holds the coordinates of S(e_j). Throws HopfError.
Matrix solve_antipode(const Bialgebra& b, const Vector& counit);

class HopfAlgebra {
public:
    HopfAlgebra() = default;

    /// Derives counit and antipode (or checks the supplied ones), then checks
    /// that S is bijective. Throws HopfError.
    static HopfAlgebra make(Bialgebra b, std::optional<Matrix> antipode = std::nullopt, std::string name = {});

    const std::string& name() const { return name_; }
    const Bialgebra& bialgebra() const { return bi_; }
    const Algebra& algebra() const { return bi_.algebra(); }
    std::size_t dim() const { return bi_.dim(); }
    const std::vector<std::string>& labels() const { return bi_.labels(); }
    const Tensor3& comult() const { return bi_.comult(); }
    const Vector& counit() const { return counit_; }
    const Matrix& antipode() const { return antipode_; }
    /// S̄ = S⁻¹, the antipode of (H, Δᵒᵖ).
    const Matrix& antipode_inv() const { return antipode_inv_; }

    Vector multiply(const Vector& x, const Vector& y) const { return algebra().multiply(x, y); }
    Vector comultiply(const Vector& x) const { return bi_.comultiply(x); }
    Rational counit_of(const Vector& x) const { return dot(counit_, x); }
    Vector basis(std::size_t i) const { return unit_vector(dim(), i); }
    const Vector& unit() const { return algebra().unit(); }

    friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
        return a.bi_ == b.bi_ && a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
    }

private:
    std::string name_;
    Bialgebra bi_;
    Vector counit_;
    Matrix antipode_;
    Matrix antipode_inv_;
};

/// Every Hopf-algebra identity on basis elements: the four counit/antipode
/// equations in their T₁/T₂ form, S antihomomorphism, S bijective, Galois maps
/// bijective, ε∘S = ε and Δ∘S = (S⊗S)∘Δᵒᵖ.
CheckList verify_hopf(const HopfAlgebra& h);

struct GaloisMaps {
    Matrix t1;  // x⊗y ↦ Δ(x)(1⊗y)
    Matrix t2;  // x⊗y ↦ (x⊗1)Δ(y)
    bool t1_bijective = false;
    bool t2_bijective = false;
};
GaloisMaps galois_maps(const Bialgebra& b);

/// Bases (canonical RREF) of {t : xt = ε(x)t} and {t : tx = ε(x)t}.
std::vector<Vector> left_integrals(const HopfAlgebra& h);
std::vector<Vector> right_integrals(const HopfAlgebra& h);

struct InvariantFunctionals {
    std::vector<Vector> left;   // (ι⊗φ)Δ(x) = φ(x)1
    std::vector<Vector> right;  // (ψ⊗ι)Δ(x) = ψ(x)1
};
InvariantFunctionals invariant_functionals(const HopfAlgebra& h);

/// Left integral scaled so its first nonzero coordinate is 1.
Vector normalized_left_integral(const HopfAlgebra& h);
/// Left invariant functional scaled so φ(t) = 1 on normalized_left_integral.
Vector normalized_left_functional(const HopfAlgebra& h);

struct Unimodularity {
    bool unimodular = false;          // φ∘S == φ
    bool integrals_coincide = false;  // left integral line == right integral line
    bool consistent() const { return unimodular == integrals_coincide; }
    Vector phi;
    Vector phi_s;
};
Unimodularity unimodularity(const HopfAlgebra& h);
bool is_unimodular(const HopfAlgebra& h);

/// Full linear dual on the dual basis δ^i: multiplication is the transpose of
/// Δ, comultiplication the transpose of m, unit ε, counit evaluation at 1,
/// antipode the transpose of S.
HopfAlgebra dual(const HopfAlgebra& h);

struct HopfMorphism {
    HopfAlgebra source;
    HopfAlgebra target;
    Matrix matrix;  // target.dim x source.dim; column i = image of e_i
};

CheckList verify_morphism(const HopfMorphism& f);
bool is_surjective(const HopfMorphism& f);

/// Canonical evaluation map H → H**, certified as a bijective Hopf morphism.
HopfMorphism double_dual_iso(const HopfAlgebra& h);

struct SubgroupVerdict {
    bool compact = true;  // finite-dimensional Hopf algebras are unital
    bool unimodular = false;
    bool morphism = false;
    bool surjective = false;
    CheckList morphism_checks;
    bool holds() const { return compact && unimodular && morphism && surjective; }
};
SubgroupVerdict is_compact_quantum_subgroup(const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi);

/// Brute-force search for a Hopf isomorphism H → K determined by the images
/// of the given algebra generators. Each basis element of H must be listed as
/// a word in those generators; candidate images have coordinates in
/// `coefficients`.
struct IsoSearchPlan {
    std::vector<std::size_t> generators;
    std::vector<std::vector<std::size_t>> basis_words;  // indices into generators
    std::vector<Rational> coefficients{Rational(-1), Rational(0), Rational(1)};
};
std::optional<Matrix> find_isomorphism(const HopfAlgebra& h, const HopfAlgebra& k, const IsoSearchPlan& plan);

}  // namespace hopfkit
