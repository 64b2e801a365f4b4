#pragma once

#include "hopfkit/hopf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

/// Finite group given by its multiplication table; element 0 need not be the
/// identity but every named constructor puts it first.
class FiniteGroup {
public:
    FiniteGroup() = default;
    /// Validates associativity, identity and inverses. Throws VerificationError.
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table, std::string name = {});

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    /// Permutations of {1..n} in one-line notation, lexicographic order;
    /// (στ)(i) = σ(τ(i)).
    static FiniteGroup symmetric(std::size_t n);
    /// r^k s^e with s r s = r⁻¹; labels e, r, r^2, ..., s, rs, r^2s, ...
    static FiniteGroup dihedral(std::size_t n);
    /// ℤ/2 × ℤ/2 as {e, a, b, ab}.
    static FiniteGroup klein();

    std::size_t order() const { return labels_.size(); }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.labels_ == b.labels_ && a.table_ == b.table_;
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// Named groups: trivial, cyclic:n, symmetric:n, dihedral:n, klein.
/// Throws std::invalid_argument for unknown names.
FiniteGroup group_by_name(const std::string& name);

struct SubgroupEmbedding {
    FiniteGroup subgroup;
    FiniteGroup ambient;
    std::vector<std::size_t> element_map;
};

/// Checks that the map is an injective homomorphism. Throws VerificationError.
SubgroupEmbedding make_embedding(FiniteGroup subgroup, FiniteGroup ambient, std::vector<std::size_t> element_map);
/// First injective homomorphism sub → ambient in lexicographic order of
/// image tuples, or nullopt.
std::optional<SubgroupEmbedding> find_embedding(const FiniteGroup& subgroup, const FiniteGroup& ambient);

HopfAlgebra group_algebra(const FiniteGroup& g);
HopfAlgebra function_algebra(const FiniteGroup& g);
HopfAlgebra sweedler4();
/// The base field as a one-dimensional Hopf algebra.
HopfAlgebra base_field_hopf();

/// C(G) → C(H), χ_g ↦ χ_g if g ∈ H else 0.
HopfMorphism restriction_morphism(const SubgroupEmbedding& emb);
/// Linear map C(H) → C(G), χ_h ↦ χ_h (extension by zero).
Matrix extension_by_zero(const SubgroupEmbedding& emb);
/// H₄ → ℂ(ℤ/2): 1↦e, g↦g, x↦0, gx↦0.
HopfMorphism sweedler_projection();
HopfMorphism identity_morphism(const HopfAlgebra& h);

/// Named Hopf algebras: base-field, sweedler4, group-algebra:<group>,
/// function-algebra:<group>, dual:<name>. Throws std::invalid_argument.
HopfAlgebra hopf_by_name(const std::string& name);

/// Named morphisms: sweedler-projection, identity:<hopf>,
/// restriction:<group>/<subgroup>[@label,label,...].
HopfMorphism morphism_by_name(const std::string& name);

/// Structure constants, unit, counit and antipode agree; labels ignored.
bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b);

std::vector<std::string> catalog_hopf_names();
std::vector<std::string> catalog_morphism_names();

}  // namespace hopfkit
