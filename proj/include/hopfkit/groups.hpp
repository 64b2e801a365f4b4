#pragma once

#include "hopfkit/catalog.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hopfkit {

/// Group elements are canonical string tokens.
using Elem = std::string;

/// A group given operationally. Implementations are pure.
class GroupOracle {
public:
    virtual ~GroupOracle() = default;
    virtual std::string name() const = 0;
    virtual Elem identity() const = 0;
    virtual Elem multiply(const Elem& x, const Elem& y) const = 0;
    virtual Elem inverse(const Elem& x) const = 0;
    /// Canonical token for any accepted spelling; throws std::invalid_argument
    /// for tokens that do not denote an element.
    virtual Elem canon(const Elem& x) const = 0;
    /// Letters for random words (inverses are added by the sampler).
    virtual std::vector<Elem> generators() const = 0;
    virtual std::optional<std::size_t> order() const { return std::nullopt; }
    /// All elements, for finite groups only.
    virtual std::vector<Elem> elements() const;
};

using GroupPtr = std::shared_ptr<const GroupOracle>;

GroupPtr finite_oracle(FiniteGroup g);
/// ⟨r, s | s², srs = r⁻¹⟩ with tokens e, r^k, s, r^ks (k ∈ ℤ∖{0}, r^1 written r).
GroupPtr infinite_dihedral();
/// Free group on the first k lowercase letters other than e; uppercase letters are
/// inverses; tokens are freely reduced words, e for the empty word.
GroupPtr free_group(std::size_t k);

/// cyclic:n, symmetric:n, dihedral:n, klein, trivial, infinite-dihedral, free:k.
GroupPtr group_oracle(const std::string& name);
std::vector<std::string> group_oracle_names();

/// Product of a uniform random word of length in [0, word_bound] over the
/// generators and their inverses.
Elem random_element(const GroupOracle& g, std::mt19937_64& rng, std::size_t word_bound);

/// Seeded spot check of the group axioms and canonical-form idempotence.
CheckList spot_check_group(const GroupOracle& g, std::uint64_t seed, std::size_t samples, std::size_t word_bound);

/// The finite subgroup spanned by the given tokens (already closed), as a
/// table group with the tokens as labels. Throws VerificationError when the
/// set is not a subgroup.
FiniteGroup finite_subgroup(const GroupOracle& g, const std::vector<Elem>& elements);

}  // namespace hopfkit
