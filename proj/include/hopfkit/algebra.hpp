#pragma once

#include "hopfkit/check.hpp"
#include "hopfkit/linalg.hpp"

#include <string>
#include <vector>

namespace hopfkit {

/// Finite-dimensional unital algebra given by structure constants:
/// e_i e_j = sum_k mult(i, j, k) e_k.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::vector<std::string> labels, Tensor3 mult, Vector unit);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Tensor3& mult() const { return mult_; }
    const Vector& unit() const { return unit_; }

    Vector basis(std::size_t i) const { return unit_vector(dim(), i); }
    Vector multiply(const Vector& x, const Vector& y) const;
    const SparseVec& basis_product(std::size_t i, std::size_t j) const { return mult_.at(i, j); }

    /// Matrices of y -> x*y and y -> y*x.
    Matrix left_multiplication(const Vector& x) const;
    Matrix right_multiplication(const Vector& x) const;

    std::string describe(const Vector& v) const;

    friend bool operator==(const Algebra& a, const Algebra& b) = default;

private:
    std::vector<std::string> labels_;
    Tensor3 mult_;
    Vector unit_;
};

Algebra base_field();
/// (a ⊗ b)(a' ⊗ b') = aa' ⊗ bb', basis index i*dim(B) + j.
Algebra tensor_product(const Algebra& a, const Algebra& b);
std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Associativity, unitality and non-degeneracy of the product.
CheckList verify_algebra(const Algebra& a);

/// Subalgebra spanned by `space` (must contain the unit and be closed under
/// the product), expressed in the canonical basis of the subspace.
struct Subalgebra {
    Algebra algebra;
    Subspace space;
    Matrix inclusion;  // ambient_dim x sub_dim
};
Subalgebra make_subalgebra(const Algebra& ambient, const Subspace& space, const std::string& label_prefix);

}  // namespace hopfkit
