#include "hopfkit/algebra.hpp"

#include <sstream>

namespace hopfkit {

// ---- CheckList ----

void CheckList::add(std::string id, bool pass, std::string witness, std::size_t evaluated) {
    items_.push_back({std::move(id), pass, std::move(witness), evaluated});
}

void CheckList::merge(const CheckList& other, const std::string& prefix) {
    for (const auto& c : other.items_) items_.push_back({prefix + c.id, c.pass, c.witness, c.evaluated});
}

bool CheckList::ok() const {
    for (const auto& c : items_)
        if (!c.pass) return false;
    return true;
}

const Check* CheckList::find(const std::string& id) const {
    for (const auto& c : items_)
        if (c.id == id) return &c;
    return nullptr;
}

bool CheckList::passed(const std::string& id) const {
    const Check* c = find(id);
    return c && c->pass;
}

const Check* CheckList::first_failure() const {
    for (const auto& c : items_)
        if (!c.pass) return &c;
    return nullptr;
}

void IdentityTally::record(bool ok, const std::string& witness_if_failed) {
    record_lazy(ok, [&] { return witness_if_failed; });
}

// ---- Algebra ----

Algebra::Algebra(std::vector<std::string> labels, Tensor3 mult, Vector unit)
    : labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const std::size_t n = labels_.size();
    if (mult_.d1() != n || mult_.d2() != n || mult_.d3() != n)
        throw DimensionError("algebra: multiplication tensor does not match " + std::to_string(n) + " basis labels");
    if (unit_.size() != n) throw DimensionError("algebra: unit vector length mismatch");
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("algebra multiply: length mismatch");
    Vector r(dim());
    SparseVec ys = to_sparse(y);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [j, yj] : ys) {
            const SparseVec& p = mult_.at(i, j);
            if (p.empty()) continue;
            Rational c = x[i] * yj;
            axpy(r, c, p);
        }
    }
    return r;
}

Matrix Algebra::left_multiplication(const Vector& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(x, basis(j)));
    return Matrix::from_columns(cols, dim());
}

Matrix Algebra::right_multiplication(const Vector& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis(j), x));
    return Matrix::from_columns(cols, dim());
}

std::string Algebra::describe(const Vector& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size() && i < labels_.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!v[i].is_one()) os << v[i].str() << "*";
        os << labels_[i];
    }
    if (first) os << "0";
    return os.str();
}

Algebra base_field() {
    Tensor3 m(1, 1, 1);
    m.set(0, 0, 0, 1);
    return Algebra({"1"}, std::move(m), Vector{Rational(1)});
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x + "⊗" + y);
    return out;
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    Tensor3 m(n, n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < na; ++k) {
            const SparseVec& pa = a.basis_product(i, k);
            if (pa.empty()) continue;
            for (std::size_t j = 0; j < nb; ++j)
                for (std::size_t l = 0; l < nb; ++l) {
                    const SparseVec& pb = b.basis_product(j, l);
                    for (const auto& [r, x] : pa)
                        for (const auto& [s, y] : pb) m.set(i * nb + j, k * nb + l, r * nb + s, x * y);
                }
        }
    return Algebra(tensor_labels(a.labels(), b.labels()), std::move(m), kron(a.unit(), b.unit()));
}

CheckList verify_algebra(const Algebra& a) {
    CheckList out;
    const std::size_t n = a.dim();
    IdentityTally assoc("associativity");
    for (std::size_t i = 0; i < n && assoc.pass(); ++i)
        for (std::size_t j = 0; j < n && assoc.pass(); ++j) {
            Vector ij = to_dense(a.basis_product(i, j), n);
            for (std::size_t k = 0; k < n; ++k) {
                Vector lhs = a.multiply(ij, a.basis(k));
                Vector rhs = a.multiply(a.basis(i), to_dense(a.basis_product(j, k), n));
                assoc.record_lazy(lhs == rhs, [&] {
                    return "(" + a.labels()[i] + ", " + a.labels()[j] + ", " + a.labels()[k] + ")";
                });
                if (!assoc.pass()) break;
            }
        }
    assoc.into(out);

    IdentityTally unital("unitality");
    for (std::size_t i = 0; i < n; ++i) {
        Vector e = a.basis(i);
        unital.record_lazy(a.multiply(a.unit(), e) == e && a.multiply(e, a.unit()) == e,
                           [&] { return a.labels()[i]; });
    }
    unital.into(out);

    // x is degenerate when left and right multiplication by every basis
    // element both kill it; stack both representations and look for a kernel.
    std::vector<SparseVec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix l = a.left_multiplication(a.basis(i));
        Matrix r = a.right_multiplication(a.basis(i));
        for (auto& row : l.sparse_rows()) rows.push_back(std::move(row));
        for (auto& row : r.sparse_rows()) rows.push_back(std::move(row));
    }
    auto ker = kernel_basis_sparse(rows, n);
    out.add("non-degenerate product", ker.empty(), ker.empty() ? "" : a.describe(ker.front()));
    return out;
}

Subalgebra make_subalgebra(const Algebra& ambient, const Subspace& space, const std::string& label_prefix) {
    const std::size_t d = space.dim();
    Tensor3 m(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector p = ambient.multiply(space.basis()[i], space.basis()[j]);
            auto c = space.coords(p);
            if (!c) throw VerificationError("subalgebra", "subspace not closed under the product at basis pair (" +
                                                              std::to_string(i) + ", " + std::to_string(j) + ")");
            m.set_slice(i, j, *c);
        }
    auto u = space.coords(ambient.unit());
    if (!u) throw VerificationError("subalgebra", "subspace does not contain the unit");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back(label_prefix + std::to_string(i));
    Matrix inc = Matrix::from_columns(space.basis(), ambient.dim());
    return {Algebra(std::move(labels), std::move(m), *u), space, std::move(inc)};
}

}  // namespace hopfkit
