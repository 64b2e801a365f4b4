#include "hopfkit/hopf.hpp"

#include <functional>
#include <map>

namespace hopfkit {

namespace {

using Acc = std::map<std::size_t, Rational>;

void acc_add(Acc& a, std::size_t k, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = a.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) a.erase(it);
    }
}

SparseVec acc_sparse(const Acc& a) { return SparseVec(a.begin(), a.end()); }

std::string pair_witness(const std::vector<std::string>& l, std::size_t i, std::size_t j) {
    return "(" + l[i] + ", " + l[j] + ")";
}

// Sparse Δ(e_i) in H⊗H coordinates.
SparseVec comult_sparse(const Tensor3& c, std::size_t i) {
    const std::size_t n = c.d2();
    SparseVec out;
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, v] : c.at(i, j)) out.emplace_back(j * n + k, v);
    return out;
}

SparseVec sparse_tensor_multiply(const Algebra& a, const Algebra& b, const SparseVec& x, const SparseVec& y) {
    const std::size_t nb = b.dim();
    Acc r;
    for (const auto& [p, xv] : x)
        for (const auto& [q, yv] : y) {
            const SparseVec& pa = a.basis_product(p / nb, q / nb);
            if (pa.empty()) continue;
            const SparseVec& pb = b.basis_product(p % nb, q % nb);
            if (pb.empty()) continue;
            Rational c = xv * yv;
            for (const auto& [s, av] : pa)
                for (const auto& [t, bv] : pb) acc_add(r, s * nb + t, c * av * bv);
        }
    return acc_sparse(r);
}

// Σ_j rows of a square system built from (equation, unknown) coefficient pairs.
struct SystemBuilder {
    std::map<std::size_t, Acc> rows;
    Vector rhs;
    void add(std::size_t eq, std::size_t unknown, const Rational& v) { acc_add(rows[eq], unknown, v); }
    std::vector<SparseVec> sparse_rows(std::size_t n_eq) const {
        std::vector<SparseVec> out(n_eq);
        for (const auto& [e, r] : rows) out[e] = acc_sparse(r);
        return out;
    }
};

Vector apply_sparse_cols(const Matrix& m, const SparseVec& x) {
    Vector r(m.rows());
    for (const auto& [c, v] : x) axpy(r, v, m.column(c));
    return r;
}

// Checks Σ S(x₁)x₂ = ε(x)1 = Σ x₁S(x₂) on each basis element.
bool antipode_equations_hold(const Bialgebra& b, const Vector& eps, const Matrix& s, bool left, bool right) {
    const std::size_t n = b.dim();
    const Algebra& a = b.algebra();
    std::vector<Vector> scols(n);
    for (std::size_t j = 0; j < n; ++j) scols[j] = s.column(j);
    for (std::size_t i = 0; i < n; ++i) {
        Vector target = eps[i] * a.unit();
        Vector l(n), r(n);
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : b.comult().at(i, j)) {
                if (left) axpy(l, c, a.multiply(scols[j], a.basis(k)));
                if (right) axpy(r, c, a.multiply(a.basis(j), scols[k]));
            }
        if (left && l != target) return false;
        if (right && r != target) return false;
    }
    return true;
}

// Rows of the antipode system; unknown r*n + j is the e_r-coefficient of S(e_j).
SystemBuilder antipode_system(const Bialgebra& b, const Vector& eps, bool left, bool right) {
    const std::size_t n = b.dim();
    const Tensor3& m = b.algebra().mult();
    const Vector& u = b.algebra().unit();
    SystemBuilder sys;
    const std::size_t n_eq = (left && right ? 2 : 1) * n * n;
    sys.rhs = zeros(n_eq);
    const std::size_t right_off = left ? n * n : 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t mm = 0; mm < n; ++mm) {
            if (left) sys.rhs[i * n + mm] = eps[i] * u[mm];
            if (right) sys.rhs[right_off + i * n + mm] = eps[i] * u[mm];
        }
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : b.comult().at(i, j))
                for (std::size_t r = 0; r < n; ++r) {
                    if (left)
                        for (const auto& [mm, v] : m.at(r, k)) sys.add(i * n + mm, r * n + j, c * v);
                    if (right)
                        for (const auto& [mm, v] : m.at(j, r)) sys.add(right_off + i * n + mm, r * n + k, c * v);
                }
    }
    return sys;
}

std::optional<Matrix> solve_antipode_sides(const Bialgebra& b, const Vector& eps, bool left, bool right) {
    const std::size_t n = b.dim();
    SystemBuilder sys = antipode_system(b, eps, left, right);
    auto x = solve_sparse(sys.sparse_rows(sys.rhs.size()), sys.rhs, n * n);
    if (!x) return std::nullopt;
    return Matrix::unflatten(*x, n, n);
}

CheckList morphism_checks(const HopfAlgebra& src, const HopfAlgebra& tgt, const Matrix& pi, bool stop_early) {
    CheckList out;
    const std::size_t n = src.dim(), m = tgt.dim();
    if (pi.rows() != m || pi.cols() != n) throw DimensionError("morphism matrix has the wrong shape");
    std::vector<Vector> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = pi.column(i);

    out.add("unit preserved", pi.apply(src.unit()) == tgt.unit(), tgt.algebra().describe(pi.apply(src.unit())), 1);
    if (stop_early && !out.ok()) return out;

    IdentityTally hom("algebra homomorphism");
    for (std::size_t i = 0; i < n && hom.pass(); ++i)
        for (std::size_t j = 0; j < n && hom.pass(); ++j) {
            Vector lhs = apply_sparse_cols(pi, src.algebra().basis_product(i, j));
            hom.record_lazy(lhs == tgt.multiply(img[i], img[j]), [&] { return pair_witness(src.labels(), i, j); });
        }
    hom.into(out);
    if (stop_early && !out.ok()) return out;

    IdentityTally co("comultiplication intertwined");
    for (std::size_t i = 0; i < n; ++i) {
        Vector lhs = tgt.comultiply(img[i]);
        Vector rhs(m * m);
        for (const auto& [p, c] : comult_sparse(src.comult(), i)) axpy(rhs, c, kron(img[p / n], img[p % n]));
        co.record_lazy(lhs == rhs, [&] { return src.labels()[i]; });
        if (!co.pass()) break;
    }
    co.into(out);
    if (stop_early && !out.ok()) return out;

    IdentityTally cu("counit preserved");
    for (std::size_t i = 0; i < n; ++i)
        cu.record_lazy(tgt.counit_of(img[i]) == src.counit()[i], [&] { return src.labels()[i]; });
    cu.into(out);

    IdentityTally an("antipode intertwined");
    for (std::size_t i = 0; i < n; ++i) {
        Vector lhs = pi.apply(src.antipode().column(i));
        an.record_lazy(lhs == tgt.antipode().apply(img[i]), [&] { return src.labels()[i]; });
    }
    an.into(out);
    return out;
}

}  // namespace

// ---- Bialgebra ----

Bialgebra::Bialgebra(Algebra algebra, Tensor3 comult, std::optional<Vector> counit)
    : algebra_(std::move(algebra)), comult_(std::move(comult)), counit_(std::move(counit)) {
    const std::size_t n = algebra_.dim();
    if (comult_.d1() != n || comult_.d2() != n || comult_.d3() != n)
        throw DimensionError("bialgebra: comultiplication tensor does not match dimension " + std::to_string(n));
    if (counit_ && counit_->size() != n) throw DimensionError("bialgebra: counit length mismatch");
}

Vector Bialgebra::comultiply_basis(std::size_t i) const { return to_dense(comult_sparse(comult_, i), dim() * dim()); }

Vector Bialgebra::comultiply(const Vector& x) const {
    if (x.size() != dim()) throw DimensionError("comultiply: length mismatch");
    Vector r(dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!x[i].is_zero()) axpy(r, x[i], comult_sparse(comult_, i));
    return r;
}

Vector tensor_multiply(const Algebra& a, const Algebra& b, const Vector& x, const Vector& y) {
    const std::size_t n = a.dim() * b.dim();
    if (x.size() != n || y.size() != n) throw DimensionError("tensor_multiply: length mismatch");
    return to_dense(sparse_tensor_multiply(a, b, to_sparse(x), to_sparse(y)), n);
}

CheckList verify_bialgebra(const Bialgebra& b) {
    CheckList out = verify_algebra(b.algebra());
    const std::size_t n = b.dim();
    const auto& l = b.labels();
    const Tensor3& c = b.comult();
    std::vector<SparseVec> delta(n);
    for (std::size_t i = 0; i < n; ++i) delta[i] = comult_sparse(c, i);

    IdentityTally coassoc("coassociativity");
    for (std::size_t i = 0; i < n; ++i) {
        Acc lhs, rhs;
        for (const auto& [p, v] : delta[i]) {
            const std::size_t j = p / n, k = p % n;
            for (const auto& [q, w] : delta[j]) acc_add(lhs, q * n + k, v * w);
            for (const auto& [q, w] : delta[k]) acc_add(rhs, j * n * n + q, v * w);
        }
        coassoc.record_lazy(lhs == rhs, [&] { return l[i]; });
        if (!coassoc.pass()) break;
    }
    coassoc.into(out);

    IdentityTally mult("Δ multiplicative");
    for (std::size_t i = 0; i < n && mult.pass(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Acc lhs;
            for (const auto& [k, v] : b.algebra().basis_product(i, j))
                for (const auto& [p, w] : delta[k]) acc_add(lhs, p, v * w);
            SparseVec rhs = sparse_tensor_multiply(b.algebra(), b.algebra(), delta[i], delta[j]);
            mult.record_lazy(acc_sparse(lhs) == rhs, [&] { return pair_witness(l, i, j); });
            if (!mult.pass()) break;
        }
    mult.into(out);

    const bool unital = b.comultiply(b.algebra().unit()) == kron(b.algebra().unit(), b.algebra().unit());
    out.add("Δ unital", unital, unital ? "" : "Δ(1) ≠ 1⊗1", 1);

    if (const auto& eps = b.counit()) {
        IdentityTally law("counit law");
        for (std::size_t i = 0; i < n; ++i) {
            Vector left(n), right(n);
            for (const auto& [p, v] : delta[i]) {
                left[p % n] += v * (*eps)[p / n];
                right[p / n] += v * (*eps)[p % n];
            }
            Vector e = unit_vector(n, i);
            law.record_lazy(left == e && right == e, [&] { return l[i]; });
        }
        law.into(out);
        IdentityTally hom("counit multiplicative");
        hom.record(dot(*eps, b.algebra().unit()).is_one(), "ε(1) ≠ 1");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational lhs;
                for (const auto& [k, v] : b.algebra().basis_product(i, j)) lhs.add_product(v, (*eps)[k]);
                hom.record_lazy(lhs == (*eps)[i] * (*eps)[j], [&] { return pair_witness(l, i, j); });
            }
        hom.into(out);
    }
    return out;
}

Vector solve_counit(const Bialgebra& b) {
    const std::size_t n = b.dim();
    SystemBuilder sys;
    // equation (side, i, m): side 0 is (ε⊗ι)Δ(e_i) = e_i, side 1 is (ι⊗ε)Δ(e_i) = e_i
    const std::size_t n_eq = 2 * n * n;
    sys.rhs = zeros(n_eq);
    for (std::size_t i = 0; i < n; ++i) {
        sys.rhs[i * n + i] = 1;
        sys.rhs[n * n + i * n + i] = 1;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : b.comult().at(i, j)) {
                sys.add(i * n + k, j, c);
                sys.add(n * n + i * n + j, k, c);
            }
    }
    auto x = solve_sparse(sys.sparse_rows(n_eq), sys.rhs, n);
    if (!x) throw HopfError(HopfError::Kind::no_counit, "no counit: (ε⊗ι)Δ = ι = (ι⊗ε)Δ has no solution");
    if (b.counit() && *b.counit() != *x)
        throw HopfError(HopfError::Kind::counit_mismatch,
                        "supplied counit " + to_string(*b.counit()) + " differs from the solved counit " + to_string(*x));
    return *x;
}

Matrix solve_antipode(const Bialgebra& b, const Vector& counit) {
    if (auto s = solve_antipode_sides(b, counit, true, true)) return *s;
    const bool left = solve_antipode_sides(b, counit, true, false).has_value();
    const bool right = solve_antipode_sides(b, counit, false, true).has_value();
    std::string detail = left && right ? "each side is solvable separately but not jointly"
                         : left       ? "only Σ S(x₁)x₂ = ε(x)1 is solvable"
                         : right      ? "only Σ x₁S(x₂) = ε(x)1 is solvable"
                                      : "neither convolution equation is solvable";
    throw HopfError(HopfError::Kind::no_antipode, "no antipode: " + detail);
}

// ---- HopfAlgebra ----

HopfAlgebra HopfAlgebra::make(Bialgebra b, std::optional<Matrix> antipode, std::string name) {
    Vector eps = solve_counit(b);
    Matrix s;
    if (antipode) {
        if (antipode->rows() != b.dim() || antipode->cols() != b.dim())
            throw DimensionError("antipode matrix has the wrong shape");
        // The antipode is unique, so a supplied matrix satisfying both
        // convolution equations is the solution.
        if (!antipode_equations_hold(b, eps, *antipode, true, true)) {
            Matrix solved = solve_antipode(b, eps);
            throw HopfError(HopfError::Kind::antipode_mismatch,
                            "supplied antipode differs from the solved antipode " + to_string(solved));
        }
        s = std::move(*antipode);
    } else {
        s = solve_antipode(b, eps);
    }
    auto inv = inverse(s);
    if (!inv) throw HopfError(HopfError::Kind::antipode_not_invertible, "antipode is not bijective (not regular)");
    HopfAlgebra h;
    h.name_ = std::move(name);
    h.bi_ = Bialgebra(b.algebra(), b.comult(), eps);
    h.counit_ = std::move(eps);
    h.antipode_ = std::move(s);
    h.antipode_inv_ = std::move(*inv);
    return h;
}

GaloisMaps galois_maps(const Bialgebra& b) {
    const std::size_t n = b.dim(), nn = n * n;
    const Algebra& a = b.algebra();
    GaloisMaps g{Matrix(nn, nn), Matrix(nn, nn)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (const auto& [y, c] : b.comult().at(i, x))
                for (std::size_t j = 0; j < n; ++j) {
                    // T1(e_i⊗e_j) ∋ c e_x ⊗ e_y e_j ; T2(e_j⊗e_i) ∋ c e_j e_x ⊗ e_y
                    for (const auto& [k, v] : a.basis_product(y, j)) g.t1.add_to(x * n + k, i * n + j, c * v);
                    for (const auto& [k, v] : a.basis_product(j, x)) g.t2.add_to(k * n + y, j * n + i, c * v);
                }
    g.t1_bijective = rank(g.t1) == nn;
    g.t2_bijective = rank(g.t2) == nn;
    return g;
}

CheckList verify_hopf(const HopfAlgebra& h) {
    CheckList out = verify_bialgebra(h.bialgebra());
    const std::size_t n = h.dim();
    const auto& l = h.labels();
    const Algebra& a = h.algebra();
    const Vector& eps = h.counit();
    const Matrix& s = h.antipode();
    std::vector<Vector> scol(n);
    for (std::size_t j = 0; j < n; ++j) scol[j] = s.column(j);

    GaloisMaps g = galois_maps(h.bialgebra());
    IdentityTally cl("counit-left"), cr("counit-right"), al("antipode-left"), ar("antipode-right");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector xy = to_dense(a.basis_product(i, j), n);
            auto wit = [&] { return pair_witness(l, i, j); };
            // (ε⊗ι)(Δ(x)(1⊗y)) = xy and m(S⊗ι)(Δ(x)(1⊗y)) = ε(x)y
            Vector t1 = g.t1.column(i * n + j);
            Vector lhs(n), lhs_s(n);
            for (std::size_t p = 0; p < n * n; ++p) {
                if (t1[p].is_zero()) continue;
                lhs[p % n] += t1[p] * eps[p / n];
                axpy(lhs_s, t1[p], a.multiply(scol[p / n], a.basis(p % n)));
            }
            cl.record_lazy(lhs == xy, wit);
            al.record_lazy(lhs_s == eps[i] * a.basis(j), wit);
            // (ι⊗ε)((x⊗1)Δ(y)) = xy and m(ι⊗S)((x⊗1)Δ(y)) = ε(y)x
            Vector t2 = g.t2.column(i * n + j);
            Vector rhs(n), rhs_s(n);
            for (std::size_t p = 0; p < n * n; ++p) {
                if (t2[p].is_zero()) continue;
                rhs[p / n] += t2[p] * eps[p % n];
                axpy(rhs_s, t2[p], a.multiply(a.basis(p / n), scol[p % n]));
            }
            cr.record_lazy(rhs == xy, wit);
            ar.record_lazy(rhs_s == eps[j] * a.basis(i), wit);
        }
    cl.into(out);
    cr.into(out);
    al.into(out);
    ar.into(out);

    IdentityTally anti("antipode antihomomorphism");
    anti.record(s.apply(a.unit()) == a.unit(), "S(1) ≠ 1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = apply_sparse_cols(s, a.basis_product(i, j));
            anti.record_lazy(lhs == a.multiply(scol[j], scol[i]), [&] { return pair_witness(l, i, j); });
        }
    anti.into(out);

    out.add("antipode bijective", s * h.antipode_inv() == Matrix::identity(n) && h.antipode_inv() * s == Matrix::identity(n),
            "", 1);
    out.add("T1 bijective", g.t1_bijective, g.t1_bijective ? "" : "rank " + std::to_string(rank(g.t1)), 1);
    out.add("T2 bijective", g.t2_bijective, g.t2_bijective ? "" : "rank " + std::to_string(rank(g.t2)), 1);

    IdentityTally es("ε∘S = ε");
    for (std::size_t i = 0; i < n; ++i) es.record_lazy(dot(eps, scol[i]) == eps[i], [&] { return l[i]; });
    es.into(out);

    IdentityTally ds("Δ∘S = (S⊗S)∘Δop");
    for (std::size_t i = 0; i < n; ++i) {
        Vector lhs = h.comultiply(scol[i]);
        Vector rhs(n * n);
        for (const auto& [p, c] : comult_sparse(h.comult(), i)) axpy(rhs, c, kron(scol[p % n], scol[p / n]));
        ds.record_lazy(lhs == rhs, [&] { return l[i]; });
    }
    ds.into(out);
    return out;
}

// ---- integrals and invariant functionals ----

namespace {

std::vector<Vector> integral_kernel(const HopfAlgebra& h, bool left) {
    const std::size_t n = h.dim();
    const Tensor3& m = h.algebra().mult();
    const Vector& eps = h.counit();
    SystemBuilder sys;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t mm = 0; mm < n; ++mm) sys.add(i * n + mm, mm, -eps[i]);
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [mm, v] : left ? m.at(i, j) : m.at(j, i)) sys.add(i * n + mm, j, v);
    }
    return kernel_basis_sparse(sys.sparse_rows(n * n), n);
}

std::vector<Vector> functional_kernel(const HopfAlgebra& h, bool left) {
    const std::size_t n = h.dim();
    const Vector& u = h.unit();
    SystemBuilder sys;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t mm = 0; mm < n; ++mm) sys.add(i * n + mm, i, -u[mm]);
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : h.comult().at(i, j)) {
                if (left)
                    sys.add(i * n + j, k, c);  // (ι⊗φ)Δ(e_i) component on e_j
                else
                    sys.add(i * n + k, j, c);  // (ψ⊗ι)Δ(e_i) component on e_k
            }
    }
    return kernel_basis_sparse(sys.sparse_rows(n * n), n);
}

Vector first_nonzero_normalized(Vector v) {
    for (const auto& x : v)
        if (!x.is_zero()) {
            Rational inv = Rational(1) / x;
            for (auto& y : v) y *= inv;
            break;
        }
    return v;
}

}  // namespace

std::vector<Vector> left_integrals(const HopfAlgebra& h) { return integral_kernel(h, true); }
std::vector<Vector> right_integrals(const HopfAlgebra& h) { return integral_kernel(h, false); }

InvariantFunctionals invariant_functionals(const HopfAlgebra& h) {
    return {functional_kernel(h, true), functional_kernel(h, false)};
}

Vector normalized_left_integral(const HopfAlgebra& h) {
    auto ints = left_integrals(h);
    if (ints.empty()) throw VerificationError("integrals", "no nonzero left integral");
    return first_nonzero_normalized(ints.front());
}

Vector normalized_left_functional(const HopfAlgebra& h) {
    auto fs = invariant_functionals(h).left;
    if (fs.empty()) throw VerificationError("invariant functionals", "no nonzero left invariant functional");
    Vector phi = fs.front();
    Rational at_t = dot(phi, normalized_left_integral(h));
    if (at_t.is_zero()) return first_nonzero_normalized(phi);
    Rational inv = Rational(1) / at_t;
    for (auto& x : phi) x *= inv;
    return phi;
}

Unimodularity unimodularity(const HopfAlgebra& h) {
    Unimodularity u;
    u.phi = normalized_left_functional(h);
    u.phi_s = h.antipode().transpose().apply(u.phi);
    u.unimodular = u.phi_s == u.phi;
    u.integrals_coincide = Subspace(left_integrals(h), h.dim()) == Subspace(right_integrals(h), h.dim());
    return u;
}

bool is_unimodular(const HopfAlgebra& h) { return unimodularity(h).unimodular; }

// ---- duality ----

HopfAlgebra dual(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    Tensor3 m(n, n, n), c(n, n, n);
    for (const auto& e : h.comult().entries()) m.set(e.j, e.k, e.i, e.value);
    for (const auto& e : h.algebra().mult().entries()) c.set(e.k, e.i, e.j, e.value);
    std::vector<std::string> labels;
    for (const auto& l : h.labels()) labels.push_back("δ:" + l);
    Algebra a(std::move(labels), std::move(m), h.counit());
    Bialgebra b(std::move(a), std::move(c), h.unit());
    return HopfAlgebra::make(std::move(b), h.antipode().transpose(), "dual:" + h.name());
}

CheckList verify_morphism(const HopfMorphism& f) { return morphism_checks(f.source, f.target, f.matrix, false); }

bool is_surjective(const HopfMorphism& f) { return rank(f.matrix) == f.target.dim(); }

HopfMorphism double_dual_iso(const HopfAlgebra& h) {
    HopfMorphism f{h, dual(dual(h)), Matrix::identity(h.dim())};
    CheckList c = verify_morphism(f);
    if (!c.ok()) throw VerificationError("double-dual", "evaluation map fails " + c.first_failure()->id);
    if (rank(f.matrix) != h.dim()) throw VerificationError("double-dual", "evaluation map is not bijective");
    return f;
}

SubgroupVerdict is_compact_quantum_subgroup(const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi) {
    SubgroupVerdict v;
    v.unimodular = is_unimodular(u);
    HopfMorphism f{h, u, pi};
    v.morphism_checks = verify_morphism(f);
    v.morphism = v.morphism_checks.ok();
    v.surjective = is_surjective(f);
    return v;
}

std::optional<Matrix> find_isomorphism(const HopfAlgebra& h, const HopfAlgebra& k, const IsoSearchPlan& plan) {
    const std::size_t n = h.dim();
    if (k.dim() != n || plan.basis_words.size() != n) return std::nullopt;
    const std::size_t q = plan.coefficients.size();
    std::vector<Vector> candidates;
    std::vector<std::size_t> digits(n, 0);
    while (true) {
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = plan.coefficients[digits[i]];
        if (!is_zero(v)) candidates.push_back(std::move(v));
        std::size_t p = 0;
        while (p < n && ++digits[p] == q) digits[p++] = 0;
        if (p == n) break;
    }
    const std::size_t g = plan.generators.size();
    std::vector<std::size_t> pick(g, 0);
    while (true) {
        std::vector<Vector> cols;
        for (const auto& word : plan.basis_words) {
            Vector v = k.unit();
            for (std::size_t w : word) v = k.multiply(v, candidates[pick[w]]);
            cols.push_back(std::move(v));
        }
        Matrix m = Matrix::from_columns(cols, n);
        if (rank(m) == n && morphism_checks(h, k, m, true).ok()) return m;
        std::size_t p = 0;
        while (p < g && ++pick[p] == candidates.size()) pick[p++] = 0;
        if (p == g) break;
    }
    return std::nullopt;
}

}  // namespace hopfkit
