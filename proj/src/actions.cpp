#include "hopfkit/actions.hpp"

#include <map>
#include <stdexcept>

namespace hopfkit {

namespace {

std::string triple(const std::vector<std::string>& a, std::size_t i, const std::vector<std::string>& b, std::size_t j,
                   const std::vector<std::string>& c, std::size_t k) {
    return "(" + a[i] + ", " + b[j] + ", " + c[k] + ")";
}

std::vector<Matrix> operators(const ModuleAlgebra& m) {
    std::vector<Matrix> ops;
    for (std::size_t x = 0; x < m.hopf.dim(); ++x) ops.push_back(m.operator_of(x));
    return ops;
}

// Equations assembled row by row from sparse (row, column) contributions.
struct Rows {
    std::map<std::size_t, std::map<std::size_t, Rational>> rows;
    void add(std::size_t r, std::size_t c, const Rational& v) {
        if (v.is_zero()) return;
        auto& slot = rows[r][c];
        slot += v;
        if (slot.is_zero()) rows[r].erase(c);
    }
    std::vector<SparseVec> sparse() const {
        std::vector<SparseVec> out;
        for (const auto& [r, m] : rows)
            if (!m.empty()) out.emplace_back(m.begin(), m.end());
        return out;
    }
};

// Commutant-style system: unknown X (rows x cols, index p*cols+q) with
// X·right[r] = left[r]·X for every r.
std::vector<SparseVec> intertwiner_system(const std::vector<Matrix>& right, const std::vector<Matrix>& left,
                                          std::size_t rows, std::size_t cols) {
    Rows sys;
    for (std::size_t r = 0; r < right.size(); ++r) {
        const std::size_t base = r * rows * cols;
        right[r].for_each_nonzero([&](std::size_t k, std::size_t q, const Rational& v) {
            for (std::size_t p = 0; p < rows; ++p) sys.add(base + p * cols + q, p * cols + k, v);
        });
        left[r].for_each_nonzero([&](std::size_t p, std::size_t k, const Rational& v) {
            for (std::size_t q = 0; q < cols; ++q) sys.add(base + p * cols + q, k * cols + q, -v);
        });
    }
    return sys.sparse();
}

void require_dual_of(const HopfAlgebra& acting, const HopfAlgebra& u, const std::string& stage) {
    if (!same_structure(acting, dual(u)))
        throw VerificationError(stage, "acting Hopf algebra '" + acting.name() + "' is not the dual of '" + u.name() + "'");
}

}  // namespace

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw std::invalid_argument("side must be 'left' or 'right', got '" + s + "'");
}

// ---- ModuleAlgebra ----

Vector ModuleAlgebra::act_basis(std::size_t x, const Vector& a) const {
    Vector r(algebra.dim());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) axpy(r, a[i], action.at(x, i));
    return r;
}

Vector ModuleAlgebra::act(const Vector& x, const Vector& a) const {
    if (x.size() != hopf.dim() || a.size() != algebra.dim()) throw DimensionError("act: length mismatch");
    Vector r(algebra.dim());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) axpy(r, x[i], act_basis(i, a));
    return r;
}

Matrix ModuleAlgebra::operator_of(std::size_t x) const {
    Matrix m(algebra.dim(), algebra.dim());
    for (std::size_t a = 0; a < algebra.dim(); ++a)
        for (const auto& [b, v] : action.at(x, a)) m.set(b, a, v);
    return m;
}

ModuleAlgebra make_module_algebra(Algebra a, HopfAlgebra h, Side side, Tensor3 action) {
    if (action.d1() != h.dim() || action.d2() != a.dim() || action.d3() != a.dim())
        throw DimensionError("action tensor must be " + std::to_string(h.dim()) + "x" + std::to_string(a.dim()) + "x" +
                             std::to_string(a.dim()));
    return {std::move(a), std::move(h), side, std::move(action)};
}

ModuleAlgebra trivial_action(const Algebra& a, const HopfAlgebra& h, Side side) {
    Tensor3 t(h.dim(), a.dim(), a.dim());
    for (std::size_t x = 0; x < h.dim(); ++x)
        for (std::size_t i = 0; i < a.dim(); ++i) t.set(x, i, i, h.counit()[x]);
    return make_module_algebra(a, h, side, std::move(t));
}

CheckList verify_module_algebra(const ModuleAlgebra& m) {
    CheckList out = verify_algebra(m.algebra);
    const Algebra& A = m.algebra;
    const HopfAlgebra& H = m.hopf;
    const std::size_t na = A.dim(), nh = H.dim();
    const bool left = m.side == Side::left;
    const auto& la = A.labels();
    const auto& lh = H.labels();
    std::vector<Matrix> op = operators(m);
    auto op_of = [&](const SparseVec& x) {
        Matrix r(na, na);
        for (const auto& [k, v] : x) r = r + op[k].scaled(v);
        return r;
    };

    IdentityTally law("module law");
    for (std::size_t x = 0; x < nh; ++x)
        for (std::size_t y = 0; y < nh; ++y) {
            Matrix prod = op_of(H.algebra().basis_product(x, y));
            // left: (xy)⇀a = x⇀(y⇀a); right: a↼(xy) = (a↼x)↼y
            Matrix composed = left ? op[x] * op[y] : op[y] * op[x];
            law.record_lazy(prod == composed, [&] { return "(" + lh[x] + ", " + lh[y] + ")"; });
        }
    law.into(out);

    Matrix unit_op = op_of(to_sparse(H.unit()));
    out.add("unital module", unit_op == Matrix::identity(na), unit_op == Matrix::identity(na) ? "" : "1 does not act as identity",
            na);

    IdentityTally ma("module-algebra");
    for (std::size_t x = 0; x < nh && ma.pass(); ++x) {
        std::vector<std::pair<std::size_t, std::size_t>> terms;
        std::vector<Rational> coeffs;
        for (std::size_t p = 0; p < nh; ++p)
            for (const auto& [q, c] : H.comult().at(x, p)) {
                terms.emplace_back(p, q);
                coeffs.push_back(c);
            }
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b) {
                Vector lhs = op[x].apply(to_dense(A.basis_product(a, b), na));
                Vector rhs(na);
                for (std::size_t t = 0; t < terms.size(); ++t)
                    axpy(rhs, coeffs[t], A.multiply(op[terms[t].first].column(a), op[terms[t].second].column(b)));
                ma.record_lazy(lhs == rhs, [&] { return triple(lh, x, la, a, la, b); });
            }
    }
    ma.into(out);

    IdentityTally unit("unit preserved");
    for (std::size_t x = 0; x < nh; ++x)
        unit.record_lazy(op[x].apply(A.unit()) == H.counit()[x] * A.unit(), [&] { return lh[x]; });
    unit.into(out);
    return out;
}

// ---- coactions ----

CheckList verify_coaction(const Coaction& c) {
    CheckList out;
    const std::size_t na = c.algebra.dim(), nh = c.hopf.dim();
    const Matrix& d = c.delta;
    if (d.rows() != na * nh || d.cols() != na) throw DimensionError("coaction matrix has the wrong shape");
    const bool right = c.side == Side::right;
    std::vector<Vector> img(na);
    for (std::size_t a = 0; a < na; ++a) img[a] = d.column(a);

    IdentityTally co("coaction coassociativity");
    for (std::size_t a = 0; a < na; ++a) {
        Vector lhs(na * nh * nh), rhs(na * nh * nh);
        for (std::size_t p = 0; p < na * nh; ++p) {
            const Rational& v = img[a][p];
            if (v.is_zero()) continue;
            if (right) {
                const std::size_t b = p / nh, h = p % nh;
                for (std::size_t q = 0; q < na * nh; ++q)
                    if (!img[b][q].is_zero()) lhs[q * nh + h] += v * img[b][q];
                for (std::size_t k = 0; k < nh; ++k)
                    for (const auto& [l, w] : c.hopf.comult().at(h, k)) rhs[(b * nh + k) * nh + l] += v * w;
            } else {
                const std::size_t h = p / na, b = p % na;
                for (std::size_t q = 0; q < na * nh; ++q)
                    if (!img[b][q].is_zero()) lhs[h * nh * na + q] += v * img[b][q];
                for (std::size_t k = 0; k < nh; ++k)
                    for (const auto& [l, w] : c.hopf.comult().at(h, k)) rhs[(k * nh + l) * na + b] += v * w;
            }
        }
        co.record_lazy(lhs == rhs, [&] { return c.algebra.labels()[a]; });
    }
    co.into(out);

    IdentityTally cu("coaction counit");
    for (std::size_t a = 0; a < na; ++a) {
        Vector r(na);
        for (std::size_t p = 0; p < na * nh; ++p) {
            if (img[a][p].is_zero()) continue;
            if (right)
                r[p / nh] += img[a][p] * c.hopf.counit()[p % nh];
            else
                r[p % na] += img[a][p] * c.hopf.counit()[p / na];
        }
        cu.record_lazy(r == unit_vector(na, a), [&] { return c.algebra.labels()[a]; });
    }
    cu.into(out);

    const Algebra& first = right ? c.algebra : c.hopf.algebra();
    const Algebra& second = right ? c.hopf.algebra() : c.algebra;
    IdentityTally hom("coaction multiplicative");
    Vector u1 = right ? kron(c.algebra.unit(), c.hopf.unit()) : kron(c.hopf.unit(), c.algebra.unit());
    hom.record(d.apply(c.algebra.unit()) == u1, "δ(1) ≠ 1⊗1");
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b) {
            Vector lhs = d.apply(to_dense(c.algebra.basis_product(a, b), na));
            hom.record_lazy(lhs == tensor_multiply(first, second, img[a], img[b]), [&] {
                return "(" + c.algebra.labels()[a] + ", " + c.algebra.labels()[b] + ")";
            });
        }
    hom.into(out);
    out.add("coaction injective", rank(d) == na, "", 1);
    return out;
}

ModuleAlgebra coaction_to_action(const Coaction& c) {
    const std::size_t na = c.algebra.dim(), nh = c.hopf.dim();
    Tensor3 t(nh, na, na);
    c.delta.for_each_nonzero([&](std::size_t row, std::size_t a, const Rational& v) {
        if (c.side == Side::right)
            t.set(row % nh, a, row / nh, v);
        else
            t.set(row / na, a, row % na, v);
    });
    return make_module_algebra(c.algebra, dual(c.hopf), c.side == Side::right ? Side::left : Side::right, std::move(t));
}

Coaction action_to_coaction(const ModuleAlgebra& m) {
    const std::size_t na = m.algebra.dim(), nk = m.hopf.dim();
    Matrix d(na * nk, na);
    for (const auto& e : m.action.entries()) {
        if (m.side == Side::left)
            d.set(e.k * nk + e.i, e.j, e.value);
        else
            d.set(e.i * na + e.k, e.j, e.value);
    }
    return {m.algebra, dual(m.hopf), m.side == Side::left ? Side::right : Side::left, std::move(d)};
}

// ---- regular and subgroup actions ----

std::pair<ModuleAlgebra, ModuleAlgebra> regular_actions(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    Tensor3 l(n, n, n), r(n, n, n);
    for (const auto& e : h.comult().entries()) {
        l.add(e.k, e.i, e.j, e.value);  // δᵏ⇀e_i = Σ_j c_i^{jk} e_j
        r.add(e.j, e.i, e.k, e.value);  // e_i↼δʲ = Σ_k c_i^{jk} e_k
    }
    HopfAlgebra d = dual(h);
    return {make_module_algebra(h.algebra(), d, Side::left, std::move(l)),
            make_module_algebra(h.algebra(), d, Side::right, std::move(r))};
}

ModuleAlgebra integral_form_left_action(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    Vector phi = normalized_left_functional(h);
    // gram[m][k] = φ(e_k e_m), so φʸ = gram·y as a vector of values
    Matrix gram(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) gram.set(m, k, dot(phi, to_dense(h.algebra().basis_product(k, m), n)));
    Tensor3 t(n, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto y = solve_linear(gram, unit_vector(n, j));
        if (!y) throw VerificationError("integral form", "δ^" + h.labels()[j] + " is not of the form φ^y");
        for (std::size_t i = 0; i < n; ++i) {
            // (ι⊗φ)((1⊗y)Δ(e_i)) = Σ c_i^{ab} φ(y e_b) e_a
            for (std::size_t a = 0; a < n; ++a)
                for (const auto& [b, c] : h.comult().at(i, a)) {
                    Rational val = c * dot(phi, h.multiply(*y, h.basis(b)));
                    t.add(j, i, a, val);
                }
        }
    }
    return make_module_algebra(h.algebra(), dual(h), Side::left, std::move(t));
}

Coaction subgroup_coaction(const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi) {
    const std::size_t n = h.dim(), nu = u.dim();
    Matrix d(nu * n, n);
    for (const auto& e : h.comult().entries())
        for (std::size_t k = 0; k < nu; ++k) {
            Rational p = pi.get(k, e.j);
            if (!p.is_zero()) d.add_to(k * n + e.k, e.i, e.value * p);
        }
    return {h.algebra(), u, Side::left, std::move(d)};
}

ModuleAlgebra subgroup_restriction_action(const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi) {
    SubgroupVerdict v = is_compact_quantum_subgroup(h, u, pi);
    if (!v.holds()) {
        std::string why = !v.unimodular ? "U is not unimodular"
                          : !v.morphism ? "π fails " + v.morphism_checks.first_failure()->id
                                        : "π is not surjective";
        throw VerificationError("subgroup", why);
    }
    const std::size_t n = h.dim(), nu = u.dim();
    Tensor3 t(nu, n, n);
    for (const auto& e : h.comult().entries())
        for (std::size_t j = 0; j < nu; ++j) {
            Rational p = pi.get(j, e.j);
            if (!p.is_zero()) t.add(j, e.i, e.k, e.value * p);
        }
    return make_module_algebra(h.algebra(), dual(u), Side::right, std::move(t));
}

ModuleAlgebra tensor_action(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi) {
    if (a.side != Side::left) throw VerificationError("tensor action", "the coefficient algebra needs a left action");
    require_dual_of(a.hopf, u, "tensor action");
    const HopfAlgebra& uhat = a.hopf;
    ModuleAlgebra r = subgroup_restriction_action(h, u, pi);
    const std::size_t na = a.algebra.dim(), nh = h.dim(), nu = uhat.dim();
    std::vector<Matrix> aop = operators(a), rop = operators(r);
    // S̄(δᵖ) acting on A
    std::vector<Matrix> sbar_op;
    for (std::size_t p = 0; p < nu; ++p) {
        Matrix m(na, na);
        Vector sp = uhat.antipode_inv().column(p);
        for (std::size_t k = 0; k < nu; ++k)
            if (!sp[k].is_zero()) m = m + aop[k].scaled(sp[k]);
        sbar_op.push_back(std::move(m));
    }
    Tensor3 t(nu, na * nh, na * nh);
    for (std::size_t j = 0; j < nu; ++j)
        for (std::size_t p = 0; p < nu; ++p)
            for (const auto& [q, c] : uhat.comult().at(j, p)) {
                // c · (S̄(δᵖ) ⊗ (·↼δ^q)) as a Kronecker product of operators
                sbar_op[p].for_each_nonzero([&](std::size_t a2, std::size_t a1, const Rational& x) {
                    rop[q].for_each_nonzero([&](std::size_t h2, std::size_t h1, const Rational& y) {
                        t.add(j, a1 * nh + h1, a2 * nh + h2, c * x * y);
                    });
                });
            }
    return make_module_algebra(tensor_product(a.algebra, h.algebra()), uhat, Side::right, std::move(t));
}

Invariants invariants(const ModuleAlgebra& m) {
    if (m.side != Side::right) throw VerificationError("invariants", "expected a right action");
    const std::size_t n = m.algebra.dim(), nu = m.hopf.dim();
    std::vector<Matrix> op = operators(m);
    std::vector<SparseVec> rows;
    for (std::size_t b = 0; b < nu; ++b) {
        Matrix eq = op[b] - Matrix::identity(n).scaled(m.hopf.counit()[b]);
        for (auto& r : eq.sparse_rows()) rows.push_back(std::move(r));
    }
    Subspace space(kernel_basis_sparse(rows, n), n);

    // (my)↼β − m(y↼β) and (ym)↼β − (y↼β)m, as linear maps of m
    std::vector<SparseVec> brows;
    const Algebra& A = m.algebra;
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t b = 0; b < nu; ++b) {
            Vector yb = op[b].column(y);
            Matrix left(n, n), right(n, n);
            for (std::size_t c = 0; c < n; ++c) {
                Vector ey = to_dense(A.basis_product(c, y), n);
                Vector ye = to_dense(A.basis_product(y, c), n);
                Vector l = op[b].apply(ey) - A.multiply(A.basis(c), yb);
                Vector r = op[b].apply(ye) - A.multiply(yb, A.basis(c));
                for (std::size_t k = 0; k < n; ++k) {
                    if (!l[k].is_zero()) left.set(k, c, l[k]);
                    if (!r[k].is_zero()) right.set(k, c, r[k]);
                }
            }
            for (auto& r : left.sparse_rows()) brows.push_back(std::move(r));
            for (auto& r : right.sparse_rows()) brows.push_back(std::move(r));
        }
    Subspace bspace(kernel_basis_sparse(brows, n), n);
    Subalgebra sub = make_subalgebra(m.algebra, space, "m");
    return {std::move(sub), bspace, bspace == space};
}

InducedAction induced_hat_action(const Invariants& inv, const ModuleAlgebra& tensor, const HopfAlgebra& h) {
    auto [lreg, rreg] = regular_actions(h);
    const HopfAlgebra& hhat = lreg.hopf;
    const std::size_t nh = h.dim(), nt = tensor.algebra.dim(), na = nt / nh, nhat = hhat.dim();
    const std::size_t d = inv.sub.space.dim();
    const Algebra& T = tensor.algebra;
    // α⇀ on A⊗H is id_A ⊗ (α⇀ on H)
    std::vector<Matrix> op;
    for (std::size_t j = 0; j < nhat; ++j) op.push_back(kron(Matrix::identity(na), lreg.operator_of(j)));
    auto op_vec = [&](const Vector& alpha) {
        Matrix r(nt, nt);
        for (std::size_t k = 0; k < nhat; ++k)
            if (!alpha[k].is_zero()) r = r + op[k].scaled(alpha[k]);
        return r;
    };
    std::vector<Matrix> s_op, sinv_op;
    for (std::size_t p = 0; p < nhat; ++p) {
        s_op.push_back(op_vec(hhat.antipode().column(p)));
        sinv_op.push_back(op_vec(hhat.antipode_inv().column(p)));
    }

    InducedAction out;
    Tensor3 t(nhat, d, d);
    IdentityTally keep("invariants preserved");
    for (std::size_t j = 0; j < nhat; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Vector w = op[j].apply(inv.sub.space.basis()[k]);
            auto c = inv.sub.space.coords(w);
            keep.record_lazy(c.has_value(), [&] { return "(" + hhat.labels()[j] + ", m" + std::to_string(k) + ")"; });
            if (c) t.set_slice(j, k, *c);
        }
    keep.into(out.checks);

    IdentityTally disp1("induced-action-left-display"), disp2("induced-action-right-display");
    for (std::size_t j = 0; j < nhat; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            const Vector& m = inv.sub.space.basis()[k];
            Vector am = op[j].apply(m);
            for (std::size_t x = 0; x < nt; ++x) {
                Vector ex = T.basis(x);
                Vector r1(nt), r2(nt);
                for (std::size_t p = 0; p < nhat; ++p)
                    for (const auto& [q, c] : hhat.comult().at(j, p)) {
                        // α₁⇀(m(S(α₂)⇀x)) and α₂⇀((S⁻¹(α₁)⇀x)m)
                        axpy(r1, c, op[p].apply(T.multiply(m, s_op[q].column(x))));
                        axpy(r2, c, op[q].apply(T.multiply(sinv_op[p].column(x), m)));
                    }
                auto wit = [&] { return "(" + hhat.labels()[j] + ", m" + std::to_string(k) + ", " + T.labels()[x] + ")"; };
                disp1.record_lazy(T.multiply(am, ex) == r1, wit);
                disp2.record_lazy(T.multiply(ex, am) == r2, wit);
            }
        }
    disp1.into(out.checks);
    disp2.into(out.checks);
    out.action = make_module_algebra(inv.sub.algebra, hhat, Side::left, std::move(t));
    return out;
}

Algebra smash_product(const ModuleAlgebra& m) {
    if (m.side != Side::left) throw VerificationError("smash product", "expected a left module algebra");
    const Algebra& A = m.algebra;
    const HopfAlgebra& K = m.hopf;
    const std::size_t na = A.dim(), nk = K.dim(), n = na * nk;
    std::vector<Matrix> op = operators(m);
    Tensor3 mult(n, n, n);
    for (std::size_t x = 0; x < nk; ++x)
        for (std::size_t p = 0; p < nk; ++p)
            for (const auto& [q, c] : K.comult().at(x, p))
                for (std::size_t a2 = 0; a2 < na; ++a2) {
                    Vector moved = op[p].column(a2);  // x₁⇀a′
                    for (std::size_t a = 0; a < na; ++a) {
                        Vector left = A.multiply(A.basis(a), moved);
                        if (is_zero(left)) continue;
                        for (std::size_t y = 0; y < nk; ++y) {
                            const SparseVec& right = K.algebra().basis_product(q, y);
                            for (std::size_t b = 0; b < na; ++b) {
                                if (left[b].is_zero()) continue;
                                for (const auto& [z, w] : right) mult.add(a * nk + x, a2 * nk + y, b * nk + z, c * left[b] * w);
                            }
                        }
                    }
                }
    std::vector<std::string> labels;
    for (const auto& a : A.labels())
        for (const auto& x : K.labels()) labels.push_back(a + "#" + x);
    return Algebra(std::move(labels), std::move(mult), kron(A.unit(), K.unit()));
}

// ---- modules ----

Vector FiniteModule::act(const Vector& r, const Vector& m) const {
    Vector out(dim);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!m[j].is_zero()) axpy(out, r[i] * m[j], action.at(i, j));
    }
    return out;
}

Matrix FiniteModule::operator_of(std::size_t r) const {
    Matrix m(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (const auto& [b, v] : action.at(r, a)) m.set(b, a, v);
    return m;
}

CheckList verify_module(const FiniteModule& m) {
    CheckList out;
    const std::size_t nr = m.ring.dim();
    std::vector<Matrix> op;
    for (std::size_t r = 0; r < nr; ++r) op.push_back(m.operator_of(r));
    IdentityTally law("module associativity");
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t s = 0; s < nr; ++s) {
            Matrix prod(m.dim, m.dim);
            for (const auto& [k, v] : m.ring.basis_product(r, s)) prod = prod + op[k].scaled(v);
            Matrix composed = m.side == Side::right ? op[s] * op[r] : op[r] * op[s];
            law.record_lazy(prod == composed, [&] { return "(" + m.ring.labels()[r] + ", " + m.ring.labels()[s] + ")"; });
        }
    law.into(out);
    Matrix unit(m.dim, m.dim);
    for (std::size_t k = 0; k < nr; ++k)
        if (!m.ring.unit()[k].is_zero()) unit = unit + op[k].scaled(m.ring.unit()[k]);
    out.add("module unital", unit == Matrix::identity(m.dim), "", 1);
    return out;
}

FiniteModule regular_right_module(const Algebra& r) {
    const std::size_t n = r.dim();
    Tensor3 t(n, n, n);
    for (const auto& e : r.mult().entries()) t.set(e.j, e.i, e.k, e.value);
    return {r, n, Side::right, std::move(t), r.labels()};
}

FiniteModule smash_module(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi) {
    ModuleAlgebra ta = tensor_action(a, h, u, pi);
    Algebra ring = smash_product(a);
    const std::size_t na = a.algebra.dim(), nh = h.dim(), nu = a.hopf.dim(), n = na * nh;
    std::vector<Matrix> top = operators(ta);
    Tensor3 t(na * nu, n, n);
    for (std::size_t b = 0; b < na; ++b)
        for (std::size_t x = 0; x < na; ++x) {
            Vector ab = to_dense(a.algebra.basis_product(x, b), na);
            for (std::size_t hh = 0; hh < nh; ++hh) {
                Vector v = kron(ab, unit_vector(nh, hh));
                for (std::size_t beta = 0; beta < nu; ++beta) t.set_slice(b * nu + beta, x * nh + hh, top[beta].apply(v));
            }
        }
    return {std::move(ring), n, Side::right, std::move(t), ta.algebra.labels()};
}

Matrix EndAlgebra::map_of(const Vector& coords) const {
    const std::size_t d = basis_maps.empty() ? 0 : basis_maps[0].rows();
    return Matrix::unflatten(space.from_coords(coords), d, d);
}

std::optional<Vector> EndAlgebra::coords_of(const Matrix& t) const { return space.coords(t.flatten()); }

EndAlgebra endomorphism_algebra(const FiniteModule& m) {
    const std::size_t d = m.dim;
    std::vector<Matrix> op;
    for (std::size_t r = 0; r < m.ring.dim(); ++r) op.push_back(m.operator_of(r));
    Subspace space(kernel_basis_sparse(intertwiner_system(op, op, d, d), d * d), d * d);
    std::vector<Matrix> maps;
    for (const auto& v : space.basis()) maps.push_back(Matrix::unflatten(v, d, d));
    const std::size_t k = maps.size();
    Tensor3 mult(k, k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto c = space.coords((maps[i] * maps[j]).flatten());
            if (!c) throw VerificationError("endomorphism algebra", "commutant not closed under composition");
            mult.set_slice(i, j, *c);
        }
    auto unit = space.coords(Matrix::identity(d).flatten());
    if (!unit) throw VerificationError("endomorphism algebra", "identity is not in the commutant");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back("T" + std::to_string(i));
    return {Algebra(std::move(labels), std::move(mult), *unit), std::move(space), std::move(maps)};
}

std::optional<Vector> HomModule::coords_of(const Matrix& f) const { return space.coords(f.flatten()); }

HomModule hom_module(const FiniteModule& m) {
    if (m.side != Side::right) throw VerificationError("hom module", "expected a right module");
    const std::size_t d = m.dim, nr = m.ring.dim();
    std::vector<Matrix> op, rmul;
    for (std::size_t r = 0; r < nr; ++r) {
        op.push_back(m.operator_of(r));
        rmul.push_back(m.ring.right_multiplication(m.ring.basis(r)));
    }
    Subspace space(kernel_basis_sparse(intertwiner_system(op, rmul, nr, d), nr * d), nr * d);
    std::vector<Matrix> maps;
    for (const auto& v : space.basis()) maps.push_back(Matrix::unflatten(v, nr, d));
    return {std::move(space), std::move(maps)};
}

// ---- named fixtures ----

Algebra algebra_by_name(const std::string& name) {
    if (name == "base-field") return base_field();
    if (name == "dual-numbers") {
        Tensor3 m(2, 2, 2);
        m.set(0, 0, 0, 1);
        m.set(0, 1, 1, 1);
        m.set(1, 0, 1, 1);
        return Algebra({"1", "y"}, std::move(m), unit_vector(2, 0));
    }
    if (name.rfind("split:", 0) == 0) {
        const std::size_t n = std::stoul(name.substr(6));
        if (n == 0) throw std::invalid_argument("split:n needs n >= 1");
        Tensor3 m(n, n, n);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) {
            m.set(i, i, i, 1);
            labels.push_back("e" + std::to_string(i + 1));
        }
        return Algebra(std::move(labels), std::move(m), Vector(n, Rational(1)));
    }
    return hopf_by_name(name).algebra();
}

ModuleAlgebra action_by_name(const std::string& name) {
    if (name == "swap" || name == "swap-broken") {
        Algebra a = algebra_by_name("split:2");
        HopfAlgebra h = group_algebra(FiniteGroup::cyclic(2));
        Tensor3 t(2, 2, 2);
        t.set(0, 0, 0, 1);
        t.set(0, 1, 1, 1);
        if (name == "swap") {
            t.set(1, 0, 1, 1);
            t.set(1, 1, 0, 1);
        } else {
            t.set(1, 0, 0, -1);
            t.set(1, 1, 1, 1);
        }
        return make_module_algebra(std::move(a), std::move(h), Side::left, std::move(t));
    }
    if (name == "graded") {
        Tensor3 t(2, 2, 2);
        t.set(0, 0, 0, 1);  // δᵉ projects onto degree e
        t.set(1, 1, 1, 1);  // δᵍ projects onto degree g
        return make_module_algebra(algebra_by_name("dual-numbers"), dual(group_algebra(FiniteGroup::cyclic(2))),
                                   Side::left, std::move(t));
    }
    if (name == "graded-involution") {
        Tensor3 t(2, 2, 2);
        t.set(0, 0, 0, 1);
        t.set(0, 1, 1, 1);
        t.set(1, 0, 0, 1);
        t.set(1, 1, 1, -1);
        return make_module_algebra(algebra_by_name("dual-numbers"), group_algebra(FiniteGroup::cyclic(2)), Side::left,
                                   std::move(t));
    }
    if (name.rfind("trivial:", 0) == 0) return trivial_action(base_field(), hopf_by_name(name.substr(8)));
    const bool hat = name.rfind("translation:", 0) == 0;
    if (hat || name.rfind("translation-group:", 0) == 0) {
        FiniteGroup g = group_by_name(name.substr(hat ? 12 : 18));
        HopfAlgebra h = hat ? dual(function_algebra(g)) : group_algebra(g);
        const std::size_t n = g.order();
        Tensor3 t(n, n, n);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t x = 0; x < n; ++x) t.set(s, x, g.mul(x, g.inverse(s)), 1);  // s⇀χ_x = χ_{xs⁻¹}
        return make_module_algebra(function_algebra(g).algebra(), std::move(h), Side::left, std::move(t));
    }
    throw std::invalid_argument("unknown action '" + name + "'");
}

std::vector<std::string> catalog_action_names() {
    return {"swap",
            "swap-broken",
            "graded",
            "graded-involution",
            "trivial:dual:function-algebra:cyclic:2",
            "trivial:dual:group-algebra:cyclic:2",
            "translation:cyclic:2",
            "translation-group:cyclic:2"};
}

}  // namespace hopfkit
