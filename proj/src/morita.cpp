#include "hopfkit/morita.hpp"

#include "hopfkit/sampling.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

namespace {

Vector slice_combination(const Tensor3& t, const Vector& x, const Vector& y, std::size_t n) {
    Vector out(n);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) axpy(out, x[i] * y[j], t.at(i, j));
    }
    return out;
}

// t(r, m, m') = ops[r](m', m)
Tensor3 tensor_from_ops(const std::vector<Matrix>& ops, std::size_t dim) {
    Tensor3 t(ops.size(), dim, dim);
    for (std::size_t r = 0; r < ops.size(); ++r)
        ops[r].for_each_nonzero([&](std::size_t m2, std::size_t m, const Rational& v) { t.set(r, m, m2, v); });
    return t;
}

std::string describe(const std::vector<std::string>& labels, const Vector& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!v[i].is_one()) os << v[i].str() << "*";
        os << (i < labels.size() ? labels[i] : "#" + std::to_string(i));
    }
    if (first) os << "0";
    return os.str();
}

std::string tuple3(const std::string& a, const std::string& b, const std::string& c) {
    return "(" + a + ", " + b + ", " + c + ")";
}

void module_laws(CheckList& out, const std::string& name, const Bimodule& m, const Algebra& left_ring,
                 const Algebra& right_ring) {
    std::vector<Matrix> lop, rop;
    for (std::size_t i = 0; i < left_ring.dim(); ++i) lop.push_back(m.left_operator(left_ring.basis(i)));
    for (std::size_t i = 0; i < right_ring.dim(); ++i) rop.push_back(m.right_operator(right_ring.basis(i)));
    auto combo = [&](const std::vector<Matrix>& ops, const SparseVec& c) {
        Matrix r(m.dim, m.dim);
        for (const auto& [k, v] : c) r = r + ops[k].scaled(v);
        return r;
    };
    IdentityTally la(name + " left associativity"), ra(name + " right associativity"), bi(name + " bimodule");
    for (std::size_t i = 0; i < left_ring.dim(); ++i)
        for (std::size_t j = 0; j < left_ring.dim(); ++j)
            la.record_lazy(combo(lop, left_ring.basis_product(i, j)) == lop[i] * lop[j],
                           [&] { return "(" + left_ring.labels()[i] + ", " + left_ring.labels()[j] + ")"; });
    for (std::size_t i = 0; i < right_ring.dim(); ++i)
        for (std::size_t j = 0; j < right_ring.dim(); ++j)
            ra.record_lazy(combo(rop, right_ring.basis_product(i, j)) == rop[j] * rop[i],
                           [&] { return "(" + right_ring.labels()[i] + ", " + right_ring.labels()[j] + ")"; });
    for (std::size_t i = 0; i < left_ring.dim(); ++i)
        for (std::size_t j = 0; j < right_ring.dim(); ++j)
            bi.record_lazy(lop[i] * rop[j] == rop[j] * lop[i],
                           [&] { return "(" + left_ring.labels()[i] + ", " + right_ring.labels()[j] + ")"; });
    la.into(out);
    out.add(name + " left unital", m.left_operator(left_ring.unit()) == Matrix::identity(m.dim), "", 1);
    ra.into(out);
    out.add(name + " right unital", m.right_operator(right_ring.unit()) == Matrix::identity(m.dim), "", 1);
    bi.into(out);
}

Matrix combine(const std::vector<Matrix>& maps, const Vector& c, std::size_t rows, std::size_t cols) {
    Matrix r(rows, cols);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) r = r + maps[i].scaled(c[i]);
    return r;
}

}  // namespace

// ---- bimodules and contexts ----

Vector Bimodule::act_left(const Vector& r, const Vector& m) const { return slice_combination(left, r, m, dim); }

Vector Bimodule::act_right(const Vector& m, const Vector& s) const { return slice_combination(right, s, m, dim); }

Matrix Bimodule::left_operator(const Vector& r) const {
    Matrix op(dim, dim);
    for (std::size_t m = 0; m < dim; ++m) {
        Vector c = act_left(r, unit_vector(dim, m));
        for (std::size_t k = 0; k < dim; ++k)
            if (!c[k].is_zero()) op.set(k, m, c[k]);
    }
    return op;
}

Matrix Bimodule::right_operator(const Vector& s) const {
    Matrix op(dim, dim);
    for (std::size_t m = 0; m < dim; ++m) {
        Vector c = act_right(unit_vector(dim, m), s);
        for (std::size_t k = 0; k < dim; ++k)
            if (!c[k].is_zero()) op.set(k, m, c[k]);
    }
    return op;
}

Vector MoritaContext::Gamma(const Vector& p, const Vector& q) const { return slice_combination(gamma, p, q, R.dim()); }

Vector MoritaContext::Lambda(const Vector& q, const Vector& p) const {
    return slice_combination(lambda, q, p, S.dim());
}

CheckList verify_bimodules(const MoritaContext& c) {
    CheckList out;
    module_laws(out, "P", c.P, c.R, c.S);
    module_laws(out, "Q", c.Q, c.S, c.R);
    return out;
}

CheckList verify_compatibility(const MoritaContext& c) {
    CheckList out;
    const std::size_t np = c.P.dim, nq = c.Q.dim, nr = c.R.dim(), ns = c.S.dim();
    const auto& pl = c.P.labels;
    const auto& ql = c.Q.labels;
    auto ep = [&](std::size_t i) { return unit_vector(np, i); };
    auto eq = [&](std::size_t i) { return unit_vector(nq, i); };

    IdentityTally left("eq-3.2-left"), right("eq-3.2-right");
    for (std::size_t p = 0; p < np; ++p)
        for (std::size_t q = 0; q < nq; ++q) {
            Vector g = c.gamma.slice(p, q);
            for (std::size_t p2 = 0; p2 < np; ++p2) {
                Vector lhs = c.P.act_left(g, ep(p2));
                Vector rhs = c.P.act_right(ep(p), c.lambda.slice(q, p2));
                left.record_lazy(lhs == rhs, [&] { return tuple3(pl[p], ql[q], pl[p2]); });
            }
        }
    for (std::size_t q = 0; q < nq; ++q)
        for (std::size_t p = 0; p < np; ++p) {
            Vector l = c.lambda.slice(q, p);
            for (std::size_t q2 = 0; q2 < nq; ++q2) {
                Vector lhs = c.Q.act_left(l, eq(q2));
                Vector rhs = c.Q.act_right(eq(q), c.gamma.slice(p, q2));
                right.record_lazy(lhs == rhs, [&] { return tuple3(ql[q], pl[p], ql[q2]); });
            }
        }
    left.into(out);
    right.into(out);

    IdentityTally gb("gamma-balanced"), gl("gamma-left-linear"), gr("gamma-right-linear");
    for (std::size_t p = 0; p < np; ++p)
        for (std::size_t q = 0; q < nq; ++q) {
            for (std::size_t s = 0; s < ns; ++s) {
                Vector es = c.S.basis(s);
                gb.record_lazy(c.Gamma(c.P.act_right(ep(p), es), eq(q)) == c.Gamma(ep(p), c.Q.act_left(es, eq(q))),
                               [&] { return tuple3(pl[p], c.S.labels()[s], ql[q]); });
            }
            Vector g = c.gamma.slice(p, q);
            for (std::size_t r = 0; r < nr; ++r) {
                Vector er = c.R.basis(r);
                gl.record_lazy(c.Gamma(c.P.act_left(er, ep(p)), eq(q)) == c.R.multiply(er, g),
                               [&] { return tuple3(c.R.labels()[r], pl[p], ql[q]); });
                gr.record_lazy(c.Gamma(ep(p), c.Q.act_right(eq(q), er)) == c.R.multiply(g, er),
                               [&] { return tuple3(pl[p], ql[q], c.R.labels()[r]); });
            }
        }
    gb.into(out);
    gl.into(out);
    gr.into(out);

    IdentityTally lb("lambda-balanced"), ll("lambda-left-linear"), lr("lambda-right-linear");
    for (std::size_t q = 0; q < nq; ++q)
        for (std::size_t p = 0; p < np; ++p) {
            for (std::size_t r = 0; r < nr; ++r) {
                Vector er = c.R.basis(r);
                lb.record_lazy(c.Lambda(c.Q.act_right(eq(q), er), ep(p)) == c.Lambda(eq(q), c.P.act_left(er, ep(p))),
                               [&] { return tuple3(ql[q], c.R.labels()[r], pl[p]); });
            }
            Vector l = c.lambda.slice(q, p);
            for (std::size_t s = 0; s < ns; ++s) {
                Vector es = c.S.basis(s);
                ll.record_lazy(c.Lambda(c.Q.act_left(es, eq(q)), ep(p)) == c.S.multiply(es, l),
                               [&] { return tuple3(c.S.labels()[s], ql[q], pl[p]); });
                lr.record_lazy(c.Lambda(eq(q), c.P.act_right(ep(p), es)) == c.S.multiply(l, es),
                               [&] { return tuple3(ql[q], pl[p], c.S.labels()[s]); });
            }
        }
    lb.into(out);
    ll.into(out);
    lr.into(out);
    return out;
}

namespace {

SurjectivityCertificate span_certificate(const Tensor3& pairing, std::size_t n1, std::size_t n2, const Algebra& target) {
    std::vector<Vector> images;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) images.push_back(pairing.slice(i, j));
    std::vector<Vector> targets;
    for (std::size_t t = 0; t < target.dim(); ++t) targets.push_back(target.basis(t));
    SurjectivityCertificate cert;
    cert.rank = rank(images, target.dim());
    auto res = span_contains_all(images, targets);
    cert.surjective = true;
    for (std::size_t t = 0; t < res.size(); ++t) {
        if (!res[t].contained) {
            if (cert.surjective) cert.missing = target.labels()[t];
            cert.surjective = false;
            continue;
        }
        SurjectivityHit hit{t, {}};
        for (std::size_t k = 0; k < res[t].coefficients.size(); ++k) {
            const Rational& c = res[t].coefficients[k];
            if (!c.is_zero()) hit.terms.push_back({c, unit_vector(n1, k / n2), unit_vector(n2, k % n2)});
        }
        cert.hits.push_back(std::move(hit));
    }
    return cert;
}

}  // namespace

bool check_certificate(const MoritaContext& c, const SurjectivityCertificate& cert, bool gamma) {
    const std::size_t n = gamma ? c.R.dim() : c.S.dim();
    for (const auto& hit : cert.hits) {
        Vector sum(n);
        for (const auto& t : hit.terms) axpy(sum, t.coefficient, gamma ? c.Gamma(t.left, t.right) : c.Lambda(t.left, t.right));
        if (sum != unit_vector(n, hit.target)) return false;
    }
    return true;
}

SurjectivityResult verify_surjectivity(const MoritaContext& c) {
    SurjectivityResult r;
    r.gamma = span_certificate(c.gamma, c.P.dim, c.Q.dim, c.R);
    r.lambda = span_certificate(c.lambda, c.Q.dim, c.P.dim, c.S);
    r.gamma.verified = check_certificate(c, r.gamma, true);
    r.lambda.verified = check_certificate(c, r.lambda, false);
    return r;
}

Json certificate_to_json(const MoritaContext& c, const SurjectivityCertificate& cert, bool gamma) {
    const Algebra& target = gamma ? c.R : c.S;
    const auto& l1 = gamma ? c.P.labels : c.Q.labels;
    const auto& l2 = gamma ? c.Q.labels : c.P.labels;
    Json j;
    j["surjective"] = cert.surjective;
    j["verified"] = cert.verified;
    j["image_rank"] = cert.rank;
    j["target_dim"] = target.dim();
    j["targets_hit"] = cert.hits.size();
    std::size_t terms = 0;
    for (const auto& h : cert.hits) terms += h.terms.size();
    j["preimage_terms"] = terms;
    if (!cert.missing.empty()) j["missing"] = cert.missing;
    if (!cert.hits.empty()) {
        const auto& h = cert.hits.front();
        Json ex;
        ex["target"] = target.labels()[h.target];
        Json ts = Json::array();
        for (const auto& t : h.terms)
            ts.push_back(t.coefficient.str() + " * (" + describe(l1, t.left) + ") ⊗ (" + describe(l2, t.right) + ")");
        ex["preimage"] = std::move(ts);
        j["example"] = std::move(ex);
    }
    return j;
}

MoritaContext trivial_context(const Rational& lambda_scale) {
    Algebra k = base_field();
    Tensor3 act(1, 1, 1);
    act.set(0, 0, 0, 1);
    Bimodule m{1, act, act, {"1"}};
    Tensor3 g(1, 1, 1), l(1, 1, 1);
    g.set(0, 0, 0, 1);
    l.set(0, 0, 0, lambda_scale);
    return {"trivial", k, k, m, m, std::move(g), std::move(l)};
}

// ---- the imprimitivity pipeline ----

namespace {

void build_tensor(ImprimitivityData& d) { d.tensor = tensor_action(d.coeff, d.h, d.u, d.pi); }

void build_invariants(ImprimitivityData& d) {
    d.inv = invariants(d.tensor);
    d.induced = induced_hat_action(d.inv, d.tensor, d.h);
}

void build_smash(ImprimitivityData& d) {
    d.smash_inv = smash_product(d.induced.action);
    d.smash_a = smash_product(d.coeff);
    d.module = smash_module(d.coeff, d.h, d.u, d.pi);
}

void build_end(ImprimitivityData& d) {
    d.end = endomorphism_algebra(d.module);
    d.hom = hom_module(d.module);
    const std::size_t na = d.coeff.algebra.dim(), nh = d.h.dim(), n = d.module.dim;
    const ModuleAlgebra lreg = regular_actions(d.h).first;
    const Algebra& T = d.tensor.algebra;
    std::vector<Vector> cols;
    for (const auto& v : d.inv.sub.space.basis())
        for (std::size_t l = 0; l < nh; ++l) {
            Matrix shift = kron(Matrix::identity(na), lreg.operator_of(l));
            Matrix m(n, n);
            for (std::size_t x = 0; x < n; ++x) {
                Vector y = T.multiply(v, shift.column(x));
                for (std::size_t k = 0; k < n; ++k)
                    if (!y[k].is_zero()) m.set(k, x, y[k]);
            }
            cols.push_back(m.flatten());
        }
    d.phi = Matrix::from_columns(cols, n * n);
}

}  // namespace

ImprimitivityData ImprimitivityData::build(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u,
                                           const Matrix& pi) {
    ImprimitivityData d;
    d.coeff = a;
    d.h = h;
    d.u = u;
    d.pi = pi;
    build_tensor(d);
    build_invariants(d);
    build_smash(d);
    build_end(d);
    return d;
}

Matrix ImprimitivityData::smash_to_end(const Vector& r) const {
    return Matrix::unflatten(phi.apply(r), module.dim, module.dim);
}

Vector ImprimitivityData::unit_of_smash_inv() const { return smash_inv.unit(); }

CheckList verify_smash_to_end(const ImprimitivityData& d) {
    CheckList out;
    const std::size_t nr = d.smash_inv.dim(), n = d.module.dim;
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < nr; ++i) maps.push_back(d.smash_to_end(d.smash_inv.basis(i)));
    IdentityTally hom("smash-to-end homomorphism");
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nr; ++j) {
            Matrix prod = combine(maps, to_dense(d.smash_inv.basis_product(i, j), nr), n, n);
            hom.record_lazy(prod == maps[i] * maps[j],
                            [&] { return "(" + d.smash_inv.labels()[i] + ", " + d.smash_inv.labels()[j] + ")"; });
        }
    hom.into(out);
    out.add("smash-to-end unit", d.smash_to_end(d.unit_of_smash_inv()) == Matrix::identity(n), "", 1);
    IdentityTally into("smash-to-end into commutant");
    for (std::size_t i = 0; i < nr; ++i)
        into.record_lazy(d.end.coords_of(maps[i]).has_value(), [&] { return d.smash_inv.labels()[i]; });
    into.into(out);
    const std::size_t rk = rank(d.phi);
    out.add("smash-to-end injective", rk == nr, rk == nr ? "" : "rank " + std::to_string(rk) + " < " + std::to_string(nr), 1);
    out.add("smash-to-end surjective", rk == d.end.algebra.dim() && into.pass(),
            rk == d.end.algebra.dim() ? "" : "rank " + std::to_string(rk) + " vs dim End " + std::to_string(d.end.algebra.dim()),
            1);
    return out;
}

Decomposition decompose_endomorphism(const ImprimitivityData& d, const Matrix& t, const std::optional<Matrix>& basis) {
    if (!d.end.coords_of(t)) throw VerificationError("decompose", "the endomorphism does not commute with the A#Û-action");
    const HopfAlgebra& H = d.h;
    const Algebra& A = d.coeff.algebra;
    const std::size_t na = A.dim(), nh = H.dim(), n = na * nh;
    const Matrix P = basis ? *basis : Matrix::identity(nh);
    auto pinv = inverse(P);
    if (!pinv) throw VerificationError("decompose", "basis change is singular");

    // columns T(1⊗e_j): the a-block is f_a(e_j)
    std::vector<Vector> tj;
    for (std::size_t j = 0; j < nh; ++j) tj.push_back(t.apply(kron(A.unit(), unit_vector(nh, j))));
    // id_A ⊗ (right multiplication by S̄(e_p))
    std::vector<Matrix> sbar_right;
    for (std::size_t p = 0; p < nh; ++p)
        sbar_right.push_back(kron(Matrix::identity(na), H.algebra().right_multiplication(H.antipode_inv().column(p))));

    Decomposition out;
    IdentityTally inv_check("component invariant");
    const ModuleAlgebra& act = d.tensor;
    for (std::size_t l = 0; l < nh; ++l) {
        Vector x(n);
        for (std::size_t i = 0; i < nh; ++i) {
            const Rational& w = P.get(i, l);
            if (w.is_zero()) continue;
            for (std::size_t p = 0; p < nh; ++p)
                for (const auto& [j, c] : H.comult().at(i, p)) axpy(x, w * c, sbar_right[p].apply(tj[j]));
        }
        for (std::size_t b = 0; b < act.hopf.dim(); ++b)
            inv_check.record_lazy(act.act_basis(b, x) == act.hopf.counit()[b] * x,
                                  [&] { return "(l=" + std::to_string(l) + ", " + act.hopf.labels()[b] + ")"; });
        out.components.push_back(std::move(x));
    }
    inv_check.into(out.checks);
    if (!inv_check.pass()) throw VerificationError("decompose", "component not invariant: " + out.checks.first_failure()->witness);

    const std::size_t dv = d.inv.sub.space.dim();
    out.element = zeros(dv * nh);
    for (std::size_t i = 0; i < nh; ++i) {
        Vector y(n);
        for (std::size_t l = 0; l < nh; ++l)
            if (!pinv->get(l, i).is_zero()) axpy(y, pinv->get(l, i), out.components[l]);
        auto c = d.inv.sub.space.coords(y);
        if (!c) throw VerificationError("decompose", "reassembled coefficient left the invariant subalgebra");
        for (std::size_t v = 0; v < dv; ++v) out.element[v * nh + i] = (*c)[v];
    }
    out.checks.add("decompose round trip", d.smash_to_end(out.element) == t, "", 1);
    return out;
}

Matrix random_equivariant(const ImprimitivityData& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Vector c(d.end.algebra.dim());
    for (auto& x : c) x = small_rational(rng);
    return d.end.map_of(c);
}

namespace {

// Shared assembly for the Hom/End context and its smash-product form.
// ring_maps[r] is the endomorphism of P given by the r-th basis element of R;
// to_ring converts an endomorphism back into R coordinates.
MoritaContext assemble(const ImprimitivityData& d, std::string name, const Algebra& R,
                       const std::vector<Matrix>& ring_maps, const std::function<Vector(const Matrix&)>& to_ring) {
    const FiniteModule& M = d.module;
    const Algebra& S = d.smash_a;
    const std::size_t n = M.dim, ns = S.dim(), nq = d.hom.basis_maps.size(), nr = R.dim();
    const auto& F = d.hom.basis_maps;

    Bimodule P{n, tensor_from_ops(ring_maps, n), M.action, M.labels};

    auto hom_coords = [&](const Matrix& f, const char* what) {
        auto c = d.hom.coords_of(f);
        if (!c) throw VerificationError("context", std::string(what) + " left the Hom module");
        return *c;
    };
    Tensor3 ql(ns, nq, nq), qr(nr, nq, nq);
    for (std::size_t s = 0; s < ns; ++s) {
        Matrix ls = S.left_multiplication(S.basis(s));
        for (std::size_t k = 0; k < nq; ++k) ql.set_slice(s, k, hom_coords(ls * F[k], "s·f"));
    }
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t k = 0; k < nq; ++k) qr.set_slice(r, k, hom_coords(F[k] * ring_maps[r], "f∘r"));
    std::vector<std::string> qlabels;
    for (std::size_t k = 0; k < nq; ++k) qlabels.push_back("F" + std::to_string(k));
    Bimodule Q{nq, std::move(ql), std::move(qr), std::move(qlabels)};

    Tensor3 gamma(n, nq, nr), lambda(nq, n, ns);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t k = 0; k < nq; ++k) {
            Matrix g(n, n);
            Vector ep = unit_vector(n, p);
            for (std::size_t m = 0; m < n; ++m) {
                Vector col = M.act(F[k].column(m), ep);
                for (std::size_t x = 0; x < n; ++x)
                    if (!col[x].is_zero()) g.set(x, m, col[x]);
            }
            gamma.set_slice(p, k, to_ring(g));
            lambda.set_slice(k, p, F[k].column(p));
        }
    return {std::move(name), R, S, std::move(P), std::move(Q), std::move(gamma), std::move(lambda)};
}

}  // namespace

MoritaContext hom_context(const ImprimitivityData& d) {
    return assemble(d, "hom-end", d.end.algebra, d.end.basis_maps, [&](const Matrix& g) {
        auto c = d.end.coords_of(g);
        if (!c) throw VerificationError("hom context", "Γ(p⊗f) is not A#Û-linear");
        return *c;
    });
}

MoritaContext hom_context(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi) {
    return hom_context(ImprimitivityData::build(a, h, u, pi));
}

MoritaContext theorem_context(const ImprimitivityData& d) {
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < d.smash_inv.dim(); ++i) maps.push_back(d.smash_to_end(d.smash_inv.basis(i)));
    return assemble(d, "invariants-smash", d.smash_inv, maps,
                    [&](const Matrix& g) { return decompose_endomorphism(d, g).element; });
}

bool has_trivial_action(const ModuleAlgebra& a) {
    const std::size_t n = a.algebra.dim();
    for (std::size_t x = 0; x < a.hopf.dim(); ++x)
        if (!(a.operator_of(x) == Matrix::identity(n).scaled(a.hopf.counit()[x]))) return false;
    return true;
}

GeneratorCertificate trivial_action_generator(const ImprimitivityData& d) {
    if (!has_trivial_action(d.coeff)) throw VerificationError("generator", "the coefficient action is not trivial");
    const HopfAlgebra& U = d.u;
    const std::size_t na = d.coeff.algebra.dim(), nh = d.h.dim(), nu = U.dim(), n = na * nh, ns = d.smash_a.dim();
    const Vector gamma = normalized_left_functional(U);
    GeneratorCertificate out;
    out.p = Matrix(ns, n);
    for (std::size_t h = 0; h < nh; ++h) {
        Vector s_pi = U.antipode().apply(d.pi.column(h));
        for (std::size_t m = 0; m < nu; ++m) {
            Rational val = dot(gamma, U.multiply(s_pi, U.basis(m)));
            if (val.is_zero()) continue;
            for (std::size_t a = 0; a < na; ++a) out.p.set(a * nu + m, a * nh + h, val);
        }
    }
    Algebra tensor = tensor_product(d.coeff.algebra, d.coeff.hopf.algebra());
    out.checks.add("smash equals tensor product", d.smash_a.mult() == tensor.mult() && d.smash_a.unit() == tensor.unit(), "",
                   1);
    IdentityTally lin("generator module map");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t s = 0; s < ns; ++s) {
            Vector lhs = out.p.apply(d.module.act(d.smash_a.basis(s), unit_vector(n, x)));
            Vector rhs = d.smash_a.multiply(out.p.column(x), d.smash_a.basis(s));
            lin.record_lazy(lhs == rhs, [&] { return "(" + d.module.labels[x] + ", " + d.smash_a.labels()[s] + ")"; });
        }
    lin.into(out.checks);
    out.rank = rank(out.p);
    out.checks.add("generator surjective", out.rank == ns,
                   out.rank == ns ? "" : "rank " + std::to_string(out.rank) + " < " + std::to_string(ns), 1);
    return out;
}

ProjectivityCertificate projectivity(const ImprimitivityData& d) {
    const std::size_t nh = d.h.dim(), n = d.module.dim, ns = d.smash_a.dim(), nq = d.hom.basis_maps.size();
    const Vector one = d.coeff.algebra.unit();
    std::vector<Matrix> rho;
    for (std::size_t h = 0; h < nh; ++h) {
        Vector gen = kron(one, unit_vector(nh, h));
        std::vector<Vector> cols;
        for (std::size_t s = 0; s < ns; ++s) cols.push_back(d.module.act(d.smash_a.basis(s), gen));
        rho.push_back(Matrix::from_columns(cols, n));
    }
    std::vector<Vector> blocks;
    for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t k = 0; k < nq; ++k) blocks.push_back((rho[h] * d.hom.basis_maps[k]).flatten());
    ProjectivityCertificate out;
    out.free_rank = nh;
    SpanResult sol = span_contains(blocks, Matrix::identity(n).flatten());
    out.checks.add("projective splitting exists", sol.contained, sol.contained ? "" : "no A#Û-linear section of ρ", 1);
    if (!sol.contained) return out;
    Matrix sum(n, n);
    for (std::size_t h = 0; h < nh; ++h) {
        Vector c(sol.coefficients.begin() + static_cast<long>(h * nq), sol.coefficients.begin() + static_cast<long>((h + 1) * nq));
        sum = sum + rho[h] * combine(d.hom.basis_maps, c, ns, n);
        out.sigma.push_back(std::move(c));
    }
    out.checks.add("projective splitting verified", sum == Matrix::identity(n), "", 1);
    return out;
}

SurjectivityResult reduce_to_invariants(const ImprimitivityData& d, const MoritaContext& ctx) {
    const Algebra& A = d.coeff.algebra;
    const HopfAlgebra& Uhat = d.coeff.hopf;
    const std::size_t na = A.dim(), nh = d.h.dim(), nu = Uhat.dim();

    std::vector<SparseVec> rows;
    for (std::size_t x = 0; x < nu; ++x) {
        Matrix eq = d.coeff.operator_of(x) - Matrix::identity(na).scaled(Uhat.counit()[x]);
        for (auto& r : eq.sparse_rows()) rows.push_back(std::move(r));
    }
    Subalgebra a0 = make_subalgebra(A, Subspace(kernel_basis_sparse(rows, na), na), "a");
    const ImprimitivityData d0 = ImprimitivityData::build(trivial_action(a0.algebra, Uhat), d.h, d.u, d.pi);
    const MoritaContext ctx0 = theorem_context(d0);
    const std::size_t n0 = d0.module.dim;

    const Matrix iota_p = kron(a0.inclusion, Matrix::identity(nh));
    const Matrix iota_s = kron(a0.inclusion, Matrix::identity(nu));
    const Vector one0 = a0.algebra.unit();

    // F(a⊗h) = ι f(1⊗h) · (a#ε)
    auto extend = [&](std::size_t k) {
        const Matrix& f = d0.hom.basis_maps[k];
        std::vector<Vector> cols;
        for (std::size_t a = 0; a < na; ++a) {
            Vector aeps = kron(A.basis(a), Uhat.unit());
            for (std::size_t h = 0; h < nh; ++h)
                cols.push_back(d.smash_a.multiply(iota_s.apply(f.apply(kron(one0, unit_vector(nh, h)))), aeps));
        }
        auto c = d.hom.coords_of(Matrix::from_columns(cols, d.smash_a.dim()));
        if (!c) throw VerificationError("reduce-to-invariants", "extended functional is not A#Û-linear");
        return *c;
    };
    std::vector<Vector> ext;
    for (std::size_t k = 0; k < d0.hom.basis_maps.size(); ++k) ext.push_back(extend(k));

    SurjectivityResult out;
    {
        // Λ₀ reaches 1#β; multiply by a#ε on the left
        std::vector<Vector> targets;
        for (std::size_t b = 0; b < nu; ++b) targets.push_back(kron(one0, unit_vector(nu, b)));
        std::vector<Vector> images;
        for (std::size_t q = 0; q < ctx0.Q.dim; ++q)
            for (std::size_t p = 0; p < n0; ++p) images.push_back(ctx0.lambda.slice(q, p));
        auto res = span_contains_all(images, targets);
        SurjectivityCertificate& cert = out.lambda;
        cert.surjective = true;
        for (std::size_t b = 0; b < nu; ++b)
            if (!res[b].contained) {
                cert.surjective = false;
                cert.missing = ctx0.S.labels()[b];
            }
        if (cert.surjective)
            for (std::size_t a = 0; a < na; ++a) {
                Vector aeps = kron(A.basis(a), Uhat.unit());
                for (std::size_t b = 0; b < nu; ++b) {
                    SurjectivityHit hit{a * nu + b, {}};
                    for (std::size_t k = 0; k < images.size(); ++k) {
                        const Rational& c = res[b].coefficients[k];
                        if (c.is_zero()) continue;
                        hit.terms.push_back({c, ctx.Q.act_left(aeps, ext[k / n0]), iota_p.apply(unit_vector(n0, k % n0))});
                    }
                    cert.hits.push_back(std::move(hit));
                }
            }
        cert.rank = cert.surjective ? ctx.S.dim() : 0;
        cert.verified = cert.surjective && check_certificate(ctx, cert, false);
    }
    {
        // Γ₀ reaches (1⊗1)#α; multiply by v#ε̂ on the left
        auto unit0 = d0.inv.sub.space.coords(kron(one0, d.h.unit()));
        if (!unit0) throw VerificationError("reduce-to-invariants", "1⊗1 is not invariant");
        std::vector<Vector> targets;
        for (std::size_t j = 0; j < nh; ++j) targets.push_back(kron(*unit0, unit_vector(nh, j)));
        std::vector<Vector> images;
        for (std::size_t p = 0; p < n0; ++p)
            for (std::size_t q = 0; q < ctx0.Q.dim; ++q) images.push_back(ctx0.gamma.slice(p, q));
        auto res = span_contains_all(images, targets);
        SurjectivityCertificate& cert = out.gamma;
        cert.surjective = true;
        for (std::size_t j = 0; j < nh; ++j)
            if (!res[j].contained) {
                cert.surjective = false;
                cert.missing = ctx0.R.labels()[j];
            }
        const std::size_t dv = d.inv.sub.space.dim(), nq0 = ctx0.Q.dim;
        const Vector eps_hat = d.induced.action.hopf.unit();
        if (cert.surjective)
            for (std::size_t v = 0; v < dv; ++v) {
                Vector veps = kron(unit_vector(dv, v), eps_hat);
                for (std::size_t j = 0; j < nh; ++j) {
                    SurjectivityHit hit{v * nh + j, {}};
                    for (std::size_t k = 0; k < images.size(); ++k) {
                        const Rational& c = res[j].coefficients[k];
                        if (c.is_zero()) continue;
                        Vector p = ctx.P.act_left(veps, iota_p.apply(unit_vector(n0, k / nq0)));
                        hit.terms.push_back({c, std::move(p), ext[k % nq0]});
                    }
                    cert.hits.push_back(std::move(hit));
                }
            }
        cert.rank = cert.surjective ? ctx.R.dim() : 0;
        cert.verified = cert.surjective && check_certificate(ctx, cert, true);
    }
    return out;
}

std::string to_string(SurjectivityStrategy s) {
    return s == SurjectivityStrategy::direct ? "direct" : "reduce-to-invariants";
}

SurjectivityStrategy parse_strategy(const std::string& s) {
    if (s == "direct") return SurjectivityStrategy::direct;
    if (s == "reduce-to-invariants") return SurjectivityStrategy::reduce_to_invariants;
    throw std::invalid_argument("strategy must be 'direct' or 'reduce-to-invariants', got '" + s + "'");
}

// ---- the full report ----

namespace {

// Runs one stage; a thrown verification error marks the stage failed and
// stops the pipeline.
bool run_stage(Report& rep, const std::string& name, const std::function<void(Stage&)>& body) {
    Stage& st = rep.add_stage(name);
    try {
        body(st);
    } catch (const VerificationError& e) {
        st.error = e.what();
    } catch (const HopfError& e) {
        st.error = e.what();
    } catch (const DimensionError& e) {
        st.error = e.what();
    }
    return rep.stages.back().pass();
}

void surjectivity_checks(Stage& st, const SurjectivityResult& r) {
    st.checks.add("gamma surjective", r.gamma.surjective, r.gamma.missing, 1);
    st.checks.add("gamma certificate verified", r.gamma.verified, "", r.gamma.hits.size());
    st.checks.add("lambda surjective", r.lambda.surjective, r.lambda.missing, 1);
    st.checks.add("lambda certificate verified", r.lambda.verified, "", r.lambda.hits.size());
}

}  // namespace

Report verify_theorem_morita(const ModuleAlgebra& a, const HopfAlgebra& h, const HopfAlgebra& u, const Matrix& pi,
                             const TheoremOptions& opt) {
    Report rep;
    rep.command = "morita";
    rep.parameters["strategy"] = to_string(opt.strategy);
    rep.parameters["seed"] = opt.seed;
    rep.parameters["random_endomorphisms"] = opt.random_endomorphisms;

    ImprimitivityData d;
    d.coeff = a;
    d.h = h;
    d.u = u;
    d.pi = pi;

    bool ok = run_stage(rep, "inputs", [&](Stage& st) {
        st.checks.merge(verify_module_algebra(a), "A: ");
        st.checks.merge(verify_hopf(h), "H: ");
        st.checks.merge(verify_hopf(u), "U: ");
        SubgroupVerdict sv = is_compact_quantum_subgroup(h, u, pi);
        st.checks.add("U unimodular", sv.unimodular, "", 1);
        st.checks.merge(sv.morphism_checks, "π: ");
        st.checks.add("π surjective", sv.surjective, "", 1);
        st.checks.add("A is a Û-module algebra", same_structure(a.hopf, dual(u)), a.hopf.name(), 1);
        st.details["dim_A"] = a.algebra.dim();
        st.details["dim_H"] = h.dim();
        st.details["dim_U"] = u.dim();
        st.details["H"] = h.name();
        st.details["U"] = u.name();
    });
    ok = ok && run_stage(rep, "tensor-action", [&](Stage& st) {
        build_tensor(d);
        st.checks.merge(verify_module_algebra(d.tensor));
        st.details["dim_A⊗H"] = d.tensor.algebra.dim();
    });
    ok = ok && run_stage(rep, "invariants", [&](Stage& st) {
        build_invariants(d);
        st.checks.add("ε-invariants equal bimodule invariants", d.inv.agree, "", 1);
        st.checks.merge(d.induced.checks);
        st.checks.merge(verify_module_algebra(d.induced.action), "induced: ");
        st.details["dim_invariants"] = d.inv.sub.space.dim();
    });
    ok = ok && run_stage(rep, "smash-products", [&](Stage& st) {
        build_smash(d);
        st.checks.merge(verify_algebra(d.smash_inv), "(A⊗H)^Û#Ĥ: ");
        st.checks.merge(verify_algebra(d.smash_a), "A#Û: ");
        st.checks.merge(verify_module(d.module), "A⊗H: ");
        if (has_trivial_action(a)) {
            Algebra t = tensor_product(a.algebra, a.hopf.algebra());
            st.checks.add("A#Û equals A⊗Û", d.smash_a.mult() == t.mult() && d.smash_a.unit() == t.unit(), "", 1);
        }
        st.details["dim_smash_invariants"] = d.smash_inv.dim();
        st.details["dim_smash_A"] = d.smash_a.dim();
    });
    ok = ok && run_stage(rep, "smash-to-end", [&](Stage& st) {
        build_end(d);
        st.checks.merge(verify_algebra(d.end.algebra), "End: ");
        st.checks.merge(verify_smash_to_end(d));
        st.details["dim_End"] = d.end.algebra.dim();
        st.details["dim_Hom"] = d.hom.basis_maps.size();
    });
    ok = ok && run_stage(rep, "decompose", [&](Stage& st) {
        const std::size_t nr = d.smash_inv.dim(), nh = d.h.dim();
        Decomposition id = decompose_endomorphism(d, Matrix::identity(d.module.dim));
        st.checks.add("identity decomposes to the unit", id.element == d.unit_of_smash_inv(),
                      describe(d.smash_inv.labels(), id.element), 1);
        IdentityTally basis_rt("smash basis round trip"), comp("component invariant"), rt("decompose round trip"),
            indep("basis independence");
        for (std::size_t i = 0; i < nr; ++i) {
            Decomposition dec = decompose_endomorphism(d, d.smash_to_end(d.smash_inv.basis(i)));
            basis_rt.record_lazy(dec.element == d.smash_inv.basis(i), [&] { return d.smash_inv.labels()[i]; });
        }
        Matrix change = Matrix::identity(nh);
        for (std::size_t i = 0; i < nh; ++i)
            for (std::size_t j = i + 1; j < nh; ++j) change.set(i, j, 1);
        Json seeds = Json::array();
        for (std::size_t k = 0; k < opt.random_endomorphisms; ++k) {
            const std::uint64_t s = sample_seed(opt.seed, k);
            seeds.push_back(s);
            Matrix t = random_equivariant(d, s);
            Decomposition dec = decompose_endomorphism(d, t);
            auto wit = [&] { return "seed " + std::to_string(s); };
            comp.record_lazy(dec.checks.passed("component invariant"), wit);
            rt.record_lazy(dec.checks.passed("decompose round trip"), wit);
            Decomposition alt = decompose_endomorphism(d, t, change);
            indep.record_lazy(alt.element == dec.element && alt.checks.passed("decompose round trip"), wit);
        }
        basis_rt.into(st.checks);
        comp.into(st.checks);
        rt.into(st.checks);
        indep.into(st.checks);
        st.details["random_seeds"] = std::move(seeds);
    });
    MoritaContext ctx;
    if (ok && opt.include_hom_context)
        ok = run_stage(rep, "hom-context", [&](Stage& st) {
            MoritaContext hc = hom_context(d);
            st.checks.merge(verify_bimodules(hc));
            st.checks.merge(verify_compatibility(hc));
            SurjectivityResult sr = verify_surjectivity(hc);
            st.details["gamma_surjective"] = sr.gamma.surjective;
            st.details["lambda_surjective"] = sr.lambda.surjective;
            st.details["dim_P"] = hc.P.dim;
            st.details["dim_Q"] = hc.Q.dim;
        });
    ok = ok && run_stage(rep, "theorem-context", [&](Stage& st) {
        ctx = theorem_context(d);
        st.checks.merge(verify_bimodules(ctx));
        st.checks.merge(verify_compatibility(ctx));
        st.details["R"] = "(A⊗H)^Û#Ĥ";
        st.details["S"] = "A#Û";
        st.details["dim_R"] = ctx.R.dim();
        st.details["dim_S"] = ctx.S.dim();
        st.details["dim_P"] = ctx.P.dim;
        st.details["dim_Q"] = ctx.Q.dim;
    });
    ok = ok && run_stage(rep, "surjectivity", [&](Stage& st) {
        SurjectivityResult sr =
            opt.strategy == SurjectivityStrategy::direct ? verify_surjectivity(ctx) : reduce_to_invariants(d, ctx);
        surjectivity_checks(st, sr);
        st.details["strategy"] = to_string(opt.strategy);
        st.details["gamma"] = certificate_to_json(ctx, sr.gamma, true);
        st.details["lambda"] = certificate_to_json(ctx, sr.lambda, false);
    });
    if (ok && has_trivial_action(a))
        run_stage(rep, "generator", [&](Stage& st) {
            GeneratorCertificate g = trivial_action_generator(d);
            st.checks.merge(g.checks);
            ProjectivityCertificate p = projectivity(d);
            st.checks.merge(p.checks);
            st.details["generator_rank"] = g.rank;
            st.details["free_rank"] = p.free_rank;
        });
    return rep;
}

}  // namespace hopfkit
