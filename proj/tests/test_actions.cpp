#include <catch2/catch_amalgamated.hpp>

#include "hopfkit/actions.hpp"

using namespace hopfkit;

namespace {

Vector v(std::initializer_list<Rational> xs) { return Vector(xs); }

HopfAlgebra cz2() { return group_algebra(FiniteGroup::cyclic(2)); }

FiniteModule free_module(const Algebra& r, std::size_t rank_n) {
    const std::size_t n = r.dim(), d = n * rank_n;
    Tensor3 t(n, d, d);
    for (const auto& e : r.mult().entries())
        for (std::size_t c = 0; c < rank_n; ++c) t.set(e.j, c * n + e.i, c * n + e.k, e.value);
    std::vector<std::string> labels(d, "m");
    return {r, d, Side::right, std::move(t), labels};
}

}  // namespace

TEST_CASE("module algebra examples") {
    CHECK(verify_module_algebra(trivial_action(algebra_by_name("dual-numbers"), sweedler4())).ok());
    CHECK(verify_module_algebra(trivial_action(algebra_by_name("split:3"), function_algebra(FiniteGroup::symmetric(3)))).ok());
    CHECK(verify_module_algebra(action_by_name("swap")).ok());
    CheckList broken = verify_module_algebra(action_by_name("swap-broken"));
    CHECK(broken.passed("module law"));
    REQUIRE_FALSE(broken.passed("module-algebra"));
    CHECK(broken.find("module-algebra")->witness == "(g, e1, e1)");
    for (const auto& name : catalog_action_names()) {
        if (name == "swap-broken") continue;
        INFO(name);
        CHECK(verify_module_algebra(action_by_name(name)).ok());
    }
}

TEST_CASE("action/coaction dictionary round trips") {
    std::vector<ModuleAlgebra> fixtures;
    for (const auto& name : catalog_action_names()) fixtures.push_back(action_by_name(name));
    auto [l, r] = regular_actions(sweedler4());
    fixtures.push_back(l);
    fixtures.push_back(r);
    fixtures.push_back(subgroup_restriction_action(sweedler4(), cz2(), sweedler_projection().matrix));
    REQUIRE(fixtures.size() >= 5);
    for (const auto& m : fixtures) {
        Coaction c = action_to_coaction(m);
        ModuleAlgebra back = coaction_to_action(c);
        CHECK(back.action == m.action);
        CHECK(back.side == m.side);
        CHECK(same_structure(back.hopf, m.hopf));
        CHECK(action_to_coaction(back).delta == c.delta);
        if (verify_module_algebra(m).ok()) CHECK(verify_coaction(c).ok());
    }
}

TEST_CASE("comultiplication as a coaction gives the regular left action") {
    for (const HopfAlgebra& h : {sweedler4(), function_algebra(FiniteGroup::cyclic(2)), group_algebra(FiniteGroup::symmetric(3))}) {
        const std::size_t n = h.dim();
        Matrix d(n * n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Vector di = h.comultiply(h.basis(i));
            for (std::size_t p = 0; p < n * n; ++p)
                if (!di[p].is_zero()) d.set(p, i, di[p]);
        }
        Coaction c{h.algebra(), h, Side::right, d};
        CHECK(verify_coaction(c).ok());
        ModuleAlgebra a = coaction_to_action(c);
        auto [l, r] = regular_actions(h);
        CHECK(a.action == l.action);
        CHECK(integral_form_left_action(h).action == l.action);
        CHECK(verify_module_algebra(l).ok());
        CHECK(verify_module_algebra(r).ok());
        // left and right regular actions commute
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) CHECK(l.operator_of(x) * r.operator_of(y) == r.operator_of(y) * l.operator_of(x));
        // the unit ε of Ĥ acts as the identity
        CHECK(l.act(l.hopf.unit(), h.basis(n - 1)) == h.basis(n - 1));
    }
}

TEST_CASE("regular action on the group algebra of Z/2") {
    auto [l, r] = regular_actions(cz2());
    CHECK(l.act_basis(1, v({0, 1})) == v({0, 1}));  // δᵍ⇀g = g
    CHECK(l.act_basis(1, v({1, 0})) == v({0, 0}));  // δᵍ⇀e = 0
}

TEST_CASE("trivial coaction gives the trivial action") {
    Algebra a = algebra_by_name("split:2");
    HopfAlgebra h = cz2();
    Matrix d(4, 2);
    d.set(0 * 2 + 0, 0, 1);  // δ(e1) = e1⊗1
    d.set(1 * 2 + 0, 1, 1);
    Coaction c{a, h, Side::right, d};
    CHECK(verify_coaction(c).ok());
    ModuleAlgebra m = coaction_to_action(c);
    // α⇀a = α(1)a
    for (std::size_t j = 0; j < 2; ++j) CHECK(m.operator_of(j) == Matrix::identity(2).scaled(j == 0 ? 1 : 0));
}

TEST_CASE("subgroup restriction action") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfMorphism r = morphism_by_name("restriction:symmetric:3/cyclic:2");
    ModuleAlgebra act = subgroup_restriction_action(r.source, r.target, r.matrix);
    CHECK(verify_module_algebra(act).ok());
    SubgroupEmbedding emb = *find_embedding(FiniteGroup::cyclic(2), s3);
    for (std::size_t h = 0; h < 2; ++h) {
        const std::size_t hg = emb.element_map[h];
        for (std::size_t g = 0; g < 6; ++g)
            CHECK(act.act_basis(h, unit_vector(6, g)) == unit_vector(6, s3.mul(s3.inverse(hg), g)));  // χ_g↼h = χ_{h⁻¹g}
    }
    CHECK(act.operator_of(0) == Matrix::identity(6));  // ↼ε
    CHECK(coaction_to_action(subgroup_coaction(r.source, r.target, r.matrix)).action == act.action);

    HopfMorphism p = sweedler_projection();
    ModuleAlgebra sw = subgroup_restriction_action(p.source, p.target, p.matrix);
    CHECK(verify_module_algebra(sw).ok());
    CHECK(coaction_to_action(subgroup_coaction(p.source, p.target, p.matrix)).action == sw.action);

    CHECK_THROWS_AS(subgroup_restriction_action(sweedler4(), sweedler4(), Matrix::identity(4)), VerificationError);
}

TEST_CASE("tensor action") {
    HopfMorphism r = morphism_by_name("restriction:symmetric:3/cyclic:2");
    ModuleAlgebra triv = trivial_action(base_field(), dual(r.target));
    ModuleAlgebra t1 = tensor_action(triv, r.source, r.target, r.matrix);
    ModuleAlgebra res = subgroup_restriction_action(r.source, r.target, r.matrix);
    CHECK(t1.action == res.action);  // a⊗h↼β = a⊗(h↼β) with A = k

    ModuleAlgebra tr = tensor_action(action_by_name("translation:cyclic:2"), r.source, r.target, r.matrix);
    CHECK(tr.algebra.dim() == 12);
    CHECK(verify_module_algebra(tr).ok());
    CHECK(tr.operator_of(0) == Matrix::identity(12));

    HopfMorphism p = sweedler_projection();
    ModuleAlgebra g4 = tensor_action(action_by_name("graded"), p.source, p.target, p.matrix);
    CHECK(verify_module_algebra(g4).ok());
    CHECK_THROWS_AS(tensor_action(action_by_name("graded"), r.source, r.target, r.matrix), VerificationError);
}

TEST_CASE("invariant subalgebras") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfMorphism r = morphism_by_name("restriction:symmetric:3/cyclic:2");
    Invariants inv = invariants(subgroup_restriction_action(r.source, r.target, r.matrix));
    CHECK(inv.sub.space.dim() == 3);
    CHECK(inv.agree);
    // every invariant is constant on the orbits g ~ hg
    SubgroupEmbedding emb = *find_embedding(FiniteGroup::cyclic(2), s3);
    for (const auto& f : inv.sub.space.basis())
        for (std::size_t g = 0; g < 6; ++g) CHECK(f[g] == f[s3.mul(emb.element_map[1], g)]);

    Invariants all = invariants(trivial_action(algebra_by_name("split:3"), cz2(), Side::right));
    CHECK(all.sub.space.dim() == 3);
    CHECK(all.agree);

    HopfMorphism p = sweedler_projection();
    ModuleAlgebra t4 = tensor_action(trivial_action(base_field(), dual(p.target)), p.source, p.target, p.matrix);
    Invariants i4 = invariants(t4);
    CHECK(i4.sub.space.dim() == 2);
    CHECK(i4.agree);
    CHECK(i4.sub.space.contains(v({1, 0, 0, 0})));
    CHECK(i4.sub.space.contains(v({0, 0, 0, 1})));  // gx, supported on {x, gx}

    for (const char* g : {"cyclic:4", "symmetric:3", "klein"}) {
        FiniteGroup grp = group_by_name(g);
        for (const char* sub : {"cyclic:2", "trivial"}) {
            HopfMorphism rr = restriction_morphism(*find_embedding(group_by_name(sub), grp));
            Invariants ii = invariants(subgroup_restriction_action(rr.source, rr.target, rr.matrix));
            CHECK(ii.sub.space.dim() == grp.order() / group_by_name(sub).order());
            CHECK(ii.agree);
        }
    }
}

TEST_CASE("induced action on invariants") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfMorphism r = morphism_by_name("restriction:symmetric:3/cyclic:2");
    ModuleAlgebra tr = tensor_action(action_by_name("translation:cyclic:2"), r.source, r.target, r.matrix);
    Invariants inv = invariants(tr);
    CHECK(inv.sub.space.dim() == 6);
    CHECK(inv.agree);
    InducedAction ind = induced_hat_action(inv, tr, r.source);
    CHECK(ind.checks.ok());
    CHECK(verify_module_algebra(ind.action).ok());
    CHECK(ind.action.operator_of(0) == Matrix::identity(6));  // δ:χ_e is the unit of Ĥ
    // (t⇀f)(x) = f(xt) with f(x) the A-coefficient of χ_x
    for (std::size_t t = 0; t < 6; ++t)
        for (std::size_t k = 0; k < 6; ++k) {
            const Vector& m = inv.sub.space.basis()[k];
            Vector acted = inv.sub.space.from_coords(ind.action.act_basis(t, unit_vector(6, k)));
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t x = 0; x < 6; ++x) CHECK(acted[a * 6 + x] == m[a * 6 + s3.mul(x, t)]);
        }

    HopfMorphism p = sweedler_projection();
    ModuleAlgebra g4 = tensor_action(action_by_name("graded"), p.source, p.target, p.matrix);
    Invariants i4 = invariants(g4);
    CHECK(i4.agree);
    InducedAction ind4 = induced_hat_action(i4, g4, p.source);
    CHECK(ind4.checks.ok());
    CHECK(verify_module_algebra(ind4.action).ok());
}

TEST_CASE("smash products") {
    ModuleAlgebra triv = trivial_action(algebra_by_name("dual-numbers"), sweedler4());
    Algebra s = smash_product(triv);
    Algebra t = tensor_product(triv.algebra, sweedler4().algebra());
    CHECK(s.mult() == t.mult());
    CHECK(s.unit() == t.unit());

    ModuleAlgebra swap = action_by_name("swap");
    Algebra sw = smash_product(swap);
    CHECK(sw.dim() == 4);
    CHECK(verify_algebra(sw).ok());
    // (1#g)(a#e) = (g⇀a)#g
    Vector one_g = kron(swap.algebra.unit(), unit_vector(2, 1));
    for (std::size_t a = 0; a < 2; ++a) {
        Vector lhs = sw.multiply(one_g, kron(unit_vector(2, a), unit_vector(2, 0)));
        CHECK(lhs == kron(swap.act_basis(1, unit_vector(2, a)), unit_vector(2, 1)));
    }
    Algebra k = smash_product(trivial_action(algebra_by_name("dual-numbers"), base_field_hopf()));
    CHECK(k.mult() == algebra_by_name("dual-numbers").mult());
}

TEST_CASE("smash module") {
    HopfMorphism p = sweedler_projection();
    ModuleAlgebra graded = action_by_name("graded");
    FiniteModule m = smash_module(graded, p.source, p.target, p.matrix);
    CHECK(verify_module(m).ok());
    ModuleAlgebra ta = tensor_action(graded, p.source, p.target, p.matrix);
    const std::size_t nu = 2, nh = 4;
    // b#ε acts as right multiplication on the A-leg (ε = δᵉ + δᵍ is the unit of Û)
    for (std::size_t b = 0; b < 2; ++b) {
        Vector beps = kron(unit_vector(2, b), graded.hopf.unit());
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t h = 0; h < nh; ++h) {
                Vector ab = graded.algebra.multiply(unit_vector(2, a), unit_vector(2, b));
                CHECK(m.act(beps, kron(unit_vector(2, a), unit_vector(nh, h))) == kron(ab, unit_vector(nh, h)));
            }
    }
    // 1#β is the tensor action
    for (std::size_t beta = 0; beta < nu; ++beta) {
        Vector r = kron(graded.algebra.unit(), unit_vector(nu, beta));
        Matrix op(8, 8);
        for (std::size_t x = 0; x < 8; ++x) {
            Vector c = m.act(r, unit_vector(8, x));
            for (std::size_t y = 0; y < 8; ++y)
                if (!c[y].is_zero()) op.set(y, x, c[y]);
        }
        CHECK(op == ta.operator_of(beta));
    }
}

TEST_CASE("endomorphism and hom modules") {
    Algebra r = algebra_by_name("dual-numbers");
    EndAlgebra e = endomorphism_algebra(regular_right_module(r));
    CHECK(e.algebra.dim() == 2);
    CHECK(verify_algebra(e.algebra).ok());
    CHECK(endomorphism_algebra(free_module(r, 2)).algebra.dim() == 8);
    CHECK(endomorphism_algebra(free_module(algebra_by_name("split:2"), 2)).algebra.dim() == 8);
    CHECK(hom_module(regular_right_module(r)).space.dim() == 2);
    CHECK(hom_module(free_module(r, 1)).space.dim() == 2);

    HopfMorphism p = sweedler_projection();
    FiniteModule m4 = smash_module(trivial_action(base_field(), dual(p.target)), p.source, p.target, p.matrix);
    EndAlgebra e4 = endomorphism_algebra(m4);
    CHECK(e4.algebra.dim() == 8);
    CHECK(verify_algebra(e4.algebra).ok());
    for (const auto& t : e4.basis_maps)
        for (std::size_t k = 0; k < m4.ring.dim(); ++k) CHECK(t * m4.operator_of(k) == m4.operator_of(k) * t);
}
