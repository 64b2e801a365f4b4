#include <catch2/catch_amalgamated.hpp>

#include "hopfkit/catalog.hpp"

using namespace hopfkit;

namespace {

Vector v(std::initializer_list<Rational> xs) { return Vector(xs); }

Matrix power(const Matrix& m, int k) {
    Matrix r = Matrix::identity(m.rows());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

// ℂ(ℤ/2) with a replaced comultiplication for g.
Bialgebra z2_with_comult_of_g(const std::vector<std::pair<std::pair<int, int>, long>>& terms) {
    HopfAlgebra h = group_algebra(FiniteGroup::cyclic(2));
    Tensor3 c(2, 2, 2);
    c.set(0, 0, 0, 1);
    for (auto [jk, val] : terms) c.set(1, jk.first, jk.second, val);
    return Bialgebra(h.algebra(), c);
}

// Monoid bialgebra {1, v}, v² = v, Δ(v) = v⊗v.
Bialgebra monoid_bialgebra() {
    Tensor3 m(2, 2, 2), c(2, 2, 2);
    m.set(0, 0, 0, 1);
    m.set(0, 1, 1, 1);
    m.set(1, 0, 1, 1);
    m.set(1, 1, 1, 1);
    c.set(0, 0, 0, 1);
    c.set(1, 1, 1, 1);
    return Bialgebra(Algebra({"1", "v"}, m, unit_vector(2, 0)), c);
}

}  // namespace

TEST_CASE("verify_bialgebra examples") {
    CHECK(verify_bialgebra(group_algebra(FiniteGroup::cyclic(2)).bialgebra()).ok());
    HopfAlgebra c3 = function_algebra(FiniteGroup::cyclic(3));
    CHECK(verify_bialgebra(c3.bialgebra()).ok());
    // Δ(χ_0) = χ_0⊗χ_0 + χ_1⊗χ_2 + χ_2⊗χ_1
    CHECK(c3.comultiply(c3.basis(0)) == v({1, 0, 0, 0, 0, 1, 0, 1, 0}));

    // Δ(g) = g⊗e + e⊗g is not multiplicative, first at (g, g).
    CheckList bad = verify_bialgebra(z2_with_comult_of_g({{{1, 0}, 1}, {{0, 1}, 1}}));
    REQUIRE_FALSE(bad.passed("Δ multiplicative"));
    CHECK(bad.find("Δ multiplicative")->witness == "(g, g)");

    // Δ(g) = g⊗e is a coassociative algebra map but admits no counit.
    Bialgebra ge = z2_with_comult_of_g({{{1, 0}, 1}});
    CHECK(verify_bialgebra(ge).ok());
    try {
        solve_counit(ge);
        FAIL("counit should not exist");
    } catch (const HopfError& e) {
        CHECK(e.kind() == HopfError::Kind::no_counit);
    }
}

TEST_CASE("solve_counit examples") {
    CHECK(solve_counit(group_algebra(FiniteGroup::cyclic(2)).bialgebra()) == v({1, 1}));
    CHECK(solve_counit(function_algebra(FiniteGroup::cyclic(2)).bialgebra()) == v({1, 0}));
    HopfAlgebra h4 = sweedler4();
    Vector eps = solve_counit(Bialgebra(h4.algebra(), h4.comult()));
    CHECK(eps == v({1, 1, 0, 0}));
    Bialgebra wrong(h4.algebra(), h4.comult(), v({1, 1, 1, 0}));
    try {
        solve_counit(wrong);
        FAIL("mismatch expected");
    } catch (const HopfError& e) {
        CHECK(e.kind() == HopfError::Kind::counit_mismatch);
    }
}

TEST_CASE("solve_antipode examples") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    HopfAlgebra c3 = group_algebra(z3);
    Matrix s = solve_antipode(Bialgebra(c3.algebra(), c3.comult()), c3.counit());
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) CHECK(s.get(b, a) == Rational(b == z3.inverse(a) ? 1 : 0));

    HopfAlgebra f2 = function_algebra(FiniteGroup::cyclic(2));
    CHECK(solve_antipode(Bialgebra(f2.algebra(), f2.comult()), f2.counit()) == Matrix::identity(2));

    HopfAlgebra h4 = sweedler4();
    Matrix sh = solve_antipode(Bialgebra(h4.algebra(), h4.comult()), h4.counit());
    CHECK(sh == h4.antipode());
    CHECK(sh.column(1) == v({0, 1, 0, 0}));   // S(g) = g
    CHECK(sh.column(2) == v({0, 0, 0, -1}));  // S(x) = -gx
    CHECK(power(sh, 4) == Matrix::identity(4));
    CHECK_FALSE(power(sh, 2) == Matrix::identity(4));

    // The monoid bialgebra has a counit but no antipode.
    Bialgebra mono = monoid_bialgebra();
    Vector eps = solve_counit(mono);
    CHECK(eps == v({1, 1}));
    try {
        solve_antipode(mono, eps);
        FAIL("no antipode expected");
    } catch (const HopfError& e) {
        CHECK(e.kind() == HopfError::Kind::no_antipode);
    }
}

TEST_CASE("galois maps") {
    HopfAlgebra cz2 = group_algebra(FiniteGroup::cyclic(2));
    GaloisMaps g = galois_maps(cz2.bialgebra());
    CHECK(g.t1_bijective);
    CHECK(g.t2_bijective);
    // T1(g⊗e) = g⊗g : column 1*2+0 has a 1 at row 1*2+1
    CHECK(g.t1.column(2) == v({0, 0, 0, 1}));
    GaloisMaps f = galois_maps(function_algebra(FiniteGroup::cyclic(2)).bialgebra());
    CHECK(f.t1_bijective);
    CHECK(rank(f.t1) == 4);
    GaloisMaps m = galois_maps(monoid_bialgebra());
    CHECK_FALSE(m.t1_bijective);
}

TEST_CASE("catalog algebras pass every Hopf check") {
    for (const auto& name : catalog_hopf_names()) {
        HopfAlgebra h = hopf_by_name(name);
        CheckList c = verify_hopf(h);
        INFO(name << ": " << (c.first_failure() ? c.first_failure()->id : ""));
        CHECK(c.ok());
        CHECK(left_integrals(h).size() == 1);
        CHECK(right_integrals(h).size() == 1);
        // S maps the left integral line onto the right integral line.
        Vector st = h.antipode().apply(left_integrals(h)[0]);
        CHECK(Subspace({st}, h.dim()) == Subspace(right_integrals(h), h.dim()));
    }
}

TEST_CASE("integrals") {
    for (const char* g : {"cyclic:2", "cyclic:3", "symmetric:3", "klein"}) {
        HopfAlgebra c = function_algebra(group_by_name(g));
        auto li = left_integrals(c);
        REQUIRE(li.size() == 1);
        CHECK(li[0] == unit_vector(c.dim(), 0));  // χ_e
        CHECK(right_integrals(c) == li);
    }
    HopfAlgebra cz2 = group_algebra(FiniteGroup::cyclic(2));
    CHECK(left_integrals(cz2) == std::vector<Vector>{v({1, 1})});
    HopfAlgebra h4 = sweedler4();
    CHECK(normalized_left_integral(h4) == v({0, 0, 1, 1}));
    auto ri = right_integrals(h4);
    REQUIRE(ri.size() == 1);
    CHECK(Subspace(ri, 4) == Subspace({v({0, 0, 1, -1})}, 4));
}

TEST_CASE("invariant functionals") {
    HopfAlgebra c3 = function_algebra(FiniteGroup::cyclic(3));
    CHECK(normalized_left_functional(c3) == v({1, 1, 1}));
    CHECK(invariant_functionals(c3).right.size() == 1);
    HopfAlgebra cz2 = group_algebra(FiniteGroup::cyclic(2));
    CHECK(normalized_left_functional(cz2) == v({1, 0}));

    // ev_t on the dual of H₄ is left invariant.
    HopfAlgebra h4 = sweedler4();
    HopfAlgebra d = dual(h4);
    Vector ev_t = normalized_left_integral(h4);  // value of ev_t on δ^i is t_i
    CHECK(Subspace(invariant_functionals(d).left, 4).contains(ev_t));
}

TEST_CASE("unimodularity") {
    CHECK(is_unimodular(function_algebra(FiniteGroup::symmetric(3))));
    CHECK(is_unimodular(group_algebra(FiniteGroup::symmetric(3))));
    CHECK(is_unimodular(group_algebra(FiniteGroup::cyclic(4))));
    Unimodularity u = unimodularity(sweedler4());
    CHECK_FALSE(u.unimodular);
    CHECK_FALSE(u.integrals_coincide);
    CHECK(u.consistent());
    CHECK(u.phi == v({0, 0, 0, 1}));
}

TEST_CASE("duality") {
    for (const char* g : {"trivial", "cyclic:2", "cyclic:3", "cyclic:4", "klein", "symmetric:3"}) {
        FiniteGroup grp = group_by_name(g);
        CHECK(same_structure(dual(function_algebra(grp)), group_algebra(grp)));
        CHECK(same_structure(dual(group_algebra(grp)), function_algebra(grp)));
    }
    HopfAlgebra cz2 = group_algebra(FiniteGroup::cyclic(2));
    HopfAlgebra d = dual(cz2);
    // Δ̂(δᵉ) = δᵉ⊗δᵉ + δᵍ⊗δᵍ
    CHECK(d.comultiply(d.basis(0)) == v({1, 0, 0, 1}));
    CHECK(d.labels() == std::vector<std::string>{"δ:e", "δ:g"});
    HopfAlgebra h4 = sweedler4();
    CHECK(dual(dual(h4)).algebra().mult() == h4.algebra().mult());
    // mult of the dual is the transpose of comult, entrywise
    HopfAlgebra d4 = dual(h4);
    for (const auto& e : h4.comult().entries()) CHECK(d4.algebra().mult().get(e.j, e.k, e.i) == e.value);
    CHECK(d4.algebra().mult().nnz() == h4.comult().nnz());
}

TEST_CASE("double dual iso") {
    for (const auto& name : catalog_hopf_names()) {
        HopfMorphism f = double_dual_iso(hopf_by_name(name));
        CHECK(verify_morphism(f).ok());
        CHECK(rank(f.matrix) == f.source.dim());
    }
    CHECK(double_dual_iso(group_algebra(FiniteGroup::cyclic(2))).matrix == Matrix::identity(2));
}

TEST_CASE("sweedler algebra is self-dual") {
    HopfAlgebra h4 = sweedler4();
    IsoSearchPlan plan{{1, 2}, {{}, {0}, {1}, {0, 1}}};
    auto iso = find_isomorphism(h4, dual(h4), plan);
    REQUIRE(iso);
    CHECK(verify_morphism({h4, dual(h4), *iso}).ok());
}

TEST_CASE("morphisms and compact quantum subgroups") {
    HopfMorphism r = morphism_by_name("restriction:symmetric:3/cyclic:2");
    CHECK(verify_morphism(r).ok());
    CHECK(is_surjective(r));
    HopfMorphism p = sweedler_projection();
    CHECK(verify_morphism(p).ok());
    CHECK(is_surjective(p));
    CHECK(rank(p.matrix) == 2);

    HopfAlgebra cz2 = group_algebra(FiniteGroup::cyclic(2));
    Matrix collapse(2, 2);
    collapse.set(0, 0, 1);
    collapse.set(0, 1, 1);  // g ↦ e
    HopfMorphism z{cz2, cz2, collapse};
    CheckList zc = verify_morphism(z);
    CHECK(zc.passed("algebra homomorphism"));
    CHECK(zc.passed("comultiplication intertwined"));
    CHECK_FALSE(is_surjective(z));

    CHECK(is_compact_quantum_subgroup(r.source, r.target, r.matrix).holds());
    CHECK(is_compact_quantum_subgroup(p.source, p.target, p.matrix).holds());
    SubgroupVerdict self = is_compact_quantum_subgroup(sweedler4(), sweedler4(), Matrix::identity(4));
    CHECK_FALSE(self.holds());
    CHECK_FALSE(self.unimodular);
    CHECK(self.morphism);
}

TEST_CASE("restriction composed with extension by zero is the identity on C(H)") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (const char* sub : {"trivial", "cyclic:2", "cyclic:3", "symmetric:3"}) {
        auto emb = find_embedding(group_by_name(sub), s3);
        REQUIRE(emb);
        HopfMorphism r = restriction_morphism(*emb);
        CHECK(verify_morphism(r).ok());
        CHECK(is_surjective(r));
        CHECK(r.matrix * extension_by_zero(*emb) == Matrix::identity(emb->subgroup.order()));
    }
}

TEST_CASE("groups") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(s3.labels() == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
    CHECK(FiniteGroup::dihedral(3).order() == 6);
    CHECK(FiniteGroup::symmetric(4).order() == 24);
    CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 0}, {0, 0}}), VerificationError);
    CHECK_THROWS_AS(group_by_name("nope:3"), std::invalid_argument);
    CHECK(function_algebra(FiniteGroup::trivial()).dim() == 1);
    CHECK(same_structure(group_algebra(FiniteGroup::trivial()), base_field_hopf()));
    // commutativity of C(G) and cocommutativity of ℂG
    HopfAlgebra f = function_algebra(s3), g = group_algebra(s3);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            CHECK(f.algebra().basis_product(i, j) == f.algebra().basis_product(j, i));
            CHECK(g.comult().get(i, j, i) == g.comult().get(i, i, j));
        }
}
