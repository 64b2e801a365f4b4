#include <catch2/catch_amalgamated.hpp>

#include "hopfkit/morita.hpp"

#include <chrono>

using namespace hopfkit;

namespace {

struct Fixture {
    ModuleAlgebra a;
    HopfMorphism pi;
};

Fixture s3_trivial() {
    HopfMorphism r = morphism_by_name("restriction:symmetric:3/cyclic:2");
    return {trivial_action(base_field(), dual(r.target)), r};
}

Fixture s3_translation() {
    return {action_by_name("translation:cyclic:2"), morphism_by_name("restriction:symmetric:3/cyclic:2")};
}

Fixture h4_graded() { return {action_by_name("graded"), sweedler_projection()}; }

ImprimitivityData build(const Fixture& f) {
    return ImprimitivityData::build(f.a, f.pi.source, f.pi.target, f.pi.matrix);
}

Matrix counit_row(const HopfAlgebra& h) { return Matrix::from_rows({h.counit()}, h.dim()); }

}  // namespace

TEST_CASE("trivial context") {
    MoritaContext c = trivial_context();
    CHECK(verify_bimodules(c).ok());
    CHECK(verify_compatibility(c).ok());
    SurjectivityResult s = verify_surjectivity(c);
    CHECK(s.gamma.surjective);
    CHECK(s.lambda.surjective);
    CHECK(s.both());

    MoritaContext bad = trivial_context(Rational(2));
    CheckList checks = verify_compatibility(bad);
    CHECK_FALSE(checks.ok());
    REQUIRE(checks.find("eq-3.2-left"));
    CHECK_FALSE(checks.passed("eq-3.2-left"));
    CHECK(checks.find("eq-3.2-left")->witness == "(1, 1, 1)");
}

TEST_CASE("hom context") {
    Fixture f = h4_graded();
    MoritaContext c = hom_context(f.a, f.pi.source, f.pi.target, f.pi.matrix);
    CHECK(verify_bimodules(c).ok());
    CHECK(verify_compatibility(c).ok());
    CHECK(c.P.dim == 8);
    // Context with a nontrivial action: surjectivity measured directly
    CHECK(verify_surjectivity(c).both());

    // corrupt Λ on one basis output
    MoritaContext bad = c;
    Vector l = bad.lambda.slice(0, 0);
    REQUIRE_FALSE(is_zero(l));
    bad.lambda.set_slice(0, 0, Rational(2) * l);
    CheckList checks = verify_compatibility(bad);
    CHECK_FALSE(checks.passed("eq-3.2-left"));
    CHECK_FALSE(checks.find("eq-3.2-left")->witness.empty());

    // base-field A, H = U = C(Z/2), π = id
    HopfAlgebra cz2 = function_algebra(FiniteGroup::cyclic(2));
    MoritaContext id = hom_context(trivial_action(base_field(), dual(cz2)), cz2, cz2, Matrix::identity(2));
    CHECK(verify_compatibility(id).ok());
    CHECK(id.S.dim() == 2);
    CHECK(id.R.dim() == 2);  // End of the free rank-one module over Û ≅ k² is k²
    CHECK(verify_surjectivity(id).both());

    // trivial subgroup: End_A(A⊗H) is a dimH x dimH matrix algebra over A
    HopfAlgebra k = base_field_hopf();
    for (const HopfAlgebra& h : {cz2, sweedler4()}) {
        ModuleAlgebra dn = trivial_action(algebra_by_name("dual-numbers"), dual(k));
        MoritaContext m = hom_context(dn, h, k, counit_row(h));
        CHECK(m.R.dim() == 2 * h.dim() * h.dim());
        CHECK(verify_compatibility(m).ok());
    }
}

TEST_CASE("smash to End identification") {
    for (const Fixture& f : {s3_trivial(), s3_translation(), h4_graded()}) {
        ImprimitivityData d = build(f);
        CheckList c = verify_smash_to_end(d);
        INFO((c.first_failure() ? c.first_failure()->id : std::string()));
        CHECK(c.ok());
        CHECK(d.smash_inv.dim() == d.end.algebra.dim());
        CHECK(d.smash_to_end(d.unit_of_smash_inv()) == Matrix::identity(d.module.dim));
    }
    ImprimitivityData d1 = build(s3_trivial());
    CHECK(d1.inv.sub.space.dim() == 3);
    CHECK(d1.smash_inv.dim() == 18);
    ImprimitivityData d3 = build(h4_graded());
    CHECK(d3.smash_inv.dim() == 16);
}

TEST_CASE("decomposition") {
    for (const Fixture& f : {s3_trivial(), s3_translation(), h4_graded()}) {
        ImprimitivityData d = build(f);
        const std::size_t n = d.module.dim, nh = d.h.dim();
        Decomposition id = decompose_endomorphism(d, Matrix::identity(n));
        CHECK(id.element == d.unit_of_smash_inv());
        CHECK(id.checks.ok());
        for (std::size_t i = 0; i < d.smash_inv.dim(); ++i) {
            Vector e = d.smash_inv.basis(i);
            CHECK(decompose_endomorphism(d, d.smash_to_end(e)).element == e);
        }
        Matrix change = Matrix::identity(nh);
        for (std::size_t i = 0; i + 1 < nh; ++i) change.set(i, i + 1, Rational(-1, 2));
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            Matrix t = random_equivariant(d, seed);
            Decomposition dec = decompose_endomorphism(d, t);
            CHECK(dec.checks.passed("component invariant"));
            CHECK(dec.checks.passed("decompose round trip"));
            CHECK(dec.components.size() == nh);
            Decomposition alt = decompose_endomorphism(d, t, change);
            CHECK(alt.element == dec.element);
            CHECK(alt.checks.ok());
        }
        CHECK(random_equivariant(d, 7) == random_equivariant(d, 7));
    }
    ImprimitivityData d = build(h4_graded());
    Matrix not_equivariant(d.module.dim, d.module.dim);
    not_equivariant.set(0, 1, 1);
    CHECK_THROWS_AS(decompose_endomorphism(d, not_equivariant), VerificationError);
}

TEST_CASE("trivial-action generator and projectivity") {
    ImprimitivityData d = build(s3_trivial());
    GeneratorCertificate g = trivial_action_generator(d);
    CHECK(g.checks.ok());
    CHECK(g.rank == 2);
    CHECK(projectivity(d).checks.ok());

    HopfMorphism p = sweedler_projection();
    ImprimitivityData d4 = ImprimitivityData::build(trivial_action(base_field(), dual(p.target)), p.source, p.target, p.matrix);
    GeneratorCertificate g4 = trivial_action_generator(d4);
    CHECK(g4.checks.ok());
    CHECK(g4.rank == 2);
    CHECK(projectivity(d4).checks.ok());

    HopfAlgebra k = base_field_hopf();
    HopfAlgebra s3 = function_algebra(FiniteGroup::symmetric(3));
    ImprimitivityData dk = ImprimitivityData::build(trivial_action(base_field(), dual(k)), s3, k, counit_row(s3));
    GeneratorCertificate gk = trivial_action_generator(dk);
    CHECK(gk.checks.ok());
    CHECK(gk.rank == 1);

    CHECK_THROWS_AS(trivial_action_generator(build(h4_graded())), VerificationError);
}

TEST_CASE("surjectivity strategies agree") {
    for (const Fixture& f : {s3_trivial(), s3_translation(), h4_graded()}) {
        ImprimitivityData d = build(f);
        MoritaContext c = theorem_context(d);
        SurjectivityResult direct = verify_surjectivity(c);
        SurjectivityResult reduced = reduce_to_invariants(d, c);
        CHECK(direct.both());
        CHECK(reduced.both());
        CHECK(direct.gamma.hits.size() == c.R.dim());
        CHECK(reduced.gamma.hits.size() == c.R.dim());
        CHECK(reduced.lambda.hits.size() == c.S.dim());
    }
}

TEST_CASE("Theorem pipeline end to end") {
    for (const Fixture& f : {s3_trivial(), s3_translation(), h4_graded()}) {
        auto start = std::chrono::steady_clock::now();
        Report r = verify_theorem_morita(f.a, f.pi.source, f.pi.target, f.pi.matrix);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        INFO(r.to_text());
        CHECK(r.pass());
        CHECK(secs < 60);
        Json j = r.to_json();
        CHECK(Report::from_json(j).to_json() == j);
    }
    Fixture f = s3_trivial();
    Report r = verify_theorem_morita(f.a, f.pi.source, f.pi.target, f.pi.matrix,
                                     {SurjectivityStrategy::reduce_to_invariants, 9, 2, false});
    CHECK(r.pass());
    CHECK(r.to_json()["stages"][2]["details"]["dim_invariants"] == 3);

    // a mismatched π fails in the input stage
    Report bad = verify_theorem_morita(f.a, f.pi.source, f.pi.target, f.pi.matrix.scaled(2));
    CHECK_FALSE(bad.pass());
    CHECK_FALSE(bad.stages.front().pass());
    CHECK(bad.stages.front().name == "inputs");
}
