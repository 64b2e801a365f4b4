#include <catch2/catch_amalgamated.hpp>

#include "hopfkit/localunits.hpp"

#include <chrono>

using namespace hopfkit;

namespace {

Prop32Context s3_context() {
    return Prop32Context(group_oracle("symmetric:3"), {"123", "213"}, action_by_name("translation-group:cyclic:2"));
}

Prop32Context dihedral_context() {
    return Prop32Context(infinite_dihedral(), {"e", "s"}, action_by_name("graded-involution"));
}

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("group-algebra recognition") {
    auto g = grouplike_group(group_algebra(FiniteGroup::cyclic(3)));
    REQUIRE(g);
    CHECK(g->order() == 3);
    CHECK(grouplike_group(dual(function_algebra(FiniteGroup::cyclic(2)))));
    CHECK_FALSE(grouplike_group(function_algebra(FiniteGroup::cyclic(2))));
    CHECK_FALSE(grouplike_group(sweedler4()));
}

TEST_CASE("context construction errors") {
    CHECK_THROWS_AS(Prop32Context(infinite_dihedral(), {"e", "s"}, action_by_name("graded")), VerificationError);
    CHECK_THROWS_AS(Prop32Context(infinite_dihedral(), {"e"}, action_by_name("graded-involution")), VerificationError);
    CHECK_THROWS_AS(Prop32Context(infinite_dihedral(), {"e", "r"}, action_by_name("graded-involution")),
                    VerificationError);
}

TEST_CASE("actions on finitely supported functions") {
    Prop32Context c = dihedral_context();
    const Vector one = c.coefficients().algebra.unit();
    const Vector y = vec({0, 1});

    FinSuppFunc f = FinSuppFunc::delta(2, "e", one);
    for (const char* h : {"e", "s"}) CHECK(c.cc_right_action(f, h) == FinSuppFunc::delta(2, c.group().inverse(h), one));
    FinSuppFunc g = FinSuppFunc::delta(2, "r^2", y) + FinSuppFunc::delta(2, "rs", one);
    CHECK(c.cc_right_action(g, "e") == g);
    CHECK_THROWS_AS(c.cc_right_action(g, "r"), std::invalid_argument);

    // χ_s·a shifted by t lands on st⁻¹
    for (const char* t : {"e", "r", "s", "r^-3s"}) {
        FinSuppFunc d = FinSuppFunc::delta(2, "s", y);
        CHECK(c.cc_left_action(d, t) == FinSuppFunc::delta(2, c.group().multiply("s", c.group().inverse(t)), y));
    }
    CHECK(c.cc_left_action(g, "e") == g);

    // the action value at s is s⇀y = -y
    FinSuppFunc h = c.symmetrize(FinSuppFunc::delta(2, "e", y));
    CHECK(h == FinSuppFunc::delta(2, "e", vec({0, 1})).scaled(Rational(1, 2)) +
                   FinSuppFunc::delta(2, "s", vec({0, -1})).scaled(Rational(1, 2)));
    CHECK(c.is_invariant(h));
    CHECK_FALSE(c.is_invariant(FinSuppFunc::delta(2, "e", y)));
    CHECK(c.symmetrize(h) == h);
    CHECK(c.symmetrize(FinSuppFunc(2)).is_zero());
}

TEST_CASE("local units") {
    Prop32Context c = dihedral_context();
    const Vector one = c.coefficients().algebra.unit();
    FinSuppFunc f = FinSuppFunc::delta(2, "r", vec({1, 2})) + FinSuppFunc::delta(2, "r^-2s", vec({0, 3}));
    FinSuppFunc u = c.local_unit_for(std::vector<FinSuppFunc>{f});
    CHECK(c.pointwise(u, f) == f);
    CHECK(c.pointwise(f, u) == f);
    CHECK(c.pointwise(u, u) == u);
    CHECK(c.is_invariant(u));
    CHECK(u.support().size() == 4);  // H-saturation of two points

    CHECK(c.local_unit_for(std::vector<FinSuppFunc>{}) == FinSuppFunc::delta(2, "e", one));

    FinSuppFunc F = c.symmetrize(f);
    SmashElem x = SmashElem::single(F, "r^3");
    SmashElem e = c.local_unit_for(std::vector<SmashElem>{x});
    CHECK(c.smash_ccg_product(e, x) == x);
    CHECK(c.smash_ccg_product(x, e) == x);
    CHECK(c.smash_ccg_product(e, e) == e);
    CHECK(e.terms().begin()->first == "e");

    // (F#e)(F′#e) = FF′#e
    FinSuppFunc F2 = c.symmetrize(FinSuppFunc::delta(2, "r", vec({2, -1})));
    CHECK(c.smash_ccg_product(SmashElem::single(F, "e"), SmashElem::single(F2, "e")) ==
          SmashElem::single(c.pointwise(F, F2), "e"));
}

TEST_CASE("pairings and witnesses") {
    Prop32Context c = dihedral_context();
    const Vector one = c.coefficients().algebra.unit();
    const Vector a = vec({2, -1});

    // Λ((a⊗e)⊗(χ_e·1)) = a#e
    Vector target = zeros(4);
    target[0 * 2 + *c.subgroup().index_of("e")] = 2;
    target[1 * 2 + *c.subgroup().index_of("e")] = -1;
    CHECK(c.Lambda(FinSuppFunc::delta(2, "e", a), FinSuppFunc::delta(2, "e", one)) == target);

    for (const char* h : {"e", "s"}) {
        LambdaWitness w = c.lambda_witness(a, h);
        CHECK(w.verified);
        CHECK(c.Lambda(w.q, w.p) == w.target);
    }

    FinSuppFunc f = c.symmetrize(FinSuppFunc::delta(2, "r", a));
    REQUIRE(f.support().size() == 2);
    GammaWitness g = c.gamma_witness(f, "r^-1s");
    CHECK(g.verified);
    CHECK(g.terms.size() == 2);
    // the literal sum without 1/|H| gives |H|·(f#k)
    SmashElem literal(2);
    for (const GammaTerm& t : g.terms) literal = literal + c.Gamma(t.p, t.q);
    CHECK(literal == SmashElem::single(f, "r^-1s").scaled(Rational(2)));

    GammaWitness zero = c.gamma_witness(FinSuppFunc(2), "r");
    CHECK(zero.terms.empty());
    CHECK(zero.verified);
    CHECK(zero.target.is_zero());
}

TEST_CASE("compatibility exhaustive on basis elements for S3") {
    Prop32Context c = s3_context();
    std::vector<FinSuppFunc> basis;
    for (const Elem& g : c.group().elements())
        for (std::size_t i = 0; i < c.dim_a(); ++i) basis.push_back(FinSuppFunc::delta(c.dim_a(), g, unit_vector(c.dim_a(), i)));
    std::size_t fails = 0;
    for (const auto& p : basis)
        for (const auto& q : basis) {
            const SmashElem g = c.Gamma(p, q);
            const Vector l = c.Lambda(q, p);
            for (const auto& x : basis) {
                fails += !(c.p_left(g, x) == c.p_right(p, c.Lambda(q, x)));
                fails += !(c.q_left(l, x) == c.q_right(q, c.Gamma(p, x)));
            }
        }
    CHECK(fails == 0);
}

TEST_CASE("sampled verification") {
    auto start = std::chrono::steady_clock::now();
    Report r = verify_prop32(dihedral_context());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    INFO(r.to_text());
    CHECK(r.pass());
    CHECK(secs < 30);
    CHECK(r.stages.size() == 7);
    CHECK(r.parameters["seed"] == 42);
    CHECK(r.parameters["word_bound"] == 6);
    Json j = r.to_json();
    CHECK(verify_prop32(dihedral_context()).to_json() == j);
    CHECK(Report::from_json(j).to_json() == j);

    Prop32Options small{7, 30, 4, 10};
    CHECK(verify_prop32(s3_context(), small).pass());
    CHECK(verify_prop32(Prop32Context(free_group(2), {"e"}, trivial_action(algebra_by_name("dual-numbers"),
                                                                          group_algebra(FiniteGroup::trivial()))),
                        small)
              .pass());

    // an action that is not by algebra maps fails at the input stage
    Report bad = verify_prop32(Prop32Context(group_oracle("cyclic:2"), {"e", "g"}, action_by_name("swap-broken")), small);
    CHECK_FALSE(bad.pass());
    CHECK(bad.stages.size() == 1);
    CHECK(bad.stages.front().name == "inputs");
}

TEST_CASE("finite cross-check against the imprimitivity context") {
    Prop32Context c = s3_context();
    CheckList checks = cross_check_finite(c, 42, 100);
    INFO((checks.first_failure() ? checks.first_failure()->id + " " + checks.first_failure()->witness : std::string()));
    CHECK(checks.ok());
    CHECK(checks.items().size() == 8);
    CHECK_THROWS(cross_check_finite(dihedral_context(), 42, 1));
}

TEST_CASE("BigInd condition on a finite group") {
    Prop32Context c = s3_context();
    const std::vector<Elem> all = c.group().elements();
    FinSuppFunc f = c.symmetrize(FinSuppFunc::delta(2, "132", vec({1, 3})) + FinSuppFunc::delta(2, "231", vec({2, 0})));
    CHECK(c.bigind_condition([&](const Elem& g) { return f.at(g); }, all));
    FinSuppFunc raw = FinSuppFunc::delta(2, "132", vec({1, 3}));
    CHECK_FALSE(c.bigind_condition([&](const Elem& g) { return raw.at(g); }, all));
    // the constant function 1_A is H-fixed, in BigInd with full support
    CHECK(c.bigind_condition([&](const Elem&) { return c.coefficients().algebra.unit(); }, all));
}
