#include "hopfkit/cli.hpp"
#include "hopfkit/localunits.hpp"
#include "hopfkit/morita.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace hopfkit;

namespace {

const std::vector<std::string> kGroups{"cyclic:2", "cyclic:3", "cyclic:4", "klein", "symmetric:3"};

std::vector<HopfAlgebra> catalog_algebras() {
    std::vector<HopfAlgebra> out;
    for (const auto& n : kGroups) {
        out.push_back(group_algebra(group_by_name(n)));
        out.push_back(function_algebra(group_by_name(n)));
    }
    out.push_back(sweedler4());
    return out;
}

struct Outcome {
    bool pass = true;
    std::string note;
    void fail(const std::string& why) {
        if (pass) note = why;
        pass = false;
    }
};

bool c1_axioms(Outcome& o) {
    for (const HopfAlgebra& h : catalog_algebras()) {
        if (!verify_bialgebra(h.bialgebra()).ok()) o.fail(h.name() + ": bialgebra");
        CheckList c = verify_hopf(h);
        if (!c.ok()) o.fail(h.name() + ": " + c.first_failure()->id);
        GaloisMaps g = galois_maps(h.bialgebra());
        if (!g.t1_bijective || !g.t2_bijective) o.fail(h.name() + ": Galois maps");
    }
    return o.pass;
}

bool c2_duality(Outcome& o) {
    for (const auto& n : kGroups) {
        FiniteGroup g = group_by_name(n);
        if (!same_structure(dual(function_algebra(g)), group_algebra(g))) o.fail("dual(C(" + n + "))");
    }
    for (const HopfAlgebra& h : catalog_algebras()) {
        HopfMorphism iso = double_dual_iso(h);
        if (!verify_morphism(iso).ok() || rank(iso.matrix) != h.dim()) o.fail(h.name() + ": double dual");
    }
    return o.pass;
}

bool c3_integrals(Outcome& o) {
    for (const auto& n : kGroups) {
        FiniteGroup g = group_by_name(n);
        const Vector chi_e = unit_vector(g.order(), g.identity());
        if (left_integrals(function_algebra(g)) != std::vector<Vector>{chi_e}) o.fail("left integrals of C(" + n + ")");
        InvariantFunctionals f = invariant_functionals(group_algebra(g));
        if (f.left != std::vector<Vector>{chi_e} || f.right != std::vector<Vector>{chi_e})
            o.fail("invariant functional of C" + n);
    }
    HopfAlgebra h4 = sweedler4();
    auto l = left_integrals(h4), r = right_integrals(h4);
    if (unimodularity(h4).unimodular) o.fail("H4 reported unimodular");
    if (l.size() != 1 || r.size() != 1 || rank({l[0], r[0]}, 4) != 2) o.fail("H4 integral spaces");
    return o.pass;
}

bool c4_dictionary(Outcome& o) {
    std::size_t n = 0;
    for (const auto& name : catalog_action_names()) {
        ModuleAlgebra m = action_by_name(name);
        Coaction c = action_to_coaction(m);
        ModuleAlgebra back = coaction_to_action(c);
        Coaction again = action_to_coaction(back);
        if (back.action != m.action || back.side != m.side || again.delta != c.delta) o.fail(name);
        ++n;
    }
    for (const auto& hn : {"sweedler4", "function-algebra:symmetric:3"}) {
        auto [left, right] = regular_actions(hopf_by_name(hn));
        for (const ModuleAlgebra& m : {left, right}) {
            if (coaction_to_action(action_to_coaction(m)).action != m.action) o.fail(std::string("regular ") + hn);
            ++n;
        }
    }
    if (n < 5) o.fail("fewer than 5 fixtures");
    o.note = o.pass ? std::to_string(n) + " fixtures" : o.note;
    return o.pass;
}

struct Fixture {
    ModuleAlgebra a;
    HopfMorphism pi;
};

std::vector<Fixture> theorem_fixtures() {
    HopfMorphism r = morphism_by_name("restriction:symmetric:3/cyclic:2");
    return {{trivial_action(base_field(), dual(r.target)), r},
            {action_by_name("translation:cyclic:2"), r},
            {action_by_name("graded"), sweedler_projection()}};
}

bool c5_invariants(Outcome& o) {
    std::vector<Fixture> fx = theorem_fixtures();
    Invariants base = invariants(tensor_action(fx[0].a, fx[0].pi.source, fx[0].pi.target, fx[0].pi.matrix));
    if (base.sub.space.dim() != 3) o.fail("dim C(S3)^U = " + std::to_string(base.sub.space.dim()));
    for (const Fixture& f : fx) {
        Invariants inv = invariants(tensor_action(f.a, f.pi.source, f.pi.target, f.pi.matrix));
        if (!inv.agree) o.fail("invariant spaces differ for " + f.pi.source.name());
    }
    return o.pass;
}

bool c6_theorem(Outcome& o) {
    for (const Fixture& f : theorem_fixtures()) {
        auto start = std::chrono::steady_clock::now();
        Report r = verify_theorem_morita(f.a, f.pi.source, f.pi.target, f.pi.matrix);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!r.pass()) o.fail(f.pi.source.name() + " fails");
        if (secs >= 60) o.fail(f.pi.source.name() + " took " + std::to_string(secs) + " s");
    }
    return o.pass;
}

bool c7_prop32(Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    Prop32Context c(infinite_dihedral(), {"e", "s"}, action_by_name("graded-involution"));
    Report r = verify_prop32(c, {42, 200, 6, 50});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.pass()) o.fail("report fails");
    for (const Stage& st : r.stages) {
        for (const Check& ch : st.checks.items()) {
            if (st.name == "compatibility" && ch.evaluated != 200) o.fail(ch.id + " evaluated " + std::to_string(ch.evaluated));
            if (st.name == "witnesses" && ch.evaluated != 50) o.fail(ch.id + " evaluated " + std::to_string(ch.evaluated));
        }
    }
    if (secs >= 30) o.fail("took " + std::to_string(secs) + " s");
    return o.pass;
}

bool c8_cross(Outcome& o) {
    Prop32Context c(group_oracle("symmetric:3"), {"123", "213"}, action_by_name("translation-group:cyclic:2"));
    CheckList checks = cross_check_finite(c, 42, 100);
    if (!checks.ok()) o.fail(checks.first_failure()->id + " " + checks.first_failure()->witness);
    return o.pass;
}

bool c9_determinism(Outcome& o) {
    const std::vector<std::vector<std::string>> cmds{
        {"verify-hopf", "sweedler4", "--format", "json"},
        {"integrals", "function-algebra:symmetric:3"},
        {"dual", "function-algebra:symmetric:3"},
        {"invariants", "translation:cyclic:2", "--pi", "restriction:symmetric:3/cyclic:2"},
        {"smash", "graded-involution", "--format", "json"},
        {"subgroup-check", "sweedler-projection"},
        {"morita", "--algebra", "graded", "--pi", "sweedler-projection", "--format", "json"},
        {"prop32", "--group", "infinite-dihedral", "--subgroup", "e,s", "--coeff", "graded-involution", "--seed", "42",
         "--samples", "200", "--format", "json"}};
    for (const auto& c : cmds) {
        std::ostringstream o1, o2, e1, e2;
        int r1 = run_cli(c, o1, e1), r2 = run_cli(c, o2, e2);
        if (r1 != r2 || o1.str() != o2.str() || e1.str() != e2.str() || o1.str().empty()) o.fail(c.front());
    }
    return o.pass;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool(Outcome&)>>> criteria{
        {"axiom suite on every catalog algebra", c1_axioms},
        {"dual(C(G)) = CG and double-dual isomorphisms", c2_duality},
        {"integrals, invariant functionals, H4 non-unimodular", c3_integrals},
        {"action/coaction round trips", c4_dictionary},
        {"invariant subalgebra dimension and bimodule-condition agreement", c5_invariants},
        {"imprimitivity Morita pipeline on three fixtures", c6_theorem},
        {"discrete-group context on the infinite dihedral group", c7_prop32},
        {"finite cross-check against the Morita module (S3)", c8_cross},
        {"byte-identical CLI reports", c9_determinism}};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
        if (!o.note.empty()) std::cout << " [" << o.note << "]";
        std::cout << std::fixed << std::setprecision(2) << " (" << secs << " s)\n";
    }
    return all ? 0 : 1;
}
