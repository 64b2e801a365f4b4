#include "hopfkit/cli.hpp"

#include "hopfkit/io.hpp"
#include "hopfkit/localunits.hpp"
#include "hopfkit/morita.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace hopfkit {

namespace {

struct Global {
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
};

/// Usage-level problems detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class F>
bool stage(Report& rep, const std::string& name, F&& body) {
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
    return st.pass();
}

int emit(const Report& rep, const Global& g, std::ostream& out) {
    if (g.format == "json")
        out << pretty_json(rep.to_json());
    else
        out << rep.to_text();
    return rep.pass() ? 0 : 1;
}

std::vector<std::string> describe_all(const std::vector<Vector>& vs, const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    Algebra names(labels, Tensor3(labels.size(), labels.size(), labels.size()), zeros(labels.size()));
    for (const Vector& v : vs) out.push_back(names.describe(v));
    return out;
}

std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (const auto& l : labels) out.push_back("δ:" + l);
    return out;
}

// ---- commands ----

int cmd_verify_hopf(const std::string& input, const Global& g, std::ostream& out) {
    Loaded<HopfData> d = load_hopf_data(input);
    Report rep;
    rep.command = "verify-hopf";
    rep.inputs.emplace_back(d.source, d.digest);
    stage(rep, "bialgebra", [&](Stage& st) {
        st.checks = verify_bialgebra(d.value.bialgebra);
        GaloisMaps gm = galois_maps(d.value.bialgebra);
        st.checks.add("T1 bijective", gm.t1_bijective);
        st.checks.add("T2 bijective", gm.t2_bijective);
        st.details["dim"] = d.value.bialgebra.dim();
        st.details["basis"] = d.value.bialgebra.labels();
    });
    std::optional<HopfAlgebra> h;
    if (!stage(rep, "hopf", [&](Stage& st) {
            h = d.value.make();
            st.checks = verify_hopf(*h);
        }))
        return emit(rep, g, out);
    stage(rep, "integrals", [&](Stage& st) {
        auto left = left_integrals(*h), right = right_integrals(*h);
        Unimodularity u = unimodularity(*h);
        st.checks.add("left integral space one-dimensional", left.size() == 1,
                      left.size() == 1 ? "" : "dimension " + std::to_string(left.size()));
        st.checks.add("right integral space one-dimensional", right.size() == 1,
                      right.size() == 1 ? "" : "dimension " + std::to_string(right.size()));
        st.checks.add("unimodularity consistent", u.consistent());
        st.details["left_integrals"] = describe_all(left, h->labels());
        st.details["right_integrals"] = describe_all(right, h->labels());
        st.details["unimodular"] = u.unimodular;
    });
    return emit(rep, g, out);
}

int cmd_verify_action(const std::string& input, const Global& g, std::ostream& out) {
    Loaded<ModuleAlgebra> m = load_action(input);
    Report rep;
    rep.command = "verify-action";
    rep.inputs.emplace_back(m.source, m.digest);
    stage(rep, "hopf", [&](Stage& st) { st.checks = verify_hopf(m.value.hopf); });
    stage(rep, "module-algebra", [&](Stage& st) {
        st.checks = verify_module_algebra(m.value);
        st.details["side"] = to_string(m.value.side);
        st.details["dim_A"] = m.value.algebra.dim();
        st.details["dim_H"] = m.value.hopf.dim();
    });
    stage(rep, "coaction", [&](Stage& st) {
        Coaction c = action_to_coaction(m.value);
        st.checks.merge(verify_coaction(c), "coaction: ");
        ModuleAlgebra back = coaction_to_action(c);
        st.checks.add("action round trip", back.action == m.value.action && back.side == m.value.side);
    });
    return emit(rep, g, out);
}

int cmd_dual(const std::string& input, const std::string& out_path, const std::string& iso_path, const Global& g,
             std::ostream& out) {
    Loaded<HopfAlgebra> h = load_hopf(input);
    HopfAlgebra d = dual(h.value);
    if (!iso_path.empty()) write_file(iso_path, pretty_json(morphism_to_json(double_dual_iso(h.value))));
    if (out_path.empty()) {
        out << pretty_json(hopf_to_json(d));
        return 0;
    }
    write_file(out_path, pretty_json(hopf_to_json(d)));
    Report rep;
    rep.command = "dual";
    rep.inputs.emplace_back(h.source, h.digest);
    stage(rep, "dual", [&](Stage& st) {
        st.checks = verify_hopf(d);
        st.details["dim"] = d.dim();
        st.details["output"] = out_path;
    });
    stage(rep, "double-dual", [&](Stage& st) {
        HopfMorphism iso = double_dual_iso(h.value);
        st.checks = verify_morphism(iso);
        st.checks.add("bijective", rank(iso.matrix) == h.value.dim());
    });
    return emit(rep, g, out);
}

int cmd_integrals(const std::string& input, const Global& g, std::ostream& out) {
    Loaded<HopfAlgebra> h = load_hopf(input);
    const auto& labels = h.value.labels();
    Report rep;
    rep.command = "integrals";
    rep.inputs.emplace_back(h.source, h.digest);
    stage(rep, "integrals", [&](Stage& st) {
        auto left = left_integrals(h.value), right = right_integrals(h.value);
        InvariantFunctionals f = invariant_functionals(h.value);
        Unimodularity u = unimodularity(h.value);
        st.checks.add("left integral space one-dimensional", left.size() == 1,
                      left.size() == 1 ? "" : "dimension " + std::to_string(left.size()));
        st.checks.add("right integral space one-dimensional", right.size() == 1,
                      right.size() == 1 ? "" : "dimension " + std::to_string(right.size()));
        st.checks.add("left invariant functionals one-dimensional", f.left.size() == 1);
        st.checks.add("right invariant functionals one-dimensional", f.right.size() == 1);
        st.checks.add("unimodularity consistent", u.consistent());
        st.details["left_integrals"] = describe_all(left, labels);
        st.details["right_integrals"] = describe_all(right, labels);
        st.details["left_invariant_functionals"] = describe_all(f.left, dual_labels(labels));
        st.details["right_invariant_functionals"] = describe_all(f.right, dual_labels(labels));
        st.details["unimodular"] = u.unimodular;
        st.details["integrals_coincide"] = u.integrals_coincide;
    });
    return emit(rep, g, out);
}

struct Triple {
    HopfAlgebra h, u;
    Matrix pi;
};

/// π from a morphism input; --hopf and --subgroup override its source and target.
Triple triple(Report& rep, const std::string& pi_spec, const std::string& h_spec, const std::string& u_spec) {
    if (pi_spec.empty()) throw UsageError("--pi is required");
    Loaded<HopfMorphism> pi = load_morphism(pi_spec);
    rep.inputs.emplace_back(pi.source, pi.digest);
    Triple t{pi.value.source, pi.value.target, pi.value.matrix};
    if (!h_spec.empty()) {
        Loaded<HopfAlgebra> h = load_hopf(h_spec);
        rep.inputs.emplace_back(h.source, h.digest);
        t.h = h.value;
    }
    if (!u_spec.empty()) {
        Loaded<HopfAlgebra> u = load_hopf(u_spec);
        rep.inputs.emplace_back(u.source, u.digest);
        t.u = u.value;
    }
    if (t.pi.rows() != t.u.dim() || t.pi.cols() != t.h.dim())
        throw UsageError("π is " + std::to_string(t.pi.rows()) + "x" + std::to_string(t.pi.cols()) + " but dim U = " +
                         std::to_string(t.u.dim()) + ", dim H = " + std::to_string(t.h.dim()));
    return t;
}

int cmd_subgroup_check(const std::string& pi_spec, const std::string& h_spec, const std::string& u_spec,
                       const Global& g, std::ostream& out) {
    Report rep;
    rep.command = "subgroup-check";
    Triple t = triple(rep, pi_spec, h_spec, u_spec);
    stage(rep, "subgroup", [&](Stage& st) {
        SubgroupVerdict v = is_compact_quantum_subgroup(t.h, t.u, t.pi);
        st.checks.merge(v.morphism_checks, "π: ");
        st.checks.add("U unimodular", v.unimodular);
        st.checks.add("π surjective", v.surjective);
        st.details["dim_H"] = t.h.dim();
        st.details["dim_U"] = t.u.dim();
        st.details["compact_quantum_subgroup"] = v.holds();
    });
    return emit(rep, g, out);
}

int cmd_invariants(const std::string& input, const std::string& pi_spec, const std::string& h_spec,
                   const std::string& u_spec, const Global& g, std::ostream& out) {
    Loaded<ModuleAlgebra> a = load_action(input);
    Report rep;
    rep.command = "invariants";
    rep.inputs.emplace_back(a.source, a.digest);
    ModuleAlgebra m = a.value;
    std::optional<Triple> t;
    if (!pi_spec.empty()) {
        t = triple(rep, pi_spec, h_spec, u_spec);
        if (!stage(rep, "tensor-action", [&](Stage& st) {
                m = tensor_action(a.value, t->h, t->u, t->pi);
                st.checks = verify_module_algebra(m);
                st.details["dim"] = m.algebra.dim();
            }))
            return emit(rep, g, out);
    } else if (m.side != Side::right) {
        throw UsageError("invariants needs a right action, or --pi to build the action on A⊗H");
    }
    stage(rep, "invariants", [&](Stage& st) {
        Invariants inv = invariants(m);
        st.checks.add("invariants equal bimodule-condition invariants", inv.agree);
        st.details["dim_invariants"] = inv.sub.space.dim();
        st.details["basis"] = describe_all(inv.sub.space.basis(), m.algebra.labels());
        if (t) {
            InducedAction ind = induced_hat_action(inv, m, t->h);
            st.checks.merge(ind.checks, "induced action: ");
        }
    });
    return emit(rep, g, out);
}

int cmd_smash(const std::string& input, const std::string& out_path, const Global& g, std::ostream& out) {
    Loaded<ModuleAlgebra> a = load_action(input);
    if (a.value.side != Side::left) throw UsageError("smash needs a left action");
    Report rep;
    rep.command = "smash";
    rep.inputs.emplace_back(a.source, a.digest);
    stage(rep, "module-algebra", [&](Stage& st) { st.checks = verify_module_algebra(a.value); });
    stage(rep, "smash", [&](Stage& st) {
        Algebra s = smash_product(a.value);
        st.checks = verify_algebra(s);
        st.details["dim"] = s.dim();
        st.details["basis"] = s.labels();
        if (!out_path.empty()) {
            write_file(out_path, pretty_json(algebra_to_json(s)));
            st.details["output"] = out_path;
        }
    });
    return emit(rep, g, out);
}

int cmd_morita(const std::string& a_spec, const std::string& h_spec, const std::string& u_spec,
               const std::string& pi_spec, const std::string& strategy, const Global& g, std::ostream& out) {
    if (a_spec.empty()) throw UsageError("--algebra is required");
    TheoremOptions opt;
    try {
        opt.strategy = parse_strategy(strategy);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (g.seed) opt.seed = *g.seed;
    if (g.samples) opt.random_endomorphisms = *g.samples;
    Report head;
    Loaded<ModuleAlgebra> a = load_action(a_spec);
    head.inputs.emplace_back(a.source, a.digest);
    Triple t = triple(head, pi_spec, h_spec, u_spec);
    Report rep = verify_theorem_morita(a.value, t.h, t.u, t.pi, opt);
    rep.inputs = head.inputs;
    return emit(rep, g, out);
}

int cmd_prop32(const std::string& group, const std::string& subgroup, const std::string& coeff,
               std::size_t word_bound, std::size_t witnesses, bool cross_check, const Global& g, std::ostream& out) {
    if (coeff.empty()) throw UsageError("--coeff is required");
    Loaded<GroupPtr> grp = load_group(group);
    Loaded<ModuleAlgebra> a = load_action(coeff);
    std::vector<Elem> tokens;
    std::stringstream ss(subgroup);
    for (std::string tok; std::getline(ss, tok, ',');) {
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        if (!tok.empty()) tokens.push_back(tok);
    }
    if (tokens.empty()) throw UsageError("--subgroup needs at least one element");
    Prop32Options opt;
    if (g.seed) opt.seed = *g.seed;
    if (g.samples) opt.samples = *g.samples;
    opt.word_bound = word_bound;
    opt.witness_targets = witnesses;

    std::optional<Prop32Context> ctx;
    Report rep;
    try {
        ctx.emplace(grp.value, tokens, a.value);
        rep = verify_prop32(*ctx, opt);
    } catch (const VerificationError& e) {
        rep.command = "prop32";
        rep.add_stage("inputs").error = e.what();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    rep.inputs = {{grp.source, grp.digest}, {a.source, a.digest}};
    if (cross_check && ctx && rep.pass()) {
        if (!ctx->group().order()) throw UsageError("--cross-check needs a finite group");
        stage(rep, "cross-check", [&](Stage& st) {
            st.checks = cross_check_finite(*ctx, opt.seed, opt.samples);
            st.details["samples"] = opt.samples;
        });
    }
    return emit(rep, g, out);
}

int cmd_catalog(const std::string& name, const std::string& kind, const std::string& out_path, const Global& g,
                std::ostream& out) {
    if (name.empty()) {
        Json all = {{"hopf", catalog_hopf_names()},
                    {"morphism", catalog_morphism_names()},
                    {"action", catalog_action_names()},
                    {"group", group_oracle_names()}};
        if (g.format == "json") {
            out << pretty_json(all);
        } else {
            for (const auto& [k, names] : all.items()) {
                out << k << ":\n";
                for (const auto& n : names) out << "  " << n.get<std::string>() << "\n";
            }
        }
        return 0;
    }
    std::optional<Json> j;
    auto attempt = [&](const std::string& k, auto make) {
        if (j || (!kind.empty() && kind != k)) return;
        try {
            j = make();
        } catch (const std::invalid_argument&) {
        }
    };
    attempt("hopf", [&] { return hopf_to_json(hopf_by_name(name)); });
    attempt("morphism", [&] { return morphism_to_json(morphism_by_name(name)); });
    attempt("action", [&] { return action_to_json(action_by_name(name)); });
    attempt("algebra", [&] { return algebra_to_json(algebra_by_name(name)); });
    attempt("group", [&] { return group_to_json(group_by_name(name)); });
    if (!j) throw UsageError("no catalog entry '" + name + "'" + (kind.empty() ? "" : " of kind " + kind));
    if (out_path.empty())
        out << pretty_json(*j);
    else
        write_file(out_path, pretty_json(*j));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of finite-dimensional Hopf algebras and Morita contexts", "hopfkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Random seed for sampled checks");
    app.add_option("--samples", g.samples, "Number of samples for sampled checks");

    std::string input, out_path, iso_path, pi, hopf, subgroup, strategy = "direct", group, coeff, kind, algebra;
    std::size_t word_bound = 6, witnesses = 50;
    bool cross = false;

    auto* vh = app.add_subcommand("verify-hopf", "Verify every Hopf algebra axiom");
    vh->add_option("input", input, "Structure file or catalog name")->required();
    auto* va = app.add_subcommand("verify-action", "Verify a module algebra and its coaction dictionary");
    va->add_option("input", input, "Action file or catalog name")->required();
    auto* du = app.add_subcommand("dual", "Emit the dual Hopf algebra");
    du->add_option("input", input, "Structure file or catalog name")->required();
    du->add_option("--out", out_path, "Write the dual here and print a report");
    du->add_option("--iso", iso_path, "Write the double-dual isomorphism here");
    auto* in = app.add_subcommand("integrals", "Integrals, invariant functionals and unimodularity");
    in->add_option("input", input, "Structure file or catalog name")->required();
    auto* sc = app.add_subcommand("subgroup-check", "Check a compact quantum subgroup");
    sc->add_option("morphism", input, "Morphism file or catalog name");
    sc->add_option("--pi", pi, "Morphism file or catalog name");
    sc->add_option("--hopf", hopf, "Ambient Hopf algebra (defaults to the morphism source)");
    sc->add_option("--subgroup", subgroup, "Subgroup Hopf algebra (defaults to the morphism target)");
    auto* iv = app.add_subcommand("invariants", "Invariant subalgebra of a right action");
    iv->add_option("input", input, "Action file or catalog name")->required();
    iv->add_option("--pi", pi, "Use the action on A⊗H built from this morphism");
    iv->add_option("--hopf", hopf, "Ambient Hopf algebra");
    iv->add_option("--subgroup", subgroup, "Subgroup Hopf algebra");
    auto* sm = app.add_subcommand("smash", "Smash product of a left module algebra");
    sm->add_option("input", input, "Action file or catalog name")->required();
    sm->add_option("--out", out_path, "Write the smash product algebra here");
    auto* mo = app.add_subcommand("morita", "Certify the imprimitivity Morita equivalence");
    mo->add_option("--algebra", algebra, "Left Û-module algebra A (action file or name)")->required();
    mo->add_option("--hopf", hopf, "Ambient Hopf algebra H");
    mo->add_option("--subgroup", subgroup, "Subgroup Hopf algebra U");
    mo->add_option("--pi", pi, "Morphism π: H → U")->required();
    mo->add_option("--strategy", strategy, "direct or reduce-to-invariants");
    auto* pr = app.add_subcommand("prop32", "Sampled certification of the discrete-group Morita context");
    pr->add_option("--group", group, "Group oracle name or finite group file")->required();
    std::string sub_tokens;
    pr->add_option("--subgroup", sub_tokens, "Comma-separated subgroup elements")->required();
    pr->add_option("--coeff", coeff, "Left ℂH-module algebra (action file or name)")->required();
    pr->add_option("--word-bound", word_bound, "Maximum random word length");
    pr->add_option("--witnesses", witnesses, "Witness targets per family");
    pr->add_flag("--cross-check", cross, "Compare with the finite-dimensional construction (finite groups)");
    auto* ca = app.add_subcommand("catalog", "List catalog entries or emit one as a structure file");
    ca->add_option("name", input, "Entry name");
    ca->add_option("--kind", kind, "hopf, morphism, action, algebra or group");
    ca->add_option("--out", out_path, "Write the entry here");

    std::vector<std::string> argv_store{"hopfkit"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*vh) return cmd_verify_hopf(input, g, out);
        if (*va) return cmd_verify_action(input, g, out);
        if (*du) return cmd_dual(input, out_path, iso_path, g, out);
        if (*in) return cmd_integrals(input, g, out);
        if (*sc) return cmd_subgroup_check(pi.empty() ? input : pi, hopf, subgroup, g, out);
        if (*iv) return cmd_invariants(input, pi, hopf, subgroup, g, out);
        if (*sm) return cmd_smash(input, out_path, g, out);
        if (*mo) return cmd_morita(algebra, hopf, subgroup, pi, strategy, g, out);
        if (*pr) return cmd_prop32(group, sub_tokens, coeff, word_bound, witnesses, cross, g, out);
        if (*ca) return cmd_catalog(input, kind, out_path, g, out);
    } catch (const IoError& e) {
        err << "hopfkit: I/O error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "hopfkit: parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "hopfkit: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        err << "hopfkit: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        err << "hopfkit: verification failed: " << e.what() << "\n";
        return 1;
    } catch (const HopfError& e) {
        err << "hopfkit: verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "hopfkit: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hopfkit
