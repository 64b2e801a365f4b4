#include "hopfkit/localunits.hpp"

#include "hopfkit/sampling.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

namespace {

std::string describe_vec(const std::vector<std::string>& labels, const Vector& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!v[i].is_one()) os << v[i].str() << "*";
        os << (i < labels.size() ? labels[i] : "e" + std::to_string(i));
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

// ---- FinSuppFunc ----

FinSuppFunc FinSuppFunc::delta(std::size_t dim, const Elem& g, const Vector& a) {
    FinSuppFunc f(dim);
    f.add(g, a);
    return f;
}

Vector FinSuppFunc::at(const Elem& g) const {
    auto it = values_.find(g);
    return it == values_.end() ? zeros(dim_) : it->second;
}

void FinSuppFunc::add(const Elem& g, const Vector& a) {
    if (a.size() != dim_) throw DimensionError("function value has dimension " + std::to_string(a.size()));
    auto it = values_.find(g);
    if (it == values_.end()) {
        if (!hopfkit::is_zero(a)) values_.emplace(g, a);
        return;
    }
    it->second = it->second + a;
    if (hopfkit::is_zero(it->second)) values_.erase(it);
}

std::vector<Elem> FinSuppFunc::support() const {
    std::vector<Elem> out;
    for (const auto& [g, v] : values_) out.push_back(g);
    return out;
}

FinSuppFunc FinSuppFunc::operator+(const FinSuppFunc& o) const {
    FinSuppFunc r = *this;
    if (r.dim_ == 0) r.dim_ = o.dim_;
    for (const auto& [g, v] : o.values_) r.add(g, v);
    return r;
}

FinSuppFunc FinSuppFunc::scaled(const Rational& c) const {
    FinSuppFunc r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [g, v] : values_) r.values_.emplace(g, c * v);
    return r;
}

FinSuppFunc FinSuppFunc::restricted(const Elem& s) const {
    FinSuppFunc r(dim_);
    auto it = values_.find(s);
    if (it != values_.end()) r.values_.emplace(s, it->second);
    return r;
}

std::string FinSuppFunc::describe(const std::vector<std::string>& labels) const {
    if (values_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, v] : values_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << describe_vec(labels, v) << ")@" << g;
    }
    return os.str();
}

// ---- SmashElem ----

SmashElem SmashElem::single(const FinSuppFunc& f, const Elem& t) {
    SmashElem r(f.dim());
    r.add(t, f);
    return r;
}

void SmashElem::add(const Elem& t, const FinSuppFunc& f) {
    if (dim_ == 0) dim_ = f.dim();
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        if (!f.is_zero()) terms_.emplace(t, f);
        return;
    }
    it->second = it->second + f;
    if (it->second.is_zero()) terms_.erase(it);
}

SmashElem SmashElem::operator+(const SmashElem& o) const {
    SmashElem r = *this;
    for (const auto& [t, f] : o.terms_) r.add(t, f);
    return r;
}

SmashElem SmashElem::scaled(const Rational& c) const {
    SmashElem r(dim_);
    for (const auto& [t, f] : terms_) r.add(t, f.scaled(c));
    return r;
}

std::string SmashElem::describe(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << f.describe(labels) << "]#" << t;
    }
    return os.str();
}

// ---- group-algebra recognition ----

std::optional<FiniteGroup> grouplike_group(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec d = to_sparse(h.bialgebra().comultiply_basis(i));
        if (d.size() != 1 || d[0].first != i * n + i || !d[0].second.is_one()) return std::nullopt;
    }
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec& p = h.algebra().basis_product(i, j);
            if (p.size() != 1 || !p[0].second.is_one()) return std::nullopt;
            table[i][j] = p[0].first;
        }
    try {
        return FiniteGroup(h.labels(), std::move(table), h.name());
    } catch (const VerificationError&) {
        return std::nullopt;
    }
}

// ---- Prop32Context ----

Prop32Context::Prop32Context(GroupPtr g, const std::vector<Elem>& subgroup, const ModuleAlgebra& a) : g_(std::move(g)) {
    if (!g_) throw std::invalid_argument("no group");
    if (a.side != Side::left) throw std::invalid_argument("the coefficient action must be a left action");
    std::vector<Elem> tokens;
    for (const Elem& t : subgroup) tokens.push_back(g_->canon(t));
    h_ = finite_subgroup(*g_, tokens);
    std::optional<FiniteGroup> ag = grouplike_group(a.hopf);
    if (!ag)
        throw VerificationError("inputs", "the coefficient action is not over a group algebra in its group-like basis");
    if (ag->order() != h_.order())
        throw VerificationError("inputs", "the coefficient group has order " + std::to_string(ag->order()) +
                                              " but the subgroup has order " + std::to_string(h_.order()));
    std::optional<SubgroupEmbedding> iso = find_embedding(h_, *ag);
    if (!iso) throw VerificationError("inputs", "the coefficient group is not isomorphic to the subgroup");

    const std::size_t nh = h_.order(), na = a.algebra.dim();
    Tensor3 t(nh, na, na);
    for (std::size_t i = 0; i < nh; ++i) {
        ops_.push_back(a.operator_of(iso->element_map[i]));
        for (std::size_t x = 0; x < na; ++x)
            for (const auto& [y, v] : a.action.at(iso->element_map[i], x)) t.set(i, x, y, v);
    }
    a_ = make_module_algebra(a.algebra, group_algebra(h_), Side::left, std::move(t));
    s_ = smash_product(a_);
}

std::size_t Prop32Context::h_index(const Elem& h) const {
    auto i = h_.index_of(h);
    if (!i) throw std::invalid_argument("'" + h + "' is not in the subgroup");
    return *i;
}

Vector Prop32Context::act(const Elem& h, const Vector& a) const { return ops_[h_index(h)].apply(a); }

FinSuppFunc Prop32Context::pointwise(const FinSuppFunc& f, const FinSuppFunc& g) const {
    FinSuppFunc r(dim_a());
    for (const auto& [x, v] : f.values()) {
        auto it = g.values().find(x);
        if (it != g.values().end()) r.add(x, a_.algebra.multiply(v, it->second));
    }
    return r;
}

FinSuppFunc Prop32Context::cc_right_action(const FinSuppFunc& f, const Elem& h) const {
    const Elem hinv = g_->inverse(h);
    const Matrix& op = ops_[h_index(hinv)];
    FinSuppFunc r(dim_a());
    // (f↼h)(g) = h⁻¹⇀f(hg): the value at x = hg lands on h⁻¹x
    for (const auto& [x, v] : f.values()) r.add(g_->multiply(hinv, x), op.apply(v));
    return r;
}

FinSuppFunc Prop32Context::cc_left_action(const FinSuppFunc& f, const Elem& t) const {
    const Elem tinv = g_->inverse(t);
    FinSuppFunc r(dim_a());
    for (const auto& [x, v] : f.values()) r.add(g_->multiply(x, tinv), v);
    return r;
}

FinSuppFunc Prop32Context::symmetrize(const FinSuppFunc& f) const {
    FinSuppFunc r(dim_a());
    for (const std::string& h : h_.labels()) r = r + cc_right_action(f, h);
    return r.scaled(Rational(1, static_cast<long>(h_.order())));
}

bool Prop32Context::is_invariant(const FinSuppFunc& f) const {
    for (const std::string& h : h_.labels())
        if (!(cc_right_action(f, h) == f)) return false;
    return true;
}

bool Prop32Context::bigind_condition(const BigIndOracle& f, const std::vector<Elem>& points) const {
    for (const Elem& g : points)
        for (const std::string& h : h_.labels())
            if (f(g_->multiply(h, g)) != act(h, f(g))) return false;
    return true;
}

SmashElem Prop32Context::smash_ccg_product(const SmashElem& x, const SmashElem& y) const {
    SmashElem r(dim_a());
    for (const auto& [t, f] : x.terms())
        for (const auto& [t2, f2] : y.terms()) r.add(g_->multiply(t, t2), pointwise(f, cc_left_action(f2, t)));
    return r;
}

namespace {

void saturate(const Prop32Context& c, const Elem& g, std::set<Elem>& out) {
    for (const std::string& h : c.subgroup().labels()) out.insert(c.group().multiply(h, g));
}

}  // namespace

FinSuppFunc Prop32Context::local_unit_for(const std::vector<FinSuppFunc>& elements) const {
    std::set<Elem> pts;
    for (const FinSuppFunc& f : elements)
        for (const auto& [g, v] : f.values()) saturate(*this, g, pts);
    if (pts.empty()) return FinSuppFunc::delta(dim_a(), g_->identity(), a_.algebra.unit());
    FinSuppFunc u(dim_a());
    for (const Elem& g : pts) u.add(g, a_.algebra.unit());
    return symmetrize(u);
}

SmashElem Prop32Context::local_unit_for(const std::vector<SmashElem>& elements) const {
    std::set<Elem> pts;
    for (const SmashElem& x : elements)
        for (const auto& [t, f] : x.terms())
            for (const auto& [g, v] : f.values()) {
                saturate(*this, g, pts);
                saturate(*this, g_->multiply(g, t), pts);
            }
    if (pts.empty()) saturate(*this, g_->identity(), pts);
    FinSuppFunc u(dim_a());
    for (const Elem& g : pts) u.add(g, a_.algebra.unit());
    return SmashElem::single(symmetrize(u), g_->identity());
}

FinSuppFunc Prop32Context::p_left(const SmashElem& r, const FinSuppFunc& f) const {
    FinSuppFunc out(dim_a());
    for (const auto& [t, F] : r.terms())
        for (const auto& [g, v] : F.values()) {
            Vector fv = f.at(g_->multiply(g, t));
            if (!hopfkit::is_zero(fv)) out.add(g, a_.algebra.multiply(v, fv));
        }
    return out;
}

FinSuppFunc Prop32Context::p_right(const FinSuppFunc& f, const Vector& s) const {
    const std::size_t nh = h_.order();
    if (s.size() != s_.dim()) throw DimensionError("S element has dimension " + std::to_string(s.size()));
    FinSuppFunc out(dim_a());
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
        if (s[idx].is_zero()) continue;
        const std::size_t a = idx / nh, i = idx % nh;
        const Elem hinv = g_->inverse(h_.label(i));
        const Matrix& op = ops_[h_.inverse(i)];
        const Vector ea = a_.algebra.basis(a);
        for (const auto& [x, v] : f.values()) out.add(g_->multiply(hinv, x), s[idx] * op.apply(a_.algebra.multiply(v, ea)));
    }
    return out;
}

FinSuppFunc Prop32Context::q_left(const Vector& s, const FinSuppFunc& q) const {
    const std::size_t nh = h_.order();
    if (s.size() != s_.dim()) throw DimensionError("S element has dimension " + std::to_string(s.size()));
    FinSuppFunc out(dim_a());
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
        if (s[idx].is_zero()) continue;
        const std::size_t b = idx / nh, i = idx % nh;
        const Elem& h = h_.label(i);
        const Vector eb = a_.algebra.basis(b);
        for (const auto& [g, v] : q.values())
            out.add(g_->multiply(h, g), s[idx] * a_.algebra.multiply(eb, ops_[i].apply(v)));
    }
    return out;
}

FinSuppFunc Prop32Context::q_right(const FinSuppFunc& q, const SmashElem& r) const {
    FinSuppFunc out(dim_a());
    for (const auto& [g, v] : q.values())
        for (const auto& [t, F] : r.terms()) {
            Vector fg = F.at(g);
            if (!hopfkit::is_zero(fg)) out.add(g_->multiply(g, t), a_.algebra.multiply(v, fg));
        }
    return out;
}

Vector Prop32Context::Lambda(const FinSuppFunc& q, const FinSuppFunc& p) const {
    const std::size_t nh = h_.order(), na = dim_a();
    Vector out = zeros(s_.dim());
    for (const auto& [t, a] : q.values())
        for (std::size_t i = 0; i < nh; ++i) {
            const Elem& h = h_.label(i);
            Vector fv = p.at(g_->multiply(g_->inverse(h), t));
            if (hopfkit::is_zero(fv)) continue;
            Vector c = a_.algebra.multiply(a, ops_[i].apply(fv));
            for (std::size_t x = 0; x < na; ++x)
                if (!c[x].is_zero()) out[x * nh + i] += c[x];
        }
    return out;
}

SmashElem Prop32Context::Gamma(const FinSuppFunc& p, const FinSuppFunc& q) const {
    SmashElem out(dim_a());
    const std::size_t nh = h_.order();
    for (const auto& [t, a] : q.values())
        for (const auto& [s, fs] : p.values()) {
            const Vector base = a_.algebra.multiply(fs, a);
            FinSuppFunc F(dim_a());
            for (std::size_t i = 0; i < nh; ++i) F.add(g_->multiply(h_.label(i), s), ops_[i].apply(base));
            out.add(g_->multiply(g_->inverse(s), t), F);
        }
    return out;
}

LambdaWitness Prop32Context::lambda_witness(const Vector& a, const Elem& h) const {
    LambdaWitness w;
    w.target = zeros(s_.dim());
    const std::size_t i = h_index(h);
    for (std::size_t x = 0; x < dim_a(); ++x) w.target[x * h_.order() + i] = a[x];
    w.q = FinSuppFunc::delta(dim_a(), h, a);
    w.p = FinSuppFunc::delta(dim_a(), g_->identity(), a_.algebra.unit());
    w.verified = Lambda(w.q, w.p) == w.target;
    return w;
}

GammaWitness Prop32Context::gamma_witness(const FinSuppFunc& f, const Elem& k) const {
    GammaWitness w;
    w.target = SmashElem::single(f, k);
    const Rational c(1, static_cast<long>(h_.order()));
    SmashElem sum(dim_a());
    for (const auto& [s, v] : f.values()) {
        GammaTerm term{c, f.restricted(s), FinSuppFunc::delta(dim_a(), g_->multiply(s, k), a_.algebra.unit())};
        sum = sum + Gamma(term.p, term.q).scaled(c);
        w.terms.push_back(std::move(term));
    }
    w.verified = is_invariant(f) && sum == w.target;
    return w;
}

// ---- sampling ----

Elem Prop32Sampler::element(std::mt19937_64& rng) const { return random_element(ctx.group(), rng, word_bound); }

Elem Prop32Sampler::subgroup_element(std::mt19937_64& rng) const {
    const auto& l = ctx.subgroup().labels();
    return l[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(l.size()) - 1))];
}

Vector Prop32Sampler::coefficient(std::mt19937_64& rng) const {
    Vector v(ctx.dim_a());
    for (auto& x : v) x = small_rational(rng, 2);
    if (hopfkit::is_zero(v)) v[0] = Rational(1);
    return v;
}

FinSuppFunc Prop32Sampler::function(std::mt19937_64& rng) const {
    FinSuppFunc f(ctx.dim_a());
    const long n = uniform_int(rng, 1, 3);
    for (long i = 0; i < n; ++i) f.add(element(rng), coefficient(rng));
    return f;
}

FinSuppFunc Prop32Sampler::invariant(std::mt19937_64& rng) const { return ctx.symmetrize(function(rng)); }

SmashElem Prop32Sampler::ring_element(std::mt19937_64& rng) const {
    SmashElem r(ctx.dim_a());
    const long n = uniform_int(rng, 1, 2);
    for (long i = 0; i < n; ++i) r.add(element(rng), invariant(rng));
    return r;
}

Vector Prop32Sampler::coeff_smash_element(std::mt19937_64& rng) const {
    Vector v(ctx.coeff_smash().dim());
    for (auto& x : v) x = small_rational(rng, 2);
    return v;
}

// ---- sampled verification ----

namespace {

struct Run {
    const Prop32Context& ctx;
    const Prop32Options& opt;
    Prop32Sampler smp;
    std::vector<std::string> la;

    std::string P(const FinSuppFunc& f) const { return f.describe(la); }
    std::string R(const SmashElem& r) const { return r.describe(la); }
    std::string S(const Vector& s) const { return describe_vec(ctx.s_labels(), s); }

    template <class F>
    void sampled(std::uint64_t salt, F&& body) const {
        for (std::size_t i = 0; i < opt.samples; ++i) {
            std::mt19937_64 rng(sample_seed(opt.seed ^ salt, i));
            body(rng);
        }
    }
};

template <class F>
Stage run_stage(Report& rep, const std::string& name, F&& body) {
    Stage st;
    st.name = name;
    try {
        body(st);
    } catch (const std::exception& e) {
        st.error = e.what();
    }
    rep.stages.push_back(st);
    return st;
}

void stage_actions(const Run& run, Stage& st) {
    const Prop32Context& c = run.ctx;
    const GroupOracle& g = c.group();
    IdentityTally comp("right action composition"), unit("right action unit"), lcomp("left action composition"),
        commute("actions commute"), sym("symmetrize invariant"), idem("symmetrize idempotent"),
        pres("induced invariants preserved");
    run.sampled(1, [&](std::mt19937_64& rng) {
        FinSuppFunc f = run.smp.function(rng);
        Elem h = run.smp.subgroup_element(rng), h2 = run.smp.subgroup_element(rng);
        Elem t = run.smp.element(rng), t2 = run.smp.element(rng);
        auto w = [&] { return "f = " + run.P(f) + ", h = " + h + ", h' = " + h2 + ", t = " + t + ", t' = " + t2; };
        comp.record_lazy(c.cc_right_action(c.cc_right_action(f, h), h2) == c.cc_right_action(f, g.multiply(h, h2)), w);
        unit.record_lazy(c.cc_right_action(f, g.identity()) == f, w);
        lcomp.record_lazy(c.cc_left_action(c.cc_left_action(f, t2), t) == c.cc_left_action(f, g.multiply(t, t2)), w);
        commute.record_lazy(c.cc_left_action(c.cc_right_action(f, h), t) == c.cc_right_action(c.cc_left_action(f, t), h), w);
        FinSuppFunc sf = c.symmetrize(f);
        sym.record_lazy(c.is_invariant(sf), w);
        idem.record_lazy(c.symmetrize(sf) == sf, w);
        pres.record_lazy(c.is_invariant(c.cc_left_action(sf, t)), w);
    });
    for (const IdentityTally* t : {&comp, &unit, &lcomp, &commute, &sym, &idem, &pres}) t->into(st.checks);
}

void stage_local_units(const Run& run, Stage& st) {
    const Prop32Context& c = run.ctx;
    IdentityTally fidem("local unit idempotent"), ftwo("local unit two-sided"), finv("local unit invariant"),
        ridem("smash local unit idempotent"), rtwo("smash local unit two-sided"), assoc("smash associativity"),
        closed("smash product invariant coefficients");
    run.sampled(2, [&](std::mt19937_64& rng) {
        FinSuppFunc f1 = run.smp.function(rng), f2 = run.smp.function(rng);
        FinSuppFunc u = c.local_unit_for(std::vector<FinSuppFunc>{f1, f2});
        auto wf = [&] { return "f1 = " + run.P(f1) + ", f2 = " + run.P(f2); };
        fidem.record_lazy(c.pointwise(u, u) == u, wf);
        ftwo.record_lazy(c.pointwise(u, f1) == f1 && c.pointwise(f1, u) == f1 && c.pointwise(u, f2) == f2 &&
                             c.pointwise(f2, u) == f2,
                         wf);
        finv.record_lazy(c.is_invariant(u), wf);

        SmashElem x = run.smp.ring_element(rng), y = run.smp.ring_element(rng), z = run.smp.ring_element(rng);
        SmashElem e = c.local_unit_for(std::vector<SmashElem>{x, y});
        auto wr = [&] { return "x = " + run.R(x) + ", y = " + run.R(y) + ", z = " + run.R(z); };
        ridem.record_lazy(c.smash_ccg_product(e, e) == e, wr);
        rtwo.record_lazy(c.smash_ccg_product(e, x) == x && c.smash_ccg_product(x, e) == x &&
                             c.smash_ccg_product(e, y) == y && c.smash_ccg_product(y, e) == y,
                         wr);
        SmashElem xy = c.smash_ccg_product(x, y);
        assoc.record_lazy(c.smash_ccg_product(xy, z) == c.smash_ccg_product(x, c.smash_ccg_product(y, z)), wr);
        bool inv = true;
        for (const auto& [t, F] : xy.terms()) inv = inv && c.is_invariant(F);
        closed.record_lazy(inv, wr);
    });
    for (const IdentityTally* t : {&fidem, &ftwo, &finv, &ridem, &rtwo, &assoc, &closed}) t->into(st.checks);
}

void stage_bimodules(const Run& run, Stage& st) {
    const Prop32Context& c = run.ctx;
    const Vector one = c.coeff_smash().unit();
    IdentityTally pla("P left associativity"), plu("P left unital"), pra("P right associativity"),
        pru("P right unital"), pbi("P bimodule"), qla("Q left associativity"), qlu("Q left unital"),
        qra("Q right associativity"), qru("Q right unital"), qbi("Q bimodule");
    run.sampled(3, [&](std::mt19937_64& rng) {
        FinSuppFunc p = run.smp.function(rng), q = run.smp.function(rng);
        SmashElem r = run.smp.ring_element(rng), r2 = run.smp.ring_element(rng);
        Vector s = run.smp.coeff_smash_element(rng), s2 = run.smp.coeff_smash_element(rng);
        auto w = [&] {
            return "p = " + run.P(p) + ", q = " + run.P(q) + ", r = " + run.R(r) + ", r' = " + run.R(r2) +
                   ", s = " + run.S(s) + ", s' = " + run.S(s2);
        };
        const SmashElem rr2 = c.smash_ccg_product(r, r2);
        const Vector ss2 = c.coeff_smash().multiply(s, s2);
        pla.record_lazy(c.p_left(rr2, p) == c.p_left(r, c.p_left(r2, p)), w);
        const SmashElem e = SmashElem::single(c.local_unit_for(std::vector<FinSuppFunc>{p}), c.group().identity());
        plu.record_lazy(c.p_left(e, p) == p, w);
        pra.record_lazy(c.p_right(p, ss2) == c.p_right(c.p_right(p, s), s2), w);
        pru.record_lazy(c.p_right(p, one) == p, w);
        pbi.record_lazy(c.p_right(c.p_left(r, p), s) == c.p_left(r, c.p_right(p, s)), w);
        qla.record_lazy(c.q_left(ss2, q) == c.q_left(s, c.q_left(s2, q)), w);
        qlu.record_lazy(c.q_left(one, q) == q, w);
        qra.record_lazy(c.q_right(q, rr2) == c.q_right(c.q_right(q, r), r2), w);
        qru.record_lazy(
            c.q_right(q, SmashElem::single(c.local_unit_for(std::vector<FinSuppFunc>{q}), c.group().identity())) == q, w);
        qbi.record_lazy(c.q_right(c.q_left(s, q), r) == c.q_left(s, c.q_right(q, r)), w);
    });
    for (const IdentityTally* t : {&pla, &plu, &pra, &pru, &pbi, &qla, &qlu, &qra, &qru, &qbi}) t->into(st.checks);
}

void stage_pairings(const Run& run, Stage& st) {
    const Prop32Context& c = run.ctx;
    IdentityTally gb("gamma-balanced"), gl("gamma-left-linear"), gr("gamma-right-linear"),
        gi("gamma-invariant-coefficients"), lb("lambda-balanced"), ll("lambda-left-linear"),
        lr("lambda-right-linear");
    run.sampled(4, [&](std::mt19937_64& rng) {
        FinSuppFunc p = run.smp.function(rng), q = run.smp.function(rng);
        SmashElem r = run.smp.ring_element(rng);
        Vector s = run.smp.coeff_smash_element(rng);
        auto w = [&] { return "p = " + run.P(p) + ", q = " + run.P(q) + ", r = " + run.R(r) + ", s = " + run.S(s); };
        const SmashElem g = c.Gamma(p, q);
        gb.record_lazy(c.Gamma(c.p_right(p, s), q) == c.Gamma(p, c.q_left(s, q)), w);
        gl.record_lazy(c.Gamma(c.p_left(r, p), q) == c.smash_ccg_product(r, g), w);
        gr.record_lazy(c.Gamma(p, c.q_right(q, r)) == c.smash_ccg_product(g, r), w);
        bool inv = true;
        for (const auto& [t, F] : g.terms()) inv = inv && c.is_invariant(F);
        gi.record_lazy(inv, w);
        const Vector l = c.Lambda(q, p);
        lb.record_lazy(c.Lambda(c.q_right(q, r), p) == c.Lambda(q, c.p_left(r, p)), w);
        ll.record_lazy(c.Lambda(c.q_left(s, q), p) == c.coeff_smash().multiply(s, l), w);
        lr.record_lazy(c.Lambda(q, c.p_right(p, s)) == c.coeff_smash().multiply(l, s), w);
    });
    for (const IdentityTally* t : {&gb, &gl, &gr, &gi, &lb, &ll, &lr}) t->into(st.checks);
}

void stage_compatibility(const Run& run, Stage& st) {
    const Prop32Context& c = run.ctx;
    IdentityTally left("eq-3.2-left"), right("eq-3.2-right");
    run.sampled(5, [&](std::mt19937_64& rng) {
        FinSuppFunc p = run.smp.function(rng), q = run.smp.function(rng), p2 = run.smp.function(rng),
                    q2 = run.smp.function(rng);
        left.record_lazy(c.p_left(c.Gamma(p, q), p2) == c.p_right(p, c.Lambda(q, p2)),
                         [&] { return "(" + run.P(p) + ", " + run.P(q) + ", " + run.P(p2) + ")"; });
        right.record_lazy(c.q_left(c.Lambda(q, p), q2) == c.q_right(q, c.Gamma(p, q2)),
                          [&] { return "(" + run.P(q) + ", " + run.P(p) + ", " + run.P(q2) + ")"; });
    });
    left.into(st.checks);
    right.into(st.checks);
}

void stage_witnesses(const Run& run, Stage& st) {
    const Prop32Context& c = run.ctx;
    IdentityTally lw("lambda witness"), gw("gamma witness");
    Json examples = Json::array();
    for (std::size_t i = 0; i < run.opt.witness_targets; ++i) {
        std::mt19937_64 rng(sample_seed(run.opt.seed ^ 6, i));
        Vector a = run.smp.coefficient(rng);
        Elem h = run.smp.subgroup_element(rng);
        LambdaWitness l = c.lambda_witness(a, h);
        lw.record_lazy(l.verified, [&] { return "target " + run.S(l.target); });
        FinSuppFunc f = run.smp.invariant(rng);
        Elem k = run.smp.element(rng);
        GammaWitness g = c.gamma_witness(f, k);
        gw.record_lazy(g.verified, [&] { return "target " + run.R(g.target); });
        if (i == 0) {
            examples.push_back({{"pairing", "lambda"},
                                {"target", run.S(l.target)},
                                {"q", run.P(l.q)},
                                {"p", run.P(l.p)},
                                {"verified", l.verified}});
            Json terms = Json::array();
            for (const GammaTerm& t : g.terms)
                terms.push_back({{"coefficient", t.coefficient.str()}, {"p", run.P(t.p)}, {"q", run.P(t.q)}});
            examples.push_back(
                {{"pairing", "gamma"}, {"target", run.R(g.target)}, {"terms", terms}, {"verified", g.verified}});
        }
    }
    lw.into(st.checks);
    gw.into(st.checks);
    st.details["lambda_targets"] = run.opt.witness_targets;
    st.details["gamma_targets"] = run.opt.witness_targets;
    st.details["examples"] = examples;
}

}  // namespace

Report verify_prop32(const Prop32Context& ctx, const Prop32Options& opt) {
    Report rep;
    rep.command = "prop32";
    rep.parameters = {{"group", ctx.group().name()},
                      {"subgroup", ctx.subgroup().labels()},
                      {"coefficients", ctx.coefficients().algebra.labels()},
                      {"seed", opt.seed},
                      {"samples", opt.samples},
                      {"word_bound", opt.word_bound},
                      {"witness_targets", opt.witness_targets}};
    Run run{ctx, opt, Prop32Sampler{ctx, opt.word_bound}, ctx.coefficients().algebra.labels()};

    Stage in = run_stage(rep, "inputs", [&](Stage& st) {
        st.checks.merge(spot_check_group(ctx.group(), opt.seed, opt.samples, opt.word_bound));
        st.checks.merge(verify_module_algebra(ctx.coefficients()), "A: ");
        st.details["group_order"] = ctx.group().order() ? Json(*ctx.group().order()) : Json("infinite");
        st.details["subgroup_order"] = ctx.subgroup().order();
        st.details["dim_A"] = ctx.dim_a();
        st.details["dim_S"] = ctx.coeff_smash().dim();
    });
    if (!in.pass()) return rep;
    auto stage = [&](const std::string& name, void (*fn)(const Run&, Stage&)) {
        return run_stage(rep, name, [&](Stage& st) { fn(run, st); });
    };
    stage("actions", stage_actions);
    stage("local-units", stage_local_units);
    stage("bimodules", stage_bimodules);
    stage("pairings", stage_pairings);
    stage("compatibility", stage_compatibility);
    stage("witnesses", stage_witnesses);
    return rep;
}

// ---- finite cross-check ----

CheckList cross_check_finite(const Prop32Context& ctx, std::uint64_t seed, std::size_t samples) {
    const GroupOracle& go = ctx.group();
    if (!go.order()) throw std::invalid_argument("the cross-check needs a finite group");
    const FiniteGroup G = finite_subgroup(go, go.elements());
    const FiniteGroup& Hg = ctx.subgroup();
    std::vector<std::size_t> emb;
    for (const std::string& h : Hg.labels()) emb.push_back(*G.index_of(h));
    HopfMorphism pi = restriction_morphism(make_embedding(Hg, G, emb));
    const ModuleAlgebra& a0 = ctx.coefficients();
    ModuleAlgebra a = make_module_algebra(a0.algebra, dual(pi.target), Side::left, a0.action);
    ImprimitivityData d = ImprimitivityData::build(a, pi.source, pi.target, pi.matrix);
    MoritaContext m = theorem_context(d);

    const std::size_t na = ctx.dim_a(), ng = G.order();
    auto fin_p = [&](const FinSuppFunc& f) {
        Vector v = zeros(na * ng);
        for (const auto& [g, x] : f.values()) {
            const std::size_t gi = *G.index_of(g);
            for (std::size_t i = 0; i < na; ++i) v[i * ng + gi] = x[i];
        }
        return v;
    };
    auto fin_r = [&](const SmashElem& r) {
        Vector v = zeros(m.R.dim());
        for (const auto& [t, F] : r.terms()) {
            auto coords = d.inv.sub.space.coords(fin_p(F));
            if (!coords) throw VerificationError("cross-check", "coefficient is not invariant");
            axpy(v, Rational(1), kron(*coords, unit_vector(ng, *G.index_of(t))));
        }
        return v;
    };
    // ψ(q) = Λ(q⊗·) as an element of Hom
    auto fin_q = [&](const FinSuppFunc& q) {
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t g = 0; g < ng; ++g)
                cols.push_back(ctx.Lambda(q, FinSuppFunc::delta(na, G.label(g), a0.algebra.basis(i))));
        auto coords = d.hom.coords_of(Matrix::from_columns(cols, m.S.dim()));
        if (!coords) throw VerificationError("cross-check", "Λ(q⊗·) is not a module map");
        return *coords;
    };

    CheckList out;
    std::vector<Vector> images;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t g = 0; g < ng; ++g) images.push_back(fin_q(FinSuppFunc::delta(na, G.label(g), a0.algebra.basis(i))));
    const std::size_t rk = rank(images, m.Q.dim);
    out.add("Q identification bijective", images.size() == m.Q.dim && rk == m.Q.dim,
            "rank " + std::to_string(rk) + " of " + std::to_string(m.Q.dim));

    Prop32Sampler smp{ctx, 3};
    IdentityTally pr("P right action agrees"), pl("P left action agrees"), ql("Q left action agrees"),
        qr("Q right action agrees"), ga("Gamma agrees"), la("Lambda agrees"), ra("R product agrees");
    for (std::size_t i = 0; i < samples; ++i) {
        std::mt19937_64 rng(sample_seed(seed, i));
        FinSuppFunc p = smp.function(rng), q = smp.function(rng);
        SmashElem r = smp.ring_element(rng), r2 = smp.ring_element(rng);
        Vector s = smp.coeff_smash_element(rng);
        const std::string w = "sample " + std::to_string(i);
        const Vector P = fin_p(p), Q = fin_q(q), Rr = fin_r(r);
        pr.record(fin_p(ctx.p_right(p, s)) == m.P.act_right(P, s), w);
        pl.record(fin_p(ctx.p_left(r, p)) == m.P.act_left(Rr, P), w);
        ql.record(fin_q(ctx.q_left(s, q)) == m.Q.act_left(s, Q), w);
        qr.record(fin_q(ctx.q_right(q, r)) == m.Q.act_right(Q, Rr), w);
        ga.record(fin_r(ctx.Gamma(p, q)) == m.Gamma(P, Q), w);
        la.record(ctx.Lambda(q, p) == m.Lambda(Q, P), w);
        ra.record(fin_r(ctx.smash_ccg_product(r, r2)) == m.R.multiply(Rr, fin_r(r2)), w);
    }
    for (const IdentityTally* t : {&pr, &pl, &ql, &qr, &ga, &la, &ra}) t->into(out);
    return out;
}

}  // namespace hopfkit
