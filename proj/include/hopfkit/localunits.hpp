#pragma once

#include "hopfkit/groups.hpp"
#include "hopfkit/morita.hpp"

#include <functional>
#include <map>

namespace hopfkit {

/// Finitely supported A-valued function on a group; also used for finite
/// sums Σ a_g⊗g in A⊗ℂG. Stored values are nonzero.
class FinSuppFunc {
public:
    FinSuppFunc() = default;
    explicit FinSuppFunc(std::size_t dim) : dim_(dim) {}
    /// χ_g·a
    static FinSuppFunc delta(std::size_t dim, const Elem& g, const Vector& a);

    std::size_t dim() const { return dim_; }
    Vector at(const Elem& g) const;
    void add(const Elem& g, const Vector& a);
    const std::map<Elem, Vector>& values() const { return values_; }
    std::vector<Elem> support() const;
    bool is_zero() const { return values_.empty(); }

    FinSuppFunc operator+(const FinSuppFunc& o) const;
    FinSuppFunc scaled(const Rational& c) const;
    /// f·χ_s
    FinSuppFunc restricted(const Elem& s) const;
    std::string describe(const std::vector<std::string>& labels) const;

    friend bool operator==(const FinSuppFunc& a, const FinSuppFunc& b) { return a.values_ == b.values_; }

private:
    std::size_t dim_ = 0;
    std::map<Elem, Vector> values_;
};

/// Σ F_t#t in C_c(G,A)^{ℂH}#ℂG.
class SmashElem {
public:
    SmashElem() = default;
    explicit SmashElem(std::size_t dim) : dim_(dim) {}
    static SmashElem single(const FinSuppFunc& f, const Elem& t);

    std::size_t dim() const { return dim_; }
    void add(const Elem& t, const FinSuppFunc& f);
    const std::map<Elem, FinSuppFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    SmashElem operator+(const SmashElem& o) const;
    SmashElem scaled(const Rational& c) const;
    std::string describe(const std::vector<std::string>& labels) const;

    friend bool operator==(const SmashElem& a, const SmashElem& b) { return a.terms_ == b.terms_; }

private:
    std::size_t dim_ = 0;
    std::map<Elem, FinSuppFunc> terms_;
};

/// Lazy element of C(G,A): an evaluation oracle with arbitrary support.
using BigIndOracle = std::function<Vector(const Elem&)>;

struct GammaTerm {
    Rational coefficient;
    FinSuppFunc p;  // in C_c(G,A)
    FinSuppFunc q;  // in A⊗ℂG
};

struct LambdaWitness {
    Vector target;  // in A#ℂH
    FinSuppFunc q, p;
    bool verified = false;
};

struct GammaWitness {
    SmashElem target;
    std::vector<GammaTerm> terms;
    bool verified = false;
};

/// The context between R = C_c(G,A)^{ℂH}#ℂG and S = A#ℂH with
/// P = C_c(G,A) and Q = A⊗ℂG, for a finite subgroup H of a possibly infinite G.
/// S has basis a#h at index a*|H| + (position of h in subgroup()).
class Prop32Context {
public:
    /// `a` must be a left module algebra over a group algebra isomorphic to
    /// the subgroup; the isomorphism is found by search.
    Prop32Context(GroupPtr g, const std::vector<Elem>& subgroup, const ModuleAlgebra& a);

    const GroupOracle& group() const { return *g_; }
    GroupPtr group_ptr() const { return g_; }
    const FiniteGroup& subgroup() const { return h_; }
    /// The coefficient algebra re-indexed over ℂH with H's tokens.
    const ModuleAlgebra& coefficients() const { return a_; }
    const Algebra& coeff_smash() const { return s_; }
    std::size_t dim_a() const { return a_.algebra.dim(); }
    bool in_subgroup(const Elem& x) const { return h_.index_of(x).has_value(); }

    Vector act(const Elem& h, const Vector& a) const;
    FinSuppFunc pointwise(const FinSuppFunc& f, const FinSuppFunc& g) const;

    /// (f↼h)(g) = h⁻¹⇀f(hg). Throws std::invalid_argument when h ∉ H.
    FinSuppFunc cc_right_action(const FinSuppFunc& f, const Elem& h) const;
    /// (t⇀f)(g) = f(gt)
    FinSuppFunc cc_left_action(const FinSuppFunc& f, const Elem& t) const;
    /// (1/|H|)Σ_h f↼h
    FinSuppFunc symmetrize(const FinSuppFunc& f) const;
    /// f(hg) = h⇀f(g) for all h and g.
    bool is_invariant(const FinSuppFunc& f) const;
    /// The same condition for a lazy function, at the given points.
    bool bigind_condition(const BigIndOracle& f, const std::vector<Elem>& points) const;

    /// (F#t)(F′#t′) = F·(t⇀F′)#tt′
    SmashElem smash_ccg_product(const SmashElem& x, const SmashElem& y) const;
    /// Symmetrized indicator of the H-saturated union of supports, times 1_A;
    /// χ_e·1_A for an empty request.
    FinSuppFunc local_unit_for(const std::vector<FinSuppFunc>& elements) const;
    /// u#e with u an invariant indicator covering supp F and supp(F)·t; the
    /// indicator of H for an empty request.
    SmashElem local_unit_for(const std::vector<SmashElem>& elements) const;

    // P = C_c(G,A): (F#t⇀f)(g) = F(g)f(gt), (f↼a#h)(g) = h⁻¹⇀(f(hg)a)
    FinSuppFunc p_left(const SmashElem& r, const FinSuppFunc& f) const;
    FinSuppFunc p_right(const FinSuppFunc& f, const Vector& s) const;
    // Q = A⊗ℂG: b#h⇀a⊗g = b(h⇀a)⊗hg, a⊗g↼F#t = aF(g)⊗gt
    FinSuppFunc q_left(const Vector& s, const FinSuppFunc& q) const;
    FinSuppFunc q_right(const FinSuppFunc& q, const SmashElem& r) const;

    /// Λ((a⊗t)⊗f) = Σ_h a(h⇀f(h⁻¹t))#h
    Vector Lambda(const FinSuppFunc& q, const FinSuppFunc& p) const;
    /// Γ(f⊗(a⊗t)) = Σ_{s∈supp f} F_{s,a}#s⁻¹t, F_{s,a}(x) = Σ_h h⇀(f(h⁻¹x)a)δ_{x,hs}
    SmashElem Gamma(const FinSuppFunc& p, const FinSuppFunc& q) const;

    /// a#h = Λ((a⊗h)⊗(1_A⊗χ_e))
    LambdaWitness lambda_witness(const Vector& a, const Elem& h) const;
    /// f#k = Γ((1/|H|)Σ_{s∈supp f} fχ_s ⊗ (1_A⊗sk)) for invariant f.
    GammaWitness gamma_witness(const FinSuppFunc& f, const Elem& k) const;

    std::vector<std::string> s_labels() const { return s_.labels(); }

private:
    std::size_t h_index(const Elem& h) const;

    GroupPtr g_;
    FiniteGroup h_;
    ModuleAlgebra a_;
    Algebra s_;
    std::vector<Matrix> ops_;  // h⇀ on A, by subgroup position
};

/// The group element of a group algebra basis, or nullopt when the Hopf
/// algebra is not a group algebra in its given basis.
std::optional<FiniteGroup> grouplike_group(const HopfAlgebra& h);

struct Prop32Options {
    std::uint64_t seed = 42;
    std::size_t samples = 200;
    std::size_t word_bound = 6;
    std::size_t witness_targets = 50;
};

/// Seeded random data used by the sampled checks.
struct Prop32Sampler {
    const Prop32Context& ctx;
    std::size_t word_bound;
    Elem element(std::mt19937_64& rng) const;
    Elem subgroup_element(std::mt19937_64& rng) const;
    Vector coefficient(std::mt19937_64& rng) const;
    FinSuppFunc function(std::mt19937_64& rng) const;  // support size 1..3
    FinSuppFunc invariant(std::mt19937_64& rng) const;
    SmashElem ring_element(std::mt19937_64& rng) const;  // 1..2 terms
    Vector coeff_smash_element(std::mt19937_64& rng) const;
};

/// Sampled verification of every displayed identity plus both witness
/// families.
Report verify_prop32(const Prop32Context& ctx, const Prop32Options& opt = {});

/// For finite G: compares every map of the context with the finite
/// imprimitivity context for H = C(G), U = C(H) on seeded elements.
CheckList cross_check_finite(const Prop32Context& ctx, std::uint64_t seed, std::size_t samples);

}  // namespace hopfkit
