#include "hopfkit/groups.hpp"

#include "hopfkit/sampling.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string_view>

namespace hopfkit {

std::vector<Elem> GroupOracle::elements() const {
    throw std::logic_error("group '" + name() + "' is not enumerable");
}

namespace {

class FiniteOracle final : public GroupOracle {
public:
    explicit FiniteOracle(FiniteGroup g) : g_(std::move(g)) {}
    std::string name() const override { return g_.name(); }
    Elem identity() const override { return g_.label(g_.identity()); }
    Elem multiply(const Elem& x, const Elem& y) const override { return g_.label(g_.mul(index(x), index(y))); }
    Elem inverse(const Elem& x) const override { return g_.label(g_.inverse(index(x))); }
    Elem canon(const Elem& x) const override { return g_.label(index(x)); }
    std::vector<Elem> generators() const override {
        std::vector<Elem> out;
        for (std::size_t i = 0; i < g_.order(); ++i)
            if (i != g_.identity()) out.push_back(g_.label(i));
        return out;
    }
    std::optional<std::size_t> order() const override { return g_.order(); }
    std::vector<Elem> elements() const override { return g_.labels(); }

private:
    std::size_t index(const Elem& x) const {
        auto i = g_.index_of(x);
        if (!i) throw std::invalid_argument("'" + x + "' is not an element of " + g_.name());
        return *i;
    }
    FiniteGroup g_;
};

// r^k s^x
struct Dihedral {
    long k = 0;
    int x = 0;
};

class InfiniteDihedral final : public GroupOracle {
public:
    std::string name() const override { return "infinite-dihedral"; }
    Elem identity() const override { return "e"; }
    Elem multiply(const Elem& a, const Elem& b) const override { return format(mul(parse(a), parse(b))); }
    Elem inverse(const Elem& a) const override {
        Dihedral d = parse(a);
        return format(d.x ? d : Dihedral{-d.k, 0});  // reflections are involutions
    }
    Elem canon(const Elem& a) const override { return format(parse(a)); }
    std::vector<Elem> generators() const override { return {"r", "s"}; }

private:
    static Dihedral mul(Dihedral a, Dihedral b) { return {a.k + (a.x ? -b.k : b.k), (a.x + b.x) % 2}; }

    static Elem format(Dihedral d) {
        std::string out;
        if (d.k == 1) out = "r";
        else if (d.k != 0) out = "r^" + std::to_string(d.k);
        if (d.x) out += "s";
        return out.empty() ? "e" : out;
    }

    // Any word in e, r, r^k, s.
    static Dihedral parse(const Elem& w) {
        if (w.empty()) throw std::invalid_argument("empty group element token");
        Dihedral acc;
        std::size_t i = 0;
        while (i < w.size()) {
            const char c = w[i++];
            if (c == 'e') continue;
            if (c == 's') {
                acc = mul(acc, {0, 1});
            } else if (c == 'r') {
                long k = 1;
                if (i < w.size() && w[i] == '^') {
                    std::size_t j = ++i;
                    if (j < w.size() && w[j] == '-') ++j;
                    std::size_t end = j;
                    while (end < w.size() && std::isdigit(static_cast<unsigned char>(w[end]))) ++end;
                    if (end == j) throw std::invalid_argument("bad exponent in '" + w + "'");
                    k = std::stol(w.substr(i, end - i));
                    i = end;
                }
                acc = mul(acc, {k, 0});
            } else {
                throw std::invalid_argument("'" + w + "' is not an infinite dihedral word");
            }
        }
        return acc;
    }
};

// 'e' is reserved for the identity token.
constexpr std::string_view kAlphabet = "abcdfghijklmnopqrstuvwxyz";

class FreeGroup final : public GroupOracle {
public:
    explicit FreeGroup(std::size_t k) : k_(k) {
        if (k == 0 || k > kAlphabet.size()) throw std::invalid_argument("free:k needs 1 <= k <= 25");
    }
    std::string name() const override { return "free:" + std::to_string(k_); }
    Elem identity() const override { return "e"; }
    Elem multiply(const Elem& a, const Elem& b) const override { return format(reduce(letters(a) + letters(b))); }
    Elem inverse(const Elem& a) const override {
        std::string w = letters(a);
        std::reverse(w.begin(), w.end());
        for (auto& c : w) c = flip(c);
        return format(w);
    }
    Elem canon(const Elem& a) const override { return format(reduce(letters(a))); }
    std::vector<Elem> generators() const override {
        std::vector<Elem> out;
        for (std::size_t i = 0; i < k_; ++i) out.emplace_back(1, kAlphabet[i]);
        return out;
    }

private:
    static char flip(char c) {
        return std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c))
                                                           : static_cast<char>(std::tolower(c));
    }
    std::string letters(const Elem& w) const {
        if (w.empty()) throw std::invalid_argument("empty group element token");
        if (w == "e") return {};
        for (char c : w) {
            const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            const auto pos = kAlphabet.find(lower);
            if (!std::isalpha(static_cast<unsigned char>(c)) || pos == std::string_view::npos || pos >= k_)
                throw std::invalid_argument("'" + w + "' is not a word in " + name());
        }
        return w;
    }
    static std::string reduce(const std::string& w) {
        std::string out;
        for (char c : w) {
            if (!out.empty() && out.back() == flip(c)) out.pop_back();
            else out.push_back(c);
        }
        return out;
    }
    static Elem format(const std::string& w) { return w.empty() ? "e" : w; }
    std::size_t k_;
};

}  // namespace

GroupPtr finite_oracle(FiniteGroup g) { return std::make_shared<FiniteOracle>(std::move(g)); }
GroupPtr infinite_dihedral() { return std::make_shared<InfiniteDihedral>(); }
GroupPtr free_group(std::size_t k) { return std::make_shared<FreeGroup>(k); }

GroupPtr group_oracle(const std::string& name) {
    if (name == "infinite-dihedral") return infinite_dihedral();
    if (name.rfind("free:", 0) == 0) return free_group(std::stoul(name.substr(5)));
    return finite_oracle(group_by_name(name));
}

std::vector<std::string> group_oracle_names() {
    return {"trivial", "cyclic:n", "symmetric:n", "dihedral:n", "klein", "infinite-dihedral", "free:k"};
}

Elem random_element(const GroupOracle& g, std::mt19937_64& rng, std::size_t word_bound) {
    const auto gens = g.generators();
    Elem acc = g.identity();
    if (gens.empty()) return acc;
    const long len = uniform_int(rng, 0, static_cast<long>(word_bound));
    for (long i = 0; i < len; ++i) {
        const Elem& letter = gens[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(gens.size()) - 1))];
        acc = g.multiply(acc, uniform_int(rng, 0, 1) ? letter : g.inverse(letter));
    }
    return acc;
}

CheckList spot_check_group(const GroupOracle& g, std::uint64_t seed, std::size_t samples, std::size_t word_bound) {
    IdentityTally assoc("group associativity"), ident("group identity"), inv("group inverse"), canon("canonical form");
    const Elem e = g.identity();
    canon.record(g.canon(e) == e, e);
    for (std::size_t i = 0; i < samples; ++i) {
        std::mt19937_64 rng(sample_seed(seed, i));
        Elem x = random_element(g, rng, word_bound), y = random_element(g, rng, word_bound),
             z = random_element(g, rng, word_bound);
        assoc.record_lazy(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)),
                          [&] { return "(" + x + ", " + y + ", " + z + ")"; });
        ident.record_lazy(g.multiply(e, x) == x && g.multiply(x, e) == x, [&] { return x; });
        Elem xi = g.inverse(x);
        inv.record_lazy(g.multiply(x, xi) == e && g.multiply(xi, x) == e, [&] { return x; });
        canon.record_lazy(g.canon(x) == x && g.canon(g.canon(x)) == g.canon(x), [&] { return x; });
    }
    CheckList out;
    assoc.into(out);
    ident.into(out);
    inv.into(out);
    canon.into(out);
    return out;
}

FiniteGroup finite_subgroup(const GroupOracle& g, const std::vector<Elem>& elements) {
    std::vector<Elem> labels;
    for (const auto& x : elements) {
        Elem c = g.canon(x);
        if (std::find(labels.begin(), labels.end(), c) == labels.end()) labels.push_back(c);
    }
    if (labels.empty()) throw VerificationError("subgroup", "empty subgroup");
    const std::size_t n = labels.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Elem p = g.multiply(labels[i], labels[j]);
            auto it = std::find(labels.begin(), labels.end(), p);
            if (it == labels.end())
                throw VerificationError("subgroup", labels[i] + "·" + labels[j] + " = " + p + " is not in the subgroup");
            table[i][j] = static_cast<std::size_t>(it - labels.begin());
        }
    return FiniteGroup(std::move(labels), std::move(table), "subgroup of " + g.name());
}

}  // namespace hopfkit
