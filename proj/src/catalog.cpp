#include "hopfkit/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hopfkit {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table, std::string name)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw VerificationError("group", "empty element list");
    if (table_.size() != n) throw VerificationError("group", "table has " + std::to_string(table_.size()) + " rows, expected " + std::to_string(n));
    for (const auto& row : table_) {
        if (row.size() != n) throw VerificationError("group", "table row length mismatch");
        for (std::size_t v : row)
            if (v >= n) throw VerificationError("group", "table entry out of range");
    }
    {
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw VerificationError("group", "duplicate element label");
    }
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) id = e;
    }
    if (!id) throw VerificationError("group", "no identity element");
    identity_ = *id;
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] == n) throw VerificationError("group", "element " + labels_[a] + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw VerificationError("group", "associativity fails at (" + labels_[a] + ", " + labels_[b] + ", " +
                                                         labels_[c] + ")");
}

std::optional<std::size_t> FiniteGroup::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"e"}, {{0}}, "trivial"); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(labels), std::move(t), "cyclic:" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n == 0 || n > 4) throw std::invalid_argument("symmetric:n supports 1 <= n <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> labels;
    for (const auto& q : perms) {
        std::string s;
        for (int v : q) s += std::to_string(v);
        labels.push_back(s);
    }
    const std::size_t m = perms.size();
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<int> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i] - 1];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return FiniteGroup(std::move(labels), std::move(t), "symmetric:" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dihedral:n needs n >= 1");
    auto rlabel = [](std::size_t k) { return k == 0 ? std::string() : k == 1 ? std::string("r") : "r^" + std::to_string(k); };
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "e" : rlabel(k));
    for (std::size_t k = 0; k < n; ++k) labels.push_back(rlabel(k) + "s");
    std::vector<std::vector<std::size_t>> t(2 * n, std::vector<std::size_t>(2 * n));
    for (std::size_t x = 0; x < 2 * n; ++x)
        for (std::size_t y = 0; y < 2 * n; ++y) {
            const std::size_t a = x % n, e = x / n, b = y % n, f = y / n;
            const std::size_t k = e == 0 ? (a + b) % n : (a + n - b) % n;
            t[x][y] = ((e + f) % 2) * n + k;
        }
    return FiniteGroup(std::move(labels), std::move(t), "dihedral:" + std::to_string(n));
}

FiniteGroup FiniteGroup::klein() {
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return FiniteGroup({"e", "a", "b", "ab"}, std::move(t), "klein");
}

namespace {

std::size_t parse_count(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad " + what + " parameter '" + s + "'");
    return std::stoul(s);
}

}  // namespace

FiniteGroup group_by_name(const std::string& name) {
    if (name == "trivial") return FiniteGroup::trivial();
    if (name == "klein") return FiniteGroup::klein();
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string kind = name.substr(0, colon), arg = name.substr(colon + 1);
        if (kind == "cyclic") return FiniteGroup::cyclic(parse_count(arg, kind));
        if (kind == "symmetric") return FiniteGroup::symmetric(parse_count(arg, kind));
        if (kind == "dihedral") return FiniteGroup::dihedral(parse_count(arg, kind));
    }
    throw std::invalid_argument("unknown group '" + name + "'");
}

SubgroupEmbedding make_embedding(FiniteGroup subgroup, FiniteGroup ambient, std::vector<std::size_t> element_map) {
    const std::size_t n = subgroup.order();
    if (element_map.size() != n) throw VerificationError("subgroup", "element map has the wrong length");
    std::vector<bool> used(ambient.order(), false);
    for (std::size_t v : element_map) {
        if (v >= ambient.order()) throw VerificationError("subgroup", "element map index out of range");
        if (used[v]) throw VerificationError("subgroup", "element map is not injective");
        used[v] = true;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (element_map[subgroup.mul(a, b)] != ambient.mul(element_map[a], element_map[b]))
                throw VerificationError("subgroup", "element map is not a homomorphism at (" + subgroup.label(a) + ", " +
                                                        subgroup.label(b) + ")");
    return {std::move(subgroup), std::move(ambient), std::move(element_map)};
}

std::optional<SubgroupEmbedding> find_embedding(const FiniteGroup& subgroup, const FiniteGroup& ambient) {
    const std::size_t n = subgroup.order(), m = ambient.order();
    std::vector<std::size_t> img(n, m);
    std::vector<bool> used(m, false);
    std::function<bool(std::size_t)> assign = [&](std::size_t a) -> bool {
        if (a == n) return true;
        for (std::size_t v = 0; v < m; ++v) {
            if (used[v]) continue;
            if ((a == subgroup.identity()) != (v == ambient.identity())) continue;
            img[a] = v;
            bool ok = true;
            for (std::size_t b = 0; b <= a && ok; ++b)
                for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                    std::size_t p = subgroup.mul(x, y);
                    if (p <= a && img[p] != ambient.mul(img[x], img[y])) ok = false;
                }
            if (!ok) continue;
            used[v] = true;
            if (assign(a + 1)) return true;
            used[v] = false;
        }
        img[a] = m;
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return make_embedding(subgroup, ambient, img);
}

HopfAlgebra group_algebra(const FiniteGroup& g) {
    const std::size_t n = g.order();
    Tensor3 m(n, n, n), c(n, n, n);
    Matrix s(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) m.set(a, b, g.mul(a, b), 1);
        c.set(a, a, a, 1);
        s.set(g.inverse(a), a, 1);
    }
    Algebra alg(g.labels(), std::move(m), unit_vector(n, g.identity()));
    return HopfAlgebra::make(Bialgebra(std::move(alg), std::move(c)), std::move(s), "group-algebra:" + g.name());
}

HopfAlgebra function_algebra(const FiniteGroup& g) {
    const std::size_t n = g.order();
    Tensor3 m(n, n, n), c(n, n, n);
    Matrix s(n, n);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("χ_" + g.label(a));
        m.set(a, a, a, 1);
        s.set(g.inverse(a), a, 1);
        for (std::size_t l = 0; l < n; ++l) c.set(a, l, g.mul(g.inverse(l), a), 1);
    }
    Algebra alg(std::move(labels), std::move(m), Vector(n, Rational(1)));
    return HopfAlgebra::make(Bialgebra(std::move(alg), std::move(c)), std::move(s), "function-algebra:" + g.name());
}

HopfAlgebra sweedler4() {
    enum { one, g, x, gx };
    Tensor3 m(4, 4, 4), c(4, 4, 4);
    for (int i = 0; i < 4; ++i) {
        m.set(one, i, i, 1);
        m.set(i, one, i, 1);
    }
    m.set(g, g, one, 1);
    m.set(g, x, gx, 1);
    m.set(g, gx, x, 1);
    m.set(x, g, gx, -1);
    m.set(gx, g, x, -1);
    c.set(one, one, one, 1);
    c.set(g, g, g, 1);
    c.set(x, x, one, 1);
    c.set(x, g, x, 1);
    c.set(gx, gx, g, 1);
    c.set(gx, one, gx, 1);
    Matrix s(4, 4);
    s.set(one, one, 1);
    s.set(g, g, 1);
    s.set(gx, x, -1);
    s.set(x, gx, 1);
    Algebra alg({"1", "g", "x", "gx"}, std::move(m), unit_vector(4, one));
    return HopfAlgebra::make(Bialgebra(std::move(alg), std::move(c)), std::move(s), "sweedler4");
}

HopfAlgebra base_field_hopf() {
    Tensor3 c(1, 1, 1);
    c.set(0, 0, 0, 1);
    return HopfAlgebra::make(Bialgebra(base_field(), std::move(c)), Matrix::identity(1), "base-field");
}

HopfMorphism restriction_morphism(const SubgroupEmbedding& emb) {
    HopfAlgebra src = function_algebra(emb.ambient), tgt = function_algebra(emb.subgroup);
    Matrix pi(tgt.dim(), src.dim());
    for (std::size_t h = 0; h < emb.element_map.size(); ++h) pi.set(h, emb.element_map[h], 1);
    return {std::move(src), std::move(tgt), std::move(pi)};
}

Matrix extension_by_zero(const SubgroupEmbedding& emb) {
    Matrix m(emb.ambient.order(), emb.subgroup.order());
    for (std::size_t h = 0; h < emb.element_map.size(); ++h) m.set(emb.element_map[h], h, 1);
    return m;
}

HopfMorphism sweedler_projection() {
    Matrix pi(2, 4);
    pi.set(0, 0, 1);
    pi.set(1, 1, 1);
    return {sweedler4(), group_algebra(FiniteGroup::cyclic(2)), std::move(pi)};
}

HopfMorphism identity_morphism(const HopfAlgebra& h) { return {h, h, Matrix::identity(h.dim())}; }

HopfAlgebra hopf_by_name(const std::string& name) {
    if (name == "sweedler4") return sweedler4();
    if (name == "base-field") return base_field_hopf();
    auto starts = [&](const std::string& p) { return name.rfind(p, 0) == 0; };
    if (starts("dual:")) return dual(hopf_by_name(name.substr(5)));
    if (starts("group-algebra:")) return group_algebra(group_by_name(name.substr(14)));
    if (starts("function-algebra:")) return function_algebra(group_by_name(name.substr(17)));
    throw std::invalid_argument("unknown Hopf algebra '" + name + "'");
}

HopfMorphism morphism_by_name(const std::string& name) {
    if (name == "sweedler-projection") return sweedler_projection();
    if (name.rfind("identity:", 0) == 0) return identity_morphism(hopf_by_name(name.substr(9)));
    if (name.rfind("restriction:", 0) == 0) {
        std::string rest = name.substr(12);
        std::string labels;
        if (auto at = rest.find('@'); at != std::string::npos) {
            labels = rest.substr(at + 1);
            rest = rest.substr(0, at);
        }
        auto slash = rest.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("restriction needs <group>/<subgroup>");
        FiniteGroup amb = group_by_name(rest.substr(0, slash)), sub = group_by_name(rest.substr(slash + 1));
        if (labels.empty()) {
            auto emb = find_embedding(sub, amb);
            if (!emb) throw std::invalid_argument("no embedding of " + sub.name() + " into " + amb.name());
            return restriction_morphism(*emb);
        }
        std::vector<std::size_t> map;
        std::size_t pos = 0;
        while (pos <= labels.size()) {
            auto comma = labels.find(',', pos);
            std::string l = labels.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            auto idx = amb.index_of(l);
            if (!idx) throw std::invalid_argument("unknown element '" + l + "' of " + amb.name());
            map.push_back(*idx);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return restriction_morphism(make_embedding(sub, amb, map));
    }
    throw std::invalid_argument("unknown morphism '" + name + "'");
}

bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.algebra().mult() == b.algebra().mult() && a.unit() == b.unit() && a.comult() == b.comult() &&
           a.counit() == b.counit() && a.antipode() == b.antipode();
}

std::vector<std::string> catalog_hopf_names() {
    std::vector<std::string> out{"base-field", "sweedler4"};
    for (const char* g : {"cyclic:2", "cyclic:3", "cyclic:4", "klein", "symmetric:3"}) {
        out.push_back(std::string("group-algebra:") + g);
        out.push_back(std::string("function-algebra:") + g);
    }
    return out;
}

std::vector<std::string> catalog_morphism_names() {
    return {"sweedler-projection", "restriction:symmetric:3/cyclic:2", "identity:sweedler4"};
}

}  // namespace hopfkit
