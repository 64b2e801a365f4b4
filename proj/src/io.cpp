#include "hopfkit/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hopfkit {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("write to '" + path + "' failed");
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        auto p = what.find("syntax error");
        throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                         (p == std::string::npos ? what : what.substr(p)));
    }
}

Json read_json_file(const std::string& path) { return parse_json_text(read_file(path), path); }

namespace {

bool flat(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

void pretty(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' '), inner(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [k, v] : j.items()) {
            out += inner + Json(k).dump() + ": ";
            pretty(v, indent + 2, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (j.is_array() && !j.empty() && !flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += inner;
            pretty(j[i], indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string pretty_json(const Json& j) {
    std::string out;
    pretty(j, 0, out);
    return out + "\n";
}

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
    return *it;
}

std::size_t index_of(const Json& j, std::size_t bound, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw ParseError(where + ": expected a non-negative index");
    const auto v = j.get<std::size_t>();
    if (v >= bound) throw ParseError(where + ": index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
    return v;
}

std::vector<std::string> labels_from(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty label list");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw ParseError(where + "[" + std::to_string(i) + "]: expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

Vector vector_from(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw ParseError(where + ": expected a list of " + std::to_string(n) + " rationals");
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const Rational& x : v) out.push_back(rational_to_json(x));
    return out;
}

Matrix matrix_from(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
    std::vector<Vector> r;
    for (std::size_t i = 0; i < rows; ++i) r.push_back(vector_from(j[i], cols, where + "[" + std::to_string(i) + "]"));
    return Matrix::from_rows(r, cols);
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
    return out;
}

Tensor3 tensor_from(const Json& j, std::size_t d1, std::size_t d2, std::size_t d3, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of [i, j, k, \"p/q\"] entries");
    Tensor3 t(d1, d2, d3);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string w = where + "[" + std::to_string(e) + "]";
        const Json& x = j[e];
        if (!x.is_array() || x.size() != 4) throw ParseError(w + ": expected [i, j, k, \"p/q\"]");
        t.add(index_of(x[0], d1, w), index_of(x[1], d2, w), index_of(x[2], d3, w), rational_from_json(x[3], w));
    }
    return t;
}

Json tensor_to_json(const Tensor3& t) {
    Json out = Json::array();
    for (const auto& e : t.entries()) out.push_back(Json::array({e.i, e.j, e.k, rational_to_json(e.value)}));
    return out;
}

fs::path resolve(const std::string& spec, const std::string& base_dir) {
    fs::path p(spec);
    if (p.is_relative() && !base_dir.empty() && base_dir != ".") p = fs::path(base_dir) / p;
    return p;
}

bool is_file(const fs::path& p) {
    std::error_code ec;
    return fs::is_regular_file(p, ec);
}

std::string dir_of(const fs::path& p) {
    fs::path d = p.parent_path();
    return d.empty() ? std::string(".") : d.string();
}

[[noreturn]] void unknown(const std::string& kind, const std::string& spec, const std::exception& e) {
    throw IoError("'" + spec + "' is neither a readable file nor a catalog " + kind + " (" + e.what() + ")");
}

template <class T, class Parse, class Named, class Emit>
Loaded<T> load(const std::string& kind, const std::string& spec, const std::string& base_dir, Parse parse, Named named,
               Emit emit) {
    fs::path p = resolve(spec, base_dir);
    if (is_file(p)) {
        std::string text = read_file(p.string());
        Json j = parse_json_text(text, p.string());
        return {parse(j, dir_of(p)), p.string(), sha256_hex(text)};
    }
    try {
        T v = named(spec);
        return {v, spec, sha256_hex(emit(v).dump())};
    } catch (const std::invalid_argument& e) {
        unknown(kind, spec, e);
    }
}

HopfAlgebra hopf_field(const Json& j, const std::string& base_dir) {
    if (j.is_string()) return load_hopf(j.get<std::string>(), base_dir).value;
    return hopf_from_json(j);
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError(where + ": expected a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Json algebra_to_json(const Algebra& a) {
    return {{"basis", a.labels()}, {"mult", tensor_to_json(a.mult())}, {"unit", vector_to_json(a.unit())}};
}

Algebra algebra_from_json(const Json& j) {
    auto labels = labels_from(field(j, "basis", "algebra"), "basis");
    const std::size_t n = labels.size();
    Tensor3 mult = tensor_from(field(j, "mult", "algebra"), n, n, n, "mult");
    Vector unit = vector_from(field(j, "unit", "algebra"), n, "unit");
    return Algebra(std::move(labels), std::move(mult), std::move(unit));
}

Json hopf_to_json(const HopfAlgebra& h) {
    Json j = Json::object();
    if (!h.name().empty()) j["name"] = h.name();
    j["basis"] = h.labels();
    j["mult"] = tensor_to_json(h.algebra().mult());
    j["comult"] = tensor_to_json(h.comult());
    j["unit"] = vector_to_json(h.unit());
    j["counit"] = vector_to_json(h.counit());
    j["antipode"] = matrix_to_json(h.antipode());
    return j;
}

HopfData hopf_data_from_json(const Json& j) {
    Algebra a = algebra_from_json(j);
    const std::size_t n = a.dim();
    // [i, j, k, c]: c is the coefficient of e_j⊗e_k in Δ(e_i)
    Tensor3 d = tensor_from(field(j, "comult", "hopf"), n, n, n, "comult");
    std::optional<Vector> counit;
    if (j.contains("counit")) counit = vector_from(j["counit"], n, "counit");
    HopfData out{Bialgebra(std::move(a), std::move(d), std::move(counit)), std::nullopt, {}};
    if (j.contains("antipode")) out.antipode = matrix_from(j["antipode"], n, n, "antipode");
    if (j.contains("name") && j["name"].is_string()) out.name = j["name"].get<std::string>();
    return out;
}

HopfAlgebra hopf_from_json(const Json& j) { return hopf_data_from_json(j).make(); }

Json morphism_to_json(const HopfMorphism& f) {
    return {{"source", hopf_to_json(f.source)}, {"target", hopf_to_json(f.target)}, {"matrix", matrix_to_json(f.matrix)}};
}

HopfMorphism morphism_from_json(const Json& j, const std::string& base_dir) {
    HopfMorphism f;
    f.source = hopf_field(field(j, "source", "morphism"), base_dir);
    f.target = hopf_field(field(j, "target", "morphism"), base_dir);
    f.matrix = matrix_from(field(j, "matrix", "morphism"), f.target.dim(), f.source.dim(), "matrix");
    return f;
}

Json action_to_json(const ModuleAlgebra& m) {
    return {{"algebra", algebra_to_json(m.algebra)},
            {"hopf", hopf_to_json(m.hopf)},
            {"side", to_string(m.side)},
            {"action", tensor_to_json(m.action)}};
}

ModuleAlgebra action_from_json(const Json& j, const std::string& base_dir) {
    const Json& aj = field(j, "algebra", "action");
    Algebra a = aj.is_string() ? load_algebra(aj.get<std::string>(), base_dir).value : algebra_from_json(aj);
    HopfAlgebra h = hopf_field(field(j, "hopf", "action"), base_dir);
    Side side = Side::left;
    if (j.contains("side")) {
        if (!j["side"].is_string()) throw ParseError("side: expected \"left\" or \"right\"");
        try {
            side = parse_side(j["side"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("side: ") + e.what());
        }
    }
    Tensor3 t = tensor_from(field(j, "action", "action"), h.dim(), a.dim(), a.dim(), "action");
    return make_module_algebra(std::move(a), std::move(h), side, std::move(t));
}

Json group_to_json(const FiniteGroup& g) {
    Json j = Json::object();
    if (!g.name().empty()) j["name"] = g.name();
    j["elements"] = g.labels();
    j["table"] = g.table();
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    auto labels = labels_from(field(j, "elements", "group"), "elements");
    const std::size_t n = labels.size();
    const Json& t = field(j, "table", "group");
    if (!t.is_array() || t.size() != n) throw ParseError("table: expected " + std::to_string(n) + " rows");
    std::vector<std::vector<std::size_t>> table(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string w = "table[" + std::to_string(r) + "]";
        if (!t[r].is_array() || t[r].size() != n) throw ParseError(w + ": expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) table[r].push_back(index_of(t[r][c], n, w));
    }
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string();
    return FiniteGroup(std::move(labels), std::move(table), std::move(name));
}

Loaded<HopfAlgebra> load_hopf(const std::string& spec, const std::string& base_dir) {
    return load<HopfAlgebra>(
        "Hopf algebra", spec, base_dir, [](const Json& j, const std::string&) { return hopf_from_json(j); },
        hopf_by_name, hopf_to_json);
}

Loaded<HopfData> load_hopf_data(const std::string& spec, const std::string& base_dir) {
    return load<HopfData>(
        "Hopf algebra", spec, base_dir, [](const Json& j, const std::string&) { return hopf_data_from_json(j); },
        [](const std::string& name) {
            HopfAlgebra h = hopf_by_name(name);
            return HopfData{h.bialgebra(), h.antipode(), h.name()};
        },
        [](const HopfData& d) { return hopf_to_json(d.make()); });
}

Loaded<HopfMorphism> load_morphism(const std::string& spec, const std::string& base_dir) {
    return load<HopfMorphism>("morphism", spec, base_dir, morphism_from_json, morphism_by_name, morphism_to_json);
}

Loaded<ModuleAlgebra> load_action(const std::string& spec, const std::string& base_dir) {
    return load<ModuleAlgebra>("action", spec, base_dir, action_from_json, action_by_name, action_to_json);
}

Loaded<Algebra> load_algebra(const std::string& spec, const std::string& base_dir) {
    return load<Algebra>(
        "algebra", spec, base_dir, [](const Json& j, const std::string&) { return algebra_from_json(j); },
        algebra_by_name, algebra_to_json);
}

Loaded<GroupPtr> load_group(const std::string& spec, const std::string& base_dir) {
    return load<GroupPtr>(
        "group", spec, base_dir, [](const Json& j, const std::string&) { return finite_oracle(group_from_json(j)); },
        group_oracle, [&spec](const GroupPtr&) { return Json(spec); });
}

}  // namespace hopfkit
