#pragma once

#include "hopfkit/actions.hpp"
#include "hopfkit/groups.hpp"
#include "hopfkit/report.hpp"

#include <stdexcept>
#include <string>

namespace hopfkit {

/// Missing or unreadable file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input. Syntax errors carry "path:line:col"; schema errors carry
/// the path and the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
Json parse_json_text(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);
/// Indented JSON with arrays of scalars kept on one line; ends with a newline.
std::string pretty_json(const Json& j);

/// Rationals are written as "p/q" strings ("p" when q = 1).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

/// basis, mult, comult ([i, j, k, "p/q"] entries), unit, counit, antipode
/// (row-major rows).
Json hopf_to_json(const HopfAlgebra& h);
/// The counit and antipode are derived when absent. Throws HopfError when the
/// data has no Hopf structure.
HopfAlgebra hopf_from_json(const Json& j);

/// The raw file contents before any Hopf structure is derived.
struct HopfData {
    Bialgebra bialgebra;
    std::optional<Matrix> antipode;
    std::string name;
    HopfAlgebra make() const { return HopfAlgebra::make(bialgebra, antipode, name); }
};
HopfData hopf_data_from_json(const Json& j);

Json morphism_to_json(const HopfMorphism& f);
HopfMorphism morphism_from_json(const Json& j, const std::string& base_dir = ".");

/// algebra, hopf, side, action ([x, a, b, "p/q"] entries).
Json action_to_json(const ModuleAlgebra& m);
ModuleAlgebra action_from_json(const Json& j, const std::string& base_dir = ".");

/// elements, table (index rows).
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// A resolved input: the value plus a digest of the bytes it came from (the
/// file, or the canonical serialization of a catalog entry).
template <class T>
struct Loaded {
    T value;
    std::string source;
    std::string digest;
};

/// Each loader takes a catalog name or a file path. An existing file wins over
/// a name.
Loaded<HopfAlgebra> load_hopf(const std::string& spec, const std::string& base_dir = ".");
/// File or catalog name; never throws HopfError.
Loaded<HopfData> load_hopf_data(const std::string& spec, const std::string& base_dir = ".");
Loaded<HopfMorphism> load_morphism(const std::string& spec, const std::string& base_dir = ".");
Loaded<ModuleAlgebra> load_action(const std::string& spec, const std::string& base_dir = ".");
Loaded<Algebra> load_algebra(const std::string& spec, const std::string& base_dir = ".");
/// Group oracle names or a finite group file.
Loaded<GroupPtr> load_group(const std::string& spec, const std::string& base_dir = ".");

}  // namespace hopfkit
