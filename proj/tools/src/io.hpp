#pragma once

// JSON loading and serialization for the command-line tool.

#include <string>
#include <vector>

#include "json.hpp"

#include "tlalg/algebroid.hpp"
#include "tlalg/char_classes.hpp"

namespace tlalg::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Reads and parses a JSON file. Errors: FileNotFound, ParseError.
Json read_json_file(const std::string& path);

/// "builtin:NAME" or a path to {"vertices": N, "simplices": [[...], ...]}.
ComplexPtr load_complex(const std::string& source);
ComplexPtr complex_from_json(const Json& j, const std::string& name);
Json complex_to_json(const Complex& c);

/// Rational from a JSON string ("3/2") or integer.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);
RationalMatrix matrix_from_json(const Json& j, std::size_t rank);
Json matrix_to_json(const RationalMatrix& m);

/// {"rank": r, "entries": {"a": "2/1", "edge_4_7": ...}} via from_representation.
LocalSystem representation_from_json(const ComplexPtr& c, const Json& j);
/// {"rank": r, "transports": {"edge_0_1": ...}}: raw edge transports,
/// identity where unlisted. Flatness is not checked here.
LocalSystem transports_from_json(const ComplexPtr& c, const Json& j);
/// "a=2,b=-3/2" for rank-1 systems.
LocalSystem representation_from_inline(const ComplexPtr& c, const std::string& text);

std::string simplex_key(const Simplex& s);
/// {"degree": n, "values": {"simplex_0_4_7": ["1/2", ...]}}; unlisted
/// simplices are zero.
TwistedCochain cochain_from_json(const SystemPtr& system, const Json& j);
Json cochain_to_json(const TwistedCochain& c);

/// {"complex": ..., "representation" | "transports": ..., "omega": ...}.
/// Returns the parts; validation is left to make_algebroid.
struct AlgebroidParts {
  ComplexPtr complex;
  SystemPtr adjoint;
  TwistedCochain omega;
};
AlgebroidParts algebroid_from_json(const Json& j, const ComplexPtr& fallback_complex);

/// {"source": ..., "target": ..., "vertex_map": [...]}; source and target
/// are "builtin:NAME" strings or inline complex objects.
SimplicialMap map_from_json(const Json& j);

Json error_to_json(const Error& e);
Json certificate_to_json(const std::vector<CertificateEntry>& certificate);

}  // namespace tlalg::cli
