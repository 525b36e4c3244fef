#ifndef JETFRAME_JSON_IO_HPP
#define JETFRAME_JSON_IO_HPP

#include <jetframe/bell.hpp>
#include <jetframe/fields.hpp>
#include <jetframe/series.hpp>
#include <jetframe/verify.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace jetframe {

using Json = nlohmann::ordered_json;

Json to_json(const VarId& v);
VarId varid_from_json(const Json& j);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const FracPoly& f);
FracPoly fracpoly_from_json(const Json& j);

/// {"coeffs": [{"var", "num", "epow", "den"}]}; epow is the power of the pivot's z' in den
Json to_json(const VectorField& v, const VarId& pivot_jet);
VectorField vectorfield_from_json(const Json& j);

Json to_json(const JetConfig& cfg);
JetConfig config_from_json(const Json& j);

Json to_json(const TruncCurve& c);
TruncCurve curve_from_json(const Json& j);

Json to_json(const BellMatrix& b);
Json to_json(const Substitution& s);

Json to_json(const FrameSpec& spec);
FrameSpec framespec_from_json(const Json& j);

Json to_json(const PoleTable& t);
Json to_json(const Report& r);

/// indented, trailing newline; byte-stable for equal inputs
std::string dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace jetframe

#endif
