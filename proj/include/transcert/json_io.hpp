#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "transcert/linalg.hpp"
#include "transcert/matrix.hpp"
#include "transcert/multipoly.hpp"
#include "transcert/padic.hpp"
#include "transcert/powerseries.hpp"
#include "transcert/rational.hpp"
#include "transcert/symbolic_matrix.hpp"

// JSON readers throw ParseError carrying a JSON pointer to the offending field.
namespace transcert::io {

using Json = nlohmann::json;

std::string child(const std::string& pointer, const std::string& key);
std::string child(const std::string& pointer, std::size_t index);

const Json& field(const Json& j, const std::string& key, const std::string& pointer);
const Json* optional_field(const Json& j, const std::string& key, const std::string& pointer);

Rational read_rational(const Json& j, const std::string& pointer);
Integer read_integer(const Json& j, const std::string& pointer);
std::int64_t read_int64(const Json& j, const std::string& pointer);
std::uint64_t read_uint64(const Json& j, const std::string& pointer);
bool read_bool(const Json& j, const std::string& pointer);
std::string read_string(const Json& j, const std::string& pointer);
RatVector read_rational_vector(const Json& j, const std::string& pointer);
IntVector read_integer_vector(const Json& j, const std::string& pointer);

/// {"rows":r,"cols":c,"entries":[[...],...]} or a bare list of rows.
RationalMatrix read_rational_matrix(const Json& j, const std::string& pointer);
IntegerMatrix read_integer_matrix(const Json& j, const std::string& pointer);
/// A list of columns of equal length.
IntegerMatrix read_column_list(const Json& j, std::size_t length, const std::string& pointer);

SymbolicMatrix read_symbolic(const Json& j, const std::string& pointer);
/// A list of {"exps":[...],"coef":"a/b"} terms, or {"nvars":n,"terms":[...]}.
MultiPoly read_poly(const Json& j, const std::string& pointer, std::size_t nvars_hint = 0);
PolyMatrix read_poly_matrix(const Json& j, const std::string& pointer);
TruncatedSeries read_series(const Json& j, const std::string& pointer);
/// "a/b", or {"minpoly":[c0,...,cd],"residue":r0} (also "residues":[...]).
UnitDescription read_unit(const Json& j, const std::string& pointer);
PadicNumber read_padic(const Json& j, const std::string& pointer);

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const RatVector& v);
Json to_json(const IntVector& v);
Json to_json(const RationalMatrix& m);
Json to_json(const IntegerMatrix& m);
Json column_list(const IntegerMatrix& m);
Json to_json(const MultiPoly& p);
Json to_json(const PolyMatrix& m);
Json to_json(const SymbolicMatrix& m);
Json to_json(const TruncatedSeries& s);
Json to_json(const PadicNumber& x);

}  // namespace transcert::io
