#include "transcert/json_io.hpp"

#include "transcert/errors.hpp"

namespace transcert::io {

namespace {

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

const Json& expect_array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw ParseError("expected an array", pointer);
  return j;
}

std::size_t read_size(const Json& j, const std::string& pointer) {
  return static_cast<std::size_t>(read_uint64(j, pointer));
}

template <class T, class Read>
Matrix<T> read_matrix(const Json& j, const std::string& pointer, Read read) {
  const Json* rows_json = &j;
  std::string base = pointer;
  std::optional<std::size_t> rows, cols;
  if (j.is_object()) {
    rows_json = &field(j, "entries", pointer);
    base = child(pointer, "entries");
    if (auto* r = optional_field(j, "rows", pointer)) rows = read_size(*r, child(pointer, "rows"));
    if (auto* c = optional_field(j, "cols", pointer)) cols = read_size(*c, child(pointer, "cols"));
  }
  expect_array(*rows_json, base);
  const std::size_t r = rows_json->size();
  if (rows && *rows != r) throw ParseError("row count disagrees with entries", child(pointer, "rows"));
  std::size_t c = cols.value_or(r > 0 && (*rows_json)[0].is_array() ? (*rows_json)[0].size() : 0);
  Matrix<T> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const std::string rp = child(base, i);
    expect_array((*rows_json)[i], rp);
    if ((*rows_json)[i].size() != c) throw ParseError("row length disagrees with column count", rp);
    for (std::size_t k = 0; k < c; ++k) m(i, k) = read((*rows_json)[i][k], child(rp, k));
  }
  return m;
}

}  // namespace

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + escape(key); }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& field(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw ParseError("expected an object", pointer);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing required field", child(pointer, key));
  return *it;
}

const Json* optional_field(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw ParseError("expected an object", pointer);
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

Rational read_rational(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(parse_integer(j.dump()));
  if (!j.is_string()) throw ParseError("expected a rational \"a/b\" or an integer", pointer);
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what(), pointer);
  }
}

Integer read_integer(const Json& j, const std::string& pointer) {
  const Rational q = read_rational(j, pointer);
  if (q.get_den() != 1) throw ParseError("expected an integer", pointer);
  return q.get_num();
}

std::int64_t read_int64(const Json& j, const std::string& pointer) {
  const Integer z = read_integer(j, pointer);
  if (!z.fits_slong_p()) throw ParseError("integer out of range", pointer);
  return z.get_si();
}

std::uint64_t read_uint64(const Json& j, const std::string& pointer) {
  const Integer z = read_integer(j, pointer);
  if (z < 0 || !z.fits_ulong_p()) throw ParseError("expected a nonnegative integer", pointer);
  return z.get_ui();
}

bool read_bool(const Json& j, const std::string& pointer) {
  if (!j.is_boolean()) throw ParseError("expected a boolean", pointer);
  return j.get<bool>();
}

std::string read_string(const Json& j, const std::string& pointer) {
  if (!j.is_string()) throw ParseError("expected a string", pointer);
  return j.get<std::string>();
}

RatVector read_rational_vector(const Json& j, const std::string& pointer) {
  expect_array(j, pointer);
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_rational(j[i], child(pointer, i)));
  return v;
}

IntVector read_integer_vector(const Json& j, const std::string& pointer) {
  expect_array(j, pointer);
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_integer(j[i], child(pointer, i)));
  return v;
}

RationalMatrix read_rational_matrix(const Json& j, const std::string& pointer) {
  return read_matrix<Rational>(j, pointer, read_rational);
}

IntegerMatrix read_integer_matrix(const Json& j, const std::string& pointer) {
  return read_matrix<Integer>(j, pointer, read_integer);
}

IntegerMatrix read_column_list(const Json& j, std::size_t length, const std::string& pointer) {
  expect_array(j, pointer);
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < j.size(); ++i) {
    cols.push_back(read_integer_vector(j[i], child(pointer, i)));
    if (cols.back().size() != length) throw ParseError("column has the wrong length", child(pointer, i));
  }
  return from_columns(length, cols);
}

SymbolicMatrix read_symbolic(const Json& j, const std::string& pointer) {
  const Json& names_json = expect_array(field(j, "symbols", pointer), child(pointer, "symbols"));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < names_json.size(); ++i)
    names.push_back(read_string(names_json[i], child(child(pointer, "symbols"), i)));
  bool includes_one = false;
  if (auto* f = optional_field(j, "includes_one", pointer)) includes_one = read_bool(*f, child(pointer, "includes_one"));
  SymbolSpace space;
  try {
    space = SymbolSpace(names, includes_one);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), child(pointer, "symbols"));
  }
  const std::string ep = child(pointer, "entries");
  const Json& entries = expect_array(field(j, "entries", pointer), ep);
  const std::size_t rows = read_size(field(j, "rows", pointer), child(pointer, "rows"));
  const std::size_t cols = read_size(field(j, "cols", pointer), child(pointer, "cols"));
  if (entries.size() != rows) throw ParseError("row count disagrees with entries", child(pointer, "rows"));
  SymbolicMatrix m(space, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = child(ep, i);
    expect_array(entries[i], rp);
    if (entries[i].size() != cols) throw ParseError("row length disagrees with cols", rp);
    for (std::size_t k = 0; k < cols; ++k) {
      const std::string cp = child(rp, k);
      const Json& e = entries[i][k];
      if (!e.is_object()) throw ParseError("expected an object of symbol coefficients", cp);
      for (auto it = e.begin(); it != e.end(); ++it) {
        auto idx = space.index_of(it.key());
        if (!idx) throw ParseError("unknown symbol", child(cp, it.key()));
        m.add(i, k, *idx, read_rational(it.value(), child(cp, it.key())));
      }
    }
  }
  return m;
}

MultiPoly read_poly(const Json& j, const std::string& pointer, std::size_t nvars_hint) {
  const Json* terms = &j;
  std::string tp = pointer;
  std::optional<std::size_t> nvars;
  if (j.is_object()) {
    terms = &field(j, "terms", pointer);
    tp = child(pointer, "terms");
    if (auto* n = optional_field(j, "nvars", pointer)) nvars = read_size(*n, child(pointer, "nvars"));
  }
  expect_array(*terms, tp);
  if (!nvars && !terms->empty() && (*terms)[0].is_object() && (*terms)[0].contains("exps"))
    nvars = (*terms)[0]["exps"].size();
  MultiPoly p(nvars.value_or(nvars_hint));
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const std::string ip = child(tp, i);
    const Json& t = (*terms)[i];
    const std::string xp = child(ip, "exps");
    const Json& exps = expect_array(field(t, "exps", ip), xp);
    if (exps.size() != p.variable_count()) throw ParseError("exponent vector has the wrong length", xp);
    Exponents e;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      const std::uint64_t x = read_uint64(exps[k], child(xp, k));
      if (x > UINT32_MAX) throw ParseError("exponent too large", child(xp, k));
      e.push_back(static_cast<std::uint32_t>(x));
    }
    p.add_term(e, read_rational(field(t, "coef", ip), child(ip, "coef")));
  }
  return p;
}

PolyMatrix read_poly_matrix(const Json& j, const std::string& pointer) {
  const std::size_t nvars = read_size(field(j, "nvars", pointer), child(pointer, "nvars"));
  const std::size_t rows = read_size(field(j, "rows", pointer), child(pointer, "rows"));
  const std::size_t cols = read_size(field(j, "cols", pointer), child(pointer, "cols"));
  const std::string ep = child(pointer, "entries");
  const Json& entries = expect_array(field(j, "entries", pointer), ep);
  if (entries.size() != rows) throw ParseError("row count disagrees with entries", child(pointer, "rows"));
  PolyMatrix m = make_poly_matrix(rows, cols, nvars);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = child(ep, i);
    expect_array(entries[i], rp);
    if (entries[i].size() != cols) throw ParseError("row length disagrees with cols", rp);
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = read_poly(entries[i][k], child(rp, k), nvars);
  }
  return m;
}

TruncatedSeries read_series(const Json& j, const std::string& pointer) {
  const std::size_t order = read_size(field(j, "order", pointer), child(pointer, "order"));
  if (order == 0) throw ParseError("order must be positive", child(pointer, "order"));
  RatVector coeffs = read_rational_vector(field(j, "coeffs", pointer), child(pointer, "coeffs"));
  if (coeffs.size() > order) throw ParseError("more coefficients than the order", child(pointer, "coeffs"));
  return TruncatedSeries(order, std::move(coeffs));
}

UnitDescription read_unit(const Json& j, const std::string& pointer) {
  if (!j.is_object()) return read_rational(j, pointer);
  AlgebraicUnit u;
  u.minpoly = read_integer_vector(field(j, "minpoly", pointer), child(pointer, "minpoly"));
  if (auto* r = optional_field(j, "residues", pointer))
    u.residues = read_integer_vector(*r, child(pointer, "residues"));
  else
    u.residues = {read_integer(field(j, "residue", pointer), child(pointer, "residue"))};
  return u;
}

namespace {

PadicNumber read_padic_value(const Json& j, const std::string& pointer, unsigned long p, std::int64_t k) {
  const std::int64_t v = read_int64(field(j, "valuation", pointer), child(pointer, "valuation"));
  const Integer unit = read_integer(field(j, "unit", pointer), child(pointer, "unit"));
  if (unit <= 0 || unit % p == 0 || v >= k || unit >= prime_power(p, k - v))
    throw ParseError("not a normalized p-adic unit", child(pointer, "unit"));
  Rational value = Rational(unit);
  value *= v >= 0 ? Rational(prime_power(p, v)) : Rational(1) / Rational(prime_power(p, -v));
  return PadicNumber::from_rational(value, p, k);
}

}  // namespace

PadicNumber read_padic(const Json& j, const std::string& pointer) {
  const std::uint64_t p = read_uint64(field(j, "prime", pointer), child(pointer, "prime"));
  const std::int64_t k = read_int64(field(j, "precision", pointer), child(pointer, "precision"));
  PadicNumber x;
  try {
    if (auto* z = optional_field(j, "zero", pointer); z && read_bool(*z, child(pointer, "zero")))
      x = PadicNumber::zero(p, k);
    else
      x = read_padic_value(j, pointer, p, k);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), pointer);
  }
  // digits and text must agree with the unit they describe
  if (to_json(x) != j) throw ParseError("p-adic number is not in canonical form", pointer);
  return x;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return to_string(z);
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const IntegerMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json column_list(const IntegerMatrix& m) {
  Json out = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(to_json(m.col(j)));
  return out;
}

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exps", e}, {"coef", to_string(c)}});
  return out;
}

Json to_json(const PolyMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    entries.push_back(row);
  }
  const std::size_t nvars = m.rows() > 0 && m.cols() > 0 ? m(0, 0).variable_count() : 0;
  return {{"nvars", nvars}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const SymbolicMatrix& m) {
  const auto& names = m.space().names();
  Json symbols = Json::array();
  for (std::size_t s = 0; s < names.size(); ++s)
    if (!(m.space().includes_one() && s == m.space().one_index())) symbols.push_back(names[s]);
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      Json e = Json::object();
      const auto& combo = m.at(i, k);
      for (std::size_t s = 0; s < combo.size(); ++s)
        if (combo[s] != 0) e[names[s]] = to_string(combo[s]);
      row.push_back(e);
    }
    entries.push_back(row);
  }
  return {{"symbols", symbols},
          {"includes_one", m.space().includes_one()},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"entries", entries}};
}

Json to_json(const TruncatedSeries& s) { return {{"order", s.order()}, {"coeffs", to_json(s.coeffs())}}; }

Json to_json(const PadicNumber& x) {
  Json out = {{"prime", x.prime()}, {"precision", x.absolute_precision()}, {"text", x.to_string()}};
  if (x.is_zero()) {
    out["zero"] = true;
    return out;
  }
  out["valuation"] = x.valuation();
  out["unit"] = to_json(x.unit());
  out["digits"] = x.digits();
  return out;
}

}  // namespace transcert::io
