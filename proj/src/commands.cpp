#include "transcert/commands.hpp"

#include <functional>
#include <map>
#include <set>

#include "transcert/det_rep.hpp"
#include "transcert/errors.hpp"
#include "transcert/lattice.hpp"
#include "transcert/mult_relations.hpp"
#include "transcert/rng.hpp"
#include "transcert/siegel.hpp"
#include "transcert/wm_decomp.hpp"

namespace transcert {

using io::Json;

namespace {

using Transcript = std::vector<std::pair<std::string, bool>>;

struct Command {
  std::function<Json(const Json&, const Params&)> compute;
  std::function<Transcript(const Json&, const Params&, const Json&)> check;
};

// A check that throws is a failed check.
void record(Transcript& t, const std::string& name, const std::function<bool()>& fn) {
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception&) {
    ok = false;
  }
  t.emplace_back(name, ok);
}

Json transcript_json(const Transcript& t) {
  Json out = Json::array();
  for (const auto& [name, ok] : t) out.push_back({{"check", name}, {"passed", ok}});
  return out;
}

bool all_passed(const Transcript& t) {
  return std::all_of(t.begin(), t.end(), [](const auto& c) { return c.second; });
}

unsigned long read_prime(const Json& input) {
  const std::uint64_t p = io::read_uint64(io::field(input, "prime", ""), "/prime");
  const Integer z(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) throw ParseError("not a prime", "/prime");
  return static_cast<unsigned long>(p);
}

std::int64_t read_precision(const Json& input, const Params& params) {
  std::int64_t k = params.prec;
  if (auto* f = io::optional_field(input, "precision", "")) k = io::read_int64(*f, "/precision");
  if (k < 1 || k > 100000) throw ParseError("precision must lie in [1, 100000]", "/precision");
  return k;
}

bool found(const Json& result) { return result.value("found", true); }

// ---- structural-rank

Json structural_rank_compute(const Json& input, const Params& params) {
  const SymbolicMatrix m = io::read_symbolic(input, "");
  PolyRankOptions options;
  options.seed = params.seed;
  const PolyRank cert = structural_rank_certified(m, options);
  Json r = {{"structural_rank", cert.rank},
            {"minor", {{"rows", cert.rows}, {"cols", cert.cols}}},
            {"randomized", cert.randomized}};
  if (m.space().includes_one()) r["specialized_rank"] = specialized_rank(m, options);
  return r;
}

Transcript structural_rank_check(const Json& input, const Params& params, const Json& result) {
  const SymbolicMatrix m = io::read_symbolic(input, "");
  const std::size_t rank = result.at("structural_rank").get<std::size_t>();
  const auto rows = result.at("minor").at("rows").get<std::vector<std::size_t>>();
  const auto cols = result.at("minor").at("cols").get<std::vector<std::size_t>>();
  Transcript t;
  record(t, "minor_shape", [&] {
    auto in_range = [](const std::vector<std::size_t>& v, std::size_t n) {
      std::set<std::size_t> s(v.begin(), v.end());
      return s.size() == v.size() && (v.empty() || *s.rbegin() < n);
    };
    return rows.size() == rank && cols.size() == rank && in_range(rows, m.rows()) && in_range(cols, m.cols());
  });
  record(t, "minor_nonsingular", [&] {
    if (rank == 0) return true;
    const PolyMatrix minor = generic_matrix(m).submatrix(rows, cols);
    Rng rng(params.seed ^ 0x5eedull);
    for (int trial = 0; trial < 4; ++trial) {
      RatVector point;
      for (std::size_t s = 0; s < m.space().size(); ++s) point.push_back(Rational(rng.uniform_integer(-1000000, 1000000)));
      if (determinant_Q(evaluate(minor, point)) != 0) return true;
    }
    return !determinant(minor).is_zero();
  });
  PolyRankOptions options;
  options.seed = params.seed;
  record(t, "rank_recomputed", [&] { return structural_rank(m, options) == rank; });
  if (result.contains("specialized_rank"))
    record(t, "specialized_rank_recomputed", [&] {
      return specialized_rank(m, options) == result.at("specialized_rank").get<std::size_t>();
    });
  return t;
}

// ---- det-rep

constexpr std::size_t kSymbolicVerifyLimit = 256;

RepCheck check_rep(const AffineMatrix& rep, const MultiPoly& p, const Params& params) {
  if (rep.dimension() <= kSymbolicVerifyLimit) return verify_rep(rep, p, SymbolicMode{});
  RandomizedMode mode;
  mode.seed = params.seed;
  return verify_rep(rep, p, mode);
}

Json det_rep_compute(const Json& input, const Params& params) {
  const MultiPoly p = io::read_poly(io::field(input, "poly", ""), "/poly");
  DetRepOptions options;
  if (auto* f = io::optional_field(input, "prune", "")) options.prune = io::read_bool(*f, "/prune");
  const AffineMatrix rep = determinantal_rep(p, options);
  const RepCheck check = check_rep(rep, p, params);
  Json r = {{"matrix", io::to_json(rep.matrix())},
            {"dimension", rep.dimension()},
            {"degree", p.total_degree()},
            {"verified", check.verified},
            {"verification_mode", rep.dimension() <= kSymbolicVerifyLimit ? "symbolic" : "randomized"}};
  if (check.false_pass_bound) r["false_pass_bound"] = io::to_json(*check.false_pass_bound);
  return r;
}

Transcript det_rep_check(const Json& input, const Params& params, const Json& result) {
  const MultiPoly p = io::read_poly(io::field(input, "poly", ""), "/poly");
  const PolyMatrix n = io::read_poly_matrix(result.at("matrix"), "/result/matrix");
  Transcript t;
  record(t, "square", [&] { return n.rows() == n.cols() && n.rows() == result.at("dimension").get<std::size_t>(); });
  record(t, "entries_affine", [&] {
    for (const auto& e : n.data())
      if (e.total_degree() > 1) return false;
    return true;
  });
  record(t, "determinant_matches", [&] {
    const AffineMatrix rep{n};
    return check_rep(rep, p, params).verified && result.at("verified").get<bool>();
  });
  return t;
}

// ---- wm-decompose

ZeroBlockStrategy strategy_of(const Params& params) {
  if (params.strategy == "exhaustive") return ExhaustiveStrategy{params.height};
  if (params.strategy == "alternating") return AlternatingStrategy{params.seed, 20};
  throw PreconditionError("unknown strategy '" + params.strategy + "' (expected exhaustive or alternating)");
}

Json wm_compute(const Json& input, const Params& params) {
  const SymbolicMatrix m = io::read_symbolic(input, "");
  const ZeroBlockStrategy strategy = strategy_of(params);
  const RankThreshold thr = rank_threshold(m);
  Json r = {{"rank_threshold",
             {{"structural_rank", thr.structural_rank},
              {"threshold", io::to_json(thr.threshold)},
              {"hypothesis", thr.hypothesis}}}};
  const auto cert = find_zero_block(m, strategy);
  r["found"] = cert.has_value();
  if (cert) {
    r["P"] = io::to_json(cert->p);
    r["Q"] = io::to_json(cert->q);
    r["m_prime"] = cert->m_prime;
    r["n_prime"] = cert->n_prime;
  }
  return r;
}

Transcript wm_check(const Json& input, const Params&, const Json& result) {
  const SymbolicMatrix m = io::read_symbolic(input, "");
  ZeroBlockCertificate c;
  c.p = io::read_rational_matrix(result.at("P"), "/result/P");
  c.q = io::read_rational_matrix(result.at("Q"), "/result/Q");
  c.m_prime = result.at("m_prime").get<std::size_t>();
  c.n_prime = result.at("n_prime").get<std::size_t>();
  Transcript t;
  record(t, "P_invertible", [&] { return c.p.rows() == m.rows() && determinant_Q(c.p) != 0; });
  record(t, "Q_invertible", [&] { return c.q.rows() == m.cols() && determinant_Q(c.q) != 0; });
  record(t, "zero_block", [&] {
    const SymbolicMatrix pmq = multiply(c.p, m, c.q);
    if (c.m_prime == 0 || c.n_prime == 0 || c.m_prime > m.rows() || c.n_prime > m.cols()) return false;
    for (std::size_t i = 0; i < c.m_prime; ++i)
      for (std::size_t j = m.cols() - c.n_prime; j < m.cols(); ++j)
        if (!is_zero_vector(pmq.at(i, j))) return false;
    return true;
  });
  record(t, "meets_threshold", [&] {
    return make_rational(c.m_prime, m.rows()) + make_rational(c.n_prime, m.cols()) > 1;
  });
  return t;
}

// ---- mcc

Json mcc_compute(const Json& input, const Params& params) {
  const SymbolicMatrix m = io::read_symbolic(input, "");
  const auto w = mcc_witness(m, params.height);
  Json r = {{"found", w.has_value()}};
  if (w) {
    r["w"] = io::to_json(w->w);
    r["v"] = io::to_json(w->v);
  }
  return r;
}

Transcript mcc_check(const Json& input, const Params&, const Json& result) {
  const SymbolicMatrix m = io::read_symbolic(input, "");
  const IntVector w = io::read_integer_vector(result.at("w"), "/result/w");
  const IntVector v = io::read_integer_vector(result.at("v"), "/result/v");
  Transcript t;
  record(t, "w_nonzero", [&] { return w.size() == m.rows() && !is_zero_vector(w); });
  record(t, "v_nonzero", [&] { return v.size() == m.cols() && !is_zero_vector(v); });
  record(t, "bilinear_form_zero", [&] {
    for (const RationalMatrix& part : decompose(m)) {
      Rational s = 0;
      for (std::size_t i = 0; i < part.rows(); ++i)
        for (std::size_t j = 0; j < part.cols(); ++j) s += Rational(w[i]) * part(i, j) * Rational(v[j]);
      if (s != 0) return false;
    }
    return true;
  });
  return t;
}

// ---- siegel

Integer siegel_height(const Json& input, const IntegerMatrix& a) {
  if (auto* f = io::optional_field(input, "H", "")) return io::read_integer(*f, "/H");
  // smallest H with every |a_ij| < H
  return Integer(max_abs(a.data()) + 1);
}

Json siegel_compute(const Json& input, const Params&) {
  const IntegerMatrix a = io::read_integer_matrix(io::field(input, "A", ""), "/A");
  const Integer h = siegel_height(input, a);
  const IntVector b = siegel_solve(a, h);
  return {{"b", io::to_json(b)},
          {"M", a.rows()},
          {"N", a.cols()},
          {"H", io::to_json(h)},
          {"bound", io::to_json(Integer(Integer(2 * a.cols()) * h))}};
}

Transcript siegel_check(const Json& input, const Params&, const Json& result) {
  const IntegerMatrix a = io::read_integer_matrix(io::field(input, "A", ""), "/A");
  const Integer h = siegel_height(input, a);
  const IntVector b = io::read_integer_vector(result.at("b"), "/result/b");
  Transcript t;
  record(t, "wide_enough", [&] { return a.cols() > 2 * a.rows(); });
  record(t, "entries_below_H", [&] { return max_abs(a.data()) < h; });
  record(t, "b_nonzero", [&] { return b.size() == a.cols() && !is_zero_vector(b); });
  record(t, "Ab_zero", [&] { return is_zero_vector(a * b); });
  record(t, "height_below_bound", [&] { return max_abs(b) < Integer(2 * a.cols()) * h; });
  return t;
}

// ---- mult-rel

RationalTuple read_tuple(const Json& input) {
  const RatVector v = io::read_rational_vector(io::field(input, "tuple", ""), "/tuple");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == 0) throw ParseError("tuple entries must be nonzero", "/tuple/" + std::to_string(i));
  return RationalTuple(v);
}

Json mult_rel_compute(const Json& input, const Params&) {
  const RelationLattice lat = relation_lattice(read_tuple(input));
  return {{"rank", lat.rank()}, {"basis", io::column_list(lat.basis)}};
}

Transcript mult_rel_check(const Json& input, const Params&, const Json& result) {
  const RationalTuple t = read_tuple(input);
  const IntegerMatrix basis = io::read_column_list(result.at("basis"), t.size(), "/result/basis");
  Transcript out;
  record(out, "basis_are_relations", [&] {
    for (std::size_t j = 0; j < basis.cols(); ++j)
      if (power_product(t, basis.col(j)) != 1) return false;
    return true;
  });
  record(out, "rank_consistent", [&] { return basis.cols() == result.at("rank").get<std::size_t>(); });
  record(out, "lattice_complete", [&] { return relation_lattice(t).basis == basis; });
  return out;
}

// ---- vandermonde

Json vandermonde_compute(const Json& input, const Params& params) {
  const RationalTuple t = read_tuple(input);
  const MultiPoly f = io::read_poly(io::field(input, "poly", ""), "/poly", t.size());
  const std::uint64_t l = io::read_uint64(io::field(input, "L", ""), "/L");
  Integer box = 1;
  for (std::size_t i = 0; i < t.size(); ++i) box *= Integer(static_cast<unsigned long>(l + 1));
  if (box > Integer(static_cast<unsigned long>(params.max_points)))
    throw PreconditionError("(L+1)^n exceeds --max-points");
  const IntVector lambda = vandermonde_relation(t, f, static_cast<std::uint32_t>(l));
  return {{"lambda", io::to_json(lambda)}};
}

Transcript vandermonde_check(const Json& input, const Params&, const Json& result) {
  const RationalTuple t = read_tuple(input);
  const MultiPoly f = io::read_poly(io::field(input, "poly", ""), "/poly", t.size());
  const std::uint64_t l = io::read_uint64(io::field(input, "L", ""), "/L");
  const IntVector lambda = io::read_integer_vector(result.at("lambda"), "/result/lambda");
  Transcript out;
  record(out, "hypothesis", [&] { return vandermonde_hypothesis_holds(t, f, static_cast<std::uint32_t>(l)); });
  record(out, "lambda_nonzero", [&] { return lambda.size() == t.size() && !is_zero_vector(lambda); });
  record(out, "lambda_within_L", [&] { return max_abs(lambda) <= Integer(static_cast<unsigned long>(l)); });
  record(out, "is_relation", [&] { return power_product(t, lambda) == 1; });
  return out;
}

// ---- xn

struct XnInput {
  RationalMatrix generators;
  std::uint64_t n;
  std::optional<std::uint32_t> degree;
};

XnInput read_xn(const Json& input, const Params& params) {
  XnInput x{io::read_rational_matrix(io::field(input, "generators", ""), "/generators"),
            io::read_uint64(io::field(input, "N", ""), "/N"), std::nullopt};
  if (auto* d = io::optional_field(input, "degree", "")) x.degree = static_cast<std::uint32_t>(io::read_uint64(*d, "/degree"));
  Integer box = 1;
  for (std::size_t i = 0; i < x.generators.rows(); ++i) box *= Integer(static_cast<unsigned long>(x.n + 1));
  if (box > Integer(static_cast<unsigned long>(params.max_points)))
    throw PreconditionError("(N+1)^m exceeds --max-points");
  return x;
}

Json xn_compute(const Json& input, const Params& params) {
  const XnInput x = read_xn(input, params);
  const XnSet set = enumerate_xn(GeneratorMatrix(x.generators), x.n);
  Json points = Json::array();
  for (const auto& p : set.points) points.push_back(io::to_json(p));
  Json r = {{"points", points}, {"count", set.points.size()}, {"box_size", set.box_size}};
  if (x.degree) {
    const auto poly = vanishing_poly(set.points, *x.degree);
    r["vanishing_poly"] = poly ? io::to_json(*poly) : Json();
  }
  return r;
}

Transcript xn_check(const Json& input, const Params& params, const Json& result) {
  const XnInput x = read_xn(input, params);
  std::vector<RatVector> points;
  for (std::size_t i = 0; i < result.at("points").size(); ++i)
    points.push_back(io::read_rational_vector(result.at("points")[i], "/result/points/" + std::to_string(i)));
  Transcript out;
  record(out, "points_distinct", [&] {
    std::set<RatVector> s(points.begin(), points.end());
    return s.size() == points.size() && points.size() == result.at("count").get<std::size_t>();
  });
  record(out, "points_recomputed", [&] {
    return enumerate_xn(GeneratorMatrix(x.generators), x.n).points == points;
  });
  if (x.degree && !result.at("vanishing_poly").is_null()) {
    const MultiPoly f = io::read_poly(result.at("vanishing_poly"), "/result/vanishing_poly", x.generators.cols());
    record(out, "poly_nonzero", [&] { return !f.is_zero() && f.total_degree() <= *x.degree; });
    record(out, "poly_vanishes", [&] {
      for (const auto& p : points)
        if (f.evaluate(p) != 0) return false;
      return true;
    });
  }
  return out;
}

// ---- theta

Json theta_compute(const Json& input, const Params&) {
  const std::uint64_t r = io::read_uint64(io::field(input, "r", ""), "/r");
  const std::uint64_t d = io::read_uint64(io::field(input, "d", ""), "/d");
  if (r == 0 || d == 0) throw PreconditionError("theta needs r >= 1 and d >= 1");
  const Integer th = theta(r, d);
  const long double bound = theta_asymptotic_bound(r, d);
  return {{"theta", io::to_json(th)},
          {"asymptotic_bound", static_cast<double>(bound)},
          {"exceeds_bound", static_cast<long double>(th.get_d()) > bound}};
}

Transcript theta_check(const Json& input, const Params&, const Json& result) {
  const std::uint64_t r = io::read_uint64(io::field(input, "r", ""), "/r");
  const std::uint64_t d = io::read_uint64(io::field(input, "d", ""), "/d");
  const Integer th = io::read_integer(result.at("theta"), "/result/theta");
  Transcript out;
  record(out, "theta_recomputed", [&] { return theta(r, d) == th; });
  if (r == 1) record(out, "closed_form", [&] { return th == Integer(static_cast<unsigned long>(d * (d - 1) / 2)); });
  return out;
}

// ---- p-adic

PadicNumber padic_value(const Json& input, unsigned long p, std::int64_t k, bool relative) {
  const UnitDescription u = io::read_unit(io::field(input, "value", ""), "/value");
  if (const auto* q = std::get_if<Rational>(&u)) {
    if (*q == 0 && relative) throw DomainError("log_p is undefined at 0");
    return relative && *q != 0 ? PadicNumber::from_rational_relative(*q, p, k) : PadicNumber::from_rational(*q, p, k);
  }
  const auto& alg = std::get<AlgebraicUnit>(u);
  if (alg.residues.size() != 1) throw ParseError("expected exactly one residue", "/value");
  return hensel_root(alg.minpoly, alg.residues[0], p, k);
}

Json padic_log_compute(const Json& input, const Params& params) {
  const unsigned long p = read_prime(input);
  const PadicNumber x = padic_value(input, p, read_precision(input, params), true);
  return {{"x", io::to_json(x)}, {"log", io::to_json(log_p(x))}};
}

Transcript padic_log_check(const Json& input, const Params& params, const Json& result) {
  const unsigned long p = read_prime(input);
  const std::int64_t k = read_precision(input, params);
  const PadicNumber reported = io::read_padic(result.at("log"), "/result/log");
  Transcript out;
  record(out, "precision_honest", [&] {
    const PadicNumber hi = log_p(padic_value(input, p, k + 10, true));
    return reported.absolute_precision() <= hi.absolute_precision() &&
           hi.truncate(reported.absolute_precision()) == reported;
  });
  record(out, "recomputed", [&] { return log_p(padic_value(input, p, k, true)) == reported; });
  return out;
}

Json padic_exp_compute(const Json& input, const Params& params) {
  const unsigned long p = read_prime(input);
  const PadicNumber x = padic_value(input, p, read_precision(input, params), false);
  return {{"x", io::to_json(x)}, {"exp", io::to_json(exp_p(x))}};
}

Transcript padic_exp_check(const Json& input, const Params& params, const Json& result) {
  const unsigned long p = read_prime(input);
  const std::int64_t k = read_precision(input, params);
  const PadicNumber reported = io::read_padic(result.at("exp"), "/result/exp");
  const PadicNumber x = padic_value(input, p, k, false);
  Transcript out;
  record(out, "precision_honest", [&] {
    const PadicNumber hi = exp_p(padic_value(input, p, k + 10, false));
    return hi.truncate(reported.absolute_precision()) == reported;
  });
  record(out, "log_inverts", [&] {
    const PadicNumber back = log_p(reported);
    const std::int64_t kk = std::min(back.absolute_precision(), x.absolute_precision());
    return back.truncate(kk) == x.truncate(kk);
  });
  return out;
}

Json hensel_compute(const Json& input, const Params& params) {
  const unsigned long p = read_prime(input);
  const IntVector f = io::read_integer_vector(io::field(input, "poly", ""), "/poly");
  const Integer r0 = io::read_integer(io::field(input, "residue", ""), "/residue");
  return {{"root", io::to_json(hensel_root(f, r0, p, read_precision(input, params)))}};
}

Transcript hensel_check(const Json& input, const Params& params, const Json& result) {
  const unsigned long p = read_prime(input);
  const std::int64_t k = read_precision(input, params);
  const IntVector f = io::read_integer_vector(io::field(input, "poly", ""), "/poly");
  const Integer r0 = io::read_integer(io::field(input, "residue", ""), "/residue");
  const PadicNumber root = io::read_padic(result.at("root"), "/result/root");
  const Integer modulus = prime_power(p, k);
  auto root_integer = [&] {
    if (root.prime() != p || root.absolute_precision() != k || (!root.is_zero() && root.valuation() < 0))
      throw Error("root is not an integral p-adic number at the requested precision");
    return root.is_zero() ? Integer(0) : Integer(root.unit() * prime_power(p, root.valuation()));
  };
  Transcript out;
  record(out, "root_satisfies", [&] {
    const Integer r = root_integer();
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * r + *it) % modulus;
    return acc == 0;
  });
  record(out, "lifts_residue", [&] {
    Integer diff = root_integer() - r0;
    return diff % Integer(p) == 0;
  });
  return out;
}

std::vector<UnitDescription> read_units(const Json& input) {
  const Json& arr = io::field(input, "units", "");
  if (!arr.is_array()) throw ParseError("expected an array", "/units");
  std::vector<UnitDescription> units;
  for (std::size_t i = 0; i < arr.size(); ++i) units.push_back(io::read_unit(arr[i], "/units/" + std::to_string(i)));
  return units;
}

Json log_matrix_compute(const Json& input, const Params& params) {
  const LogMatrix lm = log_matrix(read_units(input), read_prime(input), read_precision(input, params));
  Json rows = Json::array();
  for (std::size_t i = 0; i < lm.matrix.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < lm.matrix.cols(); ++j) row.push_back(io::to_json(lm.matrix(i, j)));
    rows.push_back(row);
  }
  return {{"matrix", rows},
          {"certified_rank", lm.rank.certified_rank},
          {"pivot_rows", lm.rank.pivot_rows},
          {"pivot_cols", lm.rank.pivot_cols},
          {"pivot_valuations", lm.rank.pivot_valuations},
          {"precision", lm.precision}};
}

Transcript log_matrix_check(const Json& input, const Params& params, const Json& result) {
  const LogMatrix lm = log_matrix(read_units(input), read_prime(input), read_precision(input, params));
  const Json& rows = result.at("matrix");
  Transcript out;
  record(out, "matrix_recomputed", [&] {
    if (rows.size() != lm.matrix.rows()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != lm.matrix.cols()) return false;
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (io::read_padic(rows[i][j], "/result/matrix") != lm.matrix(i, j)) return false;
    }
    return true;
  });
  record(out, "pivot_minor_nonsingular", [&] {
    const auto pr = result.at("pivot_rows").get<std::vector<std::size_t>>();
    const auto pc = result.at("pivot_cols").get<std::vector<std::size_t>>();
    const std::size_t r = result.at("certified_rank").get<std::size_t>();
    if (pr.size() != r || pc.size() != r) return false;
    return padic_rank(lm.matrix.submatrix(pr, pc)).certified_rank == r;
  });
  return out;
}

struct InterpInput {
  Rational u;
  unsigned long p;
  IntVector a, y;
};

InterpInput read_interp(const Json& input) {
  return {io::read_rational(io::field(input, "u", ""), "/u"), read_prime(input),
          io::read_integer_vector(io::field(input, "a", ""), "/a"),
          io::read_integer_vector(io::field(input, "y", ""), "/y")};
}

Json interp_det_compute(const Json& input, const Params&) {
  const InterpInput in = read_interp(input);
  const InterpDetReport rep = interp_det_valuation(in.u, in.p, in.a, in.y);
  return {{"valuation", rep.valuation},
          {"theta", io::to_json(rep.theta)},
          {"u_valuation", rep.u_valuation},
          {"bound", io::to_json(rep.bound)},
          {"holds", rep.holds},
          {"working_precision", rep.working_precision}};
}

Transcript interp_det_check(const Json& input, const Params&, const Json& result) {
  const InterpInput in = read_interp(input);
  const std::int64_t v = result.at("valuation").get<std::int64_t>();
  const Integer bound = io::read_integer(result.at("bound"), "/result/bound");
  const std::size_t d = in.a.size();
  Transcript out;
  record(out, "valuation_exact", [&] {
    Integer span = max_abs(in.a) * max_abs(in.y);
    if (d > 10 || span > 2000) {
      return interp_det_valuation_at(in.u, in.p, in.a, in.y, 2 * result.at("working_precision").get<std::int64_t>())
                 .valuation == v;
    }
    RationalMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = pow(in.u, Integer(in.a[i] * in.y[j]));
    const Rational det = determinant_Q(m);
    return det != 0 && valuation(det, in.p) == v;
  });
  record(out, "bound_recomputed", [&] {
    const Integer th(static_cast<unsigned long>(d * (d - 1) / 2));
    return bound == th * Integer(static_cast<long>(valuation(in.u - 1, in.p)));
  });
  record(out, "bound_holds", [&] { return Integer(static_cast<long>(v)) >= bound; });
  return out;
}

// ---- series

std::vector<TruncatedSeries> read_series_list(const Json& input) {
  const Json& arr = io::field(input, "series", "");
  if (!arr.is_array()) throw ParseError("expected an array of series", "/series");
  std::vector<TruncatedSeries> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(io::read_series(arr[i], "/series/" + std::to_string(i)));
  if (out.empty()) throw ParseError("need at least one series", "/series");
  return out;
}

std::string series_op(const Json& input) { return io::read_string(io::field(input, "op", ""), "/op"); }

IntVector read_ms(const Json& input, std::size_t n) {
  IntVector ms = io::read_integer_vector(io::field(input, "ms", ""), "/ms");
  if (ms.size() != n) throw ParseError("one multiplier per series expected", "/ms");
  return ms;
}

Json series_compute(const Json& input, const Params&) {
  const std::string op = series_op(input);
  const auto ys = read_series_list(input);
  if (op == "exp") return {{"series", io::to_json(series_exp(ys.at(0)))}};
  if (op == "log") return {{"series", io::to_json(series_log(ys.at(0)))}};
  if (op == "relations") {
    const SeriesRelations rel = relation_detect(ys);
    return {{"basis", io::column_list(rel.basis)}, {"rank", rel.basis.cols()}, {"valid_to_order", rel.order}};
  }
  if (op == "product-exp") {
    const bool holds = product_exp_identity(ys, read_ms(input, ys.size()));
    return {{"holds", holds}, {"found", holds}};
  }
  throw ParseError("unknown op (expected exp, log, relations, product-exp)", "/op");
}

Transcript series_check(const Json& input, const Params&, const Json& result) {
  const std::string op = series_op(input);
  const auto ys = read_series_list(input);
  Transcript out;
  if (op == "exp" || op == "log") {
    const TruncatedSeries s = io::read_series(result.at("series"), "/result/series");
    record(out, "inverse_roundtrip", [&] {
      return (op == "exp" ? series_log(s) : series_exp(s)) == ys.at(0);
    });
  } else if (op == "relations") {
    const IntegerMatrix basis = io::read_column_list(result.at("basis"), ys.size(), "/result/basis");
    record(out, "basis_annihilates", [&] {
      for (std::size_t j = 0; j < basis.cols(); ++j) {
        TruncatedSeries s(ys[0].order(), {});
        for (std::size_t i = 0; i < ys.size(); ++i) s = s + Rational(basis(i, j)) * ys[i];
        if (!s.is_zero()) return false;
      }
      return true;
    });
    record(out, "rank_complete", [&] {
      RationalMatrix c(ys[0].order(), ys.size());
      for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t k = 0; k < ys[i].order(); ++k) c(k, i) = ys[i][k];
      return basis.cols() == ys.size() - rank_Q(c) && rank_Q(to_rational(basis)) == basis.cols();
    });
  } else if (op == "product-exp") {
    record(out, "identity_holds", [&] {
      return product_exp_identity(ys, read_ms(input, ys.size())) && result.at("holds").get<bool>();
    });
  }
  return out;
}

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"structural-rank", {structural_rank_compute, structural_rank_check}},
      {"det-rep", {det_rep_compute, det_rep_check}},
      {"wm-decompose", {wm_compute, wm_check}},
      {"mcc", {mcc_compute, mcc_check}},
      {"siegel", {siegel_compute, siegel_check}},
      {"mult-rel", {mult_rel_compute, mult_rel_check}},
      {"vandermonde", {vandermonde_compute, vandermonde_check}},
      {"xn", {xn_compute, xn_check}},
      {"theta", {theta_compute, theta_check}},
      {"padic-log", {padic_log_compute, padic_log_check}},
      {"padic-exp", {padic_exp_compute, padic_exp_check}},
      {"hensel", {hensel_compute, hensel_check}},
      {"log-matrix", {log_matrix_compute, log_matrix_check}},
      {"interp-det", {interp_det_compute, interp_det_check}},
      {"series", {series_compute, series_check}},
  };
  return table;
}

Json params_json(const Params& p) {
  return {{"prec", p.prec}, {"height", p.height}, {"max_points", p.max_points}, {"strategy", p.strategy}};
}

Params params_from(const Json& cert) {
  Params p;
  p.seed = io::read_uint64(io::field(cert, "seed", ""), "/seed");
  const Json& j = io::field(cert, "params", "");
  p.prec = io::read_int64(io::field(j, "prec", "/params"), "/params/prec");
  p.height = static_cast<std::uint32_t>(io::read_uint64(io::field(j, "height", "/params"), "/params/height"));
  p.max_points = io::read_uint64(io::field(j, "max_points", "/params"), "/params/max_points");
  p.strategy = io::read_string(io::field(j, "strategy", "/params"), "/params/strategy");
  return p;
}

Outcome error_outcome(int code, const std::string& kind, const std::string& message, const std::string& pointer = {}) {
  Json e = {{"kind", kind}, {"message", message}};
  if (!pointer.empty()) e["pointer"] = pointer;
  return {code, {{"error", e}}};
}

template <class F>
Outcome guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return error_outcome(2, "parse", e.what(), e.pointer().empty() ? "/" : e.pointer());
  } catch (const PreconditionError& e) {
    return error_outcome(2, "precondition", e.what());
  } catch (const DomainError& e) {
    return error_outcome(2, "domain", e.what());
  } catch (const SolverFailure& e) {
    return error_outcome(1, "solver", e.what());
  } catch (const PrecisionError& e) {
    return error_outcome(1, "precision", e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_outcome(2, "parse", e.what());
  } catch (const Error& e) {
    return error_outcome(2, "error", e.what());
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, cmd] : commands()) v.push_back(name);
    v.push_back("verify");
    return v;
  }();
  return names;
}

Outcome run_command(const std::string& command, const Json& input, const Params& params) {
  return guarded([&]() -> Outcome {
    if (command == "verify") return verify_certificate(input);
    auto it = commands().find(command);
    if (it == commands().end()) throw ParseError("unknown subcommand '" + command + "'");
    if (!input.is_object()) throw ParseError("input must be a JSON object", "/");
    const Json result = it->second.compute(input, params);
    Json cert = {{"schema_version", kSchemaVersion},
                 {"tool", kToolName},
                 {"tool_version", kToolVersion},
                 {"command", command},
                 {"seed", params.seed},
                 {"params", params_json(params)},
                 {"input", input},
                 {"result", result}};
    if (!found(result)) {
      cert["transcript"] = Json::array();
      return {1, cert};
    }
    const Transcript t = it->second.check(input, params, result);
    cert["transcript"] = transcript_json(t);
    return {all_passed(t) ? 0 : 1, cert};
  });
}

Outcome verify_certificate(const Json& cert) {
  return guarded([&]() -> Outcome {
    if (!cert.is_object()) throw ParseError("certificate must be a JSON object", "/");
    const std::int64_t schema = io::read_int64(io::field(cert, "schema_version", ""), "/schema_version");
    if (schema != kSchemaVersion) throw ParseError("unsupported schema version", "/schema_version");
    const std::string command = io::read_string(io::field(cert, "command", ""), "/command");
    auto it = commands().find(command);
    if (it == commands().end()) throw ParseError("unknown command", "/command");
    const Params params = params_from(cert);
    const Json& input = io::field(cert, "input", "");
    const Json& result = io::field(cert, "result", "");
    const Json& embedded = io::field(cert, "transcript", "");
    if (!embedded.is_array()) throw ParseError("expected an array", "/transcript");

    Transcript t;
    bool ran = true;
    try {
      if (found(result)) t = it->second.check(input, params, result);
      else ran = false;
    } catch (const std::exception&) {
      ran = false;
    }
    const Json fresh = transcript_json(t);
    const bool matches = ran && fresh == embedded;
    const bool verified = ran && !t.empty() && all_passed(t) && matches;
    return {verified ? 0 : 1,
            {{"verified", verified}, {"command", command}, {"transcript", fresh}, {"matches_embedded", matches}}};
  });
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace transcert
