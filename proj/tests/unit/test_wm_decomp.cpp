#include <doctest.h>

#include "transcert/errors.hpp"
#include "wm_fixtures.hpp"

using namespace transcert;

namespace {

SymbolicMatrix example_matrix() {
  SymbolicMatrix m(SymbolSpace({"x", "y", "z"}, false), 3, 3);
  m.add(0, 0, 0, 1);
  m.add(0, 1, 2, 1);
  m.add(1, 1, 1, 1);
  m.add(1, 2, 0, -1);
  m.add(2, 0, 1, 1);
  m.add(2, 2, 2, 1);
  return m;
}

SymbolicMatrix rank_one(std::size_t rows, std::size_t cols) {
  SymbolicMatrix m(SymbolSpace({"l1"}, false), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.add(i, j, 0, static_cast<long>(i + 1));
  return m;
}

}  // namespace

TEST_CASE("rank_threshold examples") {
  const auto r23 = rank_threshold(rank_one(2, 3));
  CHECK(r23.structural_rank == 1);
  CHECK(r23.threshold == Rational(6, 5));
  CHECK(r23.hypothesis);
  SymbolicMatrix id(SymbolSpace({"l1"}, false), 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.add(i, i, 0, 1);
  CHECK_FALSE(rank_threshold(id).hypothesis);
  const auto r33 = rank_threshold(rank_one(3, 3));
  CHECK(r33.threshold == Rational(3, 2));
  CHECK(r33.hypothesis);
}

TEST_CASE("verify_zero_block examples") {
  SymbolicMatrix m(SymbolSpace({"a", "b"}, false), 2, 2);
  m.add(0, 0, 0, 1);
  m.add(1, 0, 1, 1);
  m.add(1, 1, 0, 1);
  const ZeroBlockCertificate c{RationalMatrix::identity(2, Rational(1)), RationalMatrix::identity(2, Rational(1)), 1, 1};
  const auto ok = verify_zero_block(m, c);
  CHECK(ok.zero_block);
  CHECK_FALSE(ok.meets_threshold);

  Rng rng(61);
  const SymbolicMatrix r = oracle::random_symbolic(rng, 3, 3, 3);
  const ZeroBlockCertificate rc{oracle::random_invertible(rng, 3, 3), oracle::random_invertible(rng, 3, 3), 2, 2};
  const auto bad = verify_zero_block(r, rc);
  CHECK_FALSE(bad.zero_block);
  REQUIRE(bad.witness);
  CHECK(bad.witness->first < 2);
  CHECK(bad.witness->second >= 1);
  CHECK(bad.meets_threshold);

  ZeroBlockCertificate singular = c;
  singular.p(1, 1) = 0;
  singular.p(1, 0) = 0;
  CHECK_THROWS_AS(verify_zero_block(m, singular), PreconditionError);
}

TEST_CASE("planted blocks verify with the planting transforms") {
  Rng rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t mp = 2, np = 2;
    SymbolicMatrix b = oracle::random_symbolic(rng, 3, 3, 2, 2);
    for (std::size_t i = 0; i < mp; ++i)
      for (std::size_t j = 3 - np; j < 3; ++j)
        for (auto& c : b.at(i, j)) c = 0;
    const RationalMatrix p0 = oracle::random_invertible(rng, 3, 2);
    const RationalMatrix q0 = oracle::random_invertible(rng, 3, 2);
    const SymbolicMatrix m = multiply(inverse_Q(p0), b, inverse_Q(q0));
    const auto check = verify_zero_block(m, {p0, q0, mp, np});
    CHECK(check.zero_block);
    CHECK(check.meets_threshold);
  }
}

TEST_CASE("verification is invariant under split-preserving block-triangular changes") {
  Rng rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    const auto planted = oracle::planted_block(rng, 3, 4, 2);
    const auto cert = find_zero_block(planted.m, ExhaustiveStrategy{2});
    REQUIRE(cert);
    // L mixes the first m' rows only among themselves; R maps the last n'
    // columns into themselves
    RationalMatrix l = oracle::random_invertible(rng, 3, 2);
    for (std::size_t i = 0; i < cert->m_prime; ++i)
      for (std::size_t j = cert->m_prime; j < 3; ++j) l(i, j) = 0;
    RationalMatrix r = oracle::random_invertible(rng, 4, 2);
    for (std::size_t i = 0; i < 4 - cert->n_prime; ++i)
      for (std::size_t j = 4 - cert->n_prime; j < 4; ++j) r(i, j) = 0;
    if (determinant_Q(l) == 0 || determinant_Q(r) == 0) continue;
    const ZeroBlockCertificate moved{l * cert->p, cert->q * r, cert->m_prime, cert->n_prime};
    CHECK(verify_zero_block(planted.m, moved).zero_block);
  }
}

TEST_CASE("find_zero_block on a literal zero block") {
  SymbolicMatrix m(SymbolSpace({"a", "b"}, false), 2, 3);
  m.add(0, 0, 0, 1);
  m.add(1, 0, 1, 1);
  m.add(1, 1, 0, 1);
  m.add(1, 2, 1, 1);
  for (const ZeroBlockStrategy& s : {ZeroBlockStrategy{ExhaustiveStrategy{1}}, ZeroBlockStrategy{AlternatingStrategy{}}}) {
    const auto c = find_zero_block(m, s);
    REQUIRE(c);
    const auto v = verify_zero_block(m, *c);
    CHECK(v.zero_block);
    CHECK(v.meets_threshold);
  }
}

TEST_CASE("find_zero_block recovers planted conjugated blocks") {
  Rng rng(64);
  for (int trial = 0; trial < 12; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto planted = oracle::planted_block(rng, m, n, static_cast<std::size_t>(rng.uniform(1, 3)));
    const auto c = find_zero_block(planted.m, ExhaustiveStrategy{2});
    REQUIRE(c);
    const auto v = verify_zero_block(planted.m, *c);
    CHECK(v.zero_block);
    CHECK(v.meets_threshold);
  }
}

TEST_CASE("find_zero_block finds nothing for a generic full-rank 3x3") {
  SymbolicMatrix m(SymbolSpace({"a", "b", "c"}, false), 3, 3);
  const long coef[3][3][3] = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                              {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},
                              {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) m.add(i, j, k, coef[i][j][k]);
  CHECK(structural_rank(m) == 3);
  CHECK(!find_zero_block(m, ExhaustiveStrategy{2}));
  CHECK(!find_zero_block(m, AlternatingStrategy{7, 20}));
}

TEST_CASE("alternating search is deterministic for a seed") {
  Rng rng(65);
  const auto planted = oracle::planted_block(rng, 3, 3, 1);
  const auto a = find_zero_block(planted.m, AlternatingStrategy{5, 20});
  const auto b = find_zero_block(planted.m, AlternatingStrategy{5, 20});
  CHECK(a.has_value() == b.has_value());
  if (a && b) {
    CHECK(a->p == b->p);
    CHECK(a->q == b->q);
  }
}

TEST_CASE("primitive vector order starts with unit vectors") {
  const auto v = primitive_vectors(3, 2);
  REQUIRE(v.size() > 3);
  CHECK(v[0] == IntVector{1, 0, 0});
  CHECK(v[1] == IntVector{0, 1, 0});
  CHECK(v[2] == IntVector{0, 0, 1});
  for (const auto& x : v) CHECK(max_abs(x) <= 2);
}

TEST_CASE("mcc_witness examples") {
  const auto w = mcc_witness(example_matrix(), 1);
  REQUIRE(w);
  CHECK(w->v == IntVector{1, 0, 0});
  CHECK(w->w == IntVector{0, 1, 0});
  CHECK(verify_mcc(example_matrix(), *w));

  SymbolicMatrix full(SymbolSpace({"a", "b"}, false), 2, 2);
  full.add(0, 0, 0, 1);
  full.add(1, 1, 0, 1);
  full.add(0, 1, 1, 1);
  full.add(1, 0, 1, -1);
  CHECK(structural_rank(full) == 2);
  CHECK(!mcc_witness(full, 2));
  CHECK_THROWS_AS(mcc_witness(rank_one(2, 3), 1), PreconditionError);
}

TEST_CASE("mcc_witness exists whenever symbols are fewer than columns") {
  Rng rng(66);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto r = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n) - 1));
    const SymbolicMatrix m = oracle::random_symbolic(rng, n, n, r, 3);
    const auto w = mcc_witness(m, 1);
    REQUIRE(w);
    CHECK(w->v == primitive_vectors(n, 1).front());
    CHECK(verify_mcc(m, *w));
    CHECK(primitive_integer(std::span<const Integer>(w->w)) == w->w);
    MccWitness bad = *w;
    bad.w = IntVector(n, Integer(0));
    CHECK_FALSE(verify_mcc(m, bad));
  }
}

TEST_CASE("six exponentials report") {
  SymbolicMatrix rows(SymbolSpace({"a", "b", "c"}, false), 2, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    rows.add(0, j, j, 1);
    rows.add(1, j, j, 2);
  }
  const auto rr = six_exponentials_check(rows);
  CHECK(rr.outcome == SixCase::rows);
  CHECK(rr.block.has_value());

  SymbolicMatrix cols(SymbolSpace({"a", "b"}, false), 2, 3);
  cols.add(0, 0, 0, 1);
  cols.add(1, 0, 1, 1);
  cols.add(0, 1, 0, 3);
  cols.add(1, 1, 1, 3);
  cols.add(0, 2, 0, -1);
  cols.add(1, 2, 1, -1);
  const auto cr = six_exponentials_check(cols);
  CHECK(cr.structural_rank == 1);
  CHECK(cr.outcome == SixCase::cols);

  SymbolicMatrix generic(SymbolSpace({"a", "b", "c", "d", "e", "f"}, false), 2, 3);
  for (std::size_t k = 0; k < 6; ++k) generic.add(k / 3, k % 3, k, 1);
  CHECK(six_exponentials_check(generic).outcome == SixCase::hypothesis_not_met);
  CHECK_THROWS_AS(six_exponentials_check(example_matrix()), PreconditionError);
}
