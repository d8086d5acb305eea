#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "transcert/symbolic_matrix.hpp"

namespace transcert {

struct RankThreshold {
  std::size_t structural_rank = 0;
  Rational threshold;  // mn / (m + n)
  bool hypothesis = false;
};

RankThreshold rank_threshold(const SymbolicMatrix& m);

/// P*M*Q has a zero block in its first m' rows and last n' columns.
struct ZeroBlockCertificate {
  RationalMatrix p;
  RationalMatrix q;
  std::size_t m_prime = 0;
  std::size_t n_prime = 0;
};

struct ZeroBlockCheck {
  bool zero_block = false;
  bool meets_threshold = false;  // m'/m + n'/n > 1
  /// First nonzero entry of the block (row, col in P*M*Q) when zero_block is false.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Recomputes P*M*Q entrywise. Throws PreconditionError on singular P or Q,
/// shape mismatch, or m', n' outside [1, m] x [1, n].
ZeroBlockCheck verify_zero_block(const SymbolicMatrix& m, const ZeroBlockCertificate& c);

struct AlternatingStrategy {
  std::uint64_t seed = 0;
  std::size_t iters = 20;
};

struct ExhaustiveStrategy {
  std::uint32_t height_bound = 2;
};

using ZeroBlockStrategy = std::variant<AlternatingStrategy, ExhaustiveStrategy>;

/// Bounded search for a threshold-meeting zero block. An empty result only
/// means the sweep found nothing.
std::optional<ZeroBlockCertificate> find_zero_block(const SymbolicMatrix& m, const ZeroBlockStrategy& strategy);

/// Nonzero w, v with w^T M_i v = 0 for every component M_i.
struct MccWitness {
  IntVector w;
  IntVector v;
};

bool verify_mcc(const SymbolicMatrix& m, const MccWitness& witness);

/// Tries primitive v of height <= height_bound in the order (height, support
/// size, support, values); w comes from the left kernel of [M_1 v ... M_r v].
std::optional<MccWitness> mcc_witness(const SymbolicMatrix& m, std::uint32_t height_bound);

/// Primitive integer vectors with first nonzero entry positive and entries
/// in [-h, h], in the search order used by mcc_witness and find_zero_block.
std::vector<IntVector> primitive_vectors(std::size_t n, std::uint32_t height_bound);

enum class SixCase { hypothesis_not_met, rows, cols, counterexample_candidate };

const char* to_string(SixCase c);

struct SixExponentialsReport {
  std::size_t structural_rank = 0;
  SixCase outcome = SixCase::hypothesis_not_met;
  std::optional<DependenceCertificate> dependence;
  std::optional<ZeroBlockCertificate> block;
};

/// 2x3 only; throws PreconditionError otherwise.
SixExponentialsReport six_exponentials_check(const SymbolicMatrix& m);

}  // namespace transcert
