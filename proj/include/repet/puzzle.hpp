#ifndef REPET_PUZZLE_HPP
#define REPET_PUZZLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repet/digits.hpp"
#include "repet/factorization.hpp"
#include "repet/natural.hpp"

namespace repet {

class FactorCache;

// Order in which the divisor chain is dealt out to the players.
enum class ChainOrder { ascending, shuffled };

// One round of the game: a secret generator block, the number obtained by
// replicating it, and a chain of divisors whose product returns the big
// number to the generator.
struct PuzzleInstance {
  Generator generator;
  std::size_t replication = 1;
  Natural big_number;
  std::vector<Natural> chain;
};

// One handoff in a transcript.  The quotient is absent in unsolved skeletons.
struct TranscriptStep {
  Natural divisor;
  std::optional<Natural> quotient;
};

// A puzzle worksheet: the public parameters, the chain of divisors with the
// claimed quotient for each, and the claimed final answer.
struct PuzzleTranscript {
  std::size_t k = 0;
  std::size_t r = 0;
  Generator generator;
  Natural big_number;
  std::vector<TranscriptStep> steps;
  std::optional<Natural> final_claim;
};

// Outcome of checking a transcript.  `failed_step` is 1-based; the value
// steps.size() + 1 denotes the final-answer check.  `expected` carries the
// correct value for the check that failed (or the final answer on a pass).
struct Verdict {
  bool pass = false;
  std::size_t failed_step = 0;
  Natural expected;
};

// Builds a fresh instance: the generator digits are drawn from the seeded
// generator (first digit 1-9, the rest 0-9), the divisor chain is the full
// factorization of the co-divisor number for (k, r) listed with multiplicity
// in ascending order, then optionally shuffled with further draws from the
// same generator.  Throws BudgetExhausted if the chain cannot be completed
// within the factoring budget, and LimitExceeded if k*r exceeds the guard.
PuzzleInstance new_puzzle(std::size_t k, std::size_t r, uint64_t rng_seed,
                          ChainOrder order = ChainOrder::ascending,
                          const FactorizationConfig& config = {},
                          FactorCache* cache = nullptr,
                          std::size_t digit_guard = kDefaultDigitGuard);

// Performs the chain of exact divisions, returning every intermediate
// quotient in order.  With an empty chain the big number itself is returned
// as the only entry.
std::vector<Natural> solve(const PuzzleInstance& instance);

// A transcript with divisors only: quotients and final answer left blank.
PuzzleTranscript skeleton_transcript(const PuzzleInstance& instance);

// A fully worked transcript with all quotients and the final answer filled.
PuzzleTranscript solved_transcript(const PuzzleInstance& instance);

// Serializes a transcript to its canonical byte form (JSON, two-space
// indent, one trailing newline, all numbers as decimal strings).
std::string transcript_to_string(const PuzzleTranscript& transcript);

// Parses the canonical byte form.  Unknown fields, missing fields, or
// numbers not written as decimal strings raise MalformedTranscript with a
// message naming the offending field.
PuzzleTranscript transcript_from_string(const std::string& text);

// Rebuilds the instance described by a transcript, checking that k matches
// the generator, the replication is positive, the big number really is the
// generator replicated r times, and no divisor is zero.  Claimed quotients
// are ignored.  Violations raise MalformedTranscript.
PuzzleInstance instance_from_transcript(const PuzzleTranscript& transcript);

// Checks a completed transcript.  Every step must carry a quotient and the
// final answer must be present, otherwise MalformedTranscript is raised.
// The verdict fails at the first claimed quotient that differs from the
// true one, or at the final-answer check when the chain does not actually
// return to the generator.
Verdict verify_transcript(const PuzzleTranscript& transcript);

// Variants of an instance over reorderings of its divisor chain.  Chains of
// up to eight divisors are enumerated exhaustively (duplicates collapsed);
// longer chains yield `sample_count` deterministic shuffles.
std::vector<PuzzleInstance> permuted_chains(const PuzzleInstance& instance,
                                            std::size_t sample_count = 720);

}  // namespace repet

#endif  // REPET_PUZZLE_HPP
