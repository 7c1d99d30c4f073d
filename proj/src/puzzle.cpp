#include "repet/puzzle.hpp"

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>

#include <json.hpp>

#include "repet/errors.hpp"
#include "repet/factor_cache.hpp"

namespace repet {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& why) {
  throw MalformedTranscript("malformed transcript: " + why);
}

std::string require_string(const Json& node, const std::string& field) {
  if (!node.is_string()) {
    malformed("field '" + field + "' must be a decimal string");
  }
  return node.get<std::string>();
}

Natural require_natural(const Json& node, const std::string& field) {
  try {
    return Natural::from_decimal(require_string(node, field));
  } catch (const ParseError&) {
    malformed("field '" + field + "' is not a decimal number");
  }
}

std::size_t require_size(const Json& node, const std::string& field) {
  const Natural value = require_natural(node, field);
  if (!value.fits_uint64()) {
    malformed("field '" + field + "' is out of range");
  }
  return static_cast<std::size_t>(value.to_uint64());
}

void reject_unknown(const Json& object,
                    std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    bool known = false;
    for (const char* name : allowed) known = known || it.key() == name;
    if (!known) malformed("unknown field '" + it.key() + "'" + where);
  }
}

// Deals the chain into a deterministic order using draws from `rng`.
void shuffle_chain(std::vector<Natural>& chain, std::mt19937_64& rng) {
  for (std::size_t i = chain.size(); i > 1; --i) {
    std::swap(chain[i - 1], chain[rng() % i]);
  }
}

}  // namespace

PuzzleInstance new_puzzle(std::size_t k, std::size_t r, uint64_t rng_seed,
                          ChainOrder order, const FactorizationConfig& config,
                          FactorCache* cache, std::size_t digit_guard) {
  if (k == 0) {
    throw InvalidParameter("a puzzle needs a generator of at least one digit");
  }
  if (r == 0) {
    throw InvalidParameter("a puzzle needs at least one copy of the generator");
  }
  const CoDivisor co = co_divisor(k, r, digit_guard);

  std::mt19937_64 rng(rng_seed);
  std::string digits(1, static_cast<char>('1' + rng() % 9));
  for (std::size_t i = 1; i < k; ++i) {
    digits.push_back(static_cast<char>('0' + rng() % 10));
  }
  Generator generator{DigitString(digits)};

  const Factorization factored = factorize_cached(co.value, cache, config);
  if (!factored.complete) {
    throw BudgetExhausted(
        "the divisor chain for this puzzle could not be completed within the "
        "factoring budget");
  }
  std::vector<Natural> chain;
  for (const FactorEntry& entry : factored.factors) {
    for (std::size_t m = 0; m < entry.multiplicity; ++m) {
      chain.push_back(entry.prime);
    }
  }
  if (order == ChainOrder::shuffled) {
    shuffle_chain(chain, rng);
  }

  Natural big = replicate(generator, r, digit_guard).value;
  return PuzzleInstance{std::move(generator), r, std::move(big),
                        std::move(chain)};
}

std::vector<Natural> solve(const PuzzleInstance& instance) {
  std::vector<Natural> quotients;
  if (instance.chain.empty()) {
    quotients.push_back(instance.big_number);
    return quotients;
  }
  Natural current = instance.big_number;
  for (const Natural& divisor : instance.chain) {
    current = divide_exact(current, divisor);
    quotients.push_back(current);
  }
  return quotients;
}

PuzzleTranscript skeleton_transcript(const PuzzleInstance& instance) {
  PuzzleTranscript transcript{instance.generator.length(),
                              instance.replication,
                              instance.generator,
                              instance.big_number,
                              {},
                              std::nullopt};
  for (const Natural& divisor : instance.chain) {
    transcript.steps.push_back(TranscriptStep{divisor, std::nullopt});
  }
  return transcript;
}

PuzzleTranscript solved_transcript(const PuzzleInstance& instance) {
  PuzzleTranscript transcript = skeleton_transcript(instance);
  const std::vector<Natural> quotients = solve(instance);
  for (std::size_t i = 0; i < transcript.steps.size(); ++i) {
    transcript.steps[i].quotient = quotients[i];
  }
  transcript.final_claim = quotients.back();
  return transcript;
}

std::string transcript_to_string(const PuzzleTranscript& transcript) {
  Json j;
  j["k"] = std::to_string(transcript.k);
  j["r"] = std::to_string(transcript.r);
  j["generator"] = transcript.generator.block().digits();
  j["big_number"] = transcript.big_number.to_decimal();
  j["steps"] = Json::array();
  for (const TranscriptStep& step : transcript.steps) {
    Json node;
    node["divisor"] = step.divisor.to_decimal();
    if (step.quotient) {
      node["quotient"] = step.quotient->to_decimal();
    }
    j["steps"].push_back(std::move(node));
  }
  if (transcript.final_claim) {
    j["final"] = transcript.final_claim->to_decimal();
  }
  return j.dump(2) + "\n";
}

PuzzleTranscript transcript_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) {
    malformed("the top level must be a JSON object");
  }
  reject_unknown(j, {"k", "r", "generator", "big_number", "steps", "final"},
                 "");
  for (const char* name : {"k", "r", "generator", "big_number", "steps"}) {
    if (!j.contains(name)) {
      malformed(std::string("field '") + name + "' is missing");
    }
  }

  const std::size_t k = require_size(j["k"], "k");
  const std::size_t r = require_size(j["r"], "r");
  const std::string block = require_string(j["generator"], "generator");
  std::optional<Generator> generator;
  try {
    generator.emplace(DigitString(block));
  } catch (const Error&) {
    malformed(
        "field 'generator' must be a digit block with no leading zero and a "
        "nonzero value");
  }
  const Natural big = require_natural(j["big_number"], "big_number");

  if (!j["steps"].is_array()) {
    malformed("field 'steps' must be an array");
  }
  std::vector<TranscriptStep> steps;
  std::size_t index = 0;
  for (const Json& node : j["steps"]) {
    ++index;
    const std::string where = " in step " + std::to_string(index);
    if (!node.is_object()) {
      malformed("each entry of 'steps' must be an object" + where);
    }
    reject_unknown(node, {"divisor", "quotient"}, where);
    if (!node.contains("divisor")) {
      malformed("field 'divisor' is missing" + where);
    }
    TranscriptStep step{require_natural(node.at("divisor"), "divisor"),
                        std::nullopt};
    if (node.contains("quotient")) {
      step.quotient = require_natural(node.at("quotient"), "quotient");
    }
    steps.push_back(std::move(step));
  }

  std::optional<Natural> final_claim;
  if (j.contains("final")) {
    final_claim = require_natural(j["final"], "final");
  }
  return PuzzleTranscript{k,   r,
                          std::move(*generator), big,
                          std::move(steps),      std::move(final_claim)};
}

PuzzleInstance instance_from_transcript(const PuzzleTranscript& transcript) {
  if (transcript.r == 0) {
    malformed("field 'r' must be at least 1");
  }
  if (transcript.k != transcript.generator.length()) {
    malformed("field 'k' does not match the generator length");
  }
  const Natural expected_big =
      replicate(transcript.generator, transcript.r).value;
  if (transcript.big_number != expected_big) {
    malformed("field 'big_number' is not the generator replicated r times");
  }
  std::vector<Natural> chain;
  std::size_t index = 0;
  for (const TranscriptStep& step : transcript.steps) {
    ++index;
    if (step.divisor.is_zero()) {
      malformed("step " + std::to_string(index) + " has a zero divisor");
    }
    chain.push_back(step.divisor);
  }
  return PuzzleInstance{transcript.generator, transcript.r,
                        transcript.big_number, std::move(chain)};
}

Verdict verify_transcript(const PuzzleTranscript& transcript) {
  instance_from_transcript(transcript);  // structural checks
  for (std::size_t i = 0; i < transcript.steps.size(); ++i) {
    if (!transcript.steps[i].quotient) {
      malformed("step " + std::to_string(i + 1) + " is missing its quotient");
    }
  }
  if (!transcript.final_claim) {
    malformed("field 'final' is missing");
  }

  Natural current = transcript.big_number;
  for (std::size_t i = 0; i < transcript.steps.size(); ++i) {
    const DivModResult division = divmod(current, transcript.steps[i].divisor);
    if (!division.remainder.is_zero()) {
      malformed("step " + std::to_string(i + 1) + ": divisor " +
                transcript.steps[i].divisor.to_decimal() +
                " does not divide the running value");
    }
    if (*transcript.steps[i].quotient != division.quotient) {
      return Verdict{false, i + 1, division.quotient};
    }
    current = division.quotient;
  }

  const Natural target = transcript.generator.value();
  if (*transcript.final_claim != target || current != target) {
    return Verdict{false, transcript.steps.size() + 1, target};
  }
  return Verdict{true, 0, target};
}

std::vector<PuzzleInstance> permuted_chains(const PuzzleInstance& instance,
                                            std::size_t sample_count) {
  std::vector<PuzzleInstance> out;
  std::vector<Natural> chain = instance.chain;
  std::sort(chain.begin(), chain.end());
  if (chain.size() <= 8) {
    do {
      out.push_back(PuzzleInstance{instance.generator, instance.replication,
                                   instance.big_number, chain});
    } while (std::next_permutation(chain.begin(), chain.end()));
    return out;
  }
  std::mt19937_64 rng(0x7ef3a9c15d02b864ull);
  out.reserve(sample_count);
  for (std::size_t s = 0; s < sample_count; ++s) {
    std::vector<Natural> shuffled = chain;
    shuffle_chain(shuffled, rng);
    out.push_back(PuzzleInstance{instance.generator, instance.replication,
                                 instance.big_number, std::move(shuffled)});
  }
  return out;
}

}  // namespace repet
