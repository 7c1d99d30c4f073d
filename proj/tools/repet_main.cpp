// repet: command-line surface for the repetitive-number toolkit.
//
// Exit codes: 0 success (and puzzle-verify PASS), 1 puzzle-verify FAIL,
// 2 usage/parse/malformed-input errors, 3 digit-guard or factoring-budget
// limits, 70 unexpected internal errors.
#include <cstdint>
#include <iostream>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repet/digits.hpp"
#include "repet/errors.hpp"
#include "repet/factor_cache.hpp"
#include "repet/factorization.hpp"
#include "repet/natural.hpp"
#include "repet/puzzle.hpp"
#include "repet/sequences.hpp"

namespace {

using Json = nlohmann::ordered_json;
using repet::Natural;

struct Options {
  std::string cache_path;
  uint64_t seed = 0;
  std::size_t digit_guard = repet::kDefaultDigitGuard;
  std::string output = "text";
  uint64_t budget = repet::FactorizationConfig{}.rho_budget;

  bool records() const { return output == "records"; }
  repet::FactorizationConfig config() const { return {seed, budget}; }
};

struct Session {
  Options opt;
  std::optional<repet::FactorCache> cache;

  repet::FactorCache* cache_ptr() { return cache ? &*cache : nullptr; }
};

void emit(const Json& record) { std::cout << record.dump() << "\n"; }

std::string render_factors(const repet::Factorization& f) {
  if (f.factors.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i > 0) out += " · ";
    out += f.factors[i].prime.to_decimal();
    if (f.factors[i].multiplicity > 1) {
      out += "^" + std::to_string(f.factors[i].multiplicity);
    }
  }
  return out;
}

Json factors_json(const repet::Factorization& f) {
  Json list = Json::array();
  for (const repet::FactorEntry& entry : f.factors) {
    Json item;
    item["prime"] = entry.prime.to_decimal();
    item["multiplicity"] = std::to_string(entry.multiplicity);
    list.push_back(std::move(item));
  }
  return list;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) {
    throw repet::InvalidParameter("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  out.flush();
  if (!out.good()) {
    throw repet::InvalidParameter("cannot write file: " + path);
  }
}

int exhausted_budget() {
  std::cerr << "factoring budget exhausted before the factorization was "
               "complete; raise --budget to continue\n";
  return 3;
}

int cmd_codivisor(Session& s, std::size_t k, std::size_t r, bool want_factor) {
  const repet::CoDivisor co = repet::co_divisor(k, r, s.opt.digit_guard);
  std::optional<repet::Factorization> factored;
  if (want_factor) {
    factored = repet::factorize_cached(co.value, s.cache_ptr(), s.opt.config());
    if (!factored->complete) return exhausted_budget();
  }
  if (s.opt.records()) {
    Json record;
    record["command"] = "codivisor";
    record["k"] = std::to_string(k);
    record["r"] = std::to_string(r);
    record["value"] = co.value.to_decimal();
    if (factored) {
      record["factors"] = factors_json(*factored);
      record["complete"] = factored->complete;
    }
    emit(record);
  } else if (factored) {
    std::cout << co.value.to_decimal() << " = " << render_factors(*factored)
              << "\n";
  } else {
    std::cout << co.value.to_decimal() << "\n";
  }
  return 0;
}

int cmd_factor(Session& s, const std::string& text) {
  const Natural n = Natural::from_decimal(text);
  const repet::Factorization f =
      repet::factorize_cached(n, s.cache_ptr(), s.opt.config());
  if (!f.complete) return exhausted_budget();
  if (s.opt.records()) {
    Json record;
    record["command"] = "factor";
    record["input"] = n.to_decimal();
    record["factors"] = factors_json(f);
    record["complete"] = f.complete;
    emit(record);
  } else {
    std::cout << render_factors(f) << "\n";
  }
  return 0;
}

int cmd_generator(Session& s, const std::string& text) {
  const Natural n = Natural::from_decimal(text);
  const auto all = repet::all_generators(n);
  const auto render = [](const std::pair<repet::Generator, std::size_t>& g) {
    return "(" + g.first.block().digits() + ")_" + std::to_string(g.second);
  };
  if (s.opt.records()) {
    Json record;
    record["command"] = "generator";
    record["input"] = n.to_decimal();
    Json minimal;
    minimal["block"] = all.front().first.block().digits();
    minimal["replication"] = std::to_string(all.front().second);
    record["minimal"] = std::move(minimal);
    Json list = Json::array();
    for (const auto& g : all) {
      Json item;
      item["block"] = g.first.block().digits();
      item["replication"] = std::to_string(g.second);
      list.push_back(std::move(item));
    }
    record["all"] = std::move(list);
    emit(record);
  } else {
    std::cout << "minimal generator: " << render(all.front()) << "\n";
    std::cout << "all generators:";
    for (const auto& g : all) std::cout << " " << render(g);
    std::cout << "\n";
  }
  return 0;
}

int cmd_seq(Session& s, const std::string& id, uint64_t first, uint64_t last) {
  if (first > last) {
    throw repet::InvalidParameter("the range start must not exceed its end");
  }
  const auto term = [&](uint64_t n) {
    return id == "A000533"
               ? repet::a_term(static_cast<std::size_t>(n), s.opt.digit_guard)
               : repet::b_term(static_cast<std::size_t>(n), s.opt.digit_guard);
  };
  (void)term(last);  // trip the digit guard before emitting anything
  for (uint64_t n = first; n <= last; ++n) {
    const Natural value = term(n);
    if (s.opt.records()) {
      Json record;
      record["command"] = "seq";
      record["id"] = id;
      record["n"] = std::to_string(n);
      record["value"] = value.to_decimal();
      emit(record);
    } else {
      std::cout << n << " " << value.to_decimal() << "\n";
    }
  }
  return 0;
}

int cmd_table(Session& s, int which) {
  const std::vector<repet::TableRow> rows =
      repet::reproduce_table(which, s.opt.config(), s.cache_ptr());
  for (const repet::TableRow& row : rows) {
    if (!row.factors.complete) return exhausted_budget();
  }
  for (const repet::TableRow& row : rows) {
    const std::string label =
        which == 1 ? "a(" + std::to_string(row.k) + ")"
                   : "s(" + std::to_string(row.k) + "," +
                         std::to_string(row.r) + ")";
    if (s.opt.records()) {
      Json record;
      record["command"] = "table";
      record["which"] = std::to_string(which);
      record["label"] = label;
      record["value"] = row.value.to_decimal();
      record["factors"] = factors_json(row.factors);
      record["complete"] = row.factors.complete;
      if (row.discrepancy) {
        record["discrepancy"] = *row.discrepancy;
      } else {
        record["discrepancy"] = nullptr;
      }
      emit(record);
    } else {
      std::cout << label << " = " << row.value.to_decimal() << " = "
                << render_factors(row.factors);
      if (row.discrepancy) std::cout << " [" << *row.discrepancy << "]";
      std::cout << "\n";
    }
  }
  return 0;
}

std::string join_chain(const std::vector<Natural>& chain) {
  if (chain.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) out += ", ";
    out += chain[i].to_decimal();
  }
  return out;
}

int cmd_puzzle_new(Session& s, std::size_t k, std::size_t r, bool shuffle,
                   const std::string& out_path) {
  const repet::PuzzleInstance instance = repet::new_puzzle(
      k, r, s.opt.seed,
      shuffle ? repet::ChainOrder::shuffled : repet::ChainOrder::ascending,
      s.opt.config(), s.cache_ptr(), s.opt.digit_guard);
  const std::string bytes =
      repet::transcript_to_string(repet::skeleton_transcript(instance));
  if (out_path.empty()) {
    std::cout << bytes;
    return 0;
  }
  write_file(out_path, bytes);
  if (s.opt.records()) {
    Json record;
    record["command"] = "puzzle_new";
    record["generator"] = instance.generator.block().digits();
    record["replication"] = std::to_string(r);
    record["big_number"] = instance.big_number.to_decimal();
    Json chain = Json::array();
    for (const Natural& d : instance.chain) chain.push_back(d.to_decimal());
    record["chain"] = std::move(chain);
    record["transcript"] = out_path;
    emit(record);
  } else {
    std::cout << "generator: (" << instance.generator.block().digits() << ")_"
              << r << "\n";
    std::cout << "big number: " << instance.big_number.to_decimal_grouped()
              << "\n";
    std::cout << "divisor chain: " << join_chain(instance.chain) << "\n";
    std::cout << "transcript: " << out_path << "\n";
  }
  return 0;
}

int cmd_puzzle_solve(Session& s, const std::string& in_path,
                     const std::string& out_path) {
  const repet::PuzzleTranscript parsed =
      repet::transcript_from_string(read_file(in_path));
  const repet::PuzzleInstance instance =
      repet::instance_from_transcript(parsed);
  const repet::PuzzleTranscript done = repet::solved_transcript(instance);
  const std::string bytes = repet::transcript_to_string(done);
  if (out_path.empty()) {
    std::cout << bytes;
    return 0;
  }
  write_file(out_path, bytes);
  if (s.opt.records()) {
    Json record;
    record["command"] = "puzzle_solve";
    record["final"] = done.final_claim->to_decimal();
    record["transcript"] = out_path;
    emit(record);
  } else {
    std::cout << "final: " << done.final_claim->to_decimal_grouped() << "\n";
    std::cout << "transcript: " << out_path << "\n";
  }
  return 0;
}

int cmd_puzzle_verify(Session& s, const std::string& in_path) {
  const repet::PuzzleTranscript parsed =
      repet::transcript_from_string(read_file(in_path));
  const repet::Verdict verdict = repet::verify_transcript(parsed);
  if (verdict.pass) {
    if (s.opt.records()) {
      Json record;
      record["command"] = "puzzle_verify";
      record["pass"] = true;
      emit(record);
    } else {
      std::cout << "PASS\n";
    }
    return 0;
  }
  if (s.opt.records()) {
    Json record;
    record["command"] = "puzzle_verify";
    record["pass"] = false;
    record["failed_step"] = std::to_string(verdict.failed_step);
    record["expected"] = verdict.expected.to_decimal();
    emit(record);
  } else if (verdict.failed_step <= parsed.steps.size()) {
    std::cout << "FAIL at step " << verdict.failed_step << " (expected "
              << verdict.expected.to_decimal() << ")\n";
  } else {
    std::cout << "FAIL at final answer (expected "
              << verdict.expected.to_decimal() << ")\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "repet: repetitive numbers, co-divisors, factor tables, and the "
      "division-relay puzzle"};
  app.require_subcommand(1);

  app.add_option("--cache", opt.cache_path,
                 "factor cache file (also read from REPET_CACHE)")
      ->envname("REPET_CACHE");
  app.add_option("--seed", opt.seed,
                 "seed for randomized factoring and puzzle generation");
  app.add_option("--digit-guard", opt.digit_guard,
                 "upper bound on constructed digit counts (minimum 64)");
  app.add_option("--output", opt.output, "output mode: text or records");
  app.add_option("--budget", opt.budget,
                 "step budget for the factoring engine");

  uint64_t co_k = 0;
  uint64_t co_r = 0;
  bool want_factor = false;
  CLI::App* codivisor = app.add_subcommand(
      "codivisor", "print s(k,r), the co-divisor number for (k, r)");
  codivisor->fallthrough();
  codivisor->add_option("k", co_k, "generator length")->required();
  codivisor->add_option("r", co_r, "replication count")->required();
  codivisor->add_flag("--factor", want_factor,
                      "also print the prime factorization");

  std::string factor_text;
  CLI::App* factor =
      app.add_subcommand("factor", "print the prime factorization of n");
  factor->fallthrough();
  factor->add_option("n", factor_text, "decimal number")->required();

  std::string generator_text;
  CLI::App* generator = app.add_subcommand(
      "generator", "print the minimal generator and the full generator set");
  generator->fallthrough();
  generator->add_option("n", generator_text, "decimal number")->required();

  std::string seq_id;
  uint64_t seq_first = 0;
  uint64_t seq_last = 0;
  CLI::App* seq =
      app.add_subcommand("seq", "print 'n value' lines of a sequence");
  seq->fallthrough();
  seq->add_option("id", seq_id, "sequence id")
      ->required()
      ->check(CLI::IsMember({"A000533", "A261544"}));
  seq->add_option("first", seq_first, "first index")->required();
  seq->add_option("last", seq_last, "last index")->required();

  int table_which = 0;
  CLI::App* table =
      app.add_subcommand("table", "reproduce a published factor table");
  table->fallthrough();
  table->add_option("which", table_which, "table number (1, 2, or 3)")
      ->required();

  uint64_t puzzle_k = 0;
  uint64_t puzzle_r = 0;
  bool shuffle = false;
  std::string out_path;
  std::string in_path;
  CLI::App* puzzle = app.add_subcommand(
      "puzzle", "division-relay puzzles over transcript files");
  puzzle->fallthrough();
  puzzle->require_subcommand(1);
  CLI::App* puzzle_new = puzzle->add_subcommand(
      "new", "generate a puzzle and write its unsolved transcript");
  puzzle_new->fallthrough();
  puzzle_new->add_option("-k", puzzle_k, "generator length")->required();
  puzzle_new->add_option("-r", puzzle_r, "replication count")->required();
  puzzle_new->add_flag("--shuffle", shuffle,
                       "deal the divisor chain in shuffled order");
  puzzle_new->add_option("-o,--out", out_path,
                         "write the transcript here instead of stdout");
  CLI::App* puzzle_solve =
      puzzle->add_subcommand("solve", "fill in all quotients of a transcript");
  puzzle_solve->fallthrough();
  puzzle_solve->add_option("file", in_path, "transcript to solve")->required();
  puzzle_solve->add_option("-o,--out", out_path,
                           "write the solved transcript here");
  CLI::App* puzzle_verify =
      puzzle->add_subcommand("verify", "check a completed transcript");
  puzzle_verify->fallthrough();
  puzzle_verify->add_option("file", in_path, "transcript to check")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (opt.digit_guard < 64) {
    std::cerr << "--digit-guard must be at least 64\n";
    return 2;
  }
  if (opt.output != "text" && opt.output != "records") {
    std::cerr << "--output must be 'text' or 'records'\n";
    return 2;
  }

  try {
    Session session{opt, std::nullopt};
    if (!opt.cache_path.empty()) {
      session.cache.emplace(opt.cache_path);
      if (const auto warning = session.cache->load_warning()) {
        std::cerr << "warning: " << *warning << "\n";
      }
    }
    if (app.got_subcommand(codivisor)) {
      return cmd_codivisor(session, static_cast<std::size_t>(co_k),
                           static_cast<std::size_t>(co_r), want_factor);
    }
    if (app.got_subcommand(factor)) return cmd_factor(session, factor_text);
    if (app.got_subcommand(generator)) {
      return cmd_generator(session, generator_text);
    }
    if (app.got_subcommand(seq)) {
      return cmd_seq(session, seq_id, seq_first, seq_last);
    }
    if (app.got_subcommand(table)) return cmd_table(session, table_which);
    if (app.got_subcommand(puzzle)) {
      if (puzzle->got_subcommand(puzzle_new)) {
        return cmd_puzzle_new(session, static_cast<std::size_t>(puzzle_k),
                              static_cast<std::size_t>(puzzle_r), shuffle,
                              out_path);
      }
      if (puzzle->got_subcommand(puzzle_solve)) {
        return cmd_puzzle_solve(session, in_path, out_path);
      }
      return cmd_puzzle_verify(session, in_path);
    }
    return 2;
  } catch (const repet::LimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const repet::BudgetExhausted& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const repet::MalformedTranscript& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const repet::CacheCorrupt& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const repet::InvalidParameter& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const repet::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const repet::NotDivisible& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const repet::DivisionByZero& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
