#include "repet/factor_cache.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "repet/errors.hpp"

namespace repet {

namespace {

std::vector<std::string> split_on(const std::string& text,
                                  const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + sep.size();
  }
}

[[noreturn]] void corrupt(std::size_t line_no, const std::string& why) {
  throw CacheCorrupt("cache line " + std::to_string(line_no) + ": " + why);
}

Natural parse_number(const std::string& text, std::size_t line_no,
                     const char* what) {
  try {
    return Natural::from_decimal(text);
  } catch (const ParseError&) {
    corrupt(line_no, std::string("malformed ") + what + " \"" + text + "\"");
  }
}

std::string render_line(const Factorization& f) {
  std::string terms;
  for (const FactorEntry& entry : f.factors) {
    if (!terms.empty()) terms += " * ";
    terms += entry.prime.to_decimal() + "^" + std::to_string(entry.multiplicity);
  }
  if (!f.complete) {
    if (!terms.empty()) terms += " * ";
    terms += f.unresolved->to_decimal() + "^1";
  }
  if (terms.empty()) terms = "-";
  return f.input.to_decimal() + " : " + terms + " : " +
         (f.complete ? "complete" : "partial");
}

Factorization parse_line(const std::string& line, std::size_t line_no) {
  const auto fields = split_on(line, " : ");
  if (fields.size() != 3) {
    corrupt(line_no, "expected three ' : ' separated fields");
  }
  Factorization f;
  f.input = parse_number(fields[0], line_no, "input");
  if (fields[2] == "complete") {
    f.complete = true;
  } else if (fields[2] == "partial") {
    f.complete = false;
  } else {
    corrupt(line_no, "unknown completeness flag \"" + fields[2] + "\"");
  }

  std::vector<std::pair<Natural, std::size_t>> terms;
  if (fields[1] != "-") {
    for (const std::string& term : split_on(fields[1], " * ")) {
      const auto caret = split_on(term, "^");
      if (caret.size() != 2) {
        corrupt(line_no, "term \"" + term + "\" is not value^multiplicity");
      }
      const Natural value = parse_number(caret[0], line_no, "factor");
      const Natural mult = parse_number(caret[1], line_no, "multiplicity");
      if (mult.is_zero() || !mult.fits_uint64()) {
        corrupt(line_no, "multiplicity out of range in \"" + term + "\"");
      }
      terms.emplace_back(value, static_cast<std::size_t>(mult.to_uint64()));
    }
  }
  if (!f.complete) {
    if (terms.empty()) corrupt(line_no, "partial entry without a cofactor");
    if (terms.back().second != 1) {
      corrupt(line_no, "the trailing cofactor must have multiplicity 1");
    }
    f.unresolved = std::move(terms.back().first);
    terms.pop_back();
  }
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (!(terms[i].first < terms[i + 1].first)) {
      corrupt(line_no, "factors are not in ascending order");
    }
  }
  f.factors.reserve(terms.size());
  for (auto& [value, mult] : terms) {
    f.factors.push_back(FactorEntry{std::move(value), mult});
  }
  if (f.product() != f.input) {
    corrupt(line_no, "factors do not multiply back to the input");
  }
  return f;
}

}  // namespace

FactorCache::FactorCache(std::filesystem::path file) : file_(std::move(file)) {
  try {
    load();
  } catch (const CacheCorrupt& e) {
    warning_ = e.what();
    entries_.clear();
  }
}

void FactorCache::load() {
  std::ifstream in(file_, std::ios::binary);
  if (!in.is_open()) return;  // an absent file is an empty cache
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  if (bytes.empty()) return;
  if (bytes.back() != '\n') {
    throw CacheCorrupt("cache file does not end with a newline");
  }
  std::size_t line_no = 0;
  std::size_t start = 0;
  const Natural* previous_key = nullptr;
  while (start < bytes.size()) {
    const std::size_t end = bytes.find('\n', start);
    const std::string line = bytes.substr(start, end - start);
    ++line_no;
    if (line.empty()) corrupt(line_no, "blank line");
    Factorization f = parse_line(line, line_no);
    if (previous_key != nullptr && !(*previous_key < f.input)) {
      corrupt(line_no, "keys are not in ascending order");
    }
    Natural key = f.input;
    const auto [it, inserted] = entries_.emplace(std::move(key), std::move(f));
    previous_key = &it->first;
    start = end + 1;
  }
}

void FactorCache::persist() const {
  std::filesystem::path tmp = file_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    for (const auto& [key, f] : entries_) {
      out << render_line(f) << '\n';
    }
    out.flush();
    if (!out.good()) {
      throw Error("failed to write cache file " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, file_);
}

std::optional<Factorization> FactorCache::get(const Natural& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end() || !it->second.complete) return std::nullopt;
  return it->second;
}

void FactorCache::put(const Factorization& f) {
  if (!f.complete && !f.unresolved.has_value()) {
    throw InvalidParameter(
        "an incomplete factorization needs its unresolved cofactor");
  }
  if (f.product() != f.input) {
    throw InvalidParameter(
        "factorization does not multiply back to its input");
  }
  entries_.insert_or_assign(f.input, f);
  persist();
}

Factorization factorize_cached(const Natural& n, FactorCache* cache,
                               const FactorizationConfig& config) {
  if (cache != nullptr) {
    if (auto hit = cache->get(n)) return *std::move(hit);
  }
  Factorization f = factorize(n, config);
  if (cache != nullptr) cache->put(f);
  return f;
}

}  // namespace repet
