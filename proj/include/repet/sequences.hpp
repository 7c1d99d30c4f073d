#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repet/digits.hpp"
#include "repet/factorization.hpp"
#include "repet/natural.hpp"

namespace repet {

class FactorCache;

enum class SequenceId { a000533, a261544 };

// a(0) = 1, a(n) = 10^n + 1.
Natural a_term(std::size_t n, std::size_t digit_guard = kDefaultDigitGuard);

// b(n) = sum of 1000^i for i = 0..n, i.e. the digits 1(001)^n.
Natural b_term(std::size_t n, std::size_t digit_guard = kDefaultDigitGuard);

// s(k, r), the value replicating a k-digit block r times.
Natural s_term(std::size_t k, std::size_t r,
               std::size_t digit_guard = kDefaultDigitGuard);

struct TableRow {
  std::size_t k = 0;
  std::size_t r = 0;
  Natural value;
  Factorization factors;
  // Set when the published factor column for this row disagrees with the
  // recomputed factorization; carries the column as printed.
  std::optional<std::string> discrepancy;
};

// Recomputes published factor table 1, 2, or 3 row for row:
//   1: k-digit duplication values a(k), k = 0..25
//   2: 3-digit replication values b(r-1), r = 1..9
//   3: mixed (j, r) co-divisor values, j = 1..10 with r = 11 - j (j > 1)
std::vector<TableRow> reproduce_table(int which,
                                      const FactorizationConfig& config = {},
                                      FactorCache* cache = nullptr);

// Lines "index value", newline-terminated, for the inclusive index range.
std::string export_bfile(SequenceId id, std::size_t first, std::size_t last,
                         std::size_t digit_guard = kDefaultDigitGuard);

}  // namespace repet
