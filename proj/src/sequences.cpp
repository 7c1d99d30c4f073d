#include "repet/sequences.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "repet/errors.hpp"
#include "repet/factor_cache.hpp"

namespace repet {

namespace {

[[noreturn]] void too_many_digits(std::size_t digits, std::size_t guard) {
  throw LimitExceeded("term would have " + std::to_string(digits) +
                      " digits, above the limit of " + std::to_string(guard));
}

struct PublishedRow {
  std::size_t k;
  std::size_t r;
  // Factor column as printed in the published table; "-" for an empty
  // product. Interpuncts separate the factors.
  const char* factors;
};

const std::vector<PublishedRow>& published_table(int which) {
  static const std::vector<PublishedRow> table1 = {
      {0, 2, "-"},
      {1, 2, "11"},
      {2, 2, "101"},
      {3, 2, "7·11·13"},
      {4, 2, "73·137"},
      {5, 2, "11·9091"},
      {6, 2, "101·9901"},
      {7, 2, "11·909091"},
      {8, 2, "17·5882353"},
      {9, 2, "7·11·13·19·52579"},
      {10, 2, "101·3541·27961"},
      {11, 2, "11·23·4093·8779"},
      {12, 2, "73·137·99990001"},
      {13, 2, "11·859·1058313049"},
      {14, 2, "29·101·281·121499449"},
      {15, 2, "7·11·13·211·241·2161·9091"},
      {16, 2, "353·449·641·1409·69857"},
      {17, 2, "11·103·4013·21993833369"},
      {18, 2, "101·9901·999999000001"},
      {19, 2, "11·909090909090909091"},
      {20, 2, "73·137·1676321·5964848081"},
      {21, 2, "7·11·13·127·2689·459691·909091"},
      {22, 2, "89·101·1052788969·1056689261"},
      {23, 2, "11·47·139·2531·549797184491917"},
      {24, 2, "17·5882353·9999999900000001"},
      {25, 2, "11·251·5051·9091·78875943472201"},
  };
  static const std::vector<PublishedRow> table2 = {
      {3, 1, "-"},
      {3, 2, "7·11·13"},
      {3, 3, "3·333667"},
      {3, 4, "7·11·13·101·9091"},
      {3, 5, "31·41·271·2906161"},
      {3, 6, "3·7·11·13·19·52579·333667"},
      {3, 7, "43·239·1933·4649·10838689"},
      {3, 8, "7·11·13·73·101·137·9901·99990001"},
      {3, 9, "33·757·333667·440334654777631"},
  };
  static const std::vector<PublishedRow> table3 = {
      {1, 1, "-"},
      {2, 10, "41·101·271·3541·9091·27961"},
      {3, 9, "3·3·757·333667·440334654777631"},
      {4, 8, "17·73·137·353·449·641·1409·69857·5882353"},
      {5, 7, "71·239·4649·123551·102598800232111471"},
      {6, 6, "3·19·101·9901·52579·333667·999999000001"},
      {7, 5, "41·71·271·123551·102598800232111471"},
      {8, 4, "17·353·449·641·1409·69857·5882353"},
      {9, 3, "3·757·440334654777631"},
      {10, 2, "101·3541·27961"},
  };
  switch (which) {
    case 1:
      return table1;
    case 2:
      return table2;
    case 3:
      return table3;
    default:
      throw InvalidParameter("table number must be 1, 2, or 3");
  }
}

std::vector<Natural> parse_interpunct_list(const std::string& dotted) {
  std::vector<Natural> out;
  if (dotted == "-") return out;
  const std::string sep = "·";
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = dotted.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(Natural::from_decimal(dotted.substr(start)));
      return out;
    }
    out.push_back(Natural::from_decimal(dotted.substr(start, pos - start)));
    start = pos + sep.size();
  }
}

std::optional<std::string> published_discrepancy(const Factorization& f,
                                                 const std::string& printed) {
  std::vector<Natural> claimed = parse_interpunct_list(printed);
  std::sort(claimed.begin(), claimed.end());
  std::vector<Natural> computed;
  for (const FactorEntry& entry : f.factors) {
    for (std::size_t i = 0; i < entry.multiplicity; ++i) {
      computed.push_back(entry.prime);
    }
  }
  if (claimed == computed) return std::nullopt;
  return "printed as " + printed;
}

}  // namespace

Natural a_term(std::size_t n, std::size_t digit_guard) {
  if (n == 0) return Natural{1};
  if (n >= digit_guard) too_many_digits(n + 1, digit_guard);
  return Natural::pow10(n) + Natural{1};
}

Natural b_term(std::size_t n, std::size_t digit_guard) {
  if (digit_guard == 0 || n > (digit_guard - 1) / 3) {
    too_many_digits(3 * n + 1, digit_guard);
  }
  std::string digits;
  digits.reserve(3 * n + 1);
  digits += '1';
  for (std::size_t i = 0; i < n; ++i) digits += "001";
  return Natural::from_decimal(digits);
}

Natural s_term(std::size_t k, std::size_t r, std::size_t digit_guard) {
  return co_divisor(k, r, digit_guard).value;
}

std::vector<TableRow> reproduce_table(int which,
                                      const FactorizationConfig& config,
                                      FactorCache* cache) {
  const std::vector<PublishedRow>& published = published_table(which);
  std::vector<TableRow> rows;
  rows.reserve(published.size());
  for (const PublishedRow& source : published) {
    TableRow row;
    row.k = source.k;
    row.r = source.r;
    row.value = which == 1 ? a_term(source.k) : s_term(source.k, source.r);
    row.factors = factorize_cached(row.value, cache, config);
    row.discrepancy =
        published_discrepancy(row.factors, source.factors);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string export_bfile(SequenceId id, std::size_t first, std::size_t last,
                         std::size_t digit_guard) {
  if (first > last) {
    throw InvalidParameter("sequence index range is reversed");
  }
  // The largest index dictates the largest term; reject it up front so a
  // huge range cannot grow the output unboundedly before failing.
  if (id == SequenceId::a000533) {
    a_term(last, digit_guard);
  } else {
    b_term(last, digit_guard);
  }
  std::string out;
  for (std::size_t n = first; n <= last; ++n) {
    const Natural term =
        id == SequenceId::a000533 ? a_term(n, digit_guard) : b_term(n, digit_guard);
    out += std::to_string(n);
    out += ' ';
    out += term.to_decimal();
    out += '\n';
  }
  return out;
}

}  // namespace repet
