#include <doctest.h>

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "repet/errors.hpp"
#include "repet/factor_cache.hpp"
#include "repet/natural.hpp"
#include "repet/sequences.hpp"

using repet::a_term;
using repet::b_term;
using repet::export_bfile;
using repet::FactorCache;
using repet::InvalidParameter;
using repet::LimitExceeded;
using repet::Natural;
using repet::reproduce_table;
using repet::s_term;
using repet::SequenceId;
using repet::TableRow;

namespace {

Natural nat(const std::string& s) { return Natural::from_decimal(s); }

std::string flat(const repet::Factorization& f) {
  std::string out;
  for (const auto& entry : f.factors) {
    if (!out.empty()) out += ' ';
    out += entry.prime.to_decimal();
    if (entry.multiplicity > 1) out += '^' + std::to_string(entry.multiplicity);
  }
  return out;
}

struct ExpectedRow {
  std::size_t k;
  std::size_t r;
  const char* factors;
  const char* note;  // nullptr when the published row is correct
};

// Verified factorizations for the k-digit duplication table (k = 0..25).
const std::vector<ExpectedRow> kTable1 = {
    {0, 2, "", nullptr},
    {1, 2, "11", nullptr},
    {2, 2, "101", nullptr},
    {3, 2, "7 11 13", nullptr},
    {4, 2, "73 137", nullptr},
    {5, 2, "11 9091", nullptr},
    {6, 2, "101 9901", nullptr},
    {7, 2, "11 909091", nullptr},
    {8, 2, "17 5882353", nullptr},
    {9, 2, "7 11 13 19 52579", nullptr},
    {10, 2, "101 3541 27961", nullptr},
    {11, 2, "11^2 23 4093 8779", "printed as 11·23·4093·8779"},
    {12, 2, "73 137 99990001", nullptr},
    {13, 2, "11 859 1058313049", nullptr},
    {14, 2, "29 101 281 121499449", nullptr},
    {15, 2, "7 11 13 211 241 2161 9091", nullptr},
    {16, 2, "353 449 641 1409 69857", nullptr},
    {17, 2, "11 103 4013 21993833369", nullptr},
    {18, 2, "101 9901 999999000001", nullptr},
    {19, 2, "11 909090909090909091", nullptr},
    {20, 2, "73 137 1676321 5964848081", nullptr},
    {21, 2, "7^2 11 13 127 2689 459691 909091",
     "printed as 7·11·13·127·2689·459691·909091"},
    {22, 2, "89 101 1052788969 1056689261", nullptr},
    {23, 2, "11 47 139 2531 549797184491917", nullptr},
    {24, 2, "17 5882353 9999999900000001", nullptr},
    {25, 2, "11 251 5051 9091 78875943472201", nullptr},
};

// Verified factorizations for the 3-digit replication table (r = 1..9).
const std::vector<ExpectedRow> kTable2 = {
    {3, 1, "", nullptr},
    {3, 2, "7 11 13", nullptr},
    {3, 3, "3 333667", nullptr},
    {3, 4, "7 11 13 101 9901", "printed as 7·11·13·101·9091"},
    {3, 5, "31 41 271 2906161", nullptr},
    {3, 6, "3 7 11 13 19 52579 333667", nullptr},
    {3, 7, "43 239 1933 4649 10838689", nullptr},
    {3, 8, "7 11 13 73 101 137 9901 99990001", nullptr},
    {3, 9, "3^2 757 333667 440334654777631",
     "printed as 33·757·333667·440334654777631"},
};

struct ExpectedValueRow {
  std::size_t k;
  std::size_t r;
  const char* value;
  const char* factors;
};

// Verified rows for the mixed (j, r) table, including the printed values.
const std::vector<ExpectedValueRow> kTable3 = {
    {1, 1, "1", ""},
    {2, 10, "1010101010101010101", "41 101 271 3541 9091 27961"},
    {3, 9, "1001001001001001001001001", "3^2 757 333667 440334654777631"},
    {4, 8, "10001000100010001000100010001",
     "17 73 137 353 449 641 1409 69857 5882353"},
    {5, 7, "1000010000100001000010000100001",
     "71 239 4649 123551 102598800232111471"},
    {6, 6, "1000001000001000001000001000001",
     "3 19 101 9901 52579 333667 999999000001"},
    {7, 5, "10000001000000100000010000001",
     "41 71 271 123551 102598800232111471"},
    {8, 4, "1000000010000000100000001",
     "17 353 449 641 1409 69857 5882353"},
    {9, 3, "1000000001000000001", "3 757 440334654777631"},
    {10, 2, "10000000001", "101 3541 27961"},
};

}  // namespace

TEST_CASE("a_term fixed values and digit pattern") {
  CHECK(a_term(0) == Natural{1});
  CHECK(a_term(1) == Natural{11});
  CHECK(a_term(2) == Natural{101});
  CHECK(a_term(3) == Natural{1001});
  CHECK(a_term(9) == Natural{1000000001});
  CHECK(a_term(25) == nat("10000000000000000000000001"));
  for (std::size_t n = 1; n <= 60; ++n) {
    CHECK(a_term(n).to_decimal() == "1" + std::string(n - 1, '0') + "1");
  }
}

TEST_CASE("b_term fixed values and digit pattern") {
  CHECK(b_term(0) == Natural{1});
  CHECK(b_term(1) == Natural{1001});
  CHECK(b_term(2) == Natural{1001001});
  CHECK(b_term(3) == Natural{1001001001});
  for (std::size_t n = 0; n <= 60; ++n) {
    std::string expected = "1";
    for (std::size_t i = 0; i < n; ++i) expected += "001";
    CHECK(b_term(n).to_decimal() == expected);
  }
}

TEST_CASE("s_term fixed values") {
  CHECK(s_term(3, 2) == Natural{1001});
  CHECK(s_term(1, 6) == Natural{111111});
  for (const auto& row : kTable3) {
    CAPTURE(row.k);
    CHECK(s_term(row.k, row.r) == nat(row.value));
  }
}

TEST_CASE("sequence identities") {
  for (std::size_t k = 1; k <= 50; ++k) {
    CHECK(s_term(k, 2) == a_term(k));
    CHECK(s_term(k, 1) == Natural{1});
  }
  for (std::size_t r = 1; r <= 50; ++r) {
    CHECK(s_term(3, r) == b_term(r - 1));
  }
}

TEST_CASE("sequence digit guards") {
  CHECK(a_term(999999).digit_count() == 1000000);
  CHECK_THROWS_AS(a_term(1000000), LimitExceeded);
  CHECK_THROWS_AS(b_term(333334), LimitExceeded);
  CHECK_THROWS_AS(a_term(100, 64), LimitExceeded);
  CHECK(a_term(63, 64).digit_count() == 64);
  CHECK_THROWS_AS(s_term(1001, 1001), LimitExceeded);
}

TEST_CASE("table 1 rows are recomputed and annotated") {
  const std::vector<TableRow> rows = reproduce_table(1);
  REQUIRE(rows.size() == kTable1.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i].k == kTable1[i].k);
    CHECK(rows[i].r == kTable1[i].r);
    CHECK(rows[i].value == a_term(rows[i].k));
    CHECK(rows[i].factors.complete);
    CHECK(rows[i].factors.product() == rows[i].value);
    CHECK(flat(rows[i].factors) == kTable1[i].factors);
    if (kTable1[i].note == nullptr) {
      CHECK(!rows[i].discrepancy.has_value());
    } else {
      REQUIRE(rows[i].discrepancy.has_value());
      CHECK(*rows[i].discrepancy == kTable1[i].note);
    }
  }
}

TEST_CASE("table 2 rows are recomputed and annotated") {
  const std::vector<TableRow> rows = reproduce_table(2);
  REQUIRE(rows.size() == kTable2.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i].k == 3);
    CHECK(rows[i].r == kTable2[i].r);
    CHECK(rows[i].value == b_term(rows[i].r - 1));
    CHECK(rows[i].factors.complete);
    CHECK(rows[i].factors.product() == rows[i].value);
    CHECK(flat(rows[i].factors) == kTable2[i].factors);
    if (kTable2[i].note == nullptr) {
      CHECK(!rows[i].discrepancy.has_value());
    } else {
      REQUIRE(rows[i].discrepancy.has_value());
      CHECK(*rows[i].discrepancy == kTable2[i].note);
    }
  }
}

TEST_CASE("table 3 rows are recomputed and clean") {
  const std::vector<TableRow> rows = reproduce_table(3);
  REQUIRE(rows.size() == kTable3.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i].k == kTable3[i].k);
    CHECK(rows[i].r == kTable3[i].r);
    CHECK(rows[i].value == nat(kTable3[i].value));
    CHECK(rows[i].factors.complete);
    CHECK(rows[i].factors.product() == rows[i].value);
    CHECK(flat(rows[i].factors) == kTable3[i].factors);
    CHECK(!rows[i].discrepancy.has_value());
  }
}

TEST_CASE("reproduce_table validates its argument") {
  CHECK_THROWS_AS(reproduce_table(0), InvalidParameter);
  CHECK_THROWS_AS(reproduce_table(4), InvalidParameter);
}

TEST_CASE("reproduce_table can run against a cache") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() /
      ("repet-seq-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  {
    FactorCache cache(dir / "factors.txt");
    const auto first = reproduce_table(3, {}, &cache);
    CHECK(cache.size() == 10);
    const auto second = reproduce_table(3, {}, &cache);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(flat(first[i].factors) == flat(second[i].factors));
    }
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
}

TEST_CASE("export_bfile emits index-value lines") {
  CHECK(export_bfile(SequenceId::a000533, 0, 5) ==
        "0 1\n1 11\n2 101\n3 1001\n4 10001\n5 100001\n");
  CHECK(export_bfile(SequenceId::a261544, 0, 3) ==
        "0 1\n1 1001\n2 1001001\n3 1001001001\n");
  CHECK(export_bfile(SequenceId::a000533, 9, 9) == "9 1000000001\n");
  CHECK_THROWS_AS(export_bfile(SequenceId::a000533, 3, 2), InvalidParameter);
  CHECK_THROWS_AS(export_bfile(SequenceId::a000533, 0, 2000000),
                  LimitExceeded);
}
