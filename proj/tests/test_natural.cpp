#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "repet/errors.hpp"
#include "repet/natural.hpp"

using repet::DivisionByZero;
using repet::divide_exact;
using repet::divides;
using repet::divmod;
using repet::DivModResult;
using repet::InternalError;
using repet::Natural;
using repet::NotDivisible;
using repet::ParseError;

namespace {

// ---- Independent decimal-string oracles (no Natural involvement) ----

std::string school_add(const std::string& a, const std::string& b) {
  std::string out;
  int carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry != 0;
       ++i) {
    int sum = carry;
    if (i < a.size()) sum += a[a.size() - 1 - i] - '0';
    if (i < b.size()) sum += b[b.size() - 1 - i] - '0';
    out += static_cast<char>('0' + sum % 10);
    carry = sum / 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string strip_leading_zeros(std::string s) {
  const std::size_t pos = s.find_first_not_of('0');
  if (pos == std::string::npos) return "0";
  return s.substr(pos);
}

std::string school_sub(const std::string& a, const std::string& b) {
  // Requires a >= b numerically.
  std::string out;
  int borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int diff = (a[a.size() - 1 - i] - '0') - borrow;
    if (i < b.size()) diff -= b[b.size() - 1 - i] - '0';
    if (diff < 0) {
      diff += 10;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out += static_cast<char>('0' + diff);
  }
  std::reverse(out.begin(), out.end());
  return strip_leading_zeros(out);
}

std::string school_mul(const std::string& a, const std::string& b) {
  if (a == "0" || b == "0") return "0";
  std::vector<int> acc(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j + 1] += (a[i] - '0') * (b[j] - '0');
    }
  }
  for (std::size_t i = acc.size() - 1; i > 0; --i) {
    acc[i - 1] += acc[i] / 10;
    acc[i] %= 10;
  }
  std::string out;
  for (int digit : acc) out += static_cast<char>('0' + digit);
  return strip_leading_zeros(out);
}

// Numeric comparison of canonical decimal strings: -1, 0, or 1.
int compare_decimal(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a < b) return -1;
  return a == b ? 0 : 1;
}

std::string u128_str(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string random_decimal(std::mt19937_64& rng, std::size_t digits) {
  std::string out(digits, '0');
  out[0] = static_cast<char>('1' + rng() % 9);
  for (std::size_t i = 1; i < digits; ++i) {
    out[i] = static_cast<char>('0' + rng() % 10);
  }
  return out;
}

Natural nat(const std::string& text) { return Natural::from_decimal(text); }

}  // namespace

TEST_CASE("parse and render round-trip on fixed values") {
  for (const std::string text :
       {"0", "1", "7", "99999999", "100000000", "100000001", "394394",
        "18446744073709551615", "18446744073709551616",
        "123456789012345678901234567890",
        "20192019201920192019201920192019"}) {
    CAPTURE(text);
    CHECK(nat(text).to_decimal() == text);
  }
}

TEST_CASE("parse and render round-trip on random strings") {
  std::mt19937_64 rng(201);
  for (std::size_t digits :
       {1ul, 2ul, 7ul, 8ul, 9ul, 16ul, 17ul, 31ul, 32ul, 33ul, 100ul, 300ul}) {
    for (int round = 0; round < 10; ++round) {
      const std::string text = random_decimal(rng, digits);
      CHECK(nat(text).to_decimal() == text);
    }
  }
}

TEST_CASE("parse rejects non-canonical input") {
  for (const std::string text :
       {"", " ", "12a3", " 12", "12 ", "+5", "-5", "0123", "00",
        "394 394", "1_000", "1,001", "12\n"}) {
    CAPTURE(text);
    CHECK_THROWS_AS((void)Natural::from_decimal(text), ParseError);
  }
}

TEST_CASE("uint64 constructor matches decimal parse") {
  std::mt19937_64 rng(202);
  CHECK(Natural{0}.to_decimal() == "0");
  CHECK(Natural{UINT64_MAX}.to_decimal() == "18446744073709551615");
  for (int round = 0; round < 200; ++round) {
    const uint64_t v = rng() >> (rng() % 64);
    CHECK(Natural{v}.to_decimal() == std::to_string(v));
  }
}

TEST_CASE("grouped rendering inserts spaces every three digits") {
  CHECK(Natural{0}.to_decimal_grouped() == "0");
  CHECK(Natural{1}.to_decimal_grouped() == "1");
  CHECK(Natural{12}.to_decimal_grouped() == "12");
  CHECK(Natural{123}.to_decimal_grouped() == "123");
  CHECK(Natural{1234}.to_decimal_grouped() == "1 234");
  CHECK(Natural{1001}.to_decimal_grouped() == "1 001");
  CHECK(Natural{394394}.to_decimal_grouped() == "394 394");
  CHECK(nat("20192019201920192019201920192019").to_decimal_grouped() ==
        "20 192 019 201 920 192 019 201 920 192 019");
}

TEST_CASE("digit_count") {
  CHECK(Natural{0}.digit_count() == 1);
  CHECK(Natural{9}.digit_count() == 1);
  CHECK(Natural{10}.digit_count() == 2);
  CHECK(Natural{99999999}.digit_count() == 8);
  CHECK(Natural{100000000}.digit_count() == 9);
  for (std::size_t zeros : {0ul, 1ul, 7ul, 8ul, 9ul, 40ul, 1000000ul}) {
    CHECK(Natural::pow10(zeros).digit_count() == zeros + 1);
  }
}

TEST_CASE("pow10 and shifted_by_digits") {
  CHECK(Natural::pow10(0).to_decimal() == "1");
  CHECK(Natural::pow10(3).to_decimal() == "1000");
  CHECK(Natural::pow10(8).to_decimal() == "100000000");
  CHECK(Natural{394}.shifted_by_digits(3).to_decimal() == "394000");
  CHECK(Natural{721}.shifted_by_digits(9).to_decimal() == "721000000000");
  CHECK(Natural{0}.shifted_by_digits(5).to_decimal() == "0");
  std::mt19937_64 rng(203);
  for (int round = 0; round < 60; ++round) {
    const std::string text = random_decimal(rng, 1 + rng() % 40);
    const std::size_t zeros = rng() % 30;
    CHECK(nat(text).shifted_by_digits(zeros).to_decimal() ==
          text + std::string(zeros, '0'));
    CHECK(Natural::pow10(zeros) == Natural{1}.shifted_by_digits(zeros));
  }
}

TEST_CASE("comparisons agree with the string oracle") {
  std::mt19937_64 rng(204);
  for (int round = 0; round < 400; ++round) {
    const std::string a = random_decimal(rng, 1 + rng() % 25);
    const std::string b = random_decimal(rng, 1 + rng() % 25);
    const int expected = compare_decimal(a, b);
    const auto got = nat(a) <=> nat(b);
    CHECK((got < 0 ? -1 : (got > 0 ? 1 : 0)) == expected);
    CHECK((nat(a) == nat(b)) == (expected == 0));
  }
  CHECK(Natural{0} < Natural{1});
  CHECK(nat("99999999") < nat("100000000"));
}

TEST_CASE("addition matches the school oracle") {
  std::mt19937_64 rng(205);
  for (int round = 0; round < 300; ++round) {
    const std::string a = random_decimal(rng, 1 + rng() % 60);
    const std::string b = random_decimal(rng, 1 + rng() % 60);
    CHECK((nat(a) + nat(b)).to_decimal() == school_add(a, b));
  }
  CHECK((Natural{99999999} + Natural{1}).to_decimal() == "100000000");
  const Natural big = Natural::pow10(80) - Natural{1};
  CHECK((big + Natural{1}) == Natural::pow10(80));
  CHECK((Natural{0} + Natural{0}).to_decimal() == "0");
}

TEST_CASE("addition of 64-bit values matches native arithmetic") {
  std::mt19937_64 rng(206);
  for (int round = 0; round < 2000; ++round) {
    const uint64_t a = rng() >> (rng() % 64);
    const uint64_t b = rng() >> (rng() % 64);
    const unsigned __int128 sum = static_cast<unsigned __int128>(a) + b;
    CHECK((Natural{a} + Natural{b}).to_decimal() == u128_str(sum));
  }
}

TEST_CASE("subtraction matches the school oracle") {
  std::mt19937_64 rng(207);
  for (int round = 0; round < 300; ++round) {
    std::string a = random_decimal(rng, 1 + rng() % 60);
    std::string b = random_decimal(rng, 1 + rng() % 60);
    if (compare_decimal(a, b) < 0) std::swap(a, b);
    CHECK((nat(a) - nat(b)).to_decimal() == school_sub(a, b));
  }
  CHECK((Natural::pow10(80) - Natural{1}).to_decimal() ==
        std::string(80, '9'));
  CHECK((Natural{5} - Natural{5}).to_decimal() == "0");
  CHECK_THROWS_AS((void)(Natural{3} - Natural{4}), InternalError);
}

TEST_CASE("multiplication matches the school oracle") {
  std::mt19937_64 rng(208);
  for (int round = 0; round < 250; ++round) {
    const std::string a = random_decimal(rng, 1 + rng() % 60);
    const std::string b = random_decimal(rng, 1 + rng() % 60);
    CHECK((nat(a) * nat(b)).to_decimal() == school_mul(a, b));
  }
  // Long-by-short shapes.
  for (int round = 0; round < 40; ++round) {
    const std::string a = random_decimal(rng, 200 + rng() % 200);
    const std::string b = random_decimal(rng, 1 + rng() % 10);
    CHECK((nat(a) * nat(b)).to_decimal() == school_mul(a, b));
  }
}

TEST_CASE("multiplication of 64-bit values matches native arithmetic") {
  std::mt19937_64 rng(209);
  for (int round = 0; round < 2000; ++round) {
    const uint64_t a = rng() >> (rng() % 64);
    const uint64_t b = rng() >> (rng() % 64);
    const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
    CHECK((Natural{a} * Natural{b}).to_decimal() == u128_str(product));
  }
  CHECK((Natural{99999999} * Natural{99999999}).to_decimal() ==
        "9999999800000001");
  CHECK((nat("123456789") * Natural{0}).to_decimal() == "0");
  CHECK((nat("123456789") * Natural{1}).to_decimal() == "123456789");
}

TEST_CASE("multiplication carry flush on 14000-digit operands") {
  // (10^n - 1)^2 = 10^2n - 2*10^n + 1: n-1 nines, an 8, n-1 zeros, a 1.
  // At n = 14000 each operand has 1750 limbs, which crosses the internal
  // 1700-row accumulator flush threshold.
  const std::size_t n = 14000;
  const Natural nines = Natural::pow10(n) - Natural{1};
  const std::string expected = std::string(n - 1, '9') + "8" +
                               std::string(n - 1, '0') + "1";
  CHECK((nines * nines).to_decimal() == expected);
}

TEST_CASE("divmod on fixed cases") {
  auto check = [](const std::string& b, const std::string& a,
                  const std::string& q, const std::string& r) {
    CAPTURE(b);
    CAPTURE(a);
    const DivModResult result = divmod(nat(b), nat(a));
    CHECK(result.quotient.to_decimal() == q);
    CHECK(result.remainder.to_decimal() == r);
  };
  check("5122", "13", "394", "0");
  check("17", "5", "3", "2");
  check("394394", "7", "56342", "0");
  check("56342", "11", "5122", "0");
  check("10", "4", "2", "2");
  check("0", "7", "0", "0");
  check("6", "7", "0", "6");
  check("7", "7", "1", "0");
  check("99999999999999", "1", "99999999999999", "0");
}

TEST_CASE("divmod throws on zero divisor") {
  CHECK_THROWS_AS((void)divmod(Natural{5}, Natural{0}), DivisionByZero);
  CHECK_THROWS_AS((void)divides(Natural{0}, Natural{5}), DivisionByZero);
  CHECK_THROWS_AS((void)divide_exact(Natural{5}, Natural{0}), DivisionByZero);
}

TEST_CASE("divmod of 64-bit values matches native arithmetic") {
  std::mt19937_64 rng(210);
  for (int round = 0; round < 30000; ++round) {
    const uint64_t b = rng() >> (rng() % 64);
    uint64_t a = rng() >> (rng() % 64);
    if (a == 0) a = 1;
    const DivModResult result = divmod(Natural{b}, Natural{a});
    CHECK(result.quotient.to_decimal() == std::to_string(b / a));
    CHECK(result.remainder.to_decimal() == std::to_string(b % a));
  }
}

TEST_CASE("divmod reconstruction on big operands") {
  // Build b = q*a + r from independent string arithmetic, then require
  // divmod to recover exactly (q, r); uniqueness makes this a full oracle.
  // Divisor top limbs are forced through every normalization regime
  // (scale factors 1, 2, and 5*10^7 among them).
  std::mt19937_64 rng(211);
  const std::vector<std::string> top_limbs = {
      "1", "2", "99999999", "50000000", "49999999", "50000001", "12345678"};
  for (int round = 0; round < 400; ++round) {
    std::string a = top_limbs[rng() % top_limbs.size()];
    const std::size_t extra_limbs = 1 + rng() % 5;
    for (std::size_t i = 0; i < extra_limbs * 8; ++i) {
      a += static_cast<char>('0' + rng() % 10);
    }
    const std::string q = random_decimal(rng, 1 + rng() % 60);
    // r uniform-ish below a: random digits, reduced by string compare.
    std::string r = random_decimal(rng, 1 + rng() % a.size());
    if (compare_decimal(r, a) >= 0) r = school_sub(r, a);
    if (compare_decimal(r, a) >= 0) r = "0";
    const std::string b = school_add(school_mul(q, a), r);
    CAPTURE(a);
    CAPTURE(q);
    CAPTURE(r);
    const DivModResult result = divmod(nat(b), nat(a));
    CHECK(result.quotient.to_decimal() == q);
    CHECK(result.remainder.to_decimal() == r);
  }
}

TEST_CASE("divmod boundary remainders") {
  std::mt19937_64 rng(212);
  for (int round = 0; round < 200; ++round) {
    const std::string a = random_decimal(rng, 9 + rng() % 30);
    const std::string q = random_decimal(rng, 1 + rng() % 30);
    for (const std::string r :
         {std::string("0"), std::string("1"), school_sub(a, "1"),
          school_sub(a, "2")}) {
      const std::string b = school_add(school_mul(q, a), r);
      const DivModResult result = divmod(nat(b), nat(a));
      CAPTURE(a);
      CAPTURE(q);
      CAPTURE(r);
      CHECK(result.quotient.to_decimal() == q);
      CHECK(result.remainder.to_decimal() == r);
    }
  }
}

TEST_CASE("divmod add-back case: estimate one too high") {
  // Crafted so the two-limb quotient estimate survives the correction loop
  // and only the full multiply-subtract exposes the overshoot.
  const Natural b = nat("1000000019999999999999997");
  const Natural a = nat("500000009999999999999999");
  const DivModResult result = divmod(b, a);
  CHECK(result.quotient.to_decimal() == "1");
  CHECK(result.remainder.to_decimal() == "500000009999999999999998");
}

TEST_CASE("division at one hundred thousand digits") {
  // (10^100000 - 1) / 9999 = 1 followed by 24999 copies of "0001".
  const Natural nines = Natural::pow10(100000) - Natural{1};
  std::string expected = "1";
  for (int i = 0; i < 24999; ++i) expected += "0001";
  CHECK(divide_exact(nines, Natural{9999}).to_decimal() == expected);

  // Multi-limb divisor at scale: exact reconstruction through a product.
  std::mt19937_64 rng(213);
  const Natural divisor = nat("1000000007");
  const Natural quotient = nat(random_decimal(rng, 50000));
  const Natural product = divisor * quotient;
  const DivModResult back = divmod(product + Natural{123456789}, divisor);
  CHECK(back.quotient == quotient);
  CHECK(back.remainder.to_decimal() == "123456789");
}

TEST_CASE("divides on fixed cases") {
  CHECK(divides(Natural{7}, nat("394394")));
  CHECK_FALSE(divides(Natural{5}, nat("394394")));
  CHECK(divides(nat("394394"), nat("394394")));
  CHECK(divides(Natural{1}, Natural{0}));
  CHECK(divides(Natural{13}, Natural{5122} * Natural{13}));
}

TEST_CASE("linear combination closure") {
  // D | a and D | b imply D | (a*x + b*y).
  std::mt19937_64 rng(214);
  for (int round = 0; round < 150; ++round) {
    const Natural d = nat(random_decimal(rng, 1 + rng() % 12));
    const Natural a = d * nat(random_decimal(rng, 1 + rng() % 12));
    const Natural b = d * nat(random_decimal(rng, 1 + rng() % 12));
    const Natural x = nat(random_decimal(rng, 1 + rng() % 8));
    const Natural y = nat(random_decimal(rng, 1 + rng() % 8));
    CHECK(divides(d, a * x + b * y));
  }
}

TEST_CASE("finite sums of multiples stay divisible") {
  std::mt19937_64 rng(215);
  for (int round = 0; round < 100; ++round) {
    const Natural d = nat(random_decimal(rng, 1 + rng() % 10));
    const std::size_t terms = 2 + rng() % 7;
    Natural sum;
    for (std::size_t i = 0; i < terms; ++i) {
      sum += d * nat(random_decimal(rng, 1 + rng() % 10));
    }
    CHECK(divides(d, sum));
  }
}

TEST_CASE("divide_exact round-trips with multiplication") {
  std::mt19937_64 rng(216);
  for (int round = 0; round < 200; ++round) {
    const Natural a = nat(random_decimal(rng, 1 + rng() % 30));
    const Natural c = nat(random_decimal(rng, 1 + rng() % 30));
    CHECK(divide_exact(a * c, a) == c);
  }
}

TEST_CASE("divide_exact reports the remainder on failure") {
  try {
    (void)divide_exact(Natural{10}, Natural{4});
    FAIL("expected NotDivisible");
  } catch (const NotDivisible& error) {
    CHECK(error.remainder_decimal() == "2");
    CHECK(std::string(error.what()) ==
          "10 is not divisible by 4 (remainder 2)");
  }
}

TEST_CASE("fits_uint64 and to_uint64") {
  CHECK(Natural{0}.fits_uint64());
  CHECK(Natural{0}.to_uint64() == 0);
  CHECK(nat("18446744073709551615").fits_uint64());
  CHECK(nat("18446744073709551615").to_uint64() == UINT64_MAX);
  CHECK_FALSE(nat("18446744073709551616").fits_uint64());
  CHECK(Natural::pow10(19).fits_uint64());
  CHECK_FALSE(Natural::pow10(20).fits_uint64());
  CHECK_THROWS_AS((void)Natural::pow10(20).to_uint64(), InternalError);
  std::mt19937_64 rng(217);
  for (int round = 0; round < 500; ++round) {
    const uint64_t v = rng() >> (rng() % 64);
    CHECK(Natural{v}.fits_uint64());
    CHECK(Natural{v}.to_uint64() == v);
  }
}

TEST_CASE("is_even") {
  CHECK(Natural{0}.is_even());
  CHECK_FALSE(Natural{1}.is_even());
  CHECK(nat("100000000").is_even());
  CHECK_FALSE(nat("100000001").is_even());
}
