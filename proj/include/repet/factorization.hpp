#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "repet/natural.hpp"

namespace repet {

enum class Primality {
  composite,  // proved not prime (0 and 1 also land here)
  prime,      // proved prime
  probable_prime,  // passed every test, but beyond the deterministic range
};

struct FactorizationConfig {
  uint64_t seed = 0;
  // Total Pollard iterations allowed across one factorize call.
  uint64_t rho_budget = 100'000'000;
};

struct FactorEntry {
  Natural prime;
  std::size_t multiplicity = 1;
};

struct Factorization {
  Natural input;
  std::vector<FactorEntry> factors;  // primes in strictly ascending order
  bool complete = true;
  // Composite cofactor left over when the budget ran out.
  std::optional<Natural> unresolved;

  // Multiplies the factors (and any unresolved cofactor) back together.
  Natural product() const;
};

bool is_prime(const Natural& n);
Primality classify_prime(const Natural& n);

// Returns a nontrivial divisor of composite n (not necessarily prime).
// Retries internally with fresh parameters until the budget is spent.
Natural pollard_rho(const Natural& n, uint64_t seed,
                    uint64_t budget = FactorizationConfig{}.rho_budget);

Factorization factorize(const Natural& n,
                        const FactorizationConfig& config = {});

}  // namespace repet
