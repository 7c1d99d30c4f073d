#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "repet/factorization.hpp"
#include "repet/natural.hpp"

namespace repet {

// Persistent factorization store. One line per input:
//
//   input : prime^mult * prime^mult * ... : complete|partial
//
// with keys in ascending numeric order and "-" for an empty factor list.
// A partial line carries its unresolved cofactor as the last term. Every
// write rebuilds the file through a temp file and an atomic rename.
class FactorCache {
 public:
  explicit FactorCache(std::filesystem::path file);

  // Returns a stored result only when it is complete.
  std::optional<Factorization> get(const Natural& key) const;
  // Inserts or replaces the entry for f.input and persists immediately.
  void put(const Factorization& f);

  std::size_t size() const { return entries_.size(); }
  const std::filesystem::path& path() const { return file_; }
  // Set when an existing file failed validation and was ignored.
  const std::optional<std::string>& load_warning() const { return warning_; }

 private:
  void load();
  void persist() const;

  std::filesystem::path file_;
  std::map<Natural, Factorization> entries_;
  std::optional<std::string> warning_;
};

// Serves n from the cache when possible, otherwise factors and stores it.
// A null cache means straight computation.
Factorization factorize_cached(const Natural& n, FactorCache* cache,
                               const FactorizationConfig& config = {});

}  // namespace repet
