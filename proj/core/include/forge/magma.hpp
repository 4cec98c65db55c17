#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

// A finite multiplication table: product(i, j) is the index of
// elements[i] * elements[j].
class FiniteMagma {
 public:
  // Validates shape, ranges and label uniqueness.
  FiniteMagma(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  std::size_t order() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

  std::size_t product(std::size_t i, std::size_t j) const { return table_[i * labels_.size() + j]; }
  std::vector<std::vector<std::size_t>> rows() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> table_;
};

// {"elements": [...], "table": [[...], ...]}
FiniteMagma load_magma(std::string_view json);
FiniteMagma load_magma_file(const std::filesystem::path& path);
std::string magma_to_json(const FiniteMagma& magma);

// FORGE_CATALOG if set, else share/forge/catalog beside the running
// executable, else the bundled catalog directory.
std::filesystem::path catalog_dir();
std::vector<std::string> catalog_names();
FiniteMagma load_catalog_entry(std::string_view name);
// A readable file path, else a catalog entry name such as "S3".
FiniteMagma resolve_magma(std::string_view name_or_path);

}  // namespace forge
