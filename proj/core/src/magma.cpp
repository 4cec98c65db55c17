#include "forge/magma.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "forge/error.hpp"

namespace forge {

FiniteMagma::FiniteMagma(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)) {
  const auto n = labels_.size();
  if (n == 0) {
    throw Error(ErrorCode::ragged_table, "a magma needs at least one element");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::duplicate_label, "duplicate element label '" + l + "'");
    }
  }
  if (table.size() != n) {
    throw Error(ErrorCode::ragged_table,
                "table has " + std::to_string(table.size()) + " rows for " + std::to_string(n) + " elements");
  }
  table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorCode::ragged_table, "row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                                               " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw Error(ErrorCode::index_out_of_range, "entry [" + std::to_string(i) + "][" + std::to_string(j) +
                                                       "] = " + std::to_string(table[i][j]) + " is out of range");
      }
      table_.push_back(table[i][j]);
    }
  }
}

std::optional<std::size_t> FiniteMagma::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::vector<std::size_t>> FiniteMagma::rows() const {
  const auto n = order();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * n),
                  table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return out;
}

FiniteMagma load_magma(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("magma JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("table") || !j["elements"].is_array() ||
      !j["table"].is_array()) {
    throw Error(ErrorCode::parse, "magma JSON needs array fields \"elements\" and \"table\"");
  }
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) {
      throw Error(ErrorCode::parse, "element labels must be strings");
    }
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : j["table"]) {
    if (!row.is_array()) {
      throw Error(ErrorCode::ragged_table, "table rows must be arrays");
    }
    auto& out = table.emplace_back();
    for (const auto& entry : row) {
      if (!entry.is_number_integer()) {
        throw Error(ErrorCode::parse, "table entries must be integers");
      }
      const auto v = entry.get<long long>();
      if (v < 0) {
        throw Error(ErrorCode::index_out_of_range, "negative table entry " + std::to_string(v));
      }
      out.push_back(static_cast<std::size_t>(v));
    }
  }
  return FiniteMagma(std::move(labels), std::move(table));
}

FiniteMagma load_magma_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_magma(buffer.str());
}

std::string magma_to_json(const FiniteMagma& magma) {
  nlohmann::ordered_json j;
  j["elements"] = magma.labels();
  j["table"] = magma.rows();
  return j.dump();
}

std::filesystem::path catalog_dir() {
  if (const char* env = std::getenv("FORGE_CATALOG"); env != nullptr && *env != '\0') {
    return env;
  }
  // An installed binary finds the catalog next to itself, whatever the prefix.
  std::error_code ec;
  const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const auto beside = exe.parent_path().parent_path() / "share" / "forge" / "catalog";
    if (std::filesystem::is_directory(beside, ec)) {
      return beside;
    }
  }
  std::filesystem::path source = FORGE_SOURCE_CATALOG_DIR;
  if (std::filesystem::is_directory(source, ec)) {
    return source;
  }
  return FORGE_DEFAULT_CATALOG_DIR;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  const auto dir = catalog_dir();
  if (!std::filesystem::is_directory(dir)) {
    return names;
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") {
      names.push_back(entry.path().stem().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

FiniteMagma load_catalog_entry(std::string_view name) {
  const auto path = catalog_dir() / (std::string(name) + ".json");
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::io, "no catalog entry '" + std::string(name) + "' in " + catalog_dir().string());
  }
  return load_magma_file(path);
}

FiniteMagma resolve_magma(std::string_view name_or_path) {
  const std::filesystem::path path(name_or_path);
  if (std::filesystem::is_regular_file(path)) {
    return load_magma_file(path);
  }
  return load_catalog_entry(name_or_path);
}

}  // namespace forge
