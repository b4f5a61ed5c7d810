#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "asep/graph.hpp"

namespace asep {

enum class ErModel {
  Incremental,  ///< vertices arrive one by one, each joined to every earlier vertex with probability p
  Gilbert,      ///< every unordered pair joined independently with probability p
};

struct InstanceSpec {
  std::size_t n = 100;
  double p = 0.05;
  std::uint64_t seed = 1;
  ErModel model = ErModel::Incremental;

  /// Throws std::invalid_argument unless n >= 1 and 0 < p < 1.
  void validate() const;
  /// e.g. "er_n100_p0.05_s7_incremental"
  [[nodiscard]] std::string name() const;
  /// JSON manifest describing the spec.
  [[nodiscard]] std::string manifest() const;
};

ErModel parse_model(std::string_view name);
std::string_view model_name(ErModel model);

Graph generate_er(const InstanceSpec& spec);

}  // namespace asep
