#include "asep/generator.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "asep/rng.hpp"

namespace asep {

void InstanceSpec::validate() const {
  if (n == 0) throw std::invalid_argument("instance needs at least one vertex");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("connection probability must lie in (0, 1)");
}

std::string InstanceSpec::name() const {
  std::ostringstream out;
  out << "er_n" << n << "_p" << p << "_s" << seed << '_' << model_name(model);
  return out.str();
}

std::string InstanceSpec::manifest() const {
  nlohmann::ordered_json doc;
  doc["generator"] = "erdos-renyi";
  doc["model"] = model_name(model);
  doc["n"] = n;
  doc["p"] = p;
  doc["seed"] = seed;
  doc["name"] = name();
  return doc.dump(2) + "\n";
}

ErModel parse_model(std::string_view name) {
  if (name == "incremental") return ErModel::Incremental;
  if (name == "gilbert") return ErModel::Gilbert;
  throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected incremental|gilbert)");
}

std::string_view model_name(ErModel model) {
  return model == ErModel::Incremental ? "incremental" : "gilbert";
}

Graph generate_er(const InstanceSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(spec.n);
  if (spec.model == ErModel::Incremental) {
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        if (rng.uniform() < spec.p) edges.emplace_back(u, v);
      }
    }
  } else {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.uniform() < spec.p) edges.emplace_back(u, v);
      }
    }
  }
  return Graph(spec.n, edges);
}

}  // namespace asep
