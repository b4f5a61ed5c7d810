#include "asep/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace asep {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("bad value for '" + std::string(key) + "': '" + std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw std::invalid_argument("bad boolean for '" + std::string(key) + "': '" + std::string(value) + "'");
}

}  // namespace

void SolverConfig::set_population_size(std::size_t theta) {
  population_size = theta;
  reference_size = std::max<std::size_t>(1, (theta + 1) / 2);
  elite_size = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(0.1 * static_cast<double>(theta))));
}

void SolverConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0, 1)");
  if (population_size == 0) fail("theta must be positive");
  if (reference_size == 0 || reference_size > population_size) fail("theta_ref must lie in [1, theta]");
  if (elite_size == 0 || elite_size > population_size) fail("theta_elite must lie in [1, theta]");
  if (!(eta > 0.0 && eta <= 1.0)) fail("eta must lie in (0, 1]");
  if (!(rho > 0.0 && rho <= 1.0)) fail("rho must lie in (0, 1]");
  if (!(gamma >= 0.0 && gamma < 1.0)) fail("gamma must lie in [0, 1)");
  if (!(mu >= 0.0 && mu <= 1.0)) fail("mu must lie in [0, 1]");
  if (threads == 0) fail("threads must be positive");
}

std::string to_key_values(const SolverConfig& c) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "alpha=" << c.alpha << '\n'
      << "theta=" << c.population_size << '\n'
      << "theta_ref=" << c.reference_size << '\n'
      << "theta_elite=" << c.elite_size << '\n'
      << "eta=" << c.eta << '\n'
      << "rho=" << c.rho << '\n'
      << "xi_max=" << c.max_streak << '\n'
      << "gamma=" << c.gamma << '\n'
      << "mu=" << c.mu << '\n'
      << "time_limit=" << c.time_limit << '\n'
      << "stagnation_limit=" << c.stagnation_limit << '\n'
      << "max_generations=" << c.max_generations << '\n'
      << "seed=" << c.seed << '\n'
      << "objective=" << objective_name(c.objective) << '\n'
      << "tabu=" << (c.tabu ? "true" : "false") << '\n'
      << "threads=" << c.threads << '\n';
  return out.str();
}

void apply_setting(SolverConfig& c, std::string_view key, std::string_view value) {
  if (key == "alpha") c.alpha = parse_number<double>(key, value);
  else if (key == "theta") c.set_population_size(parse_number<std::size_t>(key, value));
  else if (key == "theta_ref") c.reference_size = parse_number<std::size_t>(key, value);
  else if (key == "theta_elite") c.elite_size = parse_number<std::size_t>(key, value);
  else if (key == "eta") c.eta = parse_number<double>(key, value);
  else if (key == "rho") c.rho = parse_number<double>(key, value);
  else if (key == "xi_max") c.max_streak = parse_number<std::size_t>(key, value);
  else if (key == "gamma") c.gamma = parse_number<double>(key, value);
  else if (key == "mu") c.mu = parse_number<double>(key, value);
  else if (key == "time_limit") c.time_limit = parse_number<double>(key, value);
  else if (key == "stagnation_limit") c.stagnation_limit = parse_number<std::size_t>(key, value);
  else if (key == "max_generations") c.max_generations = parse_number<std::size_t>(key, value);
  else if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "objective") c.objective = parse_objective(value);
  else if (key == "tabu") c.tabu = parse_bool(key, value);
  else if (key == "threads") c.threads = parse_number<std::size_t>(key, value);
  else throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

SolverConfig parse_key_values(std::string_view text, SolverConfig base) {
  // theta is applied first so explicit theta_ref/theta_elite win regardless
  // of line order.
  std::vector<std::pair<std::string_view, std::string_view>> settings;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#' || line.front() == ';' || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key == "theta") {
      settings.insert(settings.begin(), {key, value});
    } else {
      settings.emplace_back(key, value);
    }
  }
  for (const auto& [key, value] : settings) apply_setting(base, key, value);
  return base;
}

SolverConfig load_config(const std::string& path, SolverConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key_values(buf.str(), base);
}

}  // namespace asep
