#include "asep/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "asep/oracle.hpp"

namespace asep {

Variant parse_variant(std::string_view name) {
  if (name == "fis") return Variant::Fis;
  if (name == "tssa-only") return Variant::TssaOnly;
  if (name == "no-tabu") return Variant::NoTabu;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected fis|tssa-only|no-tabu)");
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Fis:
      return "fis";
    case Variant::TssaOnly:
      return "tssa-only";
    case Variant::NoTabu:
      return "no-tabu";
  }
  return "?";
}

SolveReport run_variant(const Graph& g, SolverConfig config, Variant variant) {
  switch (variant) {
    case Variant::Fis:
      return solve(g, config);
    case Variant::NoTabu:
      config.tabu = false;
      return solve(g, config);
    case Variant::TssaOnly:
      return solve_tssa_only(g, config);
  }
  throw std::logic_error("unknown variant");
}

std::vector<RunRecord> run_benchmark(const std::vector<NamedGraph>& instances, const BenchmarkPlan& plan) {
  struct Cell {
    std::size_t instance;
    double alpha;
    Variant variant;
    std::size_t run;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (double alpha : plan.alphas) {
      for (Variant v : plan.variants) {
        for (std::size_t r = 0; r < plan.runs; ++r) cells.push_back({i, alpha, v, r});
      }
    }
  }
  std::vector<RunRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= cells.size()) return;
      try {
        const Cell& cell = cells[idx];
        const Graph& g = instances[cell.instance].graph;
        SolverConfig config = plan.config;
        config.alpha = cell.alpha;
        config.seed = plan.config.seed + cell.run;
        config.threads = 1;
        const SolveReport report = run_variant(g, config, cell.variant);
        if (!check_separator(g, report.best, threshold(cell.alpha, g.num_vertices()))) {
          throw std::runtime_error("infeasible separator reported on " + instances[cell.instance].name);
        }
        RunRecord& rec = records[idx];
        rec.instance = instances[cell.instance].name;
        rec.alpha = cell.alpha;
        rec.variant = std::string(variant_name(cell.variant));
        rec.seed = config.seed;
        rec.best_size = report.best_size;
        rec.time_to_best = report.time_to_best;
        rec.total_time = report.total_time;
        rec.generations = report.generations;
        for (const auto& e : report.timeline) rec.timeline.emplace_back(e.size, e.seconds);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = cells.size();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(plan.workers, cells.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return records;
}

std::vector<NamedGraph> load_instances(const std::string& dir, bool one_based) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw GraphError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() != ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedGraph> out;
  for (const auto& path : files) {
    try {
      out.push_back({path.stem().string(), load_edge_list(path.string(), one_based)});
    } catch (const GraphError& e) {
      throw GraphError(path.string() + ": " + e.what());
    }
  }
  return out;
}

namespace {

const char* const kHeader = "instance,alpha,variant,seed,best_size,time_to_best,total_time,generations,f_hat,f_bar,timeline";

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string fixed(double value, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

std::string general(double value) {
  std::ostringstream out;
  out.precision(15);
  out << value;
  return out.str();
}

std::vector<std::vector<std::string>> parse_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      field_started = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (field_started || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      field_started = false;
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (field_started || !field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
T number(const std::string& s, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " value '" + s + "'");
  }
  return value;
}

}  // namespace

std::string to_csv(const std::vector<RunRecord>& records) {
  using Key = std::tuple<std::string, double, std::string>;
  std::map<Key, std::pair<std::size_t, std::vector<std::size_t>>> groups;
  for (const auto& r : records) groups[{r.instance, r.alpha, r.variant}].second.push_back(r.best_size);

  std::ostringstream out;
  out << kHeader << "\r\n";
  for (const auto& r : records) {
    const auto& sizes = groups[{r.instance, r.alpha, r.variant}].second;
    const std::size_t f_hat = *std::min_element(sizes.begin(), sizes.end());
    double f_bar = 0.0;
    for (std::size_t s : sizes) f_bar += static_cast<double>(s);
    f_bar /= static_cast<double>(sizes.size());
    std::string timeline;
    for (const auto& [size, t] : r.timeline) {
      if (!timeline.empty()) timeline += ';';
      timeline += std::to_string(size) + '@' + fixed(t, 3);
    }
    out << quote(r.instance) << ',' << general(r.alpha) << ',' << quote(r.variant) << ',' << r.seed << ','
        << r.best_size << ',' << fixed(r.time_to_best, 3) << ',' << fixed(r.total_time, 3) << ',' << r.generations
        << ',' << f_hat << ',' << fixed(f_bar, 2) << ',' << quote(timeline) << "\r\n";
  }
  return out.str();
}

std::vector<RunRecord> parse_csv(std::string_view text) {
  auto rows = parse_rows(text);
  if (rows.empty()) throw std::invalid_argument("CSV is empty (missing header)");
  std::vector<std::string> header;
  {
    std::istringstream h(kHeader);
    std::string col;
    while (std::getline(h, col, ',')) header.push_back(col);
  }
  if (rows.front() != header) throw std::invalid_argument("unexpected CSV header");
  std::vector<RunRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != header.size()) {
      throw std::invalid_argument("CSV row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                  " fields");
    }
    RunRecord r;
    r.instance = row[0];
    r.alpha = std::stod(row[1]);
    r.variant = row[2];
    r.seed = number<std::uint64_t>(row[3], "seed");
    r.best_size = number<std::size_t>(row[4], "best_size");
    r.time_to_best = std::stod(row[5]);
    r.total_time = std::stod(row[6]);
    r.generations = number<std::size_t>(row[7], "generations");
    std::istringstream tl(row[10]);
    std::string item;
    while (std::getline(tl, item, ';')) {
      const auto at = item.find('@');
      if (at == std::string::npos) throw std::invalid_argument("bad timeline entry '" + item + "'");
      r.timeline.emplace_back(number<std::size_t>(item.substr(0, at), "timeline size"), std::stod(item.substr(at + 1)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

TttData time_to_target(const std::vector<RunRecord>& records, std::size_t target, const TttFilter& filter) {
  TttData data;
  std::vector<double> times;
  for (const auto& r : records) {
    if (filter.instance && r.instance != *filter.instance) continue;
    if (filter.alpha && std::abs(r.alpha - *filter.alpha) > 1e-12) continue;
    if (filter.variant && r.variant != *filter.variant) continue;
    auto hit = std::find_if(r.timeline.begin(), r.timeline.end(), [&](const auto& e) { return e.first <= target; });
    if (hit == r.timeline.end()) {
      ++data.skipped;
    } else {
      times.push_back(hit->second);
    }
  }
  std::sort(times.begin(), times.end());
  const auto runs = static_cast<double>(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    data.points.push_back({times[i], (static_cast<double>(i + 1) - 0.5) / runs});
  }
  return data;
}

std::string to_ttt(const TttData& data) {
  std::ostringstream out;
  for (const auto& p : data.points) out << fixed(p.seconds, 3) << ',' << general(p.probability) << '\n';
  return out.str();
}

}  // namespace asep
