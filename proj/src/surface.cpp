#include "insdel/surface.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "insdel/outer_bound.hpp"

namespace insdel {

namespace {

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

SurfaceFormat parse_surface_format(std::string_view name) {
  if (name == "csv") return SurfaceFormat::Csv;
  if (name == "json") return SurfaceFormat::Json;
  throw DomainError("unknown output format: " + std::string(name));
}

std::string_view to_string(SurfaceFormat format) { return format == SurfaceFormat::Csv ? "csv" : "json"; }

std::vector<double> linspace(double lo, double hi, int resolution) {
  if (resolution < 2) throw DomainError("grid resolution must be at least 2");
  std::vector<double> xs(static_cast<std::size_t>(resolution));
  const double step = (hi - lo) / (resolution - 1);
  for (int i = 0; i < resolution; ++i) xs[static_cast<std::size_t>(i)] = lo + step * i;
  xs.back() = hi;
  return xs;
}

SurfaceGrid evaluate_surface(AlphabetSize q, BoundSource source, int resolution, unsigned threads) {
  SurfaceGrid grid;
  grid.q = q;
  grid.source = source;
  grid.gamma_axis = linspace(0.0, q.as_double() - 1.0, resolution);
  grid.delta_axis = linspace(0.0, 1.0 - 1.0 / q.as_double(), resolution);
  const std::size_t rows = grid.delta_axis.size();
  const std::size_t cols = grid.gamma_axis.size();
  grid.values.resize(rows * cols);

  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < rows; i += stride)
      for (std::size_t j = 0; j < cols; ++j)
        grid.values[i * cols + j] = evaluate_bound(source, q, grid.gamma_axis[j], grid.delta_axis[i]);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows));
  if (threads <= 1) {
    fill_rows(0, 1);
    return grid;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        fill_rows(t, threads);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return grid;
}

void write_csv(std::ostream& out, const SurfaceGrid& grid) {
  out << "gamma,delta,rate,feasible,source\n";
  for (std::size_t i = 0; i < grid.delta_axis.size(); ++i)
    for (std::size_t j = 0; j < grid.gamma_axis.size(); ++j) {
      const BoundValue& v = grid.at(i, j);
      out << fmt12(grid.gamma_axis[j]) << ',' << fmt12(grid.delta_axis[i]) << ',' << fmt12(v.rate) << ','
          << (v.feasible ? 1 : 0) << ',' << to_string(v.source) << '\n';
    }
}

void write_json(std::ostream& out, const SurfaceGrid& grid) {
  nlohmann::ordered_json j;
  j["q"] = grid.q.value();
  j["bound"] = std::string(to_string(grid.source));
  j["gamma_axis"] = grid.gamma_axis;
  j["delta_axis"] = grid.delta_axis;
  auto values = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < grid.delta_axis.size(); ++i)
    for (std::size_t k = 0; k < grid.gamma_axis.size(); ++k) {
      const BoundValue& v = grid.at(i, k);
      values.push_back({{"gamma", grid.gamma_axis[k]},
                        {"delta", grid.delta_axis[i]},
                        {"rate", v.rate},
                        {"feasible", v.feasible},
                        {"source", std::string(to_string(v.source))}});
    }
  j["values"] = std::move(values);
  out << j.dump() << '\n';
}

SurfaceGrid read_csv(std::istream& in, AlphabetSize q, BoundSource source) {
  std::string line;
  if (!std::getline(in, line) || line != "gamma,delta,rate,feasible,source")
    throw std::runtime_error("surface CSV: missing or wrong header");
  SurfaceGrid grid;
  grid.q = q;
  grid.source = source;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_commas(line);
    if (cells.size() != 5) throw std::runtime_error("surface CSV: expected 5 columns in: " + line);
    const double gamma = std::stod(cells[0]);
    const double delta = std::stod(cells[1]);
    BoundValue v;
    v.rate = std::stod(cells[2]);
    v.feasible = cells[3] == "1";
    v.source = parse_bound_source(cells[4]);
    if (grid.delta_axis.empty() || grid.delta_axis.back() != delta) grid.delta_axis.push_back(delta);
    if (grid.delta_axis.size() == 1) grid.gamma_axis.push_back(gamma);
    grid.values.push_back(v);
  }
  if (grid.values.size() != grid.gamma_axis.size() * grid.delta_axis.size())
    throw std::runtime_error("surface CSV: rows do not form a rectangular grid");
  return grid;
}

SurfaceGrid read_json(std::istream& in) {
  const auto j = nlohmann::json::parse(in);
  SurfaceGrid grid;
  grid.q = AlphabetSize(j.at("q").get<int>());
  grid.source = parse_bound_source(j.at("bound").get<std::string>());
  grid.gamma_axis = j.at("gamma_axis").get<std::vector<double>>();
  grid.delta_axis = j.at("delta_axis").get<std::vector<double>>();
  for (const auto& cell : j.at("values")) {
    BoundValue v;
    v.rate = cell.at("rate").get<double>();
    v.feasible = cell.at("feasible").get<bool>();
    v.source = parse_bound_source(cell.at("source").get<std::string>());
    grid.values.push_back(v);
  }
  if (grid.values.size() != grid.gamma_axis.size() * grid.delta_axis.size())
    throw std::runtime_error("surface JSON: values do not match the axes");
  return grid;
}

SurfaceGrid emit_surface(AlphabetSize q, BoundSource source, int resolution, SurfaceFormat format,
                         const std::filesystem::path& path) {
  SurfaceGrid grid = evaluate_surface(q, source, resolution);
  auto write = [&](std::ostream& out) {
    if (format == SurfaceFormat::Csv)
      write_csv(out, grid);
    else
      write_json(out, grid);
  };
  if (path == "-") {
    write(std::cout);
    std::cout.flush();
    return grid;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write(out);
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
  return grid;
}

double round_to_print_precision(double x) { return std::stod(fmt12(x)); }

}  // namespace insdel
