#include "solitary/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace solitary {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end || text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view text) {
  const double v = parse_double(text);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e15) {
    throw std::invalid_argument("not a non-negative integer: '" + std::string(trim(text)) + "'");
  }
  return static_cast<std::size_t>(v);
}

struct Entry {
  std::size_t line;
  std::string section;
  std::string key;
  std::string value;
};

using Setter = void (*)(RunConfig&, std::string_view);

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"case",
       [](RunConfig& c, std::string_view v) {
         if (v == "euler") {
           c.run_case = RunCase::euler;
         } else if (v == "ns") {
           c.run_case = RunCase::ns;
         } else if (v == "ndim_audit") {
           c.run_case = RunCase::ndim_audit;
         } else {
           throw std::invalid_argument("expected euler | ns | ndim_audit");
         }
       }},
      {"grid.n_cells", [](RunConfig& c, std::string_view v) { c.grid.n_cells = parse_count(v); }},
      {"grid.dx", [](RunConfig& c, std::string_view v) { c.grid.dx = parse_double(v); }},
      {"grid.dt", [](RunConfig& c, std::string_view v) { c.grid.dt = parse_double(v); }},
      {"grid.n_steps", [](RunConfig& c, std::string_view v) { c.grid.n_steps = parse_count(v); }},
      {"grid.x0", [](RunConfig& c, std::string_view v) { c.grid.x0 = parse_double(v); }},
      {"scheme.advection",
       [](RunConfig& c, std::string_view v) {
         if (v == "upwind") {
           c.scheme.advection = Advection::upwind;
         } else if (v == "central") {
           c.scheme.advection = Advection::central;
         } else {
           throw std::invalid_argument("expected upwind | central");
         }
       }},
      {"scheme.bathymetry",
       [](RunConfig& c, std::string_view v) {
         if (v == "analytic") {
           c.scheme.bathymetry = BathymetrySource::analytic;
         } else if (v == "integrated") {
           c.scheme.bathymetry = BathymetrySource::integrated;
         } else {
           throw std::invalid_argument("expected analytic | integrated");
         }
       }},
      {"scheme.integration",
       [](RunConfig& c, std::string_view v) {
         if (v == "left_rectangle") {
           c.scheme.integration = IntegrationRule::left_rectangle;
         } else if (v == "trapezoid") {
           c.scheme.integration = IntegrationRule::trapezoid;
         } else {
           throw std::invalid_argument("expected left_rectangle | trapezoid");
         }
       }},
      {"scheme.cfl_guard",
       [](RunConfig& c, std::string_view v) { c.scheme.cfl_guard = parse_double(v); }},
      {"scheme.kernel",
       [](RunConfig& c, std::string_view v) {
         if (v == "auto") {
           c.scheme.isa = kernels::detected_isa();
         } else if (v == "scalar") {
           c.scheme.isa = kernels::Isa::scalar;
         } else if (v == "avx2") {
           c.scheme.isa = kernels::Isa::avx2;
         } else {
           throw std::invalid_argument("expected auto | scalar | avx2");
         }
       }},
      {"physics.c1",
       [](RunConfig& c, std::string_view v) { override_c1(c, parse_number_list(v)); }},
      {"physics.g",
       [](RunConfig& c, std::string_view v) {
         const double g = parse_double(v);
         for (auto& p : c.params_list) p.g = g;
         c.scheme.g = g;
       }},
      {"physics.k_h",
       [](RunConfig& c, std::string_view v) {
         const double k = parse_double(v);
         for (auto& p : c.params_list) p.k_h = k;
         c.scheme.k_h = k;
       }},
      {"physics.n",
       [](RunConfig& c, std::string_view v) {
         const auto n = parse_count(v);
         for (auto& p : c.params_list) p.n = static_cast<int>(n);
       }},
      {"output.dir", [](RunConfig& c, std::string_view v) { c.output.dir = std::string(v); }},
      {"output.formats",
       [](RunConfig& c, std::string_view v) {
         c.output.csv = false;
         c.output.svg = false;
         std::size_t pos = 0;
         while (pos <= v.size()) {
           const auto comma = v.find(',', pos);
           const auto item = trim(v.substr(pos, comma == std::string_view::npos ? v.npos : comma - pos));
           if (item == "csv") {
             c.output.csv = true;
           } else if (item == "svg") {
             c.output.svg = true;
           } else {
             throw std::invalid_argument("unknown format '" + std::string(item) + "'");
           }
           if (comma == std::string_view::npos) break;
           pos = comma + 1;
         }
       }},
      {"output.snapshots",
       [](RunConfig& c, std::string_view v) { c.output.snapshot_times = parse_number_list(v); }},
      {"check.max_linf",
       [](RunConfig& c, std::string_view v) { c.max_linf = parse_double(v); }},
  };
  return table;
}

}  // namespace

std::string_view to_string(RunCase c) {
  switch (c) {
    case RunCase::euler:
      return "euler";
    case RunCase::ns:
      return "ns";
    case RunCase::ndim_audit:
      return "ndim_audit";
  }
  return "unknown";
}

ConfigError::ConfigError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    out.push_back(parse_double(item));
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return out;
}

void override_c1(RunConfig& cfg, const std::vector<double>& c1_values) {
  SolutionParams base = cfg.params_list.empty() ? SolutionParams{} : cfg.params_list.front();
  base.g = cfg.scheme.g;
  base.k_h = cfg.scheme.k_h;
  cfg.params_list.clear();
  for (const double c1 : c1_values) {
    SolutionParams p = base;
    p.c1 = c1;
    cfg.params_list.push_back(p);
  }
}

void RunConfig::validate() const {
  try {
    grid.validate();
    scheme.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(0, e.what());
  }
  if (params_list.empty()) {
    throw ConfigError(0, "c1: at least one value is required");
  }
  for (const auto& p : params_list) {
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(0, e.what());
    }
    if (run_case != RunCase::ndim_audit && p.n != 1) {
      throw ConfigError(0, "n: the solver cases need n = 1");
    }
  }
  if (run_case == RunCase::euler && scheme.k_h != 0.0) {
    throw ConfigError(0, "k_h: the euler case needs k_h = 0");
  }
  if (max_linf && !(*max_linf > 0.0)) {
    throw ConfigError(0, "max_linf: must be positive");
  }
  for (const double t : output.snapshot_times) {
    if (!(t >= 0.0)) {
      throw ConfigError(0, "snapshots: times must be non-negative");
    }
  }
}

RunConfig preset(std::string_view name) {
  RunConfig c;
  c.grid = Grid1D{1000, 1e-2, 1e-3, 10000, 0.0};
  c.scheme.g = 1.0;
  if (name == "table1") {
    c.run_case = RunCase::euler;
    c.scheme.k_h = 0.0;
    c.scheme.bathymetry = BathymetrySource::integrated;
    override_c1(c, {2.0, 4.0, 7.0});
  } else if (name == "table2") {
    c.run_case = RunCase::ns;
    c.grid.dt = 1e-4;
    c.grid.n_steps = 100000;
    c.scheme.k_h = 0.3;
    c.scheme.bathymetry = BathymetrySource::analytic;
    override_c1(c, {2.0, 3.0, 5.0, 7.0});
  } else {
    throw ConfigError(0, "preset: unknown preset '" + std::string(name) + "' (table1 | table2)");
  }
  return c;
}

RunConfig parse_config(std::string_view text) {
  std::vector<Entry> entries;
  std::optional<Entry> preset_entry;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(line_no, "unterminated section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      static const char* known[] = {"grid", "scheme", "physics", "output", "check"};
      if (std::find(std::begin(known), std::end(known), section) == std::end(known)) {
        throw ConfigError(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected key = value");
    }
    Entry e{line_no, section, std::string(trim(line.substr(0, eq))),
            std::string(trim(line.substr(eq + 1)))};
    if (e.key.empty()) {
      throw ConfigError(line_no, "empty key");
    }
    if (e.section.empty() && e.key == "preset") {
      preset_entry = e;
    } else {
      entries.push_back(std::move(e));
    }
  }

  RunConfig cfg;
  override_c1(cfg, {2.0});
  if (preset_entry) {
    try {
      cfg = preset(preset_entry->value);
    } catch (const ConfigError& err) {
      throw ConfigError(preset_entry->line, err.what());
    }
  }
  for (const auto& e : entries) {
    const std::string full = e.section.empty() ? e.key : e.section + "." + e.key;
    const auto it = setters().find(full);
    if (it == setters().end()) {
      throw ConfigError(e.line, "unknown key '" + full + "'");
    }
    try {
      it->second(cfg, e.value);
    } catch (const std::invalid_argument& err) {
      throw ConfigError(e.line, full + ": " + err.what());
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(0, "cannot read config file " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace solitary
