#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "solitary/config.hpp"
#include "solitary/output.hpp"

using namespace solitary;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("solitary_unit_" + name);
  fs::remove_all(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const fs::path& p) {
  std::string s = slurp(p);
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

Snapshot short_run_snapshot(double c1) {
  SolutionParams p;
  p.c1 = c1;
  Grid1D grid;
  grid.n_steps = 100;
  SchemeConfig s;
  RunOptions opts;
  opts.snapshot_times = {0.1};
  return run(FlowCase::euler, grid, s, p, opts).snapshots.at(0);
}

}  // namespace

TEST_CASE("table1 preset") {
  RunConfig c = preset("table1");
  CHECK(c.run_case == RunCase::euler);
  CHECK(c.grid.n_cells == 1000);
  CHECK(c.grid.dx == 1e-2);
  CHECK(c.grid.dt == 1e-3);
  CHECK(c.grid.n_steps == 10000);
  REQUIRE(c.params_list.size() == 3);
  CHECK(c.params_list[0].c1 == 2);
  CHECK(c.params_list[1].c1 == 4);
  CHECK(c.params_list[2].c1 == 7);
  for (const auto& p : c.params_list) {
    CHECK(p.g == 1.0);
    CHECK(p.k_h == 0.0);
  }
}

TEST_CASE("table2 preset") {
  RunConfig c = preset("table2");
  CHECK(c.run_case == RunCase::ns);
  CHECK(c.grid.dt == 1e-4);
  CHECK(c.grid.n_steps == 100000);
  CHECK(c.scheme.k_h == 0.3);
  REQUIRE(c.params_list.size() == 4);
  CHECK(c.params_list[1].c1 == 3);
  CHECK(c.params_list[2].c1 == 5);
  for (const auto& p : c.params_list) CHECK(p.k_h == 0.3);
  CHECK_THROWS_AS(preset("table3"), ConfigError);
}

TEST_CASE("config file overrides a preset") {
  RunConfig c = parse_config(
      "# comment\n"
      "preset = table1\n"
      "[grid]\n"
      "n_steps = 50   ; short\n"
      "[physics]\n"
      "c1 = 3, 5\n"
      "[scheme]\n"
      "advection = central\n"
      "bathymetry = integrated\n"
      "[output]\n"
      "dir = somewhere\n"
      "formats = csv,svg\n"
      "snapshots = 0, 0.05\n"
      "[check]\n"
      "max_linf = 0.5\n");
  CHECK(c.grid.n_steps == 50);
  CHECK(c.grid.dx == 1e-2);
  REQUIRE(c.params_list.size() == 2);
  CHECK(c.params_list[1].c1 == 5);
  CHECK(c.scheme.advection == Advection::central);
  CHECK(c.scheme.bathymetry == BathymetrySource::integrated);
  CHECK(c.output.dir == "somewhere");
  CHECK(c.output.svg);
  CHECK(c.output.snapshot_times == std::vector<double>{0, 0.05});
  REQUIRE(c.max_linf);
  CHECK(*c.max_linf == 0.5);
}

TEST_CASE("config errors carry line numbers") {
  try {
    parse_config("preset = table1\n\n[grid]\nbogus = 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
  try {
    parse_config("[grid]\ndx = abc\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_config("[nowhere]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("dx = 0.1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[grid\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[grid]\nn_cells\n"), ConfigError);
}

TEST_CASE("invalid c1 is rejected") {
  CHECK_THROWS_AS(parse_config("preset = table1\n[physics]\nc1 = 0.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("preset = table1\n[physics]\nc1 = 1\n"), ConfigError);
  RunConfig c = preset("table1");
  override_c1(c, {0.5});
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("c1 override keeps physics") {
  RunConfig c = preset("table2");
  override_c1(c, {4.0, 6.0});
  REQUIRE(c.params_list.size() == 2);
  CHECK(c.params_list[0].c1 == 4.0);
  CHECK(c.params_list[1].k_h == 0.3);
}

TEST_CASE("number lists") {
  CHECK(parse_number_list("2, 4.5,7") == std::vector<double>{2, 4.5, 7});
  CHECK_THROWS_AS(parse_number_list("2,,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_number_list("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_number_list(""), std::invalid_argument);
}

TEST_CASE("load_config reads files and reports missing ones") {
  fs::path d = scratch_dir("load");
  fs::create_directories(d);
  std::ofstream(d / "a.cfg") << "preset = table2\n[physics]\nc1 = 2\n";
  RunConfig c = load_config(d / "a.cfg");
  CHECK(c.params_list.size() == 1);
  CHECK_THROWS(load_config(d / "missing.cfg"));
  fs::remove_all(d);
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("CSV snapshot has a header plus one line per cell") {
  fs::path d = scratch_dir("csv");
  Snapshot s = short_run_snapshot(2);
  auto paths = emit_csv(std::span<const Snapshot>(&s, 1), d);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].filename() == "euler_c1-2_t-0.1.csv");
  CHECK(line_count(paths[0]) == 1001);
  std::string text = slurp(paths[0]);
  CHECK(text.substr(0, text.find('\n')) == kCsvHeader);
  fs::remove_all(d);
}

TEST_CASE("empty snapshot list writes nothing") {
  fs::path d = scratch_dir("empty");
  CHECK_THROWS_AS(emit_csv({}, d), std::invalid_argument);
  CHECK_FALSE(fs::exists(d));
}

TEST_CASE("CSV round trip is bit exact") {
  fs::path d = scratch_dir("roundtrip");
  Snapshot s = short_run_snapshot(7);
  auto paths = emit_csv(std::span<const Snapshot>(&s, 1), d);
  CsvTable t = read_csv(paths.at(0));
  REQUIRE(t.columns.size() == 8);
  CHECK(t.columns[0] == s.x);
  CHECK(t.columns[1] == s.u_num);
  CHECK(t.columns[2] == s.u_exact);
  CHECK(t.columns[3] == s.h_num);
  CHECK(t.columns[4] == s.h_exact);
  CHECK(t.columns[5] == s.he_num);
  CHECK(t.columns[6] == s.he_exact);
  CHECK(t.columns[7] == s.hb);
  fs::remove_all(d);
}

TEST_CASE("repeated runs write identical bytes") {
  fs::path a = scratch_dir("det_a"), b = scratch_dir("det_b");
  Snapshot s1 = short_run_snapshot(4);
  Snapshot s2 = short_run_snapshot(4);
  auto pa = emit_csv(std::span<const Snapshot>(&s1, 1), a);
  auto pb = emit_csv(std::span<const Snapshot>(&s2, 1), b);
  CHECK(slurp(pa.at(0)) == slurp(pb.at(0)));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("SVG overlay") {
  fs::path d = scratch_dir("svg");
  fs::create_directories(d);
  Snapshot s = short_run_snapshot(2);
  emit_plot(std::span<const Snapshot>(&s, 1), d / "one.svg", "single");
  std::string svg = slurp(d / "one.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  fs::remove_all(d);
}

TEST_CASE("bathymetry switching from inviscid to viscous") {
  SolutionParams p;
  p.c1 = 5;
  p.k_h = 1;
  Grid1D grid;
  auto ev = bathymetry_evolution(p, 5.0, 10.0, 1.0, grid, 100);
  REQUIRE(ev.t.size() == 11);
  REQUIRE(ev.x.size() == 10);
  SolutionParams inviscid = p;
  inviscid.k_h = 0;
  CHECK(ev.h_b[2][3] == eval_hb_euler(ev.x[3], ev.t[2], inviscid));
  CHECK(ev.h_b[8][3] == eval_hb_ns(ev.x[3], ev.t[8], p));
  fs::path d = scratch_dir("bathy");
  fs::create_directories(d);
  emit_bathymetry_csv(ev, d / "b.csv");
  CHECK(line_count(d / "b.csv") > 1);
  fs::remove_all(d);
}
