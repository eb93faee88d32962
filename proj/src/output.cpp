#include "solitary/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace solitary {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!dir.empty()) {
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                               ec.message());
    }
  }
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  return out;
}

// --- minimal SVG plotting -------------------------------------------------

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string colour;
  bool markers = false;
  std::string label;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

const char* palette(std::size_t i) {
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return colours[i % (sizeof colours / sizeof *colours)];
}

double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (const double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      return m * mag;
    }
  }
  return 10.0 * mag;
}

void draw_panel(std::ostream& svg, const Panel& panel, double ox, double oy, double w, double h) {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : panel.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!(xmin < xmax)) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (!(ymin < ymax)) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  auto px = [&](double x) { return ox + (x - xmin) / (xmax - xmin) * w; };
  auto py = [&](double y) { return oy + h - (y - ymin) / (ymax - ymin) * h; };

  svg << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"none\" stroke=\"#000\"/>\n";
  svg << "<text x=\"" << ox + w / 2 << "\" y=\"" << oy - 10
      << "\" text-anchor=\"middle\" font-size=\"14\">" << panel.title << "</text>\n";
  svg << "<text x=\"" << ox + w / 2 << "\" y=\"" << oy + h + 36
      << "\" text-anchor=\"middle\" font-size=\"12\">" << panel.x_label << "</text>\n";
  svg << "<text transform=\"translate(" << ox - 48 << "," << oy + h / 2
      << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"12\">" << panel.y_label
      << "</text>\n";

  const double xs = nice_step(xmax - xmin);
  for (double t = std::ceil(xmin / xs) * xs; t <= xmax + 1e-12 * xs; t += xs) {
    svg << "<line x1=\"" << px(t) << "\" y1=\"" << oy + h << "\" x2=\"" << px(t) << "\" y2=\""
        << oy + h + 5 << "\" stroke=\"#000\"/><text x=\"" << px(t) << "\" y=\"" << oy + h + 18
        << "\" text-anchor=\"middle\" font-size=\"10\">" << short_number(t) << "</text>\n";
  }
  const double ys = nice_step(ymax - ymin);
  for (double t = std::ceil(ymin / ys) * ys; t <= ymax + 1e-12 * ys; t += ys) {
    svg << "<line x1=\"" << ox - 5 << "\" y1=\"" << py(t) << "\" x2=\"" << ox << "\" y2=\""
        << py(t) << "\" stroke=\"#000\"/><text x=\"" << ox - 8 << "\" y=\"" << py(t) + 3
        << "\" text-anchor=\"end\" font-size=\"10\">" << short_number(t) << "</text>\n";
  }

  std::size_t legend_row = 0;
  for (const auto& s : panel.series) {
    if (s.markers) {
      const std::size_t stride = std::max<std::size_t>(1, s.x.size() / 40);
      svg << "<g fill=\"none\" stroke=\"" << s.colour << "\">";
      for (std::size_t i = 0; i < s.x.size(); i += stride) {
        if (!std::isfinite(s.y[i])) continue;
        svg << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i]) << "\" r=\"3\"/>";
      }
      svg << "</g>\n";
    } else {
      svg << "<polyline fill=\"none\" stroke=\"" << s.colour << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.y[i])) continue;
        svg << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
      }
      svg << "\"/>\n";
    }
    if (!s.label.empty()) {
      const double ly = oy + 14 + 14 * static_cast<double>(legend_row++);
      svg << "<text x=\"" << ox + w - 6 << "\" y=\"" << ly << "\" text-anchor=\"end\" font-size=\"10\" fill=\""
          << s.colour << "\">" << s.label << "</text>\n";
    }
  }
}

void write_svg(const std::vector<Panel>& panels, const std::filesystem::path& path,
               const std::string& title) {
  ensure_dir(path.parent_path());
  const double panel_w = 460, panel_h = 320, margin_l = 80, margin_t = 60, gap = 110;
  const double width = margin_l + static_cast<double>(panels.size()) * (panel_w + gap);
  const double height = margin_t + panel_h + 70;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  if (!title.empty()) {
    svg << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";
  }
  for (std::size_t i = 0; i < panels.size(); ++i) {
    draw_panel(svg, panels[i], margin_l + static_cast<double>(i) * (panel_w + gap), margin_t,
               panel_w, panel_h);
  }
  svg << "</svg>\n";
  auto out = open_for_write(path);
  out << svg.str();
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace

std::string snapshot_stem(const Snapshot& s) {
  return std::string(to_string(s.flow)) + "_c1-" + short_number(s.c1) + "_t-" +
         short_number(std::round(s.t * 1e6) / 1e6);
}

void write_snapshot_csv(const Snapshot& s, const std::filesystem::path& path) {
  const std::size_t n = s.x.size();
  for (const auto* col : {&s.u_num, &s.u_exact, &s.h_num, &s.h_exact, &s.he_num, &s.he_exact, &s.hb}) {
    if (col->size() != n) {
      throw std::invalid_argument("write_snapshot_csv: column length mismatch");
    }
  }
  std::string text;
  text.reserve((n + 1) * 8 * 25);
  text += kCsvHeader;
  text += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (const double v : {s.x[i], s.u_num[i], s.u_exact[i], s.h_num[i], s.h_exact[i],
                           s.he_num[i], s.he_exact[i]}) {
      text += format_double(v);
      text += ',';
    }
    text += format_double(s.hb[i]);
    text += '\n';
  }
  auto out = open_for_write(path);
  out << text;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

std::vector<std::filesystem::path> emit_csv(std::span<const Snapshot> snapshots,
                                            const std::filesystem::path& dir) {
  if (snapshots.empty()) {
    throw std::invalid_argument("emit_csv: no snapshots");
  }
  ensure_dir(dir);
  std::vector<std::filesystem::path> paths;
  for (const auto& s : snapshots) {
    auto path = dir / (snapshot_stem(s) + ".csv");
    write_snapshot_csv(s, path);
    paths.push_back(std::move(path));
  }
  return paths;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty CSV: " + path.string());
  }
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      table.header.push_back(cell);
    }
  }
  table.columns.resize(table.header.size());
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::size_t col = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p <= end) {
      const char* comma = std::find(p, end, ',');
      if (col >= table.columns.size()) {
        throw std::runtime_error("row " + std::to_string(row) + ": too many fields");
      }
      double v = 0.0;
      const auto res = std::from_chars(p, comma, v);
      if (res.ec != std::errc{} || res.ptr != comma) {
        throw std::runtime_error("row " + std::to_string(row) + ": bad number");
      }
      table.columns[col++].push_back(v);
      p = comma + 1;
    }
    if (col != table.columns.size()) {
      throw std::runtime_error("row " + std::to_string(row) + ": too few fields");
    }
  }
  return table;
}

void emit_plot(std::span<const Snapshot> snapshots, const std::filesystem::path& path,
               const std::string& title) {
  if (snapshots.empty()) {
    throw std::invalid_argument("emit_plot: no snapshots");
  }
  Panel bathy{"Bathymetry h_B", "x [m]", "h_B [m]", {}};
  Panel velocity{"Velocity u", "x [m]", "u [m/s]", {}};
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    const auto& s = snapshots[i];
    const std::string colour = palette(i);
    const std::string label = "c1=" + short_number(s.c1) + ", t=" + short_number(s.t) + " s";
    std::vector<double> hb_exact(s.x.size());
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      hb_exact[k] = s.h_exact[k] - s.he_exact[k];
    }
    bathy.series.push_back({s.x, hb_exact, colour, false, label});
    bathy.series.push_back({s.x, s.hb, colour, true, {}});
    velocity.series.push_back({s.x, s.u_exact, colour, false, label});
    velocity.series.push_back({s.x, s.u_num, colour, true, {}});
  }
  write_svg({bathy, velocity}, path, title);
}

BathymetryEvolution bathymetry_evolution(const SolutionParams& viscous, double t_switch,
                                         double t_end, double dt_sample, const Grid1D& grid,
                                         std::size_t x_stride) {
  viscous.validate();
  grid.validate();
  if (!(dt_sample > 0.0) || x_stride == 0) {
    throw std::invalid_argument("bathymetry_evolution: bad sampling");
  }
  SolutionParams inviscid = viscous;
  inviscid.k_h = 0.0;
  BathymetryEvolution ev;
  ev.t_switch = t_switch;
  for (std::size_t i = 0; i < grid.n_cells; i += x_stride) {
    ev.x.push_back(grid.x(i));
  }
  const auto n_t = static_cast<std::size_t>(std::llround(t_end / dt_sample));
  for (std::size_t k = 0; k <= n_t; ++k) {
    const double t = static_cast<double>(k) * dt_sample;
    const SolutionParams& p = t < t_switch ? inviscid : viscous;
    std::vector<double> row(ev.x.size());
    for (std::size_t i = 0; i < ev.x.size(); ++i) {
      row[i] = eval_hb_ns(ev.x[i], t, p);
    }
    ev.t.push_back(t);
    ev.h_b.push_back(std::move(row));
  }
  return ev;
}

void emit_bathymetry_csv(const BathymetryEvolution& ev, const std::filesystem::path& path) {
  ensure_dir(path.parent_path());
  std::string text = "t,x,hB\n";
  for (std::size_t k = 0; k < ev.t.size(); ++k) {
    for (std::size_t i = 0; i < ev.x.size(); ++i) {
      text += format_double(ev.t[k]) + ',' + format_double(ev.x[i]) + ',' +
              format_double(ev.h_b[k][i]) + '\n';
    }
  }
  auto out = open_for_write(path);
  out << text;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

void emit_bathymetry_plot(const BathymetryEvolution& ev, const std::filesystem::path& path,
                          const std::string& title) {
  Panel profiles{"h_B(x) at whole seconds", "x [m]", "h_B [m]", {}};
  Panel at_origin{"h_B(x0, t)", "t [s]", "h_B [m]", {}};
  std::vector<double> origin(ev.t.size());
  for (std::size_t k = 0; k < ev.t.size(); ++k) {
    origin[k] = ev.h_b[k].front();
    const double t = ev.t[k];
    if (std::abs(t - std::round(t)) < 1e-9) {
      const bool viscous = t >= ev.t_switch;
      profiles.series.push_back({ev.x, ev.h_b[k], viscous ? "#d62728" : "#1f77b4", false,
                                 "t=" + short_number(t) + (viscous ? " (k_H>0)" : " (k_H=0)")});
    }
  }
  at_origin.series.push_back({ev.t, origin, "#000", false, {}});
  write_svg({profiles, at_origin}, path, title);
}

}  // namespace solitary
