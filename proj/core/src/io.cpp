#include "invspec/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace invspec {

std::string format_double(double v) {
  // Shortest representation that survives a round trip. All precisions are
  // scanned because a higher %g precision can still print fewer characters
  // (-10 is "-1e+01" at one significant digit but "-10" at two).
  char buf[64];
  std::string best;
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v &&
        (best.empty() || std::strlen(buf) < best.size()))
      best = buf;
  }
  return best.empty() ? buf : best;
}

void write_csv(const std::filesystem::path& path, const std::vector<Column>& cols) {
  if (cols.empty() || cols.front().values.empty())
    throw InvalidParams("write_csv: empty dataset");
  const size_t rows = cols.front().values.size();
  for (const Column& c : cols)
    if (c.values.size() != rows)
      throw InvalidParams("write_csv: ragged columns");
  std::ofstream out(path);
  if (!out) throw Error("write_csv: cannot open " + path.string());
  for (size_t j = 0; j < cols.size(); ++j)
    out << cols[j].name << (j + 1 < cols.size() ? "," : "\n");
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      out << format_double(cols[j].values[i]) << (j + 1 < cols.size() ? "," : "\n");
  if (!out) throw Error("write_csv: write failed for " + path.string());
}

void write_levels_csv(const std::filesystem::path& path,
                      const std::vector<double>& energies) {
  std::vector<Column> cols(2);
  cols[0].name = "n";
  cols[1].name = "E_n";
  for (size_t i = 0; i < energies.size(); ++i) {
    cols[0].values.push_back(static_cast<double>(i + 1));
    cols[1].values.push_back(energies[i]);
  }
  write_csv(path, cols);
}

std::vector<Column> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("read_csv: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error("read_csv: empty file");
  std::vector<Column> cols;
  {
    std::istringstream hs(line);
    std::string field;
    while (std::getline(hs, field, ',')) cols.push_back({field, {}});
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    size_t j = 0;
    while (std::getline(ls, field, ',')) {
      if (j >= cols.size()) throw Error("read_csv: too many fields");
      cols[j++].values.push_back(std::strtod(field.c_str(), nullptr));
    }
  }
  return cols;
}

Spectrum read_spectrum_file(const std::filesystem::path& path,
                            const SpectrumOptions& opt) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open spectrum file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParams("spectrum file " + path.string() + ": " + e.what());
  }
  const bool has_e = j.contains("energies"), has_k = j.contains("kappas");
  if (has_e == has_k)
    throw InvalidParams("spectrum file must contain exactly one of "
                        "\"energies\" or \"kappas\"");
  std::vector<double> values;
  try {
    values = j.at(has_e ? "energies" : "kappas").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParams(std::string("spectrum file: ") + e.what());
  }
  return has_e ? Spectrum::from_energies(std::move(values), opt)
               : Spectrum::from_kappas(std::move(values), opt);
}

void write_gnuplot_dat(const std::filesystem::path& path,
                       const std::vector<Column>& cols,
                       const std::vector<double>& levels) {
  if (cols.empty() || cols.front().values.empty())
    throw InvalidParams("write_gnuplot_dat: empty dataset");
  std::ofstream out(path);
  if (!out) throw Error("write_gnuplot_dat: cannot open " + path.string());
  out << "#";
  for (const Column& c : cols) out << " " << c.name;
  out << "\n";
  const size_t rows = cols.front().values.size();
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols.size(); ++j)
      out << format_double(cols[j].values[i]) << (j + 1 < cols.size() ? " " : "\n");
  }
  if (!levels.empty()) {
    const double x0 = cols.front().values.front();
    const double x1 = cols.front().values.back();
    for (double e : levels) {
      out << "\n\n# level E = " << format_double(e) << "\n";
      out << format_double(x0) << " " << format_double(e) << "\n";
      out << format_double(x1) << " " << format_double(e) << "\n";
    }
  }
}

namespace {

std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_svg_plot(const std::filesystem::path& path,
                    const std::vector<double>& x, const std::vector<double>& y,
                    const std::vector<double>& levels,
                    const std::string& title) {
  if (x.empty() || x.size() != y.size())
    throw InvalidParams("write_svg_plot: empty or mismatched dataset");
  const double w = 720, hgt = 480, ml = 60, mr = 20, mt = 36, mb = 44;
  double ymin = 0.0, ymax = 0.0;
  for (double v : y) {
    ymin = std::min(ymin, v);
    ymax = std::max(ymax, v);
  }
  for (double v : levels) {
    ymin = std::min(ymin, v);
    ymax = std::max(ymax, v);
  }
  const double pad = 0.05 * (ymax - ymin + 1e-12);
  ymin -= pad;
  ymax += pad;
  auto px = [&](double v) {
    return ml + (v - x.front()) / (x.back() - x.front()) * (w - ml - mr);
  };
  auto py = [&](double v) {
    return mt + (ymax - v) / (ymax - ymin) * (hgt - mt - mb);
  };

  std::ofstream out(path);
  if (!out) throw Error("write_svg_plot: cannot open " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << hgt << "\" viewBox=\"0 0 " << w << " " << hgt << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
  // axes
  out << "<line x1=\"" << ml << "\" y1=\"" << py(0.0) << "\" x2=\"" << w - mr
      << "\" y2=\"" << py(0.0) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << px(0.0) << "\" y1=\"" << mt << "\" x2=\"" << px(0.0)
      << "\" y2=\"" << hgt - mb << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (double e : levels)
    out << "<line x1=\"" << ml << "\" y1=\"" << svg_coord(py(e)) << "\" x2=\""
        << w - mr << "\" y2=\"" << svg_coord(py(e))
        << "\" stroke=\"#c44\" stroke-width=\"1\" stroke-dasharray=\"6 3\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"#226\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < x.size(); ++i)
    out << svg_coord(px(x[i])) << "," << svg_coord(py(y[i])) << " ";
  out << "\"/>\n</svg>\n";
}

}  // namespace invspec
