#include "graphlearn/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "graphlearn/errors.hpp"
#include "graphlearn/rng.hpp"

namespace graphlearn {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  return cells;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

double parse_cell(const std::string& cell, int row, int col) {
  double v = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || cell.empty()) {
    std::ostringstream os;
    os << "expected a number at row " << row << ", column " << col << ": '" << cell << "'";
    throw ParseError(os.str(), row, col);
  }
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "non-finite value at row " << row << ", column " << col;
    throw ParseError(os.str(), row, col);
  }
  return v;
}

long parse_index(const std::string& cell, int row, int col) {
  long v = 0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || cell.empty() || v < 0) {
    std::ostringstream os;
    os << "expected a node index at row " << row << ", column " << col << ": '" << cell << "'";
    throw ParseError(os.str(), row, col);
  }
  return v;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out.push_back(ch);
        }
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SignalMatrix SignalMatrix::fromValues(Eigen::MatrixXd values,
                                      std::vector<std::string> node_names) {
  if (values.rows() < 1 || values.cols() < 1) {
    throw DimensionError("signal matrix must have at least one sample and one node");
  }
  if (!values.allFinite()) {
    throw std::invalid_argument("signal values must be finite");
  }
  if (!node_names.empty() && node_names.size() != static_cast<std::size_t>(values.cols())) {
    throw DimensionError("node_names length does not match column count");
  }
  return SignalMatrix(std::move(values), std::move(node_names));
}

SynthConfig SynthConfig::defaults(int n, int m, std::uint64_t seed) {
  SynthConfig c;
  c.n = n;
  c.m = m;
  c.seed = seed;
  c.freq_center = 2.0 * 3.14159265358979323846 / static_cast<double>(n);
  return c;
}

SignalMatrix gen_sinusoids(const SynthConfig& c) {
  if (c.n < 1 || c.m < 1) throw std::invalid_argument("n and m must be >= 1");
  if (c.freq_halfwidth < 0.0) throw std::invalid_argument("freq_halfwidth must be >= 0");
  const double center =
      c.freq_center != 0.0 ? c.freq_center
                           : 2.0 * 3.14159265358979323846 / static_cast<double>(c.n);
  Rng rng(c.seed);
  Eigen::MatrixXd x(c.m, c.n);
  std::vector<std::string> names(c.n);
  for (int k = 0; k < c.n; ++k) {
    const double amp = c.amp_std * rng.normal();
    const double freq = rng.uniform(center - c.freq_halfwidth, center + c.freq_halfwidth);
    const double phase = rng.uniform(c.phase_min, c.phase_max);
    for (int l = 1; l <= c.m; ++l) {
      x(l - 1, k) = amp * std::sin(freq * static_cast<double>(l) + phase);
    }
    names[k] = "node" + std::to_string(k);
  }
  return SignalMatrix::fromValues(std::move(x), std::move(names));
}

SignalMatrix parse_timeseries_csv(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty file", 0, 0);
  const std::vector<std::string> names = split_csv_line(lines[0]);
  const int n = static_cast<int>(names.size());
  const int m = static_cast<int>(lines.size()) - 1;
  if (m < 1) throw ParseError("file contains a header but no data rows", 1, 0);
  Eigen::MatrixXd values(m, n);
  for (int r = 0; r < m; ++r) {
    const int file_row = r + 2;  // 1-based, header is row 1
    const std::vector<std::string> cells = split_csv_line(lines[r + 1]);
    if (static_cast<int>(cells.size()) != n) {
      std::ostringstream os;
      os << "row " << file_row << " has " << cells.size() << " cells, expected " << n;
      throw ParseError(os.str(), file_row, 0);
    }
    for (int col = 0; col < n; ++col) {
      values(r, col) = parse_cell(cells[col], file_row, col + 1);
    }
  }
  return SignalMatrix::fromValues(std::move(values), names);
}

SignalMatrix read_timeseries_csv(const std::filesystem::path& path) {
  return parse_timeseries_csv(read_text_file(path));
}

std::string write_timeseries_csv(const SignalMatrix& x) {
  std::string out;
  for (int k = 0; k < x.nodes(); ++k) {
    if (k) out += ',';
    out += x.node_names().empty() ? "node" + std::to_string(k) : x.node_names()[k];
  }
  out += '\n';
  for (int r = 0; r < x.samples(); ++r) {
    for (int k = 0; k < x.nodes(); ++k) {
      if (k) out += ',';
      out += format_double(x.values()(r, k));
    }
    out += '\n';
  }
  return out;
}

AdjacencyMatrix truncate_edges(const AdjacencyMatrix& a, double threshold) {
  if (threshold < 0.0) throw std::invalid_argument("threshold must be >= 0");
  Eigen::MatrixXd w = a.weights();
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      if (w(i, j) < threshold) w(i, j) = 0.0;
    }
  }
  return AdjacencyMatrix::fromWeights(std::move(w));
}

WeightHistogram weight_histogram(const AdjacencyMatrix& a, int bins) {
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");
  const int n = a.n();
  const Eigen::MatrixXd& w = a.weights();
  double wmax = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) wmax = std::max(wmax, w(i, j));
  }
  WeightHistogram h;
  if (wmax == 0.0) {
    h.bin_edges = {0.0, 0.0};
    h.counts = {static_cast<std::int64_t>(n) * (n - 1) / 2};
    return h;
  }
  h.bin_edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) {
    h.bin_edges[b] = wmax * static_cast<double>(b) / static_cast<double>(bins);
  }
  h.counts.assign(bins, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int idx = static_cast<int>(std::floor(w(i, j) / wmax * bins));
      idx = std::min(idx, bins - 1);
      ++h.counts[idx];
    }
  }
  return h;
}

std::string export_graph(const AdjacencyMatrix& a, GraphFormat format,
                         const std::vector<std::string>& names) {
  const int n = a.n();
  const Eigen::MatrixXd& w = a.weights();
  if (!names.empty() && static_cast<int>(names.size()) != n) {
    throw DimensionError("names length does not match node count");
  }
  const bool has_diag = w.diagonal().cwiseAbs().maxCoeff() > 0.0;

  switch (format) {
    case GraphFormat::Json: {
      std::string out = "{\"n\":" + std::to_string(n) + ",\"nodes\":[";
      for (int i = 0; i < n; ++i) {
        if (i) out += ',';
        out += '"' + json_escape(names.empty() ? "" : names[i]) + '"';
      }
      out += "],\"edges\":[";
      bool first = true;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (w(i, j) > 0.0) {
            if (!first) out += ',';
            first = false;
            out += "{\"i\":" + std::to_string(i) + ",\"j\":" + std::to_string(j) +
                   ",\"w\":" + format_double(w(i, j)) + "}";
          }
        }
      }
      out += ']';
      if (has_diag) {
        out += ",\"diag\":[";
        for (int i = 0; i < n; ++i) {
          if (i) out += ',';
          out += format_double(w(i, i));
        }
        out += ']';
      }
      out += "}\n";
      return out;
    }
    case GraphFormat::Dot: {
      std::string out = "graph G {\n";
      if (!names.empty()) {
        for (int i = 0; i < n; ++i) {
          out += "  " + std::to_string(i) + " [label=\"" + names[i] + "\"];\n";
        }
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          if (w(i, j) > 0.0) {
            out += "  " + std::to_string(i) + " -- " + std::to_string(j) +
                   " [label=\"" + format_double(w(i, j)) + "\"];\n";
          }
        }
      }
      out += "}\n";
      return out;
    }
    case GraphFormat::EdgeListCsv: {
      std::string out = "i,j,w\n";
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          if (w(i, j) > 0.0) {
            out += std::to_string(i) + "," + std::to_string(j) + "," +
                   format_double(w(i, j)) + "\n";
          }
        }
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown graph format");
}

AdjacencyMatrix import_graph_json(const std::string& text, std::vector<std::string>* names) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what(), 0, 0);
  }
  try {
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("graph JSON: n must be >= 1", 0, 0);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : j.at("edges")) {
      const int i = e.at("i").get<int>();
      const int k = e.at("j").get<int>();
      const double weight = e.at("w").get<double>();
      if (i < 0 || k < 0 || i >= n || k >= n) {
        throw ParseError("graph JSON: edge endpoint out of range", 0, 0);
      }
      w(i, k) = weight;
      w(k, i) = weight;
    }
    if (j.contains("diag")) {
      const auto& d = j.at("diag");
      if (static_cast<int>(d.size()) != n) {
        throw ParseError("graph JSON: diag length does not match n", 0, 0);
      }
      for (int i = 0; i < n; ++i) w(i, i) = d[i].get<double>();
    }
    if (names != nullptr) {
      names->clear();
      if (j.contains("nodes")) {
        for (const auto& name : j.at("nodes")) {
          names->push_back(name.get<std::string>());
        }
        const bool all_empty =
            std::all_of(names->begin(), names->end(),
                        [](const std::string& s) { return s.empty(); });
        if (all_empty) names->clear();
      }
    }
    return AdjacencyMatrix::fromWeights(std::move(w));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON missing or malformed field: ") + e.what(), 0, 0);
  }
}

AdjacencyMatrix import_edgelist_csv(const std::string& text, int n) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty file", 0, 0);
  if (lines[0] != "i,j,w") {
    throw ParseError("edge list must start with header 'i,j,w'", 1, 0);
  }
  std::vector<std::tuple<int, int, double>> edges;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const int file_row = static_cast<int>(r) + 1;
    const std::vector<std::string> cells = split_csv_line(lines[r]);
    if (cells.size() != 3) {
      std::ostringstream os;
      os << "row " << file_row << " has " << cells.size() << " cells, expected 3";
      throw ParseError(os.str(), file_row, 0);
    }
    const long i = parse_index(cells[0], file_row, 1);
    const long j = parse_index(cells[1], file_row, 2);
    const double weight = parse_cell(cells[2], file_row, 3);
    if (i >= n || j >= n) {
      std::ostringstream os;
      os << "row " << file_row << ": node index out of range for n=" << n;
      throw ParseError(os.str(), file_row, 0);
    }
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j), weight);
  }
  return AdjacencyMatrix::fromEdges(n, edges);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace graphlearn
