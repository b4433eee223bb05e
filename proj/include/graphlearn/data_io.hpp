#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "graphlearn/adjacency.hpp"

namespace graphlearn {

/// M samples of a signal observed over N nodes; row t is one time sample,
/// column k the series at node k.
class SignalMatrix {
 public:
  /// values must be finite; names, when given, must have one entry per column.
  static SignalMatrix fromValues(Eigen::MatrixXd values,
                                 std::vector<std::string> node_names = {});

  int samples() const { return static_cast<int>(values_.rows()); }
  int nodes() const { return static_cast<int>(values_.cols()); }
  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<std::string>& node_names() const { return names_; }

 private:
  SignalMatrix(Eigen::MatrixXd v, std::vector<std::string> n)
      : values_(std::move(v)), names_(std::move(n)) {}
  Eigen::MatrixXd values_;
  std::vector<std::string> names_;
};

/// Parameters of the synthetic sinusoid generator. Per node k the generator
/// draws amplitude d_k ~ N(0, amp_std^2), frequency f_k uniform on
/// freq_center +- freq_halfwidth and phase uniform on [phase_min, phase_max),
/// in that order, then fills column k with d_k * sin(f_k * l + phase_k) for
/// sample index l = 1..m (the index starts at 1).
struct SynthConfig {
  int n = 50;
  int m = 50;
  std::uint64_t seed = 1;
  double amp_std = 1.0;
  double freq_center = 0.0;  // defaults() sets 2*pi/n
  double freq_halfwidth = 0.05;
  double phase_min = -3.14159265358979323846;
  double phase_max = 3.14159265358979323846;

  static SynthConfig defaults(int n, int m, std::uint64_t seed);
};

SignalMatrix gen_sinusoids(const SynthConfig& c);

/// Strict CSV: header row of node names, then one row of N comma-separated
/// reals per sample. Ragged rows, non-numeric cells and empty input raise
/// ParseError with 1-based row/column positions.
SignalMatrix parse_timeseries_csv(const std::string& text);
SignalMatrix read_timeseries_csv(const std::filesystem::path& path);

/// Serializes with 17 significant digits so values round-trip exactly.
std::string write_timeseries_csv(const SignalMatrix& x);

/// Zeroes every entry strictly below threshold. Display-level sparsification
/// for learned graphs; symmetry is preserved.
AdjacencyMatrix truncate_edges(const AdjacencyMatrix& a, double threshold);

struct WeightHistogram {
  std::vector<double> bin_edges;       // ascending, size counts.size() + 1
  std::vector<std::int64_t> counts;
};

/// Histogram of the upper-triangular off-diagonal weights (each undirected
/// edge counted once, zeros included) over uniform bins spanning
/// [0, max weight]. A zero matrix yields one degenerate bin.
WeightHistogram weight_histogram(const AdjacencyMatrix& a, int bins);

enum class GraphFormat { Json, Dot, EdgeListCsv };

/// Serializes a graph. JSON and the edge-list CSV are lossless: weights are
/// printed with 17 significant digits and nonzero self-weights are carried
/// in a "diag" array (JSON) or i == j rows (CSV), so import(export(a)) == a
/// bit-for-bit. DOT is write-only output for graphviz.
std::string export_graph(const AdjacencyMatrix& a, GraphFormat format,
                         const std::vector<std::string>& names = {});

AdjacencyMatrix import_graph_json(const std::string& text,
                                  std::vector<std::string>* names = nullptr);
/// The edge list does not carry the node count, so it is passed explicitly.
AdjacencyMatrix import_edgelist_csv(const std::string& text, int n);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// "%.17g" — shortest fixed format that round-trips IEEE doubles.
std::string format_double(double v);

}  // namespace graphlearn
