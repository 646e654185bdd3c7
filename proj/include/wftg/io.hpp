#ifndef WFTG_IO_HPP
#define WFTG_IO_HPP

#include <string>

#include <Eigen/Core>

#include "wftg/graph.hpp"
#include "wftg/solvers.hpp"
#include "wftg/transform.hpp"

namespace wftg {

// Points CSV: one row per vertex, D float columns, no header unless skipped.
PointCloud read_points_csv(const std::string& path, bool skip_header = false);
void write_points_csv(const std::string& path, const PointCloud& pc);

// Signal CSV: K rows, one float column.
Eigen::VectorXd read_signal_csv(const std::string& path, bool skip_header = false);
void write_signal_csv(const std::string& path, const Eigen::VectorXd& f);

void write_labels_csv(const std::string& path, const Eigen::VectorXi& labels);
Eigen::VectorXi read_dense_labels_csv(const std::string& path);

// Labels CSV: `index,label` rows, 0-based indices, label in {0, 1}.
LabelSet read_label_set_csv(const std::string& path);
void write_label_set_csv(const std::string& path, const LabelSet& labels);

// Edge-list CSV: `i,j,weight`, 0-based, i < j. Reading rebuilds degrees and
// validates connectivity.
void write_edge_list_csv(const std::string& path, const Graph& g);
Graph read_edge_list_csv(const std::string& path);

// Coefficient file: little-endian binary (magic, version, K, r, L, N, n,
// laplacian kind, family name, then band vectors in B-order as 64-bit
// floats), plus a JSON sidecar mirror at <path>.json.
void write_coefficients(const std::string& path, const FrameCoefficients& coeffs,
                        bool json_sidecar = true);
FrameCoefficients read_coefficients(const std::string& path);

} // namespace wftg

#endif // WFTG_IO_HPP
