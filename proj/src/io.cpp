#include "wftg/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace wftg {

namespace {

constexpr std::uint32_t kMagic = 0x57465447; // "WFTG"
constexpr std::uint32_t kFormatVersion = 1;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) throw InputError("cannot write " + path);
    return out;
}

std::vector<double> parse_row(const std::string& line, const std::string& path) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            row.push_back(std::stod(cell));
        } catch (const std::logic_error&) {
            throw InputError("bad numeric cell '" + cell + "' in " + path);
        }
    }
    return row;
}

Eigen::MatrixXd read_matrix_csv(const std::string& path, bool skip_header) {
    std::ifstream in = open_input(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        if (first && skip_header) {
            first = false;
            continue;
        }
        first = false;
        rows.push_back(parse_row(line, path));
        if (rows.size() > 1 && rows.back().size() != rows.front().size())
            throw InputError("ragged rows in " + path);
    }
    if (rows.empty()) throw InputError("no data rows in " + path);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

void write_value(std::ostream& out, double v) {
    out << std::setprecision(17) << v;
}

template <typename T> void put(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T> T get(std::istream& in, const std::string& path) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw InputError("truncated coefficient file " + path);
    return v;
}

} // namespace

PointCloud read_points_csv(const std::string& path, bool skip_header) {
    return PointCloud{read_matrix_csv(path, skip_header)};
}

void write_points_csv(const std::string& path, const PointCloud& pc) {
    std::ofstream out = open_output(path);
    for (Eigen::Index i = 0; i < pc.points.rows(); ++i) {
        for (Eigen::Index j = 0; j < pc.points.cols(); ++j) {
            if (j) out << ',';
            write_value(out, pc.points(i, j));
        }
        out << '\n';
    }
}

Eigen::VectorXd read_signal_csv(const std::string& path, bool skip_header) {
    Eigen::MatrixXd m = read_matrix_csv(path, skip_header);
    if (m.cols() != 1) throw InputError("signal CSV must have one column: " + path);
    return m.col(0);
}

void write_signal_csv(const std::string& path, const Eigen::VectorXd& f) {
    std::ofstream out = open_output(path);
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        write_value(out, f[i]);
        out << '\n';
    }
}

void write_labels_csv(const std::string& path, const Eigen::VectorXi& labels) {
    std::ofstream out = open_output(path);
    for (Eigen::Index i = 0; i < labels.size(); ++i) out << labels[i] << '\n';
}

Eigen::VectorXi read_dense_labels_csv(const std::string& path) {
    Eigen::MatrixXd m = read_matrix_csv(path, false);
    if (m.cols() != 1) throw InputError("label CSV must have one column: " + path);
    Eigen::VectorXi labels(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) labels[i] = static_cast<int>(m(i, 0));
    return labels;
}

LabelSet read_label_set_csv(const std::string& path) {
    Eigen::MatrixXd m = read_matrix_csv(path, false);
    if (m.cols() != 2) throw InputError("label set CSV must have columns index,label: " + path);
    LabelSet labels;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        labels.indices.push_back(static_cast<Eigen::Index>(m(i, 0)));
        labels.values.push_back(static_cast<int>(m(i, 1)));
    }
    return labels;
}

void write_label_set_csv(const std::string& path, const LabelSet& labels) {
    std::ofstream out = open_output(path);
    for (std::size_t i = 0; i < labels.indices.size(); ++i)
        out << labels.indices[i] << ',' << labels.values[i] << '\n';
}

void write_edge_list_csv(const std::string& path, const Graph& g) {
    std::ofstream out = open_output(path);
    for (Eigen::Index i = 0; i < g.adjacency.outerSize(); ++i) {
        for (SparseMatrix::InnerIterator it(g.adjacency, i); it; ++it) {
            if (it.row() < it.col()) {
                out << it.row() << ',' << it.col() << ',';
                write_value(out, it.value());
                out << '\n';
            }
        }
    }
}

Graph read_edge_list_csv(const std::string& path) {
    Eigen::MatrixXd m = read_matrix_csv(path, false);
    if (m.cols() != 3) throw InputError("edge list CSV must have columns i,j,weight: " + path);
    Eigen::Index n = 0;
    for (Eigen::Index e = 0; e < m.rows(); ++e)
        n = std::max({n, static_cast<Eigen::Index>(m(e, 0)) + 1,
                      static_cast<Eigen::Index>(m(e, 1)) + 1});
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<std::size_t>(2 * m.rows()));
    for (Eigen::Index e = 0; e < m.rows(); ++e) {
        const auto i = static_cast<Eigen::Index>(m(e, 0));
        const auto j = static_cast<Eigen::Index>(m(e, 1));
        if (i == j) throw InputError("self-loop in edge list: " + path);
        triplets.emplace_back(i, j, m(e, 2));
        triplets.emplace_back(j, i, m(e, 2));
    }
    Graph g;
    g.adjacency = SparseMatrix(n, n);
    g.adjacency.setFromTriplets(triplets.begin(), triplets.end());
    g.adjacency.makeCompressed();
    g.degrees = g.adjacency * Eigen::VectorXd::Ones(n);
    if (!g.connected()) throw DisconnectedGraph("edge list describes a disconnected graph");
    return g;
}

void write_coefficients(const std::string& path, const FrameCoefficients& coeffs,
                        bool json_sidecar) {
    const CoefficientMeta& meta = coeffs.meta();
    {
        std::ofstream out = open_output(path, std::ios::binary);
        put<std::uint32_t>(out, kMagic);
        put<std::uint32_t>(out, kFormatVersion);
        put<std::uint64_t>(out, static_cast<std::uint64_t>(meta.size));
        put<std::uint32_t>(out, static_cast<std::uint32_t>(meta.band_count));
        put<std::uint32_t>(out, static_cast<std::uint32_t>(meta.levels));
        put<std::int32_t>(out, meta.dilation_scale);
        put<std::uint32_t>(out, static_cast<std::uint32_t>(meta.cheb_order));
        put<std::uint8_t>(out, static_cast<std::uint8_t>(meta.kind));
        put<std::uint32_t>(out, static_cast<std::uint32_t>(meta.family.size()));
        out.write(meta.family.data(), static_cast<std::streamsize>(meta.family.size()));
        for (int i = 0; i < coeffs.entry_count(); ++i) {
            const Eigen::VectorXd& band = coeffs.at_index(i);
            out.write(reinterpret_cast<const char*>(band.data()),
                      static_cast<std::streamsize>(sizeof(double)) * band.size());
        }
    }
    if (json_sidecar) {
        nlohmann::json j;
        j["format_version"] = kFormatVersion;
        j["family"] = meta.family;
        j["band_count"] = meta.band_count;
        j["levels"] = meta.levels;
        j["dilation_scale"] = meta.dilation_scale;
        j["cheb_order"] = meta.cheb_order;
        j["laplacian"] = to_string(meta.kind);
        j["size"] = meta.size;
        nlohmann::json bands = nlohmann::json::array();
        for (int i = 0; i < coeffs.entry_count(); ++i) {
            const BandIndex bi = coeffs.index_of(i);
            const Eigen::VectorXd& band = coeffs.at_index(i);
            nlohmann::json entry;
            entry["band"] = bi.band;
            entry["level"] = bi.level;
            entry["values"] = std::vector<double>(band.data(), band.data() + band.size());
            bands.push_back(std::move(entry));
        }
        j["coefficients"] = std::move(bands);
        std::ofstream out = open_output(path + ".json");
        out << j.dump(2) << '\n';
    }
}

FrameCoefficients read_coefficients(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    if (get<std::uint32_t>(in, path) != kMagic)
        throw MetaMismatch("bad magic in coefficient file " + path);
    if (get<std::uint32_t>(in, path) != kFormatVersion)
        throw MetaMismatch("unsupported coefficient format version in " + path);
    CoefficientMeta meta;
    meta.size = static_cast<Eigen::Index>(get<std::uint64_t>(in, path));
    meta.band_count = static_cast<int>(get<std::uint32_t>(in, path));
    meta.levels = static_cast<int>(get<std::uint32_t>(in, path));
    meta.dilation_scale = get<std::int32_t>(in, path);
    meta.cheb_order = static_cast<int>(get<std::uint32_t>(in, path));
    meta.kind = static_cast<LaplacianKind>(get<std::uint8_t>(in, path));
    const auto name_len = get<std::uint32_t>(in, path);
    if (name_len > 4096) throw MetaMismatch("implausible family name length in " + path);
    meta.family.resize(name_len);
    in.read(meta.family.data(), static_cast<std::streamsize>(name_len));
    if (!in) throw InputError("truncated coefficient file " + path);
    if (meta.size < 1 || meta.band_count < 1 || meta.levels < 1)
        throw MetaMismatch("implausible coefficient header in " + path);

    FrameCoefficients coeffs(meta);
    for (int i = 0; i < coeffs.entry_count(); ++i) {
        Eigen::VectorXd& band = coeffs.at_index(i);
        in.read(reinterpret_cast<char*>(band.data()),
                static_cast<std::streamsize>(sizeof(double)) * band.size());
        if (!in) throw InputError("truncated coefficient payload in " + path);
    }
    return coeffs;
}

} // namespace wftg
