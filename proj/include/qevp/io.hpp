#pragma once

// Matrix and region JSON I/O, deterministic CSV emission, and content hashing
// for the run summaries.

#include "qevp/core.hpp"
#include "qevp/faber.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace qevp {

// {"rows":R,"cols":C,"re":[...],"im":[...]} row-major
inline CMatrix load_matrix_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_matrix_json: cannot open " + path);
  nlohmann::json j;
  in >> j;
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  auto re = j.at("re").get<std::vector<double>>();
  auto im = j.at("im").get<std::vector<double>>();
  if (int(re.size()) != rows * cols || int(im.size()) != rows * cols)
    throw std::runtime_error("load_matrix_json: re/im length mismatch in " + path);
  CMatrix M(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) M(r, c) = cplx(re[r * cols + c], im[r * cols + c]);
  return M;
}

inline void save_matrix_json(const std::string& path, const CMatrix& M) {
  nlohmann::json j;
  j["rows"] = int(M.rows());
  j["cols"] = int(M.cols());
  std::vector<double> re, im;
  re.reserve(M.size());
  im.reserve(M.size());
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) {
      re.push_back(M(r, c).real());
      im.push_back(M(r, c).imag());
    }
  j["re"] = re;
  j["im"] = im;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_matrix_json: cannot open " + path);
  out << j.dump(2) << "\n";
}

// {"varsigma":x,"tail_re":[...],"tail_im":[...],"flags":{...}}
inline FaberRegion load_region_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_region_json: cannot open " + path);
  nlohmann::json j;
  in >> j;
  FaberRegion r;
  r.varsigma = j.at("varsigma").get<double>();
  auto re = j.at("tail_re").get<std::vector<double>>();
  auto im = j.at("tail_im").get<std::vector<double>>();
  if (re.size() != im.size())
    throw std::runtime_error("load_region_json: tail_re/tail_im length mismatch in " + path);
  r.tail = CVector(Eigen::Index(re.size()));
  for (std::size_t k = 0; k < re.size(); ++k) r.tail(Eigen::Index(k)) = cplx(re[k], im[k]);
  if (j.contains("flags")) {
    const auto& f = j["flags"];
    r.flags.convex = f.value("convex", false);
    r.flags.real_symmetric = f.value("real_symmetric", false);
    r.flags.left_half_plane = f.value("left_half_plane", false);
  }
  r.validate();
  return r;
}

inline void save_region_json(const std::string& path, const FaberRegion& r) {
  nlohmann::json j;
  j["varsigma"] = r.varsigma;
  std::vector<double> re, im;
  for (int k = 0; k < r.tail.size(); ++k) {
    re.push_back(r.tail(k).real());
    im.push_back(r.tail(k).imag());
  }
  j["tail_re"] = re;
  j["tail_im"] = im;
  j["flags"] = {{"convex", r.flags.convex},
                {"real_symmetric", r.flags.real_symmetric},
                {"left_half_plane", r.flags.left_half_plane}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_region_json: cannot open " + path);
  out << j.dump(2) << "\n";
}

// 17 significant digits: round-trips any double exactly.
inline std::string format_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& vals) {
    std::vector<std::string> r;
    r.reserve(vals.size());
    for (double v : vals) r.push_back(format_double(v));
    rows.push_back(std::move(r));
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i)
      os << header[i] << (i + 1 < header.size() ? "," : "");
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << r[i] << (i + 1 < r.size() ? "," : "");
      os << "\n";
    }
    return os.str();
  }

  void write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("CsvTable: cannot open " + path);
    out << str();
  }
};

inline std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
  return std::string(buf);
}

// Run summary: config echo plus per-artifact content hashes.
inline void write_summary_json(const std::string& path, const std::string& subcommand,
                               const std::map<std::string, std::string>& params,
                               const std::map<std::string, std::string>& artifact_hashes) {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  j["params"] = params;
  j["artifacts"] = artifact_hashes;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_summary_json: cannot open " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qevp
