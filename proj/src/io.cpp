// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rfopt/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rfopt {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

bool looks_like_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::string first;
  std::getline(in, first);
  return first.find("re_w") != std::string::npos;
}

CPFilter load_filter_csv(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);  // header re_w,im_w,re_g,im_g
  std::vector<cplx> poles, coeffs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double rw, iw, rg, ig;
    if (!(ss >> rw >> iw >> rg >> ig)) throw ParseError(path + ": malformed CSV row");
    poles.emplace_back(rw, iw);
    coeffs.emplace_back(rg, ig);
  }
  return CPFilter::canonicalized(std::move(poles), std::move(coeffs));
}

}  // namespace

void save_filter(const CPFilter& f, const std::string& path) {
  json j;
  j["q"] = f.q();
  for (int k = 0; k < f.q(); ++k) {
    j["poles"].push_back({f.poles()[k].real(), f.poles()[k].imag()});
    j["coeffs"].push_back({f.coeffs()[k].real(), f.coeffs()[k].imag()});
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

CPFilter load_filter(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
    return load_filter_csv(path);
  if (looks_like_csv(path)) return load_filter_csv(path);
  const json j = read_json(path);
  if (!j.contains("poles") || !j.contains("coeffs"))
    throw ParseError(path + ": filter file needs poles and coeffs");
  std::vector<cplx> poles, coeffs;
  for (const auto& p : j["poles"]) poles.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  for (const auto& c : j["coeffs"]) coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
  if (j.contains("q") && j["q"].get<int>() != static_cast<int>(poles.size()))
    throw ParseError(path + ": declared q does not match the pole count");
  return CPFilter::canonicalized(std::move(poles), std::move(coeffs));
}

void save_weight(const WeightFunction& w, const std::string& path) {
  json j;
  j["breakpoints"] = w.breakpoints();
  j["values"] = w.values();
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

WeightFunction load_weight(const std::string& path) {
  const json j = read_json(path);
  if (!j.contains("breakpoints") || !j.contains("values"))
    throw ParseError(path + ": weight file needs breakpoints and values");
  std::vector<double> bp, vals;
  for (const auto& b : j["breakpoints"]) {
    if (!b.is_number()) throw ParseError(path + ": non-numeric breakpoint (infinite support?)");
    bp.push_back(b.get<double>());
  }
  for (const auto& v : j["values"]) vals.push_back(v.get<double>());
  try {
    return WeightFunction(std::move(bp), std::move(vals));
  } catch (const InvalidWeight& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Spectrum load_spectrum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    try {
      vals.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw ParseError(path + ": malformed eigenvalue line: " + line);
    }
  }
  return Spectrum(std::move(vals));
}

namespace {

DenseHermitian load_matrix_market(std::ifstream& in, const std::string& path,
                                  const std::string& header) {
  const bool complex_entries = header.find("complex") != std::string::npos;
  const bool hermitian = header.find("hermitian") != std::string::npos;
  const bool symmetric = header.find("symmetric") != std::string::npos;
  if (header.find("coordinate") == std::string::npos || (!hermitian && !symmetric))
    throw ParseError(path + ": only coordinate real-symmetric / complex-hermitian input");
  std::string line;
  long n = 0, m = 0, nnz = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ss(line);
    if (!(ss >> n >> m >> nnz)) throw ParseError(path + ": malformed size line");
    break;
  }
  if (n != m || n <= 0) throw ParseError(path + ": matrix must be square");
  MatrixXcd a = MatrixXcd::Zero(n, n);
  long seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ss(line);
    long i, j;
    double re, im = 0.0;
    if (!(ss >> i >> j >> re)) throw ParseError(path + ": malformed entry");
    if (complex_entries && !(ss >> im)) throw ParseError(path + ": missing imaginary part");
    const cplx v(re, im);
    a(i - 1, j - 1) = v;
    if (i != j) a(j - 1, i - 1) = std::conj(v);
    ++seen;
  }
  if (seen != nnz) throw ParseError(path + ": truncated entry list");
  return DenseHermitian(std::move(a));
}

}  // namespace

DenseHermitian load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::string first;
  std::getline(in, first);
  if (first.rfind("%%MatrixMarket", 0) == 0) return load_matrix_market(in, path, first);

  long n = 0;
  {
    std::istringstream ss(first);
    if (!(ss >> n) || n <= 0) throw ParseError(path + ": expected matrix order");
  }
  MatrixXcd a(n, n);
  for (long i = 0; i < n; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": truncated dense matrix");
    std::istringstream ss(line);
    for (long j = 0; j < n; ++j) {
      double re, im;
      if (!(ss >> re >> im)) throw ParseError(path + ": malformed dense row");
      a(i, j) = cplx(re, im);
    }
  }
  return DenseHermitian(std::move(a));
}

}  // namespace rfopt
