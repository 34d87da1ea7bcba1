#include "rcl/json_io.hpp"

#include <cmath>
#include <fstream>

namespace rcl {

namespace {
Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error("expected a complex scalar as [re, im]");
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error("non-finite complex scalar");
  return z;
}
}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected a matrix as nested arrays");
  const Index rows = static_cast<Index>(j.size());
  if (rows == 0) return ComplexMatrix(0, 0);
  if (!j[0].is_array()) throw Error("expected matrix rows as arrays");
  const Index cols = static_cast<Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Index>(j[i].size()) != cols)
      throw Error("ragged matrix rows");
    for (Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

Json taylor_to_json(const TaylorFn& t) {
  Json j;
  j["in_dim"] = t.in_dim;
  j["out_dim"] = t.out_dim;
  Json coeffs = Json::array();
  for (const auto& c : t.coeffs) coeffs.push_back(matrix_to_json(c));
  j["coeffs"] = coeffs;
  return j;
}

TaylorFn taylor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("in_dim") || !j.contains("out_dim") || !j.contains("coeffs"))
    throw Error("expected a series as {in_dim, out_dim, coeffs}");
  TaylorFn t;
  t.in_dim = j["in_dim"].get<Index>();
  t.out_dim = j["out_dim"].get<Index>();
  if (t.in_dim < 0 || t.out_dim < 0) throw Error("negative series dimensions");
  if (!j["coeffs"].is_array() || j["coeffs"].empty())
    throw Error("series needs at least one coefficient");
  for (const auto& cj : j["coeffs"]) {
    ComplexMatrix c = matrix_from_json(cj);
    if (c.size() == 0) c = ComplexMatrix::Zero(t.out_dim, t.in_dim);
    if (c.rows() != t.out_dim || c.cols() != t.in_dim)
      throw Error("series coefficient shape mismatch");
    t.coeffs.push_back(std::move(c));
  }
  return t;
}

Json dataset_to_json(const DataSet& ds) {
  Json j;
  j["A"] = matrix_to_json(ds.A);
  j["Tprime"] = matrix_to_json(ds.Tprime);
  j["R"] = matrix_to_json(ds.R);
  j["Q"] = matrix_to_json(ds.Q);
  return j;
}

DataSet dataset_from_json(const Json& j) {
  if (!j.is_object()) throw Error("expected a data set object");
  for (const char* key : {"A", "Tprime", "R", "Q"})
    if (!j.contains(key)) throw Error(std::string("data set missing field ") + key);
  DataSet ds;
  ds.A = matrix_from_json(j["A"]);
  ds.Tprime = matrix_from_json(j["Tprime"]);
  ds.R = matrix_from_json(j["R"]);
  ds.Q = matrix_from_json(j["Q"]);
  return ds;
}

Json gamma_to_json(const GammaOp& g) {
  Json j;
  j["theta"] = taylor_to_json(g.theta);
  return j;
}

GammaOp gamma_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("theta")) throw Error("expected {theta: series}");
  return GammaOp{taylor_from_json(j["theta"])};
}

Json pair_to_json(const SchurPair& p) {
  Json j;
  j["F"] = taylor_to_json(p.F);
  j["G"] = taylor_to_json(p.G);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace rcl
