#pragma once

#include <string>

#include <json.hpp>

#include "rcl/lifting.hpp"

namespace rcl {

// Wire format: complex scalars as [re, im], matrices as row-major nested
// arrays of complex scalars, series as {"in_dim", "out_dim", "coeffs"}.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json taylor_to_json(const TaylorFn& t);
TaylorFn taylor_from_json(const Json& j);

Json dataset_to_json(const DataSet& ds);
DataSet dataset_from_json(const Json& j);

Json gamma_to_json(const GammaOp& g);
GammaOp gamma_from_json(const Json& j);

Json pair_to_json(const SchurPair& p);

Json load_json_file(const std::string& path);

}  // namespace rcl
