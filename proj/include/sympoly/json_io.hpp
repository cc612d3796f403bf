#pragma once

#include <string>

#include <json.hpp>

#include "sympoly/catalog.hpp"
#include "sympoly/eigenstructure.hpp"
#include "sympoly/linearization.hpp"
#include "sympoly/sampler.hpp"

namespace sympoly {

using json = nlohmann::json;

/// {"m","n","grade","coeffs"} with coeffs[k] = A_k as rows of scalar strings.
json polymatrix_to_json(const PolyMatrix& p);
PolyMatrix polymatrix_from_json(const json& j);

/// PolyMatrix JSON with {"n","d"} sidecar fields.
json sylvester_to_json(const SylvesterPencil& f);
SylvesterPencil sylvester_from_json(const json& j);

json descriptor_to_json(const BundleDescriptor& d);

json eigenstructure_to_json(const CompleteEigenstructure& e);

json report_to_json(const ExperimentReport& r);

PolyMatrix read_polymatrix_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace sympoly
