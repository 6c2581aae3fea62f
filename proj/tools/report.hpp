#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locnil/classify.hpp"
#include "locnil/linalg.hpp"
#include "locnil/oracle.hpp"

namespace locnil::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Mat& m);
Json to_json(const Vec& v);
Json to_json(const std::vector<Mat>& ms);
Json to_json(const Cardinal& c);
Json to_json(const ClassRep& rep);
Json to_json(const ClassCount& c);
Json to_json(const OracleCheck& c);

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

/// Quotes a CSV field when needed.
std::string csv_field(const std::string& s);

}  // namespace locnil::cli
