#include "report.hpp"

namespace locnil::cli {

Json to_json(const Mat& m) { return Json(m.row_strings()); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Json to_json(const std::vector<Mat>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

Json to_json(const Cardinal& c) { return c.to_string(); }

Json to_json(const ClassRep& rep) {
  Json j;
  j["tag"] = tag_name(rep.tag);
  Json params = Json::object();
  if (rep.alpha) params["alpha"] = rep.alpha->to_string();
  if (!rep.b.empty()) params["b"] = to_json(rep.b);
  if (rep.polynomial) params["polynomial"] = rep.polynomial->to_string();
  j["parameters"] = params;
  Json cert = Json::object();
  for (const auto& [k, v] : rep.certificate) cert[k] = v;
  j["certificate"] = cert;
  j["generators"] = to_json(rep.group.generators());
  j["scalars_adjoined"] = rep.group.scalars_adjoined();
  const VerifiedProperties& v = rep.verified;
  Json ver;
  ver["order"] = to_json(v.order);
  ver["projective_order"] = optional_json(v.projective_order);
  ver["irreducible"] = optional_json(v.irreducible);
  ver["absolutely_irreducible"] = optional_json(v.absolutely_irreducible);
  ver["primitive"] = optional_json(v.primitive);
  ver["nilpotent"] = optional_json(v.nilpotent);
  ver["nilpotency_class"] = optional_json(v.nilpotency_class);
  ver["maximal"] = optional_json(v.maximal);
  if (v.maximal_abelian) ver["maximal_abelian"] = *v.maximal_abelian;
  ver["maximality_note"] = v.maximality_note;
  j["verified"] = ver;
  j["notes"] = rep.notes;
  return j;
}

Json to_json(const ClassCount& c) {
  Json j;
  j["total"] = to_json(c.total);
  Json b = Json::array();
  for (const auto& f : c.breakdown) {
    Json e;
    e["family"] = f.family;
    e["count"] = to_json(f.count);
    if (!f.reason.empty()) e["reason"] = f.reason;
    b.push_back(e);
  }
  j["breakdown"] = b;
  return j;
}

Json to_json(const OracleCheck& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["verdict"] = c.verdict;
  j["witness"] = c.witness;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace locnil::cli
