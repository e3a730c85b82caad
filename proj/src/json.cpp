#include "ptk/json.hpp"

namespace ptk {

using nlohmann::json;

void to_json(json& j, const PartProfile& p) {
  j = json{{"parts", std::vector<Count>(p.parts().begin(), p.parts().end())}};
}

void from_json(const json& j, PartProfile& p) {
  p = PartProfile(j.at("parts").get<std::vector<Count>>());
}

void to_json(json& j, const ClassComposition& c) {
  j = json{{"taken", std::vector<Count>(c.taken().begin(), c.taken().end())}};
}

void to_json(json& j, const Partition& p) {
  json classes = json::array();
  for (const auto& c : p.classes) {
    classes.push_back(std::vector<Count>(c.taken().begin(), c.taken().end()));
  }
  j = json{{"classes", std::move(classes)}};
}

Partition partition_from_json(const json& j) {
  Partition p;
  for (const auto& row : j.at("classes")) {
    p.classes.emplace_back(row.get<std::vector<Count>>());
  }
  return p;
}

void to_json(json& j, const ThicknessResult& r) {
  j = json{{"value", r.value},
           {"branch", std::string(to_string(r.trace.branch))},
           {"t", r.trace.t},
           {"epsilon", r.trace.epsilon},
           {"n_args", {r.trace.n_args.first, r.trace.n_args.second}},
           {"sigma", r.trace.sigma_used ? json(*r.trace.sigma_used) : json()}};
}

void to_json(json& j, const VerifyReport& r) {
  j = json{{"cover", r.cover},
           {"class_planarity", r.class_planarity},
           {"count", r.count},
           {"formula_value", r.formula_value},
           {"pass", r.pass}};
}

}  // namespace ptk
