#include "germcalc/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace germcalc {

namespace {

using json = nlohmann::ordered_json;

json optional_number(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

json to_object(const InvariantReport& rep) {
  json j;
  j["name"] = rep.name;
  j["r"] = rep.r;
  j["sigma"] = rep.sigma;
  j["coranks"] = rep.coranks;
  j["C"] = rep.C;
  j["T"] = rep.T;
  j["T_routes"] = {{"source", optional_number(rep.t_source)},
                   {"target", optional_number(rep.t_target)},
                   {"tag", rep.t_route_tag()}};
  j["muD_per_point"] = json::array();
  for (const auto& [point, mu] : rep.muD_per_point) j["muD_per_point"].push_back({{"point", point}, {"mu", mu}});
  j["muD"] = rep.muD;
  if (rep.derived) {
    const auto& d = *rep.derived;
    j["muSigma"] = d.muSigma;
    j["muI"] = d.muI;
    j["chiF"] = d.chiF;
    j["b0"] = d.b0;
    j["b1"] = d.b1;
    j["b2"] = d.b2;
    j["muD2"] = d.muD2;
    j["muD2modS2"] = d.muD2modS2;
    j["smale"] = optional_number(d.smale);
    j["cMinus3T"] = d.cMinus3T;
  }
  j["regular"] = rep.regular;
  j["consistency"] = json::array();
  for (const auto& c : rep.consistency) j["consistency"].push_back({{"name", c.name}, {"ok", c.ok}});
  j["assumptions"] = rep.assumptions;
  json prov = json::object();
  for (const auto& [field, p] : rep.provenance()) prov[field] = provenance_name(p);
  j["provenance"] = std::move(prov);
  j["details"] = {{"jet_bound", rep.jet_bound},
                  {"image_equations", rep.image_equations},
                  {"double_point_curves", rep.double_point_curves}};
  return j;
}

std::string number_or_dash(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

std::string report_to_json(const InvariantReport& report) { return to_object(report).dump(2) + "\n"; }

std::string reports_to_json(const std::vector<InvariantReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_object(r));
  return arr.dump(2) + "\n";
}

std::string report_to_table(const InvariantReport& rep) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("name", rep.name);
  rows.emplace_back("r", std::to_string(rep.r));
  rows.emplace_back("sigma", std::to_string(rep.sigma));
  std::string coranks;
  for (int c : rep.coranks) coranks += (coranks.empty() ? "" : ",") + std::to_string(c);
  rows.emplace_back("coranks", coranks);
  rows.emplace_back("C", std::to_string(rep.C));
  rows.emplace_back("T", std::to_string(rep.T));
  rows.emplace_back("T_routes", "source=" + number_or_dash(rep.t_source) + " target=" + number_or_dash(rep.t_target) +
                                    " tag=" + rep.t_route_tag());
  std::string per_point;
  for (const auto& [point, mu] : rep.muD_per_point) {
    per_point += (per_point.empty() ? "" : " ") + point + "=" + std::to_string(mu);
  }
  rows.emplace_back("muD_per_point", per_point);
  rows.emplace_back("muD", std::to_string(rep.muD));
  if (rep.derived) {
    const auto& d = *rep.derived;
    rows.emplace_back("muSigma", std::to_string(d.muSigma));
    rows.emplace_back("muI", std::to_string(d.muI));
    rows.emplace_back("chiF", std::to_string(d.chiF));
    rows.emplace_back("b0", std::to_string(d.b0));
    rows.emplace_back("b1", std::to_string(d.b1));
    rows.emplace_back("b2", std::to_string(d.b2));
    rows.emplace_back("muD2", std::to_string(d.muD2));
    rows.emplace_back("muD2modS2", std::to_string(d.muD2modS2));
    rows.emplace_back("smale", number_or_dash(d.smale));
    rows.emplace_back("cMinus3T", std::to_string(d.cMinus3T));
  }
  rows.emplace_back("regular", rep.regular ? "true" : "false");
  std::string checks;
  for (const auto& c : rep.consistency) checks += (checks.empty() ? "" : " ") + c.name + "=" + (c.ok ? "pass" : "FAIL");
  rows.emplace_back("consistency", checks);

  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << "\n";
  return out.str();
}

}  // namespace germcalc
