#include "parcount/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace parcount {

const std::map<std::string, std::string>& module_versions() {
  static const std::map<std::string, std::string> v = {
      {"finite-field", "0.1.0"},   {"matrix-groups", "0.1.0"}, {"weyl-combinatorics", "0.1.0"},
      {"green-engine", "0.1.0"},   {"counting-engine", "0.1.0"}, {"porc-fitter", "0.1.0"},
      {"cli-reporter", "0.1.0"}};
  return v;
}

std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

nlohmann::json versions_json() {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : module_versions()) j[k] = v;
  return j;
}

std::string rat_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

}  // namespace

nlohmann::json count_report_json(const CountReport& r, const std::string& config_hash) {
  nlohmann::json j;
  j["group"] = r.group.to_string();
  j["field"] = r.group.F()->to_string();
  j["parabolic"] = r.parabolic.to_string();
  j["quantity"] = to_string(r.quantity);
  j["q"] = r.group.q();
  if (r.brute) j["brute"] = *r.brute;
  if (r.formula) j["formula"] = *r.formula;
  j["agree"] = r.agree;
  j["ms_brute"] = r.ms_brute;
  j["ms_formula"] = r.ms_formula;
  if (r.representatives >= 0) j["representatives"] = r.representatives;
  if (!r.sign_rule.empty()) j["sign_rule"] = r.sign_rule;
  if (!r.breakdown.empty()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : r.breakdown) {
      nlohmann::json tj;
      tj["type"] = t.type.key();
      tj["fiber"] = t.fiber;
      tj["inner"] = rat_string(t.inner);
      terms.push_back(tj);
    }
    j["breakdown"] = terms;
  }
  j["config_hash"] = config_hash;
  j["engine_versions"] = versions_json();
  return j;
}

std::string count_report_csv_header() {
  return "group,parabolic,quantity,q,brute,formula,agree,ms_brute,ms_formula";
}

std::string count_report_csv_row(const CountReport& r) {
  std::ostringstream os;
  os << to_string(r.group.kind) << r.group.n << ",\"" << r.parabolic.to_string() << "\","
     << to_string(r.quantity) << "," << r.group.q() << ",";
  if (r.brute) os << *r.brute;
  os << ",";
  if (r.formula) os << *r.formula;
  os << "," << (r.agree ? "true" : "false") << "," << r.ms_brute << "," << r.ms_formula;
  return os.str();
}

nlohmann::json identity_reports_json(const std::vector<IdentityReport>& reports,
                                     const std::string& config_hash) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    nlohmann::json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    if (!r.pass) j["witness"] = r.witness;
    all = all && r.pass;
    arr.push_back(j);
  }
  nlohmann::json out;
  out["identities"] = arr;
  out["all_pass"] = all;
  out["config_hash"] = config_hash;
  out["engine_versions"] = versions_json();
  return out;
}

namespace {

nlohmann::json class_fit_json(const ClassFit& cf) {
  nlohmann::json j;
  j["class"] = cf.residue;
  if (cf.poly)
    j["poly"] = cf.poly->to_string();
  else
    j["poly"] = nullptr;
  if (!cf.note.empty()) j["note"] = cf.note;
  j["verified_at"] = cf.verified_at;
  return j;
}

}  // namespace

nlohmann::json porc_fit_json(const SweepSeries& series, const PorcFit& fit,
                             const std::string& config_hash) {
  nlohmann::json j;
  j["quantity"] = series.quantity;
  j["label"] = series.label;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : series.points) pts.push_back({{"q", p.q}, {"value", p.value}});
  j["points"] = pts;
  j["modulus"] = fit.modulus;
  j["consistent"] = fit.consistent;
  j["held_out_q"] = fit.held_out_q;
  j["held_out_expected"] = fit.held_out_expected;
  if (fit.held_out_predicted) j["held_out_predicted"] = *fit.held_out_predicted;
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& cf : fit.classes) cls.push_back(class_fit_json(cf));
  j["classes"] = cls;
  j["config_hash"] = config_hash;
  j["engine_versions"] = versions_json();
  return j;
}

std::string porc_fit_markdown(const SweepSeries& series, const PorcFit& fit) {
  std::ostringstream os;
  os << "## " << series.quantity << " (" << series.label << ")\n\n";
  os << "| q |";
  for (const auto& p : series.points) os << " " << p.q << " |";
  os << "\n|---|";
  for (size_t i = 0; i < series.points.size(); ++i) os << "---|";
  os << "\n| value |";
  for (const auto& p : series.points) os << " " << p.value << " |";
  os << "\n\n";
  os << "- modulus: " << fit.modulus << "\n";
  for (const auto& cf : fit.classes) {
    os << "- class " << cf.residue << " mod " << fit.modulus << ": ";
    if (cf.poly)
      os << "`" << cf.poly->to_string() << "`";
    else
      os << cf.note;
    os << "\n";
  }
  os << "- held-out q=" << fit.held_out_q << ": expected " << fit.held_out_expected;
  if (fit.held_out_predicted) os << ", predicted " << *fit.held_out_predicted;
  os << (fit.consistent ? " (consistent)" : " (NOT consistent)") << "\n";
  return os.str();
}

nlohmann::json fiber_probe_json(const std::vector<FiberSeries>& probe, const std::string& config_hash) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& fs : probe) {
    nlohmann::json j;
    j["type"] = fs.type.key();
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : fs.series.points) pts.push_back({{"q", p.q}, {"value", p.value}});
    j["points"] = pts;
    j["modulus"] = fs.fit.modulus;
    j["porc_consistent"] = fs.fit.consistent;
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& cf : fs.fit.classes) cls.push_back(class_fit_json(cf));
    j["classes"] = cls;
    arr.push_back(j);
  }
  nlohmann::json out;
  out["note"] = "empirical desk-scale evidence about additive fiber sizes, not a theorem";
  out["fibers"] = arr;
  out["config_hash"] = config_hash;
  out["engine_versions"] = versions_json();
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open output file " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ConfigError("cannot move report into place at " + path);
}

}  // namespace parcount
