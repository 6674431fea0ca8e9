#include "parcount/cli.hpp"

#include <cctype>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "parcount/report.hpp"

namespace parcount {

std::pair<GroupKind, int> parse_group_name(const std::string& s) {
  std::string up;
  for (char c : s) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  GroupKind kind;
  if (up.rfind("GL", 0) == 0)
    kind = GroupKind::GL;
  else if (up.rfind("SL", 0) == 0)
    kind = GroupKind::SL;
  else
    throw ConfigError("cannot parse group name '" + s + "' (expected GLn or SLn)");
  std::string digits = up.substr(2);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError("cannot parse group rank in '" + s + "'");
  int n = std::stoi(digits);
  if (n < 1 || n > 8) throw ConfigError("group rank out of range in '" + s + "'");
  return {kind, n};
}

std::pair<int, int> prime_power(long long q) {
  if (q < 2) throw ConfigError("q must be at least 2");
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    if (q % p != 0) continue;
    long long v = q;
    int k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v != 1) throw ConfigError("q=" + std::to_string(q) + " is not a prime power");
    return {p, k};
  }
  throw ConfigError("q=" + std::to_string(q) + " is not a prime power");
}

namespace {

std::string config_hash_of(const RunConfig& cfg) {
  nlohmann::json j;
  j["command"] = cfg.command;
  j["group"] = cfg.group;
  j["qs"] = cfg.qs;
  j["parabolic"] = cfg.parabolic;
  j["quantity"] = cfg.quantity;
  j["engine"] = cfg.engine;
  j["budget"] = cfg.budget;
  j["format"] = cfg.format;
  j["modulus"] = cfg.modulus;
  j["degree_bound"] = cfg.degree_bound;
  j["probe"] = cfg.probe;
  j["green_n"] = cfg.green_n;
  return fnv1a_hex(j.dump());
}

Budget budget_of(const RunConfig& cfg) {
  Budget b = Budget::from_env();
  if (cfg.budget > 0) b.max_elements = cfg.budget;
  if (b.max_elements <= 0) throw ConfigError("budget must be positive");
  return b;
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out_path.empty())
    out << content << (content.empty() || content.back() == '\n' ? "" : "\n");
  else
    write_file_atomic(cfg.out_path, content);
}

Engine engine_of(const RunConfig& cfg) {
  if (cfg.engine == "brute") return Engine::kBrute;
  if (cfg.engine == "formula") return Engine::kFormula;
  if (cfg.engine == "both") return Engine::kBoth;
  throw ConfigError("unknown engine '" + cfg.engine + "'");
}

CountReport run_one_count(const GroupSpec& g, const ParabolicSpec& p, Quantity quantity, Engine e,
                          const Budget& b) {
  switch (quantity) {
    case Quantity::kGroup: return k_group(g, p, e, b);
    case Quantity::kLieParabolic: return k_lie(g, p, e, b);
    case Quantity::kLieNilradical: return k_nil(g, p, e, b);
  }
  throw ConfigError("unknown quantity");
}

int run_count(const RunConfig& cfg, std::ostream& out) {
  if (cfg.qs.empty()) throw ConfigError("no q values given");
  if (cfg.parabolic.empty()) throw ConfigError("no composition given");
  auto [kind, n] = parse_group_name(cfg.group);
  auto quantity = quantity_from_string(cfg.quantity);
  if (!quantity) throw ConfigError("unknown quantity '" + cfg.quantity + "'");
  Engine e = engine_of(cfg);
  Budget b = budget_of(cfg);
  std::string hash = config_hash_of(cfg);

  std::vector<CountReport> reports;
  for (long long q : cfg.qs) {
    auto [p, k] = prime_power(q);
    GroupSpec g(kind, n, FieldSpec::get(p, k));
    ParabolicSpec par(cfg.parabolic);
    reports.push_back(run_one_count(g, par, *quantity, e, b));
  }

  if (cfg.format == "csv") {
    std::ostringstream os;
    os << count_report_csv_header() << "\n";
    for (const auto& r : reports) os << count_report_csv_row(r) << "\n";
    emit(cfg, os.str(), out);
  } else if (cfg.format == "markdown") {
    std::ostringstream os;
    os << "| group | parabolic | quantity | q | brute | formula | agree |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
      os << "| " << r.group.to_string() << " | (" << r.parabolic.to_string() << ") | "
         << to_string(r.quantity) << " | " << r.group.q() << " | "
         << (r.brute ? std::to_string(*r.brute) : "") << " | "
         << (r.formula ? std::to_string(*r.formula) : "") << " | " << (r.agree ? "yes" : "no")
         << " |\n";
    }
    emit(cfg, os.str(), out);
  } else if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(count_report_json(r, hash));
    emit(cfg, arr.dump(2), out);
  } else {
    throw ConfigError("unknown format '" + cfg.format + "'");
  }

  if (e == Engine::kBoth)
    for (const auto& r : reports)
      if (!r.agree) return kMismatch;
  return kOk;
}

std::vector<std::vector<int>> all_compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int next = rest; next >= 1; --next) {
      cur.push_back(next);
      rec(rest - next);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.qs.empty()) throw ConfigError("no q values given");
  auto [kind, n] = parse_group_name(cfg.group);
  Budget b = budget_of(cfg);
  std::string hash = config_hash_of(cfg);

  std::vector<std::vector<int>> comps;
  if (!cfg.parabolic.empty())
    comps.push_back(cfg.parabolic);
  else
    comps = all_compositions(n);

  std::vector<IdentityReport> all;
  for (long long q : cfg.qs) {
    auto [p, k] = prime_power(q);
    GroupSpec g(kind, n, FieldSpec::get(p, k));
    auto reports = verify_suite(g, comps, b);
    all.insert(all.end(), reports.begin(), reports.end());
  }
  emit(cfg, identity_reports_json(all, hash).dump(2), out);
  for (const auto& r : all)
    if (!r.pass) return kMismatch;
  return kOk;
}

int run_porc(const RunConfig& cfg, std::ostream& out) {
  if (cfg.qs.empty()) throw ConfigError("no q values given");
  auto [kind, n] = parse_group_name(cfg.group);
  Budget b = budget_of(cfg);
  std::string hash = config_hash_of(cfg);
  int degree_bound = cfg.degree_bound > 0 ? cfg.degree_bound : n * n;

  if (cfg.probe) {
    auto probe = additive_fiber_probe(kind, n, cfg.qs, degree_bound, b);
    emit(cfg, fiber_probe_json(probe, hash).dump(2), out);
    return kOk;
  }

  if (cfg.parabolic.empty()) throw ConfigError("no composition given");
  auto quantity = quantity_from_string(cfg.quantity);
  if (!quantity) throw ConfigError("unknown quantity '" + cfg.quantity + "'");

  SweepSeries series;
  series.quantity = "k-" + cfg.quantity;
  series.label = cfg.group + " P=(" +
                 ParabolicSpec(cfg.parabolic).to_string() + ")";
  bool engines_agree = true;
  for (long long q : cfg.qs) {
    auto [p, k] = prime_power(q);
    GroupSpec g(kind, n, FieldSpec::get(p, k));
    ParabolicSpec par(cfg.parabolic);
    CountReport r = run_one_count(g, par, *quantity, Engine::kBoth, b);
    engines_agree = engines_agree && r.agree;
    series.points.push_back({q, r.brute.value()});
  }

  PorcFit fit = cfg.modulus > 0 ? porc_fit(series, cfg.modulus, degree_bound)
                                : porc_fit_auto(series, {1, 2, 6}, degree_bound);
  if (cfg.format == "markdown")
    emit(cfg, porc_fit_markdown(series, fit), out);
  else
    emit(cfg, porc_fit_json(series, fit, hash).dump(2), out);
  // Fit-level findings are scientific output; only engine disagreement is an
  // error here.
  return engines_agree ? kOk : kMismatch;
}

int run_green(const RunConfig& cfg, std::ostream& out) {
  const GreenTable& gt = green_table(cfg.green_n);
  emit(cfg, gt.to_csv(), out);
  return kOk;
}

}  // namespace

int run_cli(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "count") return run_count(cfg, out);
    if (cfg.command == "verify") return run_verify(cfg, out);
    if (cfg.command == "porc") return run_porc(cfg, out);
    if (cfg.command == "green") return run_green(cfg, out);
    throw ConfigError("unknown command '" + cfg.command + "'");
  } catch (const BudgetError& e) {
    err << "budget refused: " << e.what() << "\n";
    return kBudgetRefused;
  } catch (const BoundError& e) {
    err << "bound refused: " << e.what() << "\n";
    return kBudgetRefused;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace parcount
