#pragma once

// Command-line front end. `run` parses argv, dispatches and writes JSON or
// CSV to `out`. Exit codes: 0 success, 2 bad input, 1 internal failure
// (including a failed verification suite).

#include "hurwitz/decomposition.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/polynomiality.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/shifted.hpp"
#include "hurwitz/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz::cli {

using json = nlohmann::ordered_json;

inline std::vector<Partition> parse_profiles(const std::string& text) {
  std::vector<Partition> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_partition(item));
  return out;
}

inline std::string profiles_to_string(const std::vector<Partition>& ps) {
  std::string s;
  for (size_t i = 0; i < ps.size(); ++i) s += (i ? ";" : "") + ps[i].to_string();
  return s;
}

/// Nonnegative integers separated by commas, optionally bracketed.
inline std::vector<int> parse_int_list(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '[' && c != ']') body += c;
  std::vector<int> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed integer list: " + text);
    out.push_back(std::stoi(item));
  }
  return out;
}

inline json query_to_json(const HurwitzQuery& q, bool has_m = true) {
  json j;
  j["d"] = q.d;
  j["m"] = has_m ? json(q.m) : json(nullptr);
  j["K"] = q.K.to_string();
  json ps = json::array();
  for (const auto& p : q.profiles) ps.push_back(p.to_string());
  j["profiles"] = ps;
  j["starred"] = q.starred;
  return j;
}

inline HurwitzQuery query_from_json(const json& j) {
  HurwitzQuery q;
  q.d = j.at("d").get<int>();
  q.m = j.at("m").is_null() ? 1 : j.at("m").get<int>();
  q.K = parse_partition(j.at("K").get<std::string>());
  for (const auto& p : j.at("profiles")) q.profiles.push_back(parse_partition(p.get<std::string>()));
  q.starred = j.at("starred").get<bool>();
  return q;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Objects become key,value rows; arrays of flat objects become a table.
inline std::string to_csv(const json& j) {
  std::ostringstream os;
  if (j.is_array()) {
    if (j.empty()) return "";
    std::vector<std::string> keys;
    for (auto it = j.front().begin(); it != j.front().end(); ++it) keys.push_back(it.key());
    for (size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_field(keys[i]);
    os << "\n";
    for (const auto& row : j) {
      for (size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_field(scalar_text(row.at(keys[i])));
      os << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) os << csv_field(it.key()) << "," << csv_field(scalar_text(it.value())) << "\n";
  return os.str();
}

struct Settings {
  std::string format = "json";
  int jobs = 1;
  int oracle_cap = oracle::kDefaultCap;
};

inline void emit(std::ostream& out, const Settings& s, const json& j, const std::optional<json>& csv_rows = std::nullopt) {
  if (s.format == "csv")
    out << to_csv(csv_rows ? *csv_rows : j);
  else
    out << j.dump(2) << "\n";
}

inline Rat full_genus(int d, const Partition& K, const std::vector<Partition>& profiles) {
  long rhs = 0;
  for (int k : K.parts()) rhs += k - 1;
  for (const auto& mu : profiles) rhs += d - mu.length();
  return make_rat(rhs + 2 - 2 * d, 2);
}

inline Engine parse_engine(const std::string& e) {
  if (e == "character-sum" || e == "a") return Engine::CharacterSum;
  if (e == "generating-function" || e == "b") return Engine::GeneratingFunction;
  if (e == "bernoulli" || e == "c") return Engine::Bernoulli;
  throw std::invalid_argument("unknown engine " + e);
}

inline json rat_list(const std::vector<std::pair<std::vector<int>, Rat>>& pts) {
  json a = json::array();
  for (const auto& [p, v] : pts) a.push_back({{"point", p}, {"value", to_string(v)}});
  return a;
}

inline json symbol_json(const SymbolCheck& c) {
  return {{"K_aug", c.K_aug.to_string()}, {"x", c.x},           {"g", c.g},
          {"lhs_z", c.lhs_z},             {"lhs", to_string(c.lhs)}, {"rhs_symbols", to_string(c.rhs_symbols)},
          {"prefactor", to_string(c.prefactor)}, {"prefactor_general", to_string(c.prefactor_general)},
          {"holds", c.holds},             {"holds_general", c.holds_general}};
}

inline json fit_json(const SimplexFit& f) {
  return {{"variables", f.vars}, {"points", f.points}, {"min_degree", f.min_degree}, {"bound", f.bound},
          {"within_bound", f.within_bound}, {"polynomial", f.poly.to_string()}};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hurwitz numbers with completed cycles"};
  app.name("hurwitz");
  app.require_subcommand(1);
  Settings st;
  app.add_option("--format", st.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", st.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--oracle-cap", st.oracle_cap, "largest degree the oracle will enumerate")->check(CLI::Range(1, oracle::kMaxCap));

  int d = 0;
  std::optional<int> m;
  std::string k_text = "[]", profiles_text, beta_text, engine_text, mode, z_text, lift_text = "partial", suite = "all";
  bool star = false;
  int n = 0, radius = 0, dprime = 0, s = 0, x = 0, dmin = 1, dmax = 0, max_size = 6, max_n = 3, k_cycle = 0;

  auto* compute = app.add_subcommand("compute", "H_{d,m}, or H_d without --m");
  compute->fallthrough();
  compute->add_option("--d", d)->required()->check(CLI::Range(1, 1 << 20));
  compute->add_option("--m", m)->check(CLI::Range(1, 1 << 20));
  compute->add_option("--K", k_text);
  compute->add_option("--profiles", profiles_text);
  compute->add_flag("--star", star);
  compute->add_option("--engine", engine_text, "one-part engine: character-sum, generating-function, bernoulli");

  auto* cc = app.add_subcommand("completed-cycle", "coefficients of the completed k-cycle");
  cc->fallthrough();
  cc->add_option("k", k_cycle)->required()->check(CLI::Range(1, 1 << 20));
  cc->add_flag("--star", star);

  auto* dec = app.add_subcommand("decompose", "hook-basis coordinates of rho(beta)");
  dec->fallthrough();
  dec->add_option("--beta", beta_text)->required();

  auto* orc = app.add_subcommand("oracle", "brute-force count over S_d");
  orc->fallthrough();
  orc->add_option("--d", d)->required()->check(CLI::Range(1, 1 << 20));
  orc->add_option("--m", m)->check(CLI::Range(1, 1 << 20));
  orc->add_option("--K", k_text);
  orc->add_option("--profiles", profiles_text);
  orc->add_flag("--star", star);
  orc->add_option("--lift", lift_text)->check(CLI::IsMember({"partial", "padded"}));

  auto* poly = app.add_subcommand("poly-check", "polynomiality verifiers");
  poly->fallthrough();
  poly->add_option("--mode", mode)->required()->check(CLI::IsMember({"double", "triple", "lambda-g", "string", "dilaton"}));
  poly->add_option("--K", k_text);
  poly->add_option("--n", n)->check(CLI::Range(1, 1 << 20));
  poly->add_option("--radius", radius)->check(CLI::Range(1, 1 << 20));
  poly->add_option("--d", d)->check(CLI::Range(1, 1 << 20));
  poly->add_option("--m", m)->check(CLI::Range(1, 1 << 20));
  poly->add_option("--dprime", dprime)->check(CLI::Range(1, 1 << 20));
  poly->add_option("--s", s)->check(CLI::Range(1, 1 << 20));
  poly->add_option("--z", z_text);
  poly->add_option("--x", x)->check(CLI::Range(1, 1 << 20));
  poly->add_option("--max-size", max_size)->check(CLI::Range(1, 8));
  poly->add_option("--max-n", max_n)->check(CLI::Range(1, 4));

  auto* ver = app.add_subcommand("verify", "acceptance suites");
  ver->fallthrough();
  ver->add_option("--suite", suite, "all or a criterion number 1..9");
  ver->add_option("--dmax", dmax)->check(CLI::Range(1, 1 << 20));

  auto* table = app.add_subcommand("table", "one-part H_{d,m}(K; (d), beta) over a range");
  table->fallthrough();
  table->add_option("--dmin", dmin)->check(CLI::Range(1, 1 << 20));
  table->add_option("--dmax", dmax)->required()->check(CLI::Range(0, 1 << 20));
  table->add_option("--m", m)->check(CLI::Range(1, 1 << 20));
  table->add_option("--K", k_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Partition K = parse_partition(k_text);
    if (*compute) {
      auto profiles = parse_profiles(profiles_text);
      HurwitzQuery q{d, m.value_or(1), K, profiles, star};
      q.validate();
      json j;
      j["query"] = query_to_json(q, m.has_value());
      if (!m) {
        if (!engine_text.empty()) throw std::invalid_argument("--engine needs --m");
        Rat v = h_full(d, K, profiles, star);
        if (star && v != h_full_star_expansion(d, K, profiles)) throw internal_error("starred character sum and subset expansion disagree");
        j["value"] = to_string(v);
        j["genus"] = to_string(full_genus(d, K, profiles));
      } else {
        Rat v;
        if (!engine_text.empty()) {
          if (profiles.size() != 2 || profiles[0] != Partition{d}) throw std::invalid_argument("--engine needs --profiles \"[d];beta\"");
          if (star) throw std::invalid_argument("--engine does not support --star");
          Engine e = parse_engine(engine_text);
          v = h_onepart(d, *m, K, profiles[1], e);
          j["engine"] = engine_name(e);
        } else {
          v = star ? h_star(q) : h_quasi(q);
        }
        j["value"] = to_string(v);
        j["genus"] = to_string(quasi_genus(q));
      }
      emit(out, st, j);
    } else if (*cc) {
      json j = json::object();
      for (const auto& [p, c] : completed_cycle(k_cycle, star)) j[p.to_string()] = to_string(c);
      json rows = json::array();
      for (auto it = j.begin(); it != j.end(); ++it) rows.push_back({{"partition", it.key()}, {"coefficient", it.value()}});
      emit(out, st, j, rows);
    } else if (*dec) {
      const Partition beta = parse_partition(beta_text);
      DecompCoeffs a = decompose(beta);
      json coeffs = json::object();
      json rows = json::array();
      for (const auto& [i, c] : a.a) {
        coeffs["theta_" + std::to_string(i)] = to_string(c);
        rows.push_back({{"theta", "theta_" + std::to_string(i)}, {"coefficient", to_string(c)}});
      }
      json j{{"beta", beta.to_string()},
             {"coefficients", coeffs},
             {"reconstruction_verified", a.reconstruct() == rho_poly(beta)},
             {"vanishing_holds", a.vanishing_holds(beta.length())}};
      emit(out, st, j, rows);
    } else if (*orc) {
      auto profiles = parse_profiles(profiles_text);
      HurwitzQuery q{d, m.value_or(1), K, profiles, star};
      q.validate();
      const oracle::Lift lift = lift_text == "padded" ? oracle::Lift::Padded : oracle::Lift::PartialPermutation;
      oracle::Query oq{d, m.value_or(1), K, profiles, star};
      Rat o = m ? oracle::h_by_definition(oq, lift, st.oracle_cap) : oracle::h_full_by_definition(oq, lift, st.oracle_cap);
      Rat f = m ? (star ? h_star(q) : h_quasi(q)) : h_full(d, K, profiles, star);
      json j;
      j["query"] = query_to_json(q, m.has_value());
      j["lift"] = lift_text;
      j["oracle"] = to_string(o);
      j["formula"] = to_string(f);
      j["match"] = o == f;
      emit(out, st, j);
    } else if (*poly) {
      json j;
      std::optional<json> csv_rows;
      if (mode == "double") {
        if (n < 1) throw std::invalid_argument("--n is required");
        DoubleFit f = fit_double_poly(K, n, radius, st.jobs);
        j = {{"mode", mode},
             {"K", K.to_string()},
             {"n", n},
             {"radius", f.radius},
             {"degree_window", {f.lowest_claimed, f.highest_claimed}},
             {"fitted_degrees", f.poly.support_degrees()},
             {"within_window", f.within_window},
             {"parity_steps", f.parity_steps},
             {"symmetric", f.symmetric},
             {"out_of_sample_points", f.out_of_sample_points},
             {"counterexamples", rat_list(f.counterexamples)},
             {"polynomial", f.poly.to_string()}};
      } else if (mode == "triple") {
        if (d < 1 || !m || n < 1) throw std::invalid_argument("--d, --m and --n are required");
        TripleFitReport rep;
        if (!K.empty()) {
          rep = fit_triple_poly_fixed(d, *m, n, K);
        } else {
          if (dprime < 1 || s < 1) throw std::invalid_argument("give --K, or --dprime and --s for the joint fit");
          rep = fit_triple_poly_joint(d, *m, n, dprime, s);
        }
        j = {{"mode", mode}, {"d", d}, {"m", *m}, {"n", n}, {"dprime", rep.dprime}, {"s", rep.s}};
        j["K"] = rep.K ? json(rep.K->to_string()) : json(nullptr);
        j["genus"] = rep.K ? json(to_string(rep.genus)) : json(nullptr);
        j["fit"] = fit_json(rep.fit);
        j["note"] = "bounded simplex: a consistency check, not a proof";
      } else if (mode == "lambda-g") {
        std::vector<std::vector<int>> zs;
        if (!z_text.empty()) {
          zs.push_back(parse_int_list(z_text));
        } else {
          if (n < 1) throw std::invalid_argument("give --z or --n");
          std::vector<int> cur;
          hurwitz::detail::weak_compositions(K.length(), n, cur, zs);
        }
        json rows = json::array();
        for (const auto& z : zs) {
          WittenSymbol w = make_witten(K, z);
          Rat got = witten_lowest_coeff(w, st.jobs);
          Rat mult = Rat(multinomial(z));
          Rat printed = lambda_g_constant(K, w.g);
          Rat general = lambda_g_constant(K, w.g, ConstantForm::General);
          rows.push_back({{"z", z},
                          {"g", w.g},
                          {"extracted", to_string(got)},
                          {"multinomial", to_string(mult)},
                          {"constant", to_string(printed)},
                          {"constant_general", to_string(general)},
                          {"matches", got == mult * printed},
                          {"matches_general", got == mult * general}});
        }
        j = {{"mode", mode}, {"K", K.to_string()}, {"symbols", rows}};
        csv_rows = rows;
      } else {
        const bool dil = mode == "dilaton";
        if (!K.empty()) {
          if (x < 1) throw std::invalid_argument("--x is required with --K");
          auto z = parse_int_list(z_text);
          j = symbol_json(dil ? check_dilaton(K, z, x, st.jobs) : check_string(K, z, x, st.jobs));
          j["mode"] = mode;
        } else {
          auto inst = dil ? dilaton_instances(max_size, max_n) : string_instances(max_size, max_n);
          json rows = json::array();
          size_t printed = 0, general = 0;
          for (const auto& in : inst) {
            SymbolCheck c = dil ? check_dilaton(in.K_aug, in.z, in.x, st.jobs) : check_string(in.K_aug, in.z, in.x, st.jobs);
            printed += c.holds ? 1 : 0;
            general += c.holds_general ? 1 : 0;
            rows.push_back(symbol_json(c));
          }
          j = {{"mode", mode}, {"instances", inst.size()}, {"holds", printed}, {"holds_general", general}, {"checks", rows}};
          csv_rows = rows;
        }
      }
      emit(out, st, j, csv_rows);
    } else if (*ver) {
      verify::Options opt;
      opt.dmax = dmax;
      opt.jobs = st.jobs;
      opt.oracle_cap = st.oracle_cap;
      std::vector<int> ids;
      if (suite == "all") {
        ids = verify::all_ids();
      } else {
        for (int id : parse_int_list(suite)) {
          if (id < 1 || id > 9) throw std::invalid_argument("suite must be all or 1..9");
          ids.push_back(id);
        }
      }
      json crit = json::array();
      bool all = true;
      for (int id : ids) {
        auto r = verify::run_criterion(id, opt);
        all = all && r.passed;
        crit.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"checks", r.checks},
                        {"failures", r.failures},
                        {"samples", r.samples},
                        {"notes", r.notes}});
      }
      json j{{"passed", all}, {"criteria", crit}};
      json rows = json::array();
      for (const auto& c : crit) rows.push_back({{"id", c["id"]}, {"name", c["name"]}, {"passed", c["passed"]}, {"checks", c["checks"]}, {"failures", c["failures"]}});
      emit(out, st, j, rows);
      return all ? 0 : 1;
    } else if (*table) {
      json rows = json::array();
      for (int dd = dmin; dd <= dmax; ++dd)
        for (const auto& beta : partitions_of(dd)) {
          const int lo = m ? *m : 1, hi = m ? *m : dd;
          for (int mm = lo; mm <= hi; ++mm)
            rows.push_back({{"d", dd}, {"m", mm}, {"K", K.to_string()}, {"beta", beta.to_string()}, {"value", to_string(h_onepart(dd, mm, K, beta))}});
        }
      if (st.format == "csv") {
        out << "d,m,K,beta,value\n";
        for (const auto& r : rows)
          out << r["d"].get<int>() << "," << r["m"].get<int>() << "," << '"' << r["K"].get<std::string>() << "\","
              << '"' << r["beta"].get<std::string>() << '"' << "," << r["value"].get<std::string>() << "\n";
      } else {
        out << rows.dump(2) << "\n";
      }
    }
    return 0;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hurwitz::cli
