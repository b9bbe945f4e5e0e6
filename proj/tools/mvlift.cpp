#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "mvlift/analysis.hpp"
#include "mvlift/error.hpp"
#include "mvlift/lifting.hpp"
#include "mvlift/oracle.hpp"
#include "mvlift/report.hpp"
#include "mvlift/sysio.hpp"
#include "mvlift/verify.hpp"

#ifndef MVLIFT_SYSTEMS_DIR
#define MVLIFT_SYSTEMS_DIR "systems"
#endif

using namespace mvlift;

namespace {

enum Exit { ok = 0, validation = 1, precondition = 2, invariant = 3 };

struct RunConfig {
  std::string command;
  std::string input;
  std::string second;
  std::string output;
  std::string strategy = "auto";
  std::string direction;
  std::string alpha;
  std::string pair;
  std::string monomial;
  std::size_t k = 1;
  bool json = false;
  bool table = false;
  bool multiplicities = false;
  std::string systems_dir = MVLIFT_SYSTEMS_DIR;
  OracleOptions oracle;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> out;
  std::istringstream in(read_text_file(path));
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError(path + ":" + std::to_string(n) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_config(const std::map<std::string, std::string>& cfg, RunConfig& rc) {
  for (const auto& [key, value] : cfg) {
    try {
      if (key == "oracle.tol") rc.oracle.tol = std::stod(value);
      else if (key == "oracle.max_iterations") rc.oracle.max_iterations = std::stoi(value);
      else if (key == "oracle.restarts") rc.oracle.restarts = std::stoi(value);
      else if (key == "seed") rc.oracle.seed = std::stoull(value);
      else if (key == "json") rc.json = value == "true" || value == "1";
      else throw ValidationError("unknown config key '" + key + "'");
    } catch (const std::logic_error&) {
      throw ValidationError("bad value for config key '" + key + "': " + value);
    }
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

IntVector parse_ints(const std::string& text, const std::string& what) {
  IntVector out;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ValidationError("bad integer '" + item + "' in " + what);
    }
  }
  return out;
}

std::vector<GaussianRational> parse_alpha(const std::string& text) {
  std::vector<GaussianRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_gaussian(trim(item)));
    } catch (const std::invalid_argument&) {
      throw ValidationError("bad coefficient '" + item + "' in --alpha");
    }
  }
  return out;
}

PolySystem load(const std::string& path) { return parse_system(read_text_file(path)); }

void emit(const RunConfig& rc, const Json& j, const std::function<void()>& human) {
  if (rc.json) std::cout << j.dump(2) << "\n";
  else human();
}

std::string point_text(const std::vector<std::complex<double>>& p) {
  std::ostringstream s;
  s << std::setprecision(12) << "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s << ", ";
    s << p[i].real() << (p[i].imag() < 0 ? " - " : " + ") << std::abs(p[i].imag()) << "i";
  }
  return s.str() + ")";
}

int cmd_mv(const RunConfig& rc) {
  Integer mv = bkk_bound(load(rc.input));
  emit(rc, Json{{"bkk_bound", integer_to_json(mv)}}, [&] { std::cout << mv << "\n"; });
  return ok;
}

int cmd_analyze(const RunConfig& rc) {
  PolySystem sys = load(rc.input);
  AnalysisReport report = find_degenerate_directions(sys);
  assess_strategies(sys, report);
  if (!rc.table) {
    std::cout << analysis_to_json(report).dump(2) << "\n";
    return ok;
  }
  std::cout << "BKK bound: " << report.bkk_bound << "\n";
  for (const auto& d : report.directions) {
    std::ostringstream u;
    u << "(";
    for (std::size_t i = 0; i < d.u.dim(); ++i) u << (i ? "," : "") << d.u[i];
    u << ")";
    std::cout << std::left << std::setw(16) << u.str() << std::setw(13) << to_string(d.status)
              << std::setw(18) << d.certificate;
    if (d.witness) {
      std::cout << "witness";
      for (const auto& c : *d.witness) std::cout << " " << c.to_string();
    }
    if (!d.note.empty()) std::cout << d.note;
    std::cout << "\n";
    for (const auto& s : d.strategies)
      if (s.applicable) std::cout << "    " << s.strategy << ": " << s.detail << "\n";
  }
  return ok;
}

LiftResult run_lift(const RunConfig& rc, const PolySystem& sys) {
  Strategy strategy = rc.strategy == "auto" ? Strategy::division : parse_strategy(rc.strategy);
  if (strategy == Strategy::monomial || !rc.monomial.empty()) {
    if (rc.strategy != "monomial") throw ValidationError("--monomial requires --strategy monomial");
    if (rc.monomial.empty()) throw ValidationError("--strategy monomial requires --monomial");
    return lift_monomial(sys, parse_ints(rc.monomial, "--monomial"));
  }
  if (rc.direction.empty()) {
    if (!rc.alpha.empty() || !rc.pair.empty()) throw ValidationError("--alpha and --pair require --direction");
    AutoLift found = rc.strategy == "auto" ? auto_lift(sys) : auto_lift(sys, strategy);
    if (!found.lift) {
      for (const auto& a : found.attempts) std::cerr << "  " << a << "\n";
      throw PreconditionError("no_applicable_lifting", "no lifting applies along any solvable direction");
    }
    return std::move(*found.lift);
  }
  if (rc.strategy == "auto") throw ValidationError("--direction requires an explicit --strategy");
  Direction u(parse_ints(rc.direction, "--direction"));
  if (u.dim() != sys.dim()) throw ValidationError("--direction has the wrong length");
  switch (strategy) {
    case Strategy::division:
      return lift_division(sys, u, {rc.k, rc.alpha.empty() ? std::vector<GaussianRational>{} : parse_alpha(rc.alpha)});
    case Strategy::bigcd:
      return lift_bivariate_gcd(sys, u);
    case Strategy::lindep: {
      if (rc.pair.empty()) {
        for (std::size_t i1 = 0; i1 < sys.dim(); ++i1)
          for (std::size_t i2 = 0; i2 < sys.dim(); ++i2) {
            if (i1 == i2) continue;
            try {
              return lift_linear_dependent(sys, u, i1, i2);
            } catch (const PreconditionError&) {
            }
          }
        throw PreconditionError("dependency", "no pair of facial polynomials is proportional");
      }
      IntVector p = parse_ints(rc.pair, "--pair");
      if (p.size() != 2 || p[0] < 1 || p[1] < 1) throw ValidationError("--pair expects two 1-based indices");
      return lift_linear_dependent(sys, u, static_cast<std::size_t>(p[0] - 1), static_cast<std::size_t>(p[1] - 1));
    }
    case Strategy::monomial:
      break;
  }
  throw InvariantError("unreachable strategy");
}

int cmd_lift(const RunConfig& rc) {
  PolySystem sys = load(rc.input);
  LiftResult lift = run_lift(rc, sys);
  std::string text = serialize_lift(lift);
  Json prov = provenance_to_json(lift);
  if (rc.output.empty()) {
    std::cout << text;
    return ok;
  }
  write_text_file(rc.output, text);
  emit(rc, prov, [&] {
    std::cout << "strategy " << prov["strategy"].get<std::string>() << ", mixed volume " << lift.mv_before << " -> "
              << lift.mv_after << ", wrote " << rc.output << "\n";
    for (const auto& d : lift.diagnostics) std::cout << "  note: " << d << "\n";
  });
  return ok;
}

int cmd_verify(const RunConfig& rc) {
  PolySystem orig = load(rc.input);
  std::string lifted_text = read_text_file(rc.second);
  PolySystem lifted = parse_system(lifted_text);
  std::optional<MonomialChange> change;
  if (auto prov = read_provenance(lifted_text)) change = change_from_json(prov->at("transform"));
  VerifyReport v = verify_lift(orig, lifted, change, rc.oracle);
  Json j{{"resubstitution", v.resubstitution}};
  j["solutions"] = v.solutions ? Json(*v.solutions) : Json(nullptr);
  j["extended"] = v.extended;
  j["non_torus"] = v.non_torus;
  j["messages"] = v.messages;
  j["ok"] = v.ok();
  emit(rc, j, [&] {
    std::cout << "resubstitution: " << (v.resubstitution ? "identical" : "MISMATCH") << "\n";
    if (v.solutions)
      std::cout << "solutions: " << v.extended << "/" << *v.solutions << " extend (" << v.non_torus
                << " with a zero y)\n";
    for (const auto& m : v.messages) std::cout << "  " << m << "\n";
  });
  return v.ok() ? ok : validation;
}

int cmd_solve2(const RunConfig& rc) {
  PolySystem sys = load(rc.input);
  SolutionCount c = count_torus_solutions_2d(sys, rc.oracle);
  std::vector<int> mult;
  if (rc.multiplicities) mult = estimate_multiplicities(sys, c, rc.oracle);
  Json j{{"count", c.count}, {"exact", c.exact}, {"degree_x1", c.degree_x1}, {"degree_x2", c.degree_x2}, {"bkk_bound", integer_to_json(bkk_bound(sys))}};
  Json sols = Json::array();
  for (std::size_t i = 0; i < c.solutions.size(); ++i) {
    Json s;
    Json pt = Json::array();
    for (const auto& z : c.solutions[i].point) pt.push_back({z.real(), z.imag()});
    s["point"] = pt;
    s["residual"] = c.solutions[i].residual;
    if (!mult.empty()) s["multiplicity"] = mult[i];
    sols.push_back(s);
  }
  j["solutions"] = sols;
  emit(rc, j, [&] {
    std::cout << c.count << " torus solutions (BKK bound " << bkk_bound(sys) << ", resultant degrees " << c.degree_x1
              << ", " << c.degree_x2 << ")\n";
    for (std::size_t i = 0; i < c.solutions.size(); ++i) {
      std::cout << "  " << point_text(c.solutions[i].point) << "  residual " << std::scientific
                << std::setprecision(2) << c.solutions[i].residual << std::defaultfloat;
      if (!mult.empty()) std::cout << "  multiplicity " << mult[i];
      std::cout << "\n";
    }
  });
  return ok;
}

int cmd_selftest(const RunConfig& rc) {
  const std::string dir = rc.systems_dir + "/";
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"ex1 bkk bound is 2", [&] { return bkk_bound(load(dir + "ex1.sys")) == 2; }},
      {"ex1 lifted system has mixed volume 1", [&] { return bkk_bound(load(dir + "ex1_lifted.sys")) == 1; }},
      {"ex1 lifted system resubstitutes to ex1",
       [&] { return resubstitute(load(dir + "ex1_lifted.sys"), 2) == load(dir + "ex1.sys"); }},
      {"ex1 has one torus solution", [&] { return count_torus_solutions_2d(load(dir + "ex1.sys"), rc.oracle).count == 1; }},
      {"ex1 facial system solvable along (0,1)",
       [&] {
         auto r = find_degenerate_directions(load(dir + "ex1.sys"));
         auto s = r.with_status(FacialStatus::solvable);
         return s.size() == 1 && s[0]->u == Direction({0, 1});
       }},
      {"ex1 gcd lift reaches mixed volume 1",
       [&] {
         PolySystem s = load(dir + "ex1.sys");
         auto r = auto_lift(s, Strategy::bigcd);
         return r.lift && r.lift->mv_after == 1 && verify_lift(s, r.lift->lifted, r.lift->change, rc.oracle).ok();
       }},
      {"ex1 division lift reaches mixed volume 1",
       [&] { return lift_division(load(dir + "ex1.sys"), Direction({0, 1})).mv_after == 1; }},
      {"sec4 bkk bound is 16", [&] { return bkk_bound(load(dir + "sec4.sys")) == 16; }},
      {"sec4 dependency lift reaches mixed volume 12",
       [&] {
         auto r = auto_lift(load(dir + "sec4.sys"), Strategy::lindep);
         return r.lift && r.lift->mv_before == 16 && r.lift->mv_after == 12;
       }},
  };
  bool all = true;
  Json results = Json::array();
  for (const auto& [name, check] : checks) {
    bool pass = false;
    std::string error;
    try {
      pass = check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    all = all && pass;
    results.push_back({{"check", name}, {"pass", pass}});
    if (!rc.json) std::cout << (pass ? "ok    " : "FAIL  ") << name << (error.empty() ? "" : ": " + error) << "\n";
  }
  if (rc.json) std::cout << Json{{"pass", all}, {"checks", results}}.dump(2) << "\n";
  return all ? ok : invariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-volume analysis and lifting of sparse polynomial systems"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  std::string config_path;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  bool json_flag = false;
  app.add_option("--config", config_path, "key=value defaults (oracle.tol, oracle.max_iterations, oracle.restarts, seed, json)");
  app.add_flag("--json", json_flag, "Machine-readable output");
  app.add_option("--tol", tol, "Oracle tolerance");
  app.add_option("--seed", seed, "Random seed for the numerical oracle");

  auto* mv = app.add_subcommand("mv", "Print the BKK bound");
  mv->add_option("file", rc.input)->required();
  auto* analyze = app.add_subcommand("analyze", "Report degenerate directions as JSON");
  analyze->add_option("file", rc.input)->required();
  analyze->add_flag("--table", rc.table, "Human-readable table instead of JSON");
  auto* lift = app.add_subcommand("lift", "Lift a system to one with smaller mixed volume");
  lift->add_option("file", rc.input)->required();
  lift->add_option("--strategy", rc.strategy)
      ->check(CLI::IsMember({"auto", "division", "lindep", "bigcd", "monomial"}));
  lift->add_option("--direction", rc.direction, "Direction u, e.g. 0,1");
  lift->add_option("--alpha", rc.alpha, "Facial root for division, comma separated");
  lift->add_option("--k", rc.k, "Number of new variables for division");
  lift->add_option("--pair", rc.pair, "1-based indices i1,i2 for lindep");
  lift->add_option("--monomial", rc.monomial, "Exponent a for the monomial substitution");
  lift->add_option("-o,--output", rc.output, "Lifted system file");
  auto* verify = app.add_subcommand("verify", "Check a lifted system against its original");
  verify->add_option("original", rc.input)->required();
  verify->add_option("lifted", rc.second)->required();
  auto* solve2 = app.add_subcommand("solve2", "Torus solutions of a bivariate system");
  solve2->add_option("file", rc.input)->required();
  solve2->add_flag("--multiplicities", rc.multiplicities, "Estimate multiplicities by perturbation");
  auto* selftest = app.add_subcommand("selftest", "Regression checks on the shipped systems");
  selftest->add_option("--dir", rc.systems_dir, "Directory with ex1.sys, ex1_lifted.sys, sec4.sys");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : validation;
  }

  try {
    if (!config_path.empty()) apply_config(read_config(config_path), rc);
    if (tol) rc.oracle.tol = *tol;
    if (seed) rc.oracle.seed = *seed;
    if (json_flag) rc.json = true;
    if (!(rc.oracle.tol > 0)) throw ValidationError("oracle tolerance must be positive");
    if (rc.k == 0) throw ValidationError("--k must be positive");

    if (*mv) return cmd_mv(rc);
    if (*analyze) return cmd_analyze(rc);
    if (*lift) return cmd_lift(rc);
    if (*verify) return cmd_verify(rc);
    if (*solve2) return cmd_solve2(rc);
    if (*selftest) return cmd_selftest(rc);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return validation;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return precondition;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return invariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return invariant;
  }
  return validation;
}
