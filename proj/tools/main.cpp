#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "geomr/errors.hpp"
#include "geomr/verify.hpp"
#include "json_io.hpp"

using namespace geomr;
using io::json;

namespace {

constexpr int kExitMalformed = 1;
constexpr int kExitDegenerate = 2;

json read_request(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("input is not valid JSON");
  return j;
}

int crystal_index(const json& request, int n) {
  if (!request.contains("i") || !request["i"].is_number_integer()) throw InvalidInput("missing integer field \"i\"");
  int i = request["i"].get<int>();
  if (i < 0 || i >= n) throw InvalidInput("crystal index must lie in [0, n-1]");
  return i;
}

json product(const json& req) {
  const json& fs = io::factors(req, 0);
  Tableau acc = io::tableau_from_json(fs[0]);
  for (std::size_t a = 1; a < fs.size(); ++a) {
    Tableau next = io::tableau_from_json(fs[a]);
    if (next.n != acc.n) throw InvalidInput("factors must share n");
    acc = schensted_product(acc, next);
  }
  return {{"tableau", io::to_json(acc)}};
}

std::pair<Tableau, Tableau> rectangle_pair(const json& req) {
  const json& fs = io::factors(req, 2);
  Tableau T = io::tableau_from_json(fs[0]), U = io::tableau_from_json(fs[1]);
  if (T.n != U.n) throw InvalidInput("factors must share n");
  for (const Tableau* X : {&T, &U})
    if (X->rows.empty() || !X->is_rectangular() || X->num_rows() >= X->n)
      throw InvalidInput("factors must be rectangles with 1 <= rows < n");
  return {T, U};
}

json comb_r(const json& req) {
  auto [T, U] = rectangle_pair(req);
  auto [Up, Tp] = comb_R_oracle(T, U);
  return {{"factors", {io::to_json(Up), io::to_json(Tp)}}};
}

std::pair<XPoint<Rational>, XPoint<Rational>> point_pair(const json& req) {
  const json& fs = io::factors(req, 2);
  auto u = io::point_from_json(fs[0]), v = io::point_from_json(fs[1]);
  if (u.n() != v.n()) throw InvalidInput("factors must share n");
  return {u, v};
}

json geom_r(const json& req) {
  auto [u, v] = point_pair(req);
  auto [vp, up] = geom_R(u, v);
  return {{"factors", {io::to_json(vp), io::to_json(up)}}};
}

std::pair<KRectangle, KRectangle> krect_pair(const json& req) {
  const json& fs = io::factors(req, 2);
  auto a = io::krect_from_json(fs[0]), b = io::krect_from_json(fs[1]);
  if (a.n != b.n) throw InvalidInput("factors must share n");
  for (const KRectangle* r : {&a, &b})
    if (r->k >= r->n) throw InvalidInput("rectangles need 1 <= k < n");
  return {a, b};
}

json trop_r(const json& req) {
  auto [a, b] = krect_pair(req);
  auto [bp, ap] = trop_R(a, b);
  return {{"factors", {io::to_json(bp), io::to_json(ap)}}};
}

// Tableau factors give the combinatorial coenergy, point factors the geometric one.
json energy(const json& req) {
  const json& fs = io::factors(req, 2);
  if (io::is_tableau(fs[0])) {
    auto [T, U] = rectangle_pair(req);
    return {{"E", comb_coenergy(T, U)}};
  }
  auto [u, v] = point_pair(req);
  return {{"E", io::to_json(geom_E(u, v))}};
}

json trop_energy(const json& req) {
  auto [a, b] = krect_pair(req);
  return {{"E", trop_E(a, b)}};
}

json crystal(const json& req) {
  if (!req.contains("tableau")) throw InvalidInput("missing field \"tableau\"");
  Tableau T = io::tableau_from_json(req["tableau"]);
  if (T.rows.empty() || !T.is_rectangular()) throw InvalidInput("tableau must be a nonempty rectangle");
  const int i = crystal_index(req, T.n);
  const std::string op = req.value("op", "");
  auto result = [](const std::optional<Tableau>& X) { return X ? io::to_json(*X) : json(nullptr); };
  if (op == "e") return {{"tableau", result(i == 0 ? crystal_e0(T) : crystal_e(T, i))}};
  if (op == "f") return {{"tableau", result(i == 0 ? crystal_f0(T) : crystal_f(T, i))}};
  if (op == "eps") return {{"value", i == 0 ? crystal_eps(promotion(T), 1) : crystal_eps(T, i)}};
  if (op == "phi") return {{"value", i == 0 ? crystal_phi(promotion(T), 1) : crystal_phi(T, i)}};
  throw InvalidInput("op must be one of e, f, eps, phi");
}

json promote(const json& req) {
  if (!req.contains("tableau")) throw InvalidInput("missing field \"tableau\"");
  Tableau T = io::tableau_from_json(req["tableau"]);
  if (T.rows.empty() || !T.is_rectangular()) throw InvalidInput("tableau must be a nonempty rectangle");
  const json times = req.value("times", json(1));
  if (!times.is_number_integer()) throw InvalidInput("times must be an integer");
  long m = times.get<long>() % T.n;
  if (m < 0) m += T.n;
  for (long a = 0; a < m; ++a) T = promotion(T);
  return {{"tableau", io::to_json(T)}};
}

json report_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"trials", c.trials},
                      {"failures", c.failures},
                      {"passed", c.passed()},
                      {"counterexamples", c.counterexamples}});
  return {{"suite", rep.suite},
          {"n", rep.config.n},
          {"seed", rep.config.seed},
          {"trials", rep.config.trials},
          {"profile", rep.config.profile},
          {"max_L", rep.config.max_L},
          {"passed", rep.passed()},
          {"checks", checks}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int fail(const char* code, const std::string& detail, int exit_code) {
  emit({{"error", code}, {"detail", detail}});
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric and combinatorial R-matrices of rectangular tableaux"};
  app.require_subcommand(1);

  std::string input;
  const std::vector<std::pair<std::string, std::function<json(const json&)>>> computes{
      {"product", product},   {"comb-r", comb_r},           {"geom-r", geom_r},   {"trop-r", trop_r},
      {"energy", energy},     {"trop-energy", trop_energy}, {"crystal", crystal}, {"promote", promote}};
  const std::map<std::string, std::string> help{
      {"product", "Schensted product of the tableaux in \"factors\""},
      {"comb-r", "combinatorial R-matrix of two rectangles"},
      {"geom-r", "geometric R-matrix of two points"},
      {"trop-r", "tropical R-matrix of two k-rectangles"},
      {"energy", "coenergy of two rectangles (integer) or two points (rational)"},
      {"trop-energy", "tropical coenergy of two k-rectangles"},
      {"crystal", "crystal operator \"op\" (e, f, eps, phi) with index \"i\" on \"tableau\""},
      {"promote", "promotion applied \"times\" times to \"tableau\""}};
  std::map<CLI::App*, std::function<json(const json&)>> handlers;
  for (const auto& [name, fn] : computes) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--input", input, "JSON request file (default: stdin)");
    handlers[sub] = fn;
  }

  VerifyConfig cfg;
  std::string suite, profile;
  std::optional<std::uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "run a verification suite and print its report");
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--n", cfg.n, "matrix size")->check(CLI::Range(2, 12));
  verify->add_option("--seed", seed, "random seed (default: GEOMR_SEED or 42)");
  verify->add_option("--trials", cfg.trials, "random points per check")->check(CLI::PositiveNumber);
  verify->add_option("--profile", profile, "comma-separated k-values of the factors, e.g. 2,2");
  verify->add_option("--max-L", cfg.max_L, "column bound for exhaustive suites")->check(CLI::Range(0, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("malformed_input", e.what(), kExitMalformed);
  }

  try {
    if (verify->parsed()) {
      if (seed) {
        cfg.seed = *seed;
      } else if (const char* env = std::getenv("GEOMR_SEED")) {
        try {
          cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw InvalidInput("GEOMR_SEED must be an unsigned integer");
        }
      }
      std::stringstream ss(profile);
      for (std::string item; std::getline(ss, item, ',');) {
        try {
          cfg.profile.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw InvalidInput("profile entries must be integers");
        }
      }
      emit(report_json(run_suite(suite, cfg)));
      return 0;
    }
    for (const auto& [sub, fn] : handlers)
      if (sub->parsed()) {
        emit(fn(read_request(input)));
        return 0;
      }
  } catch (const DegenerateInput& e) {
    return fail("degenerate_input", e.what(), kExitDegenerate);
  } catch (const InvalidInput& e) {
    return fail("malformed_input", e.what(), kExitMalformed);
  } catch (const EngineMisuse& e) {
    return fail("engine_misuse", e.what(), kExitMalformed);
  } catch (const json::exception& e) {
    return fail("malformed_input", e.what(), kExitMalformed);
  }
  return kExitMalformed;
}
