#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "etsys/error.hpp"
#include "etsys/json_io.hpp"
#include "etsys/lusztig.hpp"
#include "etsys/quiver.hpp"
#include "etsys/realize.hpp"
#include "etsys/reineke.hpp"
#include "etsys/snakes.hpp"
#include "etsys/tsystem.hpp"
#include "etsys/verify.hpp"

using namespace etsys;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, ConfigError = 2, Precondition = 3, ParseError = 4 };

struct Config {
  int n = 0;
  std::string flavor = "untwisted";
  std::vector<int> xi;
  int n0 = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
};

struct ConfigFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HeightFunction height_from(const Config& c) {
  try {
    if (c.xi.empty()) {
      if (c.n < 1) throw ConfigFailure("give --xi or --n");
      if (c.flavor == "twisted") {
        if (c.n % 2 == 0) throw ConfigFailure("twisted needs odd n");
        return HeightFunction::Theta((c.n + 1) / 2);
      }
      return HeightFunction::canonical(c.n, 0);
    }
    if (c.n && c.n != static_cast<int>(c.xi.size())) throw ConfigFailure("--n disagrees with the length of --xi");
    if (c.flavor == "twisted") {
      int n0 = c.n0 ? c.n0 : (static_cast<int>(c.xi.size()) + 1) / 2;
      return HeightFunction::twisted(n0, c.xi);
    }
    return HeightFunction::untwisted(c.xi);
  } catch (const Error& e) {
    throw ConfigFailure(e.what());
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse: return ParseError;
    case ErrorKind::InvalidHeight:
    case ErrorKind::RankMismatch: return ConfigError;
    default: return Precondition;
  }
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_quiver(const Config& cfg, const std::vector<int>& window) {
  auto xi = height_from(cfg);
  if (!window.empty()) {
    if (window.size() != 2 || window[0] > window[1]) throw ConfigFailure("--window takes LO,HI in doubled units");
    if (cfg.format == "json") {
      json a = json::array();
      for (const Vertex& v : vertices_between(xi, window[0], window[1])) {
        json e{{"i", v.i}, {"k2", v.k2}, {"in_window", in_window(xi, v)}};
        if (in_window(xi, v)) e["root"] = to_string(phi(xi, v));
        a.push_back(e);
      }
      print_json(a);
    } else {
      std::cout << quiver_dot(xi, window[0], window[1]);
    }
    return Ok;
  }
  if (cfg.format == "dot") {
    std::cout << gamma_dot(xi);
  } else if (cfg.format == "json") {
    json a = json::array();
    for (const auto& [v, r] : phi_map(xi)) a.push_back({{"i", v.i}, {"k2", v.k2}, {"root", to_string(r)}});
    print_json({{"xi", to_string(xi)}, {"word", compatible_reading(xi).word}, {"vertices", a}});
  } else {
    std::cout << gamma_text(xi);
  }
  return Ok;
}

int cmd_snake_check(const Config& cfg, const std::string& input) {
  auto s = snake_from_json(parse_json_text(read_input(input)));
  bool snake = is_snake(s.xi, s.points), prime = is_prime_snake(s.xi, s.points);
  json segs = json::array();
  if (snake)
    for (const Points& seg : split_prime(s.xi, s.points)) segs.push_back(points_to_json(seg));
  if (cfg.format == "json") {
    print_json({{"snake", snake}, {"prime", prime}, {"segments", segs}});
  } else {
    std::cout << "snake " << snake << "\nprime " << prime << "\n";
    if (snake)
      for (const Points& seg : split_prime(s.xi, s.points)) std::cout << "segment " << to_string(seg) << "\n";
  }
  return snake ? Ok : Precondition;
}

int not_prime(const SnakeInput& s) {
  std::cerr << "error: " << to_string(s.points) << " is not a prime snake\n";
  if (is_snake(s.xi, s.points))
    for (const Points& seg : split_prime(s.xi, s.points)) std::cerr << "  segment " << to_string(seg) << "\n";
  return Precondition;
}

int cmd_qr(const Config& cfg, const std::string& input) {
  auto s = snake_from_json(parse_json_text(read_input(input)));
  if (s.points.size() >= 2 && !is_prime_snake(s.xi, s.points)) return not_prime(s);
  QRPair qr = qr_sequences(s.xi, s.points);
  if (cfg.format == "json") {
    json pairs = json::array();
    for (std::size_t a = 0; a + 1 < s.points.size(); ++a) {
      QRPair p = qr_pair(s.xi, s.points[a], s.points[a + 1]);
      pairs.push_back({{"Q", points_to_json(p.q)}, {"R", points_to_json(p.r)}});
    }
    print_json({{"Q", points_to_json(qr.q)}, {"R", points_to_json(qr.r)}, {"pairs", pairs}});
  } else {
    std::cout << "Q " << to_string(qr.q) << "\nR " << to_string(qr.r) << "\n";
  }
  return Ok;
}

int cmd_tsystem(const Config& cfg, const std::string& input, const std::string& realization, const std::string& table) {
  auto s = snake_from_json(parse_json_text(read_input(input)));
  if (s.points.size() < 2) throw Error(ErrorKind::TooShort, "an extended T-system needs at least two points");
  if (!is_prime_snake(s.xi, s.points)) return not_prime(s);
  TSystemRelation rel = extended_tsystem(s.xi, s.points);
  std::optional<RelationMonomials> mono;
  if (!realization.empty()) {
    Realization re = Realization::qdatum_A();
    if (realization == "qdatum_B") re = Realization::qdatum_B();
    else if (realization == "custom") {
      if (table.empty()) throw ConfigFailure("custom realization needs --table");
      re = table_from_json(s.xi, parse_json_text(read_input(table)));
    } else if (realization != "qdatum_A") {
      throw ConfigFailure("unknown realization '" + realization + "'");
    }
    mono = relation_monomials(rel, re);
  }
  if (cfg.format == "json") {
    print_json(relation_to_json(rel, mono ? &*mono : nullptr));
  } else if (cfg.format == "latex") {
    std::cout << to_latex(rel) << "\n";
    if (mono) std::cout << to_latex(*mono) << "\n";
  } else {
    std::cout << to_text(rel);
    if (mono) std::cout << to_text(*mono) << "\n";
  }
  return Ok;
}

int cmd_reineke(const Config& cfg, const std::string& input, int j) {
  std::optional<int> n;
  if (cfg.n) n = cfg.n;
  VertexDatum c = datum_from_json(parse_json_text(read_input(input)), n);
  std::vector<int> js;
  if (j) js.push_back(j);
  else
    for (int a = 1; a <= c.carrier().n; ++a) js.push_back(a);
  json out = json::array();
  for (int a : js) out.push_back({{"j", a}, {"epsilon", epsilon_any(a, c)}, {"epsilon_star", epsilon_star(a, c)}});
  if (cfg.format == "json") {
    print_json(j ? out[0] : out);
  } else {
    for (const json& e : out)
      std::cout << "j=" << e["j"] << " epsilon=" << e["epsilon"] << " epsilon_star=" << e["epsilon_star"] << "\n";
  }
  return Ok;
}

int cmd_rho(const Config& cfg, const std::string& input) {
  std::optional<int> n;
  if (cfg.n) n = cfg.n;
  VertexDatum c = rho(datum_from_json(parse_json_text(read_input(input)), n));
  if (cfg.format == "json") print_json(datum_to_json(c));
  else std::cout << to_string(c) << "\n";
  return Ok;
}

int cmd_translate(const Config& cfg, const std::string& input) {
  auto s = snake_from_json(parse_json_text(read_input(input)));
  if (!s.xi.twisted() || !(s.xi == HeightFunction::Theta(s.xi.n0())))
    throw Error(ErrorKind::InvalidArgument, "translate expects a snake for the Theta height function");
  Points pd = translate_twisted(s.xi.n0(), s.points);
  if (cfg.format == "json") print_json(snake_to_json(HeightFunction::theta(s.xi.n0()), pd));
  else std::cout << to_string(pd) << "\n";
  return Ok;
}

int cmd_verify(const Config& cfg, const std::string& suite, int trials) {
  auto results = run_suite(suite, trials, cfg.seed);
  bool ok = true;
  json a = json::array();
  for (const CheckResult& r : results) {
    ok = ok && r.ok();
    if (cfg.format == "json")
      a.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"skipped", r.skipped},
                   {"first_failure", r.first_failure}});
    else std::cout << to_string(r) << "\n";
  }
  if (cfg.format == "json") print_json({{"ok", ok}, {"checks", a}});
  return ok ? Ok : VerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended T-system combinatorics for type A duality data"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--n", cfg.n, "rank n");
  app.add_option("--flavor", cfg.flavor, "untwisted or twisted")->check(CLI::IsMember({"untwisted", "twisted"}));
  app.add_option("--xi", cfg.xi, "height values, doubled, comma separated")->delimiter(',');
  app.add_option("--n0", cfg.n0, "middle node for twisted heights");
  app.add_option("--format", cfg.format, "text, json, latex or dot")->check(CLI::IsMember({"text", "json", "latex", "dot"}));
  app.add_option("--seed", cfg.seed, "seed for randomized commands");

  std::string input = "-";
  std::vector<int> window;
  auto* quiver = app.add_subcommand("quiver", "render the window or a slice of the repetition quiver");
  quiver->add_option("--window", window, "LO,HI in doubled k")->delimiter(',');
  auto* snake = app.add_subcommand("snake-check", "snake and prime tests with prime segments");
  auto* qr = app.add_subcommand("qr", "Q and R sequences of a prime snake");
  auto* ts = app.add_subcommand("tsystem", "extended T-system relation of a prime snake");
  std::string realization, table;
  ts->add_option("--realization", realization, "qdatum_A, qdatum_B or custom");
  ts->add_option("--table", table, "custom cuspidal table (JSON)");
  auto* rn = app.add_subcommand("reineke", "epsilon and epsilon star of a datum on Gamma^(delta)");
  int j = 0;
  rn->add_option("--j", j, "node; all nodes when omitted");
  auto* rh = app.add_subcommand("rho", "transport a datum from gamma-THETA to gamma-theta");
  auto* tr = app.add_subcommand("translate", "P to P-dagger for a snake in Gamma^Theta");
  for (auto* sub : {snake, qr, ts, rn, rh, tr}) sub->add_option("input", input, "JSON file, - for stdin");
  auto* vf = app.add_subcommand("verify", "run property suites");
  std::string suite = "all";
  int trials = 200;
  vf->add_option("--suite", suite, "moves, rho, reineke, qr, tfd or all")
      ->check(CLI::IsMember({"moves", "rho", "reineke", "qr", "tfd", "all"}));
  vf->add_option("--trials", trials, "trials per randomized check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : ConfigError;
  }

  try {
    if (*quiver) return cmd_quiver(cfg, window);
    if (*snake) return cmd_snake_check(cfg, input);
    if (*qr) return cmd_qr(cfg, input);
    if (*ts) return cmd_tsystem(cfg, input, realization, table);
    if (*rn) return cmd_reineke(cfg, input, j);
    if (*rh) return cmd_rho(cfg, input);
    if (*tr) return cmd_translate(cfg, input);
    if (*vf) return cmd_verify(cfg, suite, trials);
  } catch (const ConfigFailure& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return ConfigError;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_for(e);
  }
  return Ok;
}
