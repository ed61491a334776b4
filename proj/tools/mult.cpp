#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "brim/verify.hpp"

using namespace brim;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string field = "q";
  std::uint64_t seed = 0;
  int trials = 3;
  std::string route;
  std::optional<int> max_power;
  std::string json_out, svg_out;

  GeneralElementSampler sampler() const {
    GeneralElementSampler s;
    s.seed = seed;
    s.trials = trials;
    return s;
  }
};

// Thrown when a computed value disagrees with its oracle.
struct Mismatch {
  json report;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--field", c.field, "coefficient field: q or fp")->check(CLI::IsMember({"q", "fp"}));
  cmd->add_option("--seed", c.seed, "seed for general elements");
  cmd->add_option("--trials", c.trials, "trials per genericity draw")->check(CLI::PositiveNumber);
  cmd->add_option("--route", c.route, "REDUCTION, DIFFERENCE, NEWTON, LAMBDA or ALL");
  cmd->add_option("--max-power", c.max_power, "largest power (DIFFERENCE) or lambda index (LAMBDA)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--json-out", c.json_out, "also write the report to this file");
  cmd->add_option("--svg-out", c.svg_out, "write a staircase picture (monomial inputs)");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

template <class K>
json ideal_multiplicity(const std::string& gens, const Common& c) {
  std::vector<Polynomial<K>> g;
  for (const auto& p : parse_poly_list(gens)) g.push_back(convert<K>(p));
  Ideal<K> a(g);
  const Route route = c.route.empty() ? Route::All : parse_route(upper(c.route));
  if (route == Route::Lambda) throw Error(ErrorCode::InvalidArgument, "the LAMBDA route applies to modules");
  const auto rep = multiplicity(a, route, c.sampler(), c.max_power.value_or(kMaxDifferencePower));
  if (!c.svg_out.empty()) {
    auto m = as_monomial(a);
    if (!m) throw Error(ErrorCode::NonMonomial, "--svg-out needs a monomial ideal");
    write_file(c.svg_out, staircase_svg(*m));
  }
  json out{{"e", exact(static_cast<long long>(rep.value))}, {"method", route_name(route)}, {"consistent", rep.consistent}};
  if (!rep.consistent) {
    json routes;
    for (const auto& [r, v] : rep.routes) routes[std::string(route_name(r))] = exact(static_cast<long long>(v));
    out["routes"] = routes;
    throw Mismatch{out};
  }
  return out;
}

template <class K>
json module_br(const std::string& text, const Common& c) {
  json rows;
  try {
    rows = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Syntax, std::string("matrix is not JSON: ") + e.what());
  }
  if (!rows.is_array() || rows.empty()) throw Error(ErrorCode::InvalidArgument, "matrix must be a list of rows");
  std::vector<std::vector<Polynomial<K>>> entries;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorCode::InvalidArgument, "matrix must be a list of rows");
    entries.emplace_back();
    for (const auto& cell : row) {
      if (!cell.is_string()) throw Error(ErrorCode::InvalidArgument, "matrix entries must be strings");
      entries.back().push_back(parse<K>(cell.get<std::string>()));
    }
  }
  ModulePresentation<K> m{PolyMatrix<K>(entries)};
  const Route route = c.route.empty() ? Route::Reduction : parse_route(upper(c.route));
  const auto rep = buchsbaum_rim(m, route, c.sampler(), c.max_power.value_or(kMaxLambdaN));
  json out{{"br", exact(static_cast<long long>(rep.value))}};
  if (route == Route::All) {
    out["consistent"] = rep.consistent;
    if (!rep.consistent) throw Mismatch{out};
  }
  return out;
}

template <class K>
json jones_instance(const std::vector<int>& p, const Common& c) {
  if (p.size() != 6) throw Error(ErrorCode::InvalidArgument, "--params takes s,t,i,j,d,e");
  const JonesInstance in{p[0], p[1], p[2], p[3], p[4], p[5]};
  const auto rep = jones_br<K>(in, c.sampler());
  if (!c.svg_out.empty()) write_file(c.svg_out, staircase_svg(in.ideal_j(), StaircaseAnnotation{in}));
  json out{{"case", jones_case_name(rep.label)}, {"e_J", rep.e_j},   {"e_I", rep.e_i},
           {"br", rep.br},                      {"via", rep.via},    {"dark2", rep.dark2},
           {"light2", rep.light2},              {"delta", rep.delta}, {"consistent", rep.consistent}};
  if (rep.area_mismatch) out["error"] = "AREA_MISMATCH";
  if (!rep.consistent) throw Mismatch{out};
  return out;
}

void emit(const json& out, const Common& c) {
  const std::string text = out.dump();
  std::cout << text << "\n";
  if (!c.json_out.empty()) write_file(c.json_out, text + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Samuel and Buchsbaum-Rim multiplicities over k[x,y] localized at the origin", "mult"};
  app.require_subcommand(1);
  Common common;

  std::string gens;
  auto* e = app.add_subcommand("e", "multiplicity of an m-primary ideal");
  e->add_option("--gens", gens, "comma-separated generators, e.g. \"x^2, x*y, y^2\"")->required();
  add_common(e, common);

  std::string matrix;
  auto* br = app.add_subcommand("br", "Buchsbaum-Rim multiplicity of the column span of a matrix");
  br->add_option("--matrix", matrix, "JSON list of rows of polynomial strings")->required();
  add_common(br, common);

  std::vector<int> params;
  auto* jones = app.add_subcommand("jones", "the staircase family: case, br and the area formulas");
  jones->add_option("--params", params, "s,t,i,j,d,e")->delimiter(',')->required();
  add_common(jones, common);

  std::string suite;
  SuiteOptions opt;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "rankone, shortformula, ingclosed, thmallrank, jones or counterexample")
      ->required()
      ->check(CLI::IsMember({"rankone", "shortformula", "ingclosed", "thmallrank", "jones", "counterexample"}));
  verify->add_option("--count", opt.count, "number of random cases")->check(CLI::NonNegativeNumber);
  verify->add_option("--max", opt.max, "parameter cap for the jones sweep")->check(CLI::PositiveNumber);
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    const bool q = parse_field(common.field) == FieldKind::Q;
    json out;
    if (*e) {
      out = q ? ideal_multiplicity<Rational>(gens, common) : ideal_multiplicity<Fp>(gens, common);
    } else if (*br) {
      out = q ? module_br<Rational>(matrix, common) : module_br<Fp>(matrix, common);
    } else if (*jones) {
      out = q ? jones_instance<Rational>(params, common) : jones_instance<Fp>(params, common);
    } else {
      opt.field = parse_field(common.field);
      opt.seed = common.seed;
      opt.trials = common.trials;
      out = run_suite(suite, opt);
      if (suite == "jones" && !common.svg_out.empty()) {
        const JonesInstance in{2, 3, 1, 2, 1, 0};
        write_file(common.svg_out, staircase_svg(in.ideal_j(), StaircaseAnnotation{in}));
      }
      if (suite == "counterexample" && !common.svg_out.empty())
        write_file(common.svg_out, staircase_svg(MonomialIdeal{{36, 0}, {25, 4}, {8, 18}, {0, 24}}));
      emit(out, common);
      return out["fail"].get<int>() == 0 ? 0 : 2;
    }
    emit(out, common);
    return 0;
  } catch (const Mismatch& m) {
    emit(m.report, common);
    return 2;
  } catch (const Error& err) {
    json out{{"error", error_code_name(err.code())}, {"message", err.what()}};
    std::cerr << out.dump() << "\n";
    return 1;
  }
}
