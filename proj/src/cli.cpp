#include "feqlab/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "feqlab/characters.hpp"
#include "feqlab/json_io.hpp"
#include "feqlab/kernels.hpp"
#include "feqlab/solutions.hpp"
#include "feqlab/stability.hpp"

namespace feqlab::cli {

namespace {

using io::Json;

struct Options {
  std::string semigroup_path;
  std::string morphism_path;
  std::string measure_path;
  std::string demo;
  std::string catalog;
  std::string sigma;
  std::vector<std::string> atoms;
  std::string function_path;
  std::string eq;
  double delta = 0.0;
  std::size_t samples = 1000;
  std::optional<std::uint64_t> seed;
  double step = 0.1;
  std::size_t max_iters = 2000;
  bool falsify = false;
  bool include_zero = false;
  bool list = false;
  std::string output;
  Tolerances tol;
};

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorCode::BadParams, "bad " + what + " '" + text + "'");
  return v;
}

// "z", "z:re" or "z:re:im"
Atom parse_atom(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() > 3) throw Error(ErrorCode::BadParams, "bad measure atom '" + spec + "'");
  const double z = parse_double(parts[0], "atom element");
  if (z < 0 || z != static_cast<double>(static_cast<Element>(z)))
    throw Error(ErrorCode::AtomOutOfRange, "bad atom element '" + parts[0] + "'");
  const double re = parts.size() > 1 ? parse_double(parts[1], "atom weight") : 1.0;
  const double im = parts.size() > 2 ? parse_double(parts[2], "atom weight") : 0.0;
  return {static_cast<Element>(z), {re, im}};
}

Setup base_setup(const Options& o) {
  const int sources = !o.demo.empty() + !o.catalog.empty() + !o.semigroup_path.empty();
  if (sources != 1)
    throw Error(ErrorCode::BadConfig, "give exactly one of --demo, --catalog, --semigroup");

  if (!o.demo.empty()) {
    const Demo& demo = find_demo(o.demo);
    Setup st = realize(demo);
    if (!o.sigma.empty()) st.sigma = build_standard_from_spec(demo.catalog).morphism(o.sigma);
    return st;
  }
  if (!o.catalog.empty()) {
    const auto entry = build_standard_from_spec(o.catalog);
    return {"catalog:" + o.catalog, entry.semigroup, entry.morphism(o.sigma.empty() ? "id" : o.sigma),
            std::nullopt};
  }
  auto s = io::semigroup_from_json(io::load_file(o.semigroup_path));
  auto sigma = o.morphism_path.empty() ? identity_morphism(s)
                                       : io::morphism_from_json(io::load_file(o.morphism_path), s);
  return {"file:" + o.semigroup_path, std::move(s), std::move(sigma), std::nullopt};
}

Setup resolve(const Options& o, bool need_measure) {
  Setup st = base_setup(o);
  if (!o.measure_path.empty() && !o.atoms.empty())
    throw Error(ErrorCode::BadConfig, "give --measure or --measure-atom, not both");
  if (!o.measure_path.empty())
    st.measure = io::measure_from_json(io::load_file(o.measure_path), st.semigroup, o.tol.nonzero);
  if (!o.atoms.empty()) {
    std::vector<Atom> atoms;
    for (const auto& a : o.atoms) atoms.push_back(parse_atom(a));
    st.measure = validate_measure(st.semigroup, atoms, o.tol.nonzero);
  }
  if (need_measure && !st.measure)
    throw Error(ErrorCode::BadConfig, "this command needs a measure (--measure or --measure-atom)");
  return st;
}

Json setup_json(const Setup& st) {
  Json j{{"source", st.source},
         {"semigroup", io::to_json(st.semigroup)},
         {"sigma", io::to_json(st.sigma)}};
  j["measure"] = st.measure ? io::to_json(*st.measure) : Json(nullptr);
  return j;
}

Equation require_eq(const Options& o, std::initializer_list<Equation> allowed) {
  if (o.eq.empty()) throw Error(ErrorCode::BadConfig, "--eq is required");
  const Equation eq = equation_from_string(o.eq);
  if (std::ranges::find(allowed, eq) == allowed.end())
    throw Error(ErrorCode::BadConfig, "--eq " + o.eq + " is not supported by this command");
  return eq;
}

struct Outcome {
  Json body;
  int code = kExitOk;
};

Outcome cmd_validate(const Options& o) {
  const Setup st = resolve(o, false);
  return {{{"valid", true}, {"setup", setup_json(st)}}};
}

Outcome cmd_characters(const Options& o) {
  const Setup st = resolve(o, false);
  const auto chars = enumerate_characters(st.semigroup, {o.include_zero, o.tol.dedup});
  return {{{"setup", setup_json(st)}, {"count", chars.size()}, {"characters", io::to_json(chars)}}};
}

Outcome cmd_solve(const Options& o) {
  const Equation eq = require_eq(o, {Equation::Kannappan, Equation::VanVleck, Equation::Dalembert});
  const Setup st = resolve(o, eq != Equation::Dalembert);
  Json body{{"setup", setup_json(st)}, {"equation", to_string(eq)}};
  if (eq == Equation::Kannappan) {
    body["solutions"] = io::to_json(enumerate_kannappan(st.semigroup, st.sigma, *st.measure, o.tol));
  } else if (eq == Equation::VanVleck) {
    body["solutions"] = io::to_json(enumerate_vanvleck(st.semigroup, st.sigma, *st.measure, o.tol));
  } else {
    const auto d = enumerate_dalembert_abelian(st.semigroup, st.sigma, o.tol);
    body["solutions"] = io::to_json(d);
    if (st.measure) {
      body["class_A"] = io::to_json(filter_class(d, SolutionClass::A, st.semigroup, st.sigma, *st.measure, o.tol));
      body["class_B"] = io::to_json(filter_class(d, SolutionClass::B, st.semigroup, st.sigma, *st.measure, o.tol));
    }
  }
  return {std::move(body)};
}

Json identity_suite(const Setup& st, const SolutionSet& set, Equation eq, const Tolerances& tol,
                    bool& ok) {
  Json out = Json::array();
  for (const auto& m : set.members) {
    const auto rep = eq == Equation::Kannappan
                         ? verify_kannappan_identities(m.values, st.semigroup, st.sigma, *st.measure, tol)
                         : verify_vanvleck_identities(m.values, st.semigroup, st.sigma, *st.measure, tol);
    const bool pass = rep.passes(tol.identity);
    ok = ok && pass;
    Json j = io::to_json(rep);
    j["values"] = io::to_json(m.values);
    j["pass"] = pass;
    out.push_back(std::move(j));
  }
  return out;
}

Outcome cmd_verify(const Options& o) {
  const Setup st = resolve(o, true);
  const auto& s = st.semigroup;
  const auto& mu = *st.measure;
  Json body{{"setup", setup_json(st)}};

  if (!o.function_path.empty()) {
    const Equation eq = require_eq(o, {Equation::Kannappan, Equation::VanVleck, Equation::Dalembert,
                                       Equation::KannappanSigmaId});
    const CFunc f = io::cfunc_from_json(io::load_file(o.function_path));
    const auto d = defect_of(eq, f, s, st.sigma, mu);
    body["function"] = io::to_json(f);
    body["defect"] = io::to_json(d);
    body["solution"] = d.max_defect <= o.tol.identity;
    if (eq == Equation::Kannappan || eq == Equation::VanVleck) {
      try {
        body["diagnostics"] = io::to_json(stability_diagnostics(f, s, st.sigma, mu, eq, o.tol));
      } catch (const Error& e) {
        body["diagnostics"] = {{"skipped", io::to_json(e)}};
      }
    }
    return {std::move(body)};
  }

  const auto k = enumerate_kannappan(s, st.sigma, mu, o.tol);
  const auto v = enumerate_vanvleck(s, st.sigma, mu, o.tol);
  bool ok = true;
  body["bijection_A_K"] = io::to_json(verify_bijection(s, st.sigma, mu, Correspondence::KannappanA, o.tol));
  body["bijection_V_B"] = io::to_json(verify_bijection(s, st.sigma, mu, Correspondence::VanVleckB, o.tol));
  body["kannappan_identities"] = identity_suite(st, k, Equation::Kannappan, o.tol, ok);
  body["vanvleck_identities"] = identity_suite(st, v, Equation::VanVleck, o.tol, ok);
  body["pass"] = ok;
  return {std::move(body), ok ? kExitOk : kExitViolation};
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("FEQLAB_SEED")) {
    std::uint64_t v = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      throw Error(ErrorCode::BadConfig, "FEQLAB_SEED is not an unsigned integer");
    return v;
  }
  return 0;
}

Outcome cmd_stability(const Options& o) {
  StabilityConfig cfg;
  cfg.equation = require_eq(o, {Equation::Kannappan, Equation::VanVleck});
  cfg.delta = o.delta;
  cfg.samples = o.samples;
  cfg.seed = resolve_seed(o);
  cfg.step = o.step;
  cfg.max_iters = o.max_iters;
  cfg.tol = o.tol;
  validate_config(cfg);
  const Setup st = resolve(o, true);

  const auto scan = superstability_scan(st.semigroup, st.sigma, *st.measure, cfg);
  Json body{{"setup", setup_json(st)},
            {"config",
             {{"equation", to_string(cfg.equation)},
              {"delta", cfg.delta},
              {"samples", cfg.samples},
              {"seed", cfg.seed},
              {"step", cfg.step},
              {"max_iters", cfg.max_iters}}},
            {"scan", io::to_json(scan)}};
  bool violated = !scan.violations.empty();
  if (o.falsify) {
    const auto fr = falsify_bound(st.semigroup, st.sigma, *st.measure, cfg);
    body["falsify"] = io::to_json(fr);
    violated = violated || fr.best_supnorm > fr.bound + cfg.tol.identity;
  }
  return {std::move(body), violated ? kExitViolation : kExitOk};
}

Outcome cmd_demo(const Options& o, const std::string& name) {
  if (o.list || name.empty()) {
    Json list = Json::array();
    for (const auto& d : demo_catalog())
      list.push_back({{"name", d.name}, {"description", d.description}, {"catalog", d.catalog},
                      {"sigma", d.morphism}});
    return {{{"demos", std::move(list)}}};
  }
  const Setup st = realize(find_demo(name));
  const auto& s = st.semigroup;
  const auto& mu = *st.measure;

  const auto chars = enumerate_characters(s);
  const auto d = enumerate_dalembert_abelian(s, st.sigma, o.tol);
  const auto k = enumerate_kannappan(s, st.sigma, mu, o.tol);
  const auto v = enumerate_vanvleck(s, st.sigma, mu, o.tol);
  bool ok = true;
  Json body{{"demo", name},
            {"setup", setup_json(st)},
            {"characters", io::to_json(chars)},
            {"dalembert", io::to_json(d)},
            {"class_A", io::to_json(filter_class(d, SolutionClass::A, s, st.sigma, mu, o.tol))},
            {"class_B", io::to_json(filter_class(d, SolutionClass::B, s, st.sigma, mu, o.tol))},
            {"kannappan", io::to_json(k)},
            {"vanvleck", io::to_json(v)},
            {"bijection_A_K", io::to_json(verify_bijection(s, st.sigma, mu, Correspondence::KannappanA, o.tol))},
            {"bijection_V_B", io::to_json(verify_bijection(s, st.sigma, mu, Correspondence::VanVleckB, o.tol))}};
  body["kannappan_identities"] = identity_suite(st, k, Equation::Kannappan, o.tol, ok);
  body["vanvleck_identities"] = identity_suite(st, v, Equation::VanVleck, o.tol, ok);
  body["pass"] = ok;
  return {std::move(body), ok ? kExitOk : kExitViolation};
}

void add_setup_options(CLI::App* sub, Options& o) {
  sub->add_option("--semigroup", o.semigroup_path, "Semigroup JSON file");
  sub->add_option("--morphism", o.morphism_path, "Involutive morphism JSON file (default: identity)");
  sub->add_option("--measure", o.measure_path, "Measure JSON file");
  sub->add_option("--measure-atom", o.atoms, "Measure atom z[:re[:im]], repeatable");
  sub->add_option("--demo", o.demo, "Named demo configuration");
  sub->add_option("--catalog", o.catalog, "Catalog structure, e.g. cyclic:4, product:2,4, sym3");
  sub->add_option("--sigma", o.sigma, "Catalog morphism name (default: id)");
  sub->add_option("--identity-tol", o.tol.identity, "Tolerance for identities")->check(CLI::PositiveNumber);
  sub->add_option("--nonzero-tol", o.tol.nonzero, "Threshold for nonzero conditions")->check(CLI::PositiveNumber);
  sub->add_option("--output,-o", o.output, "Write the report here instead of stdout");
}

void emit(const Json& report, const Options& o, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw Error(ErrorCode::BadConfig, "cannot write " + o.output);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string demo_name;
  CLI::App app{"Finite semigroup workbench for d'Alembert, Kannappan and Van Vleck equations", "feqlab"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Validate a semigroup, involution and measure");
  auto* characters = app.add_subcommand("characters", "Enumerate multiplicative functions");
  characters->add_flag("--include-zero", o.include_zero, "Also list the zero function");
  auto* solve = app.add_subcommand("solve", "Enumerate character-built solutions");
  auto* verify = app.add_subcommand("verify", "Verify bijections and identities, or a given function");
  verify->add_option("--function", o.function_path, "Function JSON ({\"values\": [[re, im], ...]})");
  auto* stability = app.add_subcommand("stability", "Superstability scan");
  stability->add_option("--delta", o.delta, "Defect budget")->check(CLI::NonNegativeNumber);
  stability->add_option("--samples", o.samples, "Number of samples")->check(CLI::PositiveNumber);
  stability->add_option("--seed", o.seed, "Seed (fallback: FEQLAB_SEED)");
  stability->add_option("--step", o.step, "Perturbation scale")->check(CLI::PositiveNumber);
  stability->add_option("--max-iters", o.max_iters, "Hill-climb iterations per start");
  stability->add_flag("--falsify", o.falsify, "Also run the adversarial hill climb");
  auto* demo = app.add_subcommand("demo", "Run the full pipeline on a named demo");
  demo->add_option("name", demo_name, "Demo name");
  demo->add_flag("--list", o.list, "List demos");
  demo->add_option("--output,-o", o.output, "Write the report here instead of stdout");
  demo->add_option("--identity-tol", o.tol.identity, "Tolerance for identities")->check(CLI::PositiveNumber);
  demo->add_option("--nonzero-tol", o.tol.nonzero, "Threshold for nonzero conditions")->check(CLI::PositiveNumber);

  for (auto* sub : {validate, characters, solve, verify, stability}) add_setup_options(sub, o);
  for (auto* sub : {solve, verify, stability}) sub->add_option("--eq", o.eq, "Equation tag");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return kExitOk;
    // Usage errors still produce a report so scripts can rely on one JSON document.
    Json report{{"schema_version", kSchemaVersion},
                {"command", args.empty() ? "" : args.front()},
                {"error", io::to_json(Error(ErrorCode::BadConfig, e.what()))},
                {"exit_code", kExitInput}};
    out << report.dump(2) << "\n";
    return kExitInput;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  Json report{{"schema_version", kSchemaVersion}, {"command", command}};
  try {
    Outcome r;
    if (command == "validate") r = cmd_validate(o);
    else if (command == "characters") r = cmd_characters(o);
    else if (command == "solve") r = cmd_solve(o);
    else if (command == "verify") r = cmd_verify(o);
    else if (command == "stability") r = cmd_stability(o);
    else r = cmd_demo(o, demo_name);
    report["kernel"] = std::string(kernels::to_string(kernels::active().isa));
    report.update(r.body);
    report["exit_code"] = r.code;
    emit(report, o, out);
    return r.code;
  } catch (const Error& e) {
    const int code = is_math_violation(e.code()) ? kExitViolation : kExitInput;
    report["error"] = io::to_json(e);
    report["exit_code"] = code;
    err << "feqlab: " << to_string(e.code()) << ": " << e.what() << "\n";
    try {
      emit(report, o, out);
    } catch (const Error&) {
      out << report.dump(2) << "\n";
    }
    return code;
  } catch (const std::exception& e) {
    err << "feqlab: " << e.what() << "\n";
    report["error"] = {{"code", "Internal"}, {"message", e.what()}};
    report["exit_code"] = kExitInput;
    out << report.dump(2) << "\n";
    return kExitInput;
  }
}

}  // namespace feqlab::cli
