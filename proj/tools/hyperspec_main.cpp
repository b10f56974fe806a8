// hyperspec: exact spectra, multiplicities and eigenvarieties of uniform
// hypergraph tensors.
//
// Exit codes: 0 success, 1 failed check or runtime error, 2 usage or input
// error, 3 refused by the Macaulay size guard or an enumeration cap.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperspec/hypergraph_io.hpp"
#include "hyperspec/report_json.hpp"

namespace hs = hyperspec;

namespace {

enum Exit { ok = 0, failure = 1, usage = 2, guard = 3 };

struct Config {
  std::size_t guard = hs::default_monomial_cap;
  double tol = 1e-12;
  std::uint64_t enum_cap = hs::default_enumeration_cap;
  std::string format = "text";
  bool timings = false;
};

struct Input {
  std::string path;
  std::vector<std::string> family;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path, "Hypergraph JSON file");
    cmd->add_option("--family", family, "Generated family, e.g. --family hypertree k=3 m=2")->expected(1, -1);
  }

  std::optional<hs::FamilyDescriptor> descriptor() const {
    if (family.empty()) return std::nullopt;
    return hs::parse_family(family);
  }

  std::pair<hs::Hypergraph, std::string> load() const {
    if (!family.empty()) {
      auto d = hs::parse_family(family);
      return {hs::build_family(d), d.to_string()};
    }
    if (path.empty()) throw hs::InputError("no input: pass a hypergraph file or --family");
    return {hs::load_hypergraph(path), path};
  }
};

bool json(const Config& c) { return c.format == "json"; }

void print_json(const hs::Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<hs::Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].get_str();
  return out + "]";
}

int cmd_info(const Config& cfg, const Input& in) {
  auto [h, label] = in.load();
  const bool connected = hs::is_connected(h);
  if (!connected) std::cerr << "warning: hypergraph is disconnected; spectral and eigenvariety commands require connectivity\n";
  if (json(cfg)) {
    print_json(hs::info_json(h));
    return ok;
  }
  std::cout << "k=" << h.uniformity() << " n=" << h.num_vertices() << " m=" << h.num_edges()
            << " connected=" << (connected ? "true" : "false") << '\n';
  std::cout << "degrees:";
  for (int d : hs::degrees(h)) std::cout << ' ' << d;
  std::cout << '\n';
  return ok;
}

struct CharpolyArgs {
  std::string op = "adj";
  std::string dump_tensor;
  std::string dump_macaulay;
  std::string dump_macaulay_prime;
};

int cmd_charpoly(const Config& cfg, const Input& in, const CharpolyArgs& args) {
  auto [h, label] = in.load();
  const auto op = hs::parse_operator(args.op);
  const auto tensor = hs::hypergraph_tensor(h, op);
  if (!args.dump_tensor.empty()) {
    std::ofstream out(args.dump_tensor);
    hs::dump_tensor(tensor, out);
  }
  if (!args.dump_macaulay.empty() || !args.dump_macaulay_prime.empty()) {
    auto pair = hs::macaulay_matrices(tensor, cfg.guard);
    if (!args.dump_macaulay.empty()) {
      std::vector<std::size_t> all(pair.basis->size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      std::ofstream out(args.dump_macaulay);
      hs::dump_macaulay_csv(pair.m, *pair.basis, all, out);
    }
    if (!args.dump_macaulay_prime.empty()) {
      std::ofstream out(args.dump_macaulay_prime);
      hs::dump_macaulay_csv(pair.m_prime, *pair.basis, pair.nonreduced, out);
    }
  }
  auto c = hs::tensor_charpoly_detailed(tensor, cfg.guard);
  if (json(cfg)) {
    auto j = hs::charpoly_json(c, op);
    j = hs::Json{{"instance", label}, {"charpoly", j}};
    print_json(j);
    return ok;
  }
  std::cout << "operator=" << hs::to_string(op) << " basis=" << c.basis_size << " degree=" << c.phi.degree()
            << " trailing_zeros=" << c.phi.trailing_zeros() << '\n';
  const auto& coeffs = c.phi.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (sgn(coeffs[i]) != 0) std::cout << "x^" << i << ": " << coeffs[i].get_str() << '\n';
  return ok;
}

int cmd_multiplicity(const Config& cfg, const Input& in) {
  auto [h, label] = in.load();
  auto rho = hs::am_rho_adjacency_detailed(h, cfg.guard);
  const int am_zero = hs::am_zero_laplacian(h, cfg.guard);
  if (json(cfg)) {
    print_json({{"instance", label},
                {"am_rho", rho.multiplicity},
                {"rho_interval", {hs::rational_text(rho.interval.lo), hs::rational_text(rho.interval.hi)}},
                {"am_zero_laplacian", am_zero}});
    return ok;
  }
  std::cout << std::setprecision(12) << "am_rho=" << rho.multiplicity << " rho in [" << rho.interval.lo.get_d() << ", "
            << rho.interval.hi.get_d() << "] am_zero_laplacian=" << am_zero << '\n';
  return ok;
}

int cmd_eigenvariety(const Config& cfg, const Input& in, bool enumerate) {
  auto [h, label] = in.load();
  auto d = hs::describe(h);
  std::vector<hs::PhaseVector> phases;
  bool certified = true;
  if (enumerate) {
    phases = hs::enumerate_phases(h, cfg.enum_cap);
    for (const auto& c : phases)
      certified = certified && hs::verify_phase(h, c, hs::Operator::adjacency) &&
                  hs::verify_phase(h, c, hs::Operator::laplacian);
  }
  if (json(cfg)) {
    print_json(hs::eigenvariety_json(d, enumerate ? &phases : nullptr));
  } else {
    std::cout << "invariants=" << join(d.divisors) << " r=" << d.rank << " cardinality=" << d.cardinality
              << " group=" << join(d.group) << '\n';
    for (const auto& c : phases) {
      for (std::size_t v = 0; v < c.size(); ++v) std::cout << (v ? " " : "") << c[v];
      std::cout << '\n';
    }
  }
  if (!certified) {
    std::cerr << "error: an enumerated phase vector failed the eigen-equation\n";
    return failure;
  }
  return ok;
}

void print_report_text(const hs::VerificationReport& r) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("skipped"); };
  std::cout << '[' << r.instance << "] k=" << r.k << " n=" << r.n << " m=" << r.m << '\n';
  std::cout << "  am_rho=" << opt(r.am_rho) << " am_zero_laplacian=" << opt(r.am_zero_laplacian)
            << " ev_cardinality=" << r.ev_cardinality << " macaulay_nullity=" << opt(r.macaulay_nullity)
            << " phases=" << opt(r.phase_count);
  if (r.family_oracle) std::cout << " oracle=" << *r.family_oracle;
  std::cout << " all_equal=" << (r.all_equal ? "true" : "false") << '\n';
  for (const auto& s : r.skipped) std::cout << "  skipped: " << s << '\n';
  for (const auto& c : r.checks)
    if (!c.passed) std::cout << "  FAILED " << c.name << ": " << c.detail << '\n';
  for (const auto& [name, seconds] : r.timings) std::cout << "  time " << name << ": " << seconds << " s\n";
}

int cmd_verify(const Config& cfg, const Input& in, bool corpus) {
  hs::VerifyOptions options;
  options.monomial_cap = cfg.guard;
  options.enumeration_cap = cfg.enum_cap;
  options.tol = cfg.tol;
  options.timings = cfg.timings;

  std::vector<hs::VerificationReport> reports;
  std::vector<std::string> errors;
  if (corpus) {
    const auto families = hs::default_corpus();
    reports.resize(families.size());
    errors.resize(families.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < families.size(); ++i) {
      try {
        reports[i] = hs::verify_family(families[i], options);
      } catch (const std::exception& e) {
        reports[i].instance = families[i].to_string();
        errors[i] = e.what();
      }
    }
  } else if (auto d = in.descriptor()) {
    reports.push_back(hs::verify_family(*d, options));
    errors.emplace_back();
  } else {
    auto [h, label] = in.load();
    reports.push_back(hs::verify_main_theorem(h, options, label));
    errors.emplace_back();
  }

  std::size_t passed = 0;
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (errors[i].empty() && reports[i].ok()) ++passed;

  if (json(cfg)) {
    hs::Json out;
    out["reports"] = hs::Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      auto j = hs::report_json(reports[i]);
      if (!errors[i].empty()) j = {{"instance", reports[i].instance}, {"error", errors[i]}, {"ok", false}};
      out["reports"].push_back(std::move(j));
    }
    out["summary"] = {{"instances", reports.size()}, {"passed", passed}};
    print_json(out);
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (!errors[i].empty()) {
        std::cout << '[' << reports[i].instance << "] error: " << errors[i] << '\n';
        continue;
      }
      print_report_text(reports[i]);
    }
    std::cout << passed << '/' << reports.size() << " equalities hold\n";
  }
  return passed == reports.size() ? ok : failure;
}

int cmd_generate(const std::vector<std::string>& tokens, const std::string& output) {
  auto h = hs::build_family(hs::parse_family(tokens));
  if (output.empty()) {
    std::cout << hs::hypergraph_to_json(h) << '\n';
  } else {
    hs::save_hypergraph(h, output);
  }
  return ok;
}

std::size_t default_guard() {
  const char* env = std::getenv("HYPERSPEC_GUARD");
  if (!env) return hs::default_monomial_cap;
  try {
    std::size_t pos = 0;
    long long value = std::stoll(env, &pos);
    if (pos == std::string(env).size() && value > 0) return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
  }
  throw hs::InputError(std::string("HYPERSPEC_GUARD must be a positive integer, got '") + env + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra, multiplicities and eigenvarieties of uniform hypergraph tensors"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  try {
    cfg.guard = default_guard();
  } catch (const hs::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  app.add_option("--guard", cfg.guard, "Maximum Macaulay basis size (env HYPERSPEC_GUARD)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "Perron iteration tolerance")->check(CLI::PositiveNumber);
  app.add_option("--enum-cap", cfg.enum_cap, "Maximum phase enumeration states")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", cfg.timings, "Include wall-clock timings in verify reports");

  Input input;
  CharpolyArgs charpoly_args;
  bool enumerate = false;
  bool corpus = false;
  std::vector<std::string> generate_tokens;
  std::string generate_output;

  auto* info = app.add_subcommand("info", "Print k, n, m, degrees and connectivity");
  input.attach(info);
  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial of A, L or Q");
  input.attach(charpoly);
  charpoly->add_option("--op", charpoly_args.op, "adj, lap or slap")->check(CLI::IsMember({"adj", "lap", "slap"}));
  charpoly->add_option("--dump-tensor", charpoly_args.dump_tensor, "Write the tensor entries to a file");
  charpoly->add_option("--dump-macaulay", charpoly_args.dump_macaulay, "Write M as CSV");
  charpoly->add_option("--dump-macaulay-prime", charpoly_args.dump_macaulay_prime, "Write M' as CSV");
  auto* multiplicity = app.add_subcommand("multiplicity", "am(rho, A) and am(0, L)");
  input.attach(multiplicity);
  auto* eigenvariety = app.add_subcommand("eigenvariety", "Eigenvariety invariants and cardinality");
  input.attach(eigenvariety);
  eigenvariety->add_flag("--enumerate", enumerate, "List and certify every phase vector");
  auto* verify = app.add_subcommand("verify", "Check am(rho, A) = |V_rho| = |V_0(L)| = am(0, L)");
  input.attach(verify);
  verify->add_flag("--corpus", corpus, "Run the built-in corpus");
  auto* generate = app.add_subcommand("generate", "Write a generated family as hypergraph JSON");
  generate->add_option("family", generate_tokens, "Family and parameters, e.g. squid k=3 t=2")->required();
  generate->add_option("-o,--output", generate_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*info) return cmd_info(cfg, input);
    if (*charpoly) return cmd_charpoly(cfg, input, charpoly_args);
    if (*multiplicity) return cmd_multiplicity(cfg, input);
    if (*eigenvariety) return cmd_eigenvariety(cfg, input, enumerate);
    if (*verify) return cmd_verify(cfg, input, corpus);
    if (*generate) return cmd_generate(generate_tokens, generate_output);
  } catch (const hs::GuardExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return guard;
  } catch (const hs::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const hs::DisconnectedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failure;
  }
  return usage;
}
