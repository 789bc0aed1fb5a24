#include <disres/cli/run.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Discrete residues, summability and telescoping of rational functions over Q"};
  app.require_subcommand(1);

  disres::cli::CommandRequest req;
  app.add_flag("--json", req.json, "Machine-readable output");
  app.add_option("--var", req.var, "Variable name")->capture_default_str();

  std::optional<unsigned> beta;
  const std::pair<const char*, const char*> docs[] = {
      {"hermite", "Hermite list of f"},
      {"shiftset", "Positive integer shifts l with gcd(b(x), b(x+l)) nontrivial"},
      {"reduce", "Simple reduction with certificate (several inputs: compatible reduction)"},
      {"dres", "Rational system of discrete residues of f"},
      {"dresplus", "Compatible discrete residues of f_1 ... f_n over one B"},
      {"summable", "Summability test with certificate"},
      {"vspace", "Rational vectors v with sum v_i f_i summable"},
      {"telescope", "Operator tuples (L_1..L_n) with sum L_i(f_i) summable"},
      {"galois-diag", "Relation lattices of a diagonal difference system with entries r_i"},
  };
  for (const auto& [name, doc] : docs) {
    auto* sub = app.add_subcommand(name, doc);
    sub->fallthrough();
    sub->add_option("expr", req.inputs, "Input expressions")->required();
    if (std::string_view(name) == "telescope") {
      sub->add_option("--beta", beta, "Uniform order bound; omit for the generator set");
    }
    if (std::string_view(name) == "galois-diag") {
      sub->add_option("--trial-division-bound", req.trial_division_bound, "Largest trial divisor")
          ->capture_default_str();
    }
    sub->callback([&req, sub] { req.command = sub->get_name(); });
  }

  CLI11_PARSE(app, argc, argv);
  req.beta = beta;

  const auto result = disres::cli::run(req);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
