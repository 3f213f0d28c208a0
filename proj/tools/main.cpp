#include "commands.hpp"

#include "apolar/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace apolar;

int main(int argc, char** argv) {
  CLI::App app{"Multigraded apolarity on P1xP1 and F1"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::Options opts;
  std::string out_path;
  bool no_timings = false;
  bool serial = false;
  app.add_option("--seed", opts.seed, "master seed")->capture_default_str();
  app.add_option("--tol-rank", opts.tol_rank, "relative rank threshold")->capture_default_str();
  app.add_option("--tol-res", opts.tol_res, "residual threshold for floating apolarity")->capture_default_str();
  app.add_option("--restarts", opts.restarts, "multistart budget")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--samples", opts.samples, "number of samples (pipelines)");
  app.add_option("--seeds", opts.seeds, "Terracini seeds (rank)")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_flag("--no-timings", no_timings, "omit wall-clock times from the report");
  app.add_flag("--serial", serial, "run every kernel on the serial schedule");

  std::string surface, degree, form_file, scheme_file;
  auto* dims = app.add_subcommand("dims", "dimension table of T_B for B <= A");
  auto* profile = app.add_subcommand("profile", "orthogonal components of a seeded random form");
  auto* rank = app.add_subcommand("rank", "generic rank by Terracini's lemma");
  for (auto* sub : {dims, profile, rank}) {
    sub->add_option("surface", surface, "p1xp1 or f1")->required();
    sub->add_option("degree", degree, "a,b")->required();
  }
  auto* case22 = app.add_subcommand("case22", "bidegree (2,2) pipeline");
  auto* case33 = app.add_subcommand("case33", "bidegree (3,3) pipeline");
  auto* casef1 = app.add_subcommand("casef1", "class 3E+6F pipeline on F1");
  auto* check = app.add_subcommand("check", "apolarity of a scheme to a form");
  check->add_option("form", form_file, "form JSON")->required()->check(CLI::ExistingFile);
  check->add_option("scheme", scheme_file, "scheme JSON")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  if (serial) opts.schedule = Schedule::Serial;

  cli::Report report("", opts);
  try {
    if (dims->parsed()) report = cli::cmd_dims(surface, cli::parse_degree(degree), opts);
    if (profile->parsed()) report = cli::cmd_profile(surface, cli::parse_degree(degree), opts);
    if (rank->parsed()) report = cli::cmd_rank(surface, cli::parse_degree(degree), opts);
    if (case22->parsed()) report = cli::cmd_case22(opts);
    if (case33->parsed()) report = cli::cmd_case33(opts);
    if (casef1->parsed()) report = cli::cmd_casef1(opts);
    if (check->parsed()) report = cli::cmd_check(read_text_file(form_file), read_text_file(scheme_file), opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = report.to_json(!no_timings).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
    for (const auto& c : report.checks()) std::cout << cli::to_string(c.status) << "  " << c.name << "\n";
  }
  return report.exit_code();
}
