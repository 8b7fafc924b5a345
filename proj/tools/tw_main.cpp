#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tw/io.hpp"
#include "tw/pipeline.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int emit(const tw::CommandResult& r, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << r.report;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "tw: cannot write " << out_path << "\n";
      return tw::kExitInput;
    }
    out << r.report;
  }
  if (r.exit_code != tw::kExitOk) std::cerr << "tw: exit " << r.exit_code << "\n";
  return r.exit_code;
}

int run(int argc, char** argv) {
  CLI::App app{"Trisection workbench"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  app.add_option("--config", config, "Input JSON (schema tw/1)");
  app.add_option("--out", out, "Write the report here instead of stdout");
  app.add_option("--tol", tol, "Residual tolerance override")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for sampled point sets");

  auto* stein = app.add_subcommand("stein-b4", "Stein B^4 pipeline: pleat, certify, pull back");
  std::vector<int> n;
  stein->add_option("-n,--stabilizations", n, "n1 n2 n3 (overrides the config)")->expected(3);

  auto* verify = app.add_subcommand("verify", "Run one module check on an input file");
  std::string sub;
  verify->add_option("check", sub, "params | diagram-h1 | bridge | cover | geometry | cusp | psh | reconstruct")
      ->required();
  verify->add_option("input", config, "Input JSON (same as --config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tw::kExitInput;
  }

  std::string text;
  if (!config.empty() && !read_file(config, text)) {
    return emit(tw::input_error(stein->parsed() ? "stein-b4" : "verify " + sub, config,
                                "cannot read input file"),
                out);
  }

  if (stein->parsed()) {
    tw::PipelineConfig cfg;
    try {
      if (!text.empty()) cfg = tw::parse_pipeline_config(text);
    } catch (const tw::SchemaError& e) {
      return emit(tw::input_error("stein-b4", e.location(), e.message()), out);
    }
    if (!n.empty()) cfg.n = {n[0], n[1], n[2]};
    if (tol) cfg.tol.residual = *tol;
    return emit(tw::run_stein_b4(cfg), out);
  }

  tw::VerifyOptions opts;
  opts.tol = tol;
  opts.seed = seed;
  return emit(tw::run_verify(sub, text, opts), out);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "tw: " << e.what() << "\n";
    return tw::kExitAssertion;
  }
}
