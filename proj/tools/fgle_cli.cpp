// Command-line front end: fgle <simulate|convergence|decay|inviscid|verify> --config <path> --out <dir>

#include <iostream>

#include <CLI11.hpp>

#include "fgle/config.hpp"
#include "fgle/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fractional Ginzburg-Landau solver (WSGD in space, implicit midpoint in time)"};
  app.require_subcommand(1);

  std::string config_path;
  fgle::CommandOptions opts;
  for (const char* name : {"simulate", "convergence", "decay", "inviscid", "verify"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "INI run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out_dir, "output directory (overrides run.output_dir)");
    sub->add_flag("--full-reference", opts.full_reference, "use the h=0.0125, tau=0.0001 fine reference");
  }
  CLI11_PARSE(app, argc, argv);

  try {
    auto config = fgle::load_config(config_path);
    config.mode = fgle::parse_mode(app.get_subcommands().front()->get_name());
    return fgle::run_command(config, opts, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
