#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mtl/driver.hpp"
#include "mtl/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Growth, peripheral structures and suspensions for free group automorphisms"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir;
  mtl::RunOptions options;
  for (const char* name : {"growth", "peripheral", "suspend", "verify"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "job description")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory")->required();
    sub->add_flag("--json", options.json, "also write JSON reports");
    sub->add_flag("--dot", options.dot, "also write DOT graphs of the structure");
  }
  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    std::ifstream in(config_path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const mtl::JobConfig config = mtl::parse_config(buf.str());
    const mtl::RunResult result = mtl::run_command(command, config, options);
    mtl::write_outputs(out_dir, result);
    std::cout << result.summary;
    return result.status;
  } catch (const mtl::ParseError& e) {
    std::cerr << config_path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mtl " << command << ": " << e.what() << "\n";
    return 2;
  }
}
