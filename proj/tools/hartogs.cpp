#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hartogs/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Operator theory on generalized Hartogs triangles"};
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string command;
  app.add_option("command", command, "Sub-command; overrides the config's \"command\" field");
  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Seed for randomized trials");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), hartogs::kExitInput);
  }

  hartogs::RunConfig cfg;
  cfg.command = command;
  cfg.seed = seed;
  cfg.format = format == "csv" ? hartogs::OutputFormat::Csv : hartogs::OutputFormat::Json;
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open config " << config_path << "\n";
    return hartogs::kExitInput;
  }
  try {
    cfg.doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config is not valid JSON: " << e.what() << "\n";
    return hartogs::kExitInput;
  }

  std::ostringstream report;
  const int code = hartogs::run(cfg, report);
  if (out_path.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream out(out_path);
    if (!(out << report.str())) {
      std::cerr << "cannot write " << out_path << "\n";
      return hartogs::kExitInput;
    }
  }
  if (code == hartogs::kExitInput) std::cerr << report.str();
  return code;
}
