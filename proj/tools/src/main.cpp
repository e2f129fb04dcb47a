#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "weave/errors.hpp"
#include "weave_cli/cli.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kEngine = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of contact PDEs and codimension-one webs"};
  app.set_version_flag("--version", "weave 0.1.0");

  std::string command;
  std::string file;
  std::string chart;
  std::string format = "json";
  app.add_option("command", command, "Analysis to run")->required()->check(CLI::IsMember(weave::cli::commands()));
  app.add_option("file", file, "Input JSON document")->required()->check(CLI::ExistingFile);
  app.add_option("--chart", chart, "Restrict to chart i,j (default: all standard charts)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    weave::cli::Options options;
    options.format = format == "text" ? weave::cli::Format::Text : weave::cli::Format::Json;
    if (!chart.empty()) options.chart = weave::cli::parse_chart(chart);
    if (const char* cap = std::getenv("WEAVE_PAIR_CAP")) {
      try {
        const long long v = std::stoll(cap);
        if (v <= 0) throw std::out_of_range("cap");
        options.ideal.pair_cap = static_cast<std::size_t>(v);
      } catch (const std::logic_error&) {
        throw weave::UsageError("WEAVE_PAIR_CAP must be a positive integer");
      }
    }
    const auto doc = weave::cli::parse_input(file);
    std::cout << weave::cli::render(weave::cli::run(command, doc, options), options.format);
    return kOk;
  } catch (const weave::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const weave::CapExceeded& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kEngine;
  } catch (const weave::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}
