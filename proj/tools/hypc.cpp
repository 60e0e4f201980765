#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hypc/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hyperbolic plane queries over JSON"};
  std::string command, in_path = "-", out_path = "-";
  hypc::cli::Options opt;
  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(hypc::cli::command_names()));
  app.add_option("--in", in_path, "Input JSON file, - for stdin");
  app.add_option("--out", out_path, "Output file, - for stdout");
  app.add_option("--seed", opt.seed, "Seed for check-axioms");
  app.add_option("--trials", opt.trials, "Trial count for check-axioms");
  CLI11_PARSE(app, argc, argv);

  std::string input;
  try {
    input = read_input(in_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  const hypc::cli::Result r = hypc::cli::run_command(command, input, opt);
  if (out_path == "-") {
    std::cout << r.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << '\n';
      return 2;
    }
    out << r.output;
  }
  return r.exit_code;
}
