// `tsg <command> [options]`: every library operation as a subcommand with
// JSON on stdout. Exit codes: 0 ok, 1 domain error, 2 usage, 3 verification
// failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "tsg/cli.hpp"

namespace {

int emit(const tsg::cli::CommandOutcome &out) {
  std::cout << out.body.dump() << '\n';
  if (out.exit_code != tsg::cli::kExitOk)
    std::cerr << "tsg: " << out.body["error"]["message"].get<std::string>() << '\n';
  return out.exit_code;
}

int usage_error(const std::string &message) {
  return emit({tsg::cli::kExitUsage, tsg::error_to_json("usage", message, std::nullopt)});
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Symmetry groups of knotted graph embeddings"};
  app.require_subcommand(1);
  long long seed = 1;
  app.add_option("--seed", seed, "seed for random-instance (other commands ignore it)");

  struct Bound {
    CLI::App *sub;
    std::map<std::string, std::string> values;
    std::string input;
  };
  std::map<std::string, Bound> bound;
  for (const auto &spec : tsg::cli::command_specs()) {
    auto &b = bound[spec.name];
    b.sub = app.add_subcommand(spec.name, spec.help);
    for (const auto &opt : spec.options)
      b.sub->add_option("--" + opt.name, b.values[opt.name], opt.help + (opt.required ? " (required)" : ""));
    b.sub->add_option("--input", b.input, "JSON object of option values; a file path or '-' for stdin");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return usage_error(e.what());
  }

  for (auto &[name, b] : bound) {
    if (!b.sub->parsed())
      continue;
    tsg::json args = tsg::json::object();
    if (!b.input.empty()) {
      std::string text;
      if (b.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(b.input);
        if (!in)
          return usage_error("cannot read input file " + b.input);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      try {
        args = tsg::json::parse(text);
      } catch (const tsg::json::parse_error &e) {
        return usage_error(std::string("input is not JSON: ") + e.what());
      }
      // refine accepts a bare embedding document as its input
      if (name == "refine" && args.is_object() && !args.contains("embedding"))
        args = tsg::json{{"embedding", args}};
    }
    for (const auto &[key, value] : b.values)
      if (b.sub->count("--" + key) > 0)
        args[key] = value;
    if (app.count("--seed") > 0 && name == "random-instance")
      args["seed"] = seed;
    return emit(tsg::cli::run_command(name, args));
  }
  return usage_error("no command given");
}
