#include <iostream>

#include <CLI11.hpp>

#include "bcspline/app.hpp"

using namespace bcspline;

int main(int argc, char** argv) {
  CLI::App app{"Degree-one splines, characters and Frobenius images for type B/C Hessenberg spaces"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string type, format = "text", level = "formula";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Lie type, B or C (both when omitted, where meaningful)");
    sub->add_option("--n", cfg.n, "Rank")->required();
    sub->add_option("--format", format, "text, json or tsv");
  };
  auto hessenberg_input = [&](CLI::App* sub) {
    sub->add_option("--tset", cfg.tset, "t-set such as \"t1,t4\" or \"{}\"");
    sub->add_option("--ideal", cfg.ideal, "ideal generators such as \"[100];[011]\"");
  };
  auto levels = [&](CLI::App* sub) {
    sub->add_option("--level", level, "formula or full");
    sub->add_option("--jobs", cfg.jobs, "Worker threads");
  };

  auto* table = app.add_subcommand("table", "One row per realizable t-set");
  common(table);
  levels(table);
  table->add_flag("--by-ideal", cfg.by_ideal, "One row per ideal instead");

  auto* chr = app.add_subcommand("char", "Characters of one Hessenberg space");
  common(chr);
  levels(chr);
  hessenberg_input(chr);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  common(verify);
  levels(verify);
  verify->add_option("--tset", cfg.tset, "Restrict descent samples to one t-set");

  auto* dump = app.add_subcommand("dump", "Print a family spline");
  common(dump);
  hessenberg_input(dump);
  dump->add_option("--family", cfg.family, "t, r, f, y, g or h")->required();
  dump->add_option("--i", cfg.i, "Family index");
  dump->add_option("--k", cfg.k, "Second index for y");
  dump->add_option("--set", cfg.set, "Subset for f, such as \"2,-1\"");
  dump->add_option("--act", cfg.act, "Window of w; prints w . spline");
  dump->add_flag("--expand", cfg.expand, "Also print coefficients in a basis of M_H^1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!type.empty()) cfg.type = parse_lie_type(type);
    cfg.format = parse_format(format);
    cfg.level = parse_level(level);
    const auto res = run(cfg);
    std::cout << res.output;
    return res.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
