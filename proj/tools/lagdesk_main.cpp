#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lagdesk/harness.hpp"
#include "lagdesk/propsuite.hpp"

namespace {

using lagdesk::ErrorCode;
using ojson = nlohmann::ordered_json;

// 0 on success; all input problems map to exit code 2.
int emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output);
  if (!out) {
    std::cerr << "cannot write " << output << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int emit_report(const lagdesk::Report& rep, const std::string& format,
                const std::string& output) {
  int rc = emit(format == "machine" ? rep.render_machine() : rep.render_table(), output);
  if (rc != 0) return rc;
  return rep.pass ? 0 : 1;
}

void add_io_flags(CLI::App* sub, std::string& format, std::string& output) {
  sub->add_option("--format", format, "table or machine")
      ->check(CLI::IsMember({"table", "machine"}));
  sub->add_option("--output", output, "write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clean Lagrangian intersection inequality verifier"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string output;
  std::function<int()> action;

  // verify <scenario-file> [--window a b]
  auto* verify = app.add_subcommand("verify", "run the inequality checks of a scenario file");
  std::string scenario_path;
  std::vector<std::string> window_override;
  verify->add_option("scenario", scenario_path, "scenario JSON file")->required();
  verify->add_option("--window", window_override, "override the scenario windows with [a, b)")
      ->expected(2);
  add_io_flags(verify, format, output);
  verify->callback([&] {
    action = [&]() -> int {
      lagdesk::Scenario sc = lagdesk::load_scenario(scenario_path);
      if (!window_override.empty()) {
        lagdesk::Window w{lagdesk::parse_ratx(window_override[0]),
                          lagdesk::parse_ratx(window_override[1])};
        lagdesk::require(w.a < w.b, ErrorCode::BadWindow, "window needs a < b");
        sc.windows = {w};
      }
      return emit_report(lagdesk::verify_clean(sc), format, output);
    };
  });

  // appendix-a one|two
  auto* appendix = app.add_subcommand("appendix-a", "flat-component model computations");
  std::string which;
  appendix->add_option("example", which, "one or two")
      ->required()
      ->check(CLI::IsMember({"one", "two"}));
  add_io_flags(appendix, format, output);
  appendix->callback([&] {
    action = [&]() -> int {
      auto ex = which == "one" ? lagdesk::AppendixExample::one : lagdesk::AppendixExample::two;
      return emit_report(lagdesk::verify_appendix_a(ex), format, output);
    };
  });

  // tau <frames-file>
  auto* tau = app.add_subcommand("tau", "inertia index of three Lagrangian frames");
  std::string frames_path;
  tau->add_option("frames", frames_path, "frames JSON file")->required();
  add_io_flags(tau, format, output);
  tau->callback([&] {
    action = [&]() -> int {
      lagdesk::FrameTriple t = lagdesk::load_frames(frames_path);
      long value = lagdesk::inertia_index(t.frames[0], t.frames[1], t.frames[2]);
      if (format == "machine") {
        ojson o;
        o["format_version"] = 1;
        o["kind"] = "tau";
        o["value"] = value;
        return emit(o.dump(2) + "\n", output);
      }
      return emit("tau " + std::to_string(value) + "\n", output);
    };
  });

  // maslov <path-file>
  auto* maslov = app.add_subcommand("maslov", "index of a lift pair (second defaults constant)");
  std::string paths_path;
  maslov->add_option("paths", paths_path, "path-lift JSON file")->required();
  add_io_flags(maslov, format, output);
  maslov->callback([&] {
    action = [&]() -> int {
      lagdesk::PathPair p = lagdesk::load_paths(paths_path);
      lagdesk::PathLift second =
          p.lifts.size() > 1 ? p.lifts[1] : lagdesk::PathLift::constant(p.space);
      lagdesk::Rat value = lagdesk::maslov_index(p.lifts[0], second);
      if (format == "machine") {
        ojson o;
        o["format_version"] = 1;
        o["kind"] = "maslov";
        o["value"] = lagdesk::rat_str(value);
        return emit(o.dump(2) + "\n", output);
      }
      return emit("maslov " + lagdesk::rat_str(value) + "\n", output);
    };
  });

  // barcode <complex-file> <function-file>
  auto* barcode = app.add_subcommand("barcode", "sublevel persistence of a PL function");
  std::string complex_path, fn_path;
  barcode->add_option("complex", complex_path, "complex JSON file")->required();
  barcode->add_option("function", fn_path, "function JSON file")->required();
  add_io_flags(barcode, format, output);
  barcode->callback([&] {
    action = [&]() -> int {
      lagdesk::CellComplex M = lagdesk::load_complex(complex_path);
      lagdesk::PLFunction phi = lagdesk::load_plfunction(fn_path, M);
      lagdesk::Barcode code = lagdesk::barcode_all(M, phi);
      std::vector<lagdesk::Bar> bars = code.bars;
      std::sort(bars.begin(), bars.end(), [](const lagdesk::Bar& x, const lagdesk::Bar& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        if (x.birth != y.birth) return x.birth < y.birth;
        return x.death < y.death;
      });
      if (format == "machine") {
        ojson o;
        o["format_version"] = 1;
        o["kind"] = "barcode";
        ojson arr = ojson::array();
        for (const auto& b : bars) {
          ojson j;
          j["k"] = b.degree;
          j["birth"] = lagdesk::rat_str(b.birth);
          j["death"] = lagdesk::ratx_str(b.death);
          arr.push_back(std::move(j));
        }
        o["bars"] = std::move(arr);
        return emit(o.dump(2) + "\n", output);
      }
      std::string text;
      for (const auto& b : bars) {
        text += "bar k=" + std::to_string(b.degree) + " [" + lagdesk::rat_str(b.birth) + ", " +
                lagdesk::ratx_str(b.death) + ")\n";
      }
      if (bars.empty()) text = "no bars\n";
      return emit(text, output);
    };
  });

  // suite --seed N
  auto* suite = app.add_subcommand("suite", "run the randomized invariant suites");
  uint64_t seed = 0;
  long trials = 24;
  suite->add_option("--seed", seed, "base seed")->required();
  suite->add_option("--trials", trials, "trials per suite");
  add_io_flags(suite, format, output);
  suite->callback([&] {
    action = [&]() -> int {
      lagdesk::PropSizes sizes;
      sizes.trials = trials;
      lagdesk::PropReport rep = lagdesk::run_property_suites(seed, sizes);
      int rc =
          emit(format == "machine" ? rep.render_machine() : rep.render_table(), output);
      if (rc != 0) return rc;
      return rep.all_pass() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const lagdesk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}
