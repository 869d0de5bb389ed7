// concord: command-line front end for the copula concordance toolkit.
//
// Subcommands: eval, measure, bounds, region, verify, sample. All output is
// deterministic for a fixed argv; human-readable scalars print with 15
// significant digits, machine formats (--json, csv artifacts) keep full
// precision. Exit codes: 0 success, 1 verification failure, 2 usage errors.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "concord/bounds.hpp"
#include "concord/concordance.hpp"
#include "concord/copula_json.hpp"
#include "concord/region.hpp"
#include "concord/sampling.hpp"
#include "concord/verify.hpp"

namespace {

using nlohmann::json;

std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(bool as_json, const std::string& command, const json& data,
          const std::string& human) {
  if (as_json) {
    std::cout << json{{"command", command}, {"ok", true}, {"data", data}}.dump() << "\n";
  } else {
    std::cout << human;
  }
}

int emit_error(bool as_json, const std::string& command, const concord::CopulaError& e) {
  if (as_json) {
    std::cout << json{{"command", command},
                      {"ok", false},
                      {"error", {{"code", concord::errc_name(e.code())}, {"message", e.what()}}}}
                     .dump()
              << "\n";
  } else {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"copula concordance toolkit: shuffles of M, concordance measures, "
               "extremal beta-bound copulas, attainable-region exports"};
  app.require_subcommand(1);
  app.fallthrough();  // parent flags (--json) may follow subcommand options
  bool as_json = false;
  app.add_flag("--json", as_json, "wrap output in a JSON envelope");

  std::string copula_path, kind_name, format = "csv", out_path;
  double u = 0.0, v = 0.0, t = 0.0, tolerance = 1e-9;
  int resolution = 201, width = 640, height = 480;
  std::int64_t count = 1'000'000;
  std::uint64_t seed = 42;
  bool serial = false;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate C(u,v) for a copula spec file");
  eval_cmd->add_option("--copula", copula_path, "copula spec JSON file")->required();
  eval_cmd->add_option("--u", u, "first argument in [0,1]")->required();
  eval_cmd->add_option("--v", v, "second argument in [0,1]")->required();

  auto* measure_cmd = app.add_subcommand("measure", "compute a measure of concordance");
  measure_cmd->add_option("--kind", kind_name, "beta|rho|tau|footrule|gamma")->required();
  measure_cmd->add_option("--copula", copula_path, "copula spec JSON file")->required();

  auto* bounds_cmd =
      app.add_subcommand("bounds", "extremal copulas and envelope values at a given beta");
  bounds_cmd->add_option("--t", t, "beta value in [-1,1]")->required();
  bounds_cmd->add_option("--measure", kind_name, "restrict envelope output to one measure");

  auto* region_cmd = app.add_subcommand("region", "export an attainable-region artifact");
  region_cmd->add_option("--measure", kind_name, "rho|tau|footrule|gamma")->required();
  region_cmd->add_option("--resolution", resolution, "number of t samples (>= 2)");
  region_cmd->add_option("--format", format, "csv|json|svg");
  region_cmd->add_option("--out", out_path, "output file path")->required();
  region_cmd->add_option("--width", width, "svg width (>= 100)");
  region_cmd->add_option("--height", height, "svg height (>= 100)");

  auto* verify_cmd =
      app.add_subcommand("verify", "run the closed-form / integration / Monte Carlo suite");
  verify_cmd->add_option("--tolerance", tolerance, "tolerance for exact comparisons");
  verify_cmd->add_option("--seed", seed, "Monte Carlo seed");
  verify_cmd->add_option("--count", count, "Monte Carlo draws per estimate");
  verify_cmd->add_flag("--serial", serial, "run kernels on one thread");

  auto* sample_cmd = app.add_subcommand("sample", "emit support samples as CSV");
  sample_cmd->add_option("--copula", copula_path, "copula spec JSON file (shuffle-backed)")
      ->required();
  sample_cmd->add_option("--count", count, "number of samples")->required();
  sample_cmd->add_option("--seed", seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*eval_cmd) {
      const concord::CopulaExpr c = concord::load_copula_file(copula_path);
      const double value = c.eval(u, v);
      emit(as_json, command, {{"u", u}, {"v", v}, {"value", value}}, fmt15(value) + "\n");
    } else if (*measure_cmd) {
      const concord::MeasureKind kind = concord::measure_from_name(kind_name);
      const concord::CopulaExpr c = concord::load_copula_file(copula_path);
      const double value = concord::measure(kind, c).value;
      emit(as_json, command, {{"kind", kind_name}, {"value", value}}, fmt15(value) + "\n");
    } else if (*bounds_cmd) {
      auto [lo, up] = concord::beta_bound_copulas(t);
      std::vector<concord::MeasureKind> kinds;
      if (kind_name.empty()) {
        kinds = {concord::MeasureKind::Rho, concord::MeasureKind::Tau,
                 concord::MeasureKind::Footrule, concord::MeasureKind::Gamma};
      } else {
        kinds = {concord::measure_from_name(kind_name)};
      }
      const json jlo = concord::copula_to_json(concord::CopulaExpr::shuffle(lo));
      const json jup = concord::copula_to_json(concord::CopulaExpr::shuffle(up));
      json envelopes = json::object();
      std::string human;
      human += "lower " + jlo.dump() + "\n";
      human += "upper " + jup.dump() + "\n";
      for (concord::MeasureKind k : kinds) {
        const double elo = concord::envelope_value(k, concord::Side::Lower, t);
        const double eup = concord::envelope_value(k, concord::Side::Upper, t);
        envelopes[concord::measure_name(k)] = {{"lower", elo}, {"upper", eup}};
        human += std::string(concord::measure_name(k)) + " [" + fmt15(elo) + ", " + fmt15(eup) +
                 "]\n";
      }
      emit(as_json, command,
           {{"t", t}, {"lower", jlo}, {"upper", jup}, {"envelopes", envelopes}}, human);
    } else if (*region_cmd) {
      const concord::MeasureKind kind = concord::measure_from_name(kind_name);
      concord::write_region_file(kind, resolution, format, out_path, width, height);
      emit(as_json, command,
           {{"measure", kind_name}, {"resolution", resolution}, {"format", format},
            {"path", out_path}},
           "");
    } else if (*verify_cmd) {
      concord::VerifyOptions opts;
      opts.tolerance = tolerance;
      opts.seed = seed;
      opts.mc_count = count;
      opts.exec = serial ? concord::Exec::Serial : concord::Exec::Parallel;
      const auto results = concord::run_verification(opts);
      bool all = true;
      json jr = json::array();
      std::string human;
      for (const auto& r : results) {
        all = all && r.pass;
        char line[256];
        std::snprintf(line, sizeof line, "%s  %2d  %s (worst %.3g)%s%s\n",
                      r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.worst,
                      r.note.empty() ? "" : " -- ", r.note.c_str());
        human += line;
        // Timings go to stderr: stdout stays byte-identical across runs.
        std::fprintf(stderr, "criterion %d: %.2fs\n", r.id, r.seconds);
        jr.push_back({{"id", r.id},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"worst", r.worst},
                      {"note", r.note}});
      }
      human += all ? "all criteria passed\n" : "FAILURES PRESENT\n";
      emit(as_json, command, {{"pass", all}, {"criteria", jr}}, human);
      return all ? 0 : 1;
    } else if (*sample_cmd) {
      const concord::CopulaExpr c = concord::load_copula_file(copula_path);
      if (c.tag() != concord::CopulaExpr::Tag::Shuffle &&
          c.tag() != concord::CopulaExpr::Tag::FrechetUpper &&
          c.tag() != concord::CopulaExpr::Tag::FrechetLower)
        concord::fail(concord::Errc::UnsupportedIntegrator,
                      "sample requires M, W, or a shuffle spec");
      const concord::ShuffleOfM s =
          c.tag() == concord::CopulaExpr::Tag::Shuffle ? c.as_shuffle()
          : c.tag() == concord::CopulaExpr::Tag::FrechetUpper
              ? concord::ShuffleOfM::identity()
              : concord::ShuffleOfM::countermonotone();
      const auto pts = concord::sample_support(s, count, seed);
      if (as_json) {
        json arr = json::array();
        for (const auto& p : pts) arr.push_back({{"u", p.u.value()}, {"v", p.v.value()}});
        emit(true, command, {{"count", count}, {"seed", seed}, {"points", arr}}, "");
      } else {
        std::string out = "u,v\n";
        for (const auto& p : pts)
          out += fmt17(p.u.value()) + "," + fmt17(p.v.value()) + "\n";
        std::cout << out;
      }
    }
  } catch (const concord::CopulaError& e) {
    return emit_error(as_json, command, e);
  }
  return 0;
}
