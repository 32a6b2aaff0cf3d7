#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gmanvol/gmanvol.hpp"

namespace gmanvol::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string verb;
  std::vector<std::string> files;
  std::string mode = "characteristic";
  std::int64_t prime = 0;
  std::string center;
  std::int64_t alpha_bound = VolumeConfig{}.alpha_bound;
  bool pretty = false;
  int jobs = 1;
};

struct Outcome {
  int status = 0;
  std::string out;
  std::string err;
};

std::string render(const json& doc, bool pretty) { return pretty ? doc.dump(2) : doc.dump(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    json item = {{"code", v.code}, {"message", v.message}};
    if (!v.where.empty()) item["where"] = v.where;
    arr.push_back(std::move(item));
  }
  return arr;
}

json error_json(const Error& e, const std::string& file) {
  json doc = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"file", file}};
  if (!e.hint().empty()) doc["hint"] = e.hint();
  if (!e.violations().empty()) doc["violations"] = violations_json(e.violations());
  return doc;
}

json invariants_json(const GraphManifold& gm) {
  json pieces = json::array();
  for (const auto& p : gm.pieces) {
    const auto framing = canonical_framing(gm, p.id);
    const auto inv = filled_piece_invariants(gm, p.id, framing);
    json slopes = json::array();
    for (const auto& s : framing) slopes.push_back(json::array({s.a(), s.b()}));
    pieces.push_back({{"id", p.id},
                      {"genus", p.genus},
                      {"boundary", p.boundary},
                      {"base_chi", p.base_euler_characteristic()},
                      {"canonical_framing", std::move(slopes)},
                      {"filled_euler", to_string(euler_number(inv))},
                      {"filled_orbifold_chi", to_string(orbifold_euler_char(inv))},
                      {"filled_geometry", std::string(to_string(geometry_type(inv)))},
                      {"filled_ehn", ehn_horizontal_foliation(inv)}});
  }
  return {{"pieces", std::move(pieces)},
          {"absolute_euler", to_string(absolute_euler_number(gm))},
          {"pm_j_form", is_pm_j_form(gm)}};
}

Outcome run_one(const Options& opt, const std::string& file) {
  Outcome res;
  try {
    const auto text = read_file(file);
    if (opt.verb == "validate") {
      const auto gm = parse_graph_unchecked(text);
      const auto report = validate(gm);
      res.status = report.empty() ? 0 : 1;
      res.out = render({{"valid", report.empty()}, {"violations", violations_json(report)}},
                       opt.pretty);
    } else if (opt.verb == "invariants") {
      res.out = render(invariants_json(parse_graph(text)), opt.pretty);
    } else if (opt.verb == "cover") {
      const auto gm = parse_graph(text);
      const auto cov = opt.mode == "characteristic"
                           ? characteristic_cover(gm, opt.prime)
                           : genus_raising_cover(gm, opt.center, opt.prime);
      res.out = render(covered_graph_to_json(cov), opt.pretty);
    } else if (opt.verb == "volume-bound") {
      const auto cert = volume_lower_bound(parse_graph(text), VolumeConfig{opt.alpha_bound});
      res.out = render(certificate_to_json(cert, opt.pretty), opt.pretty);
    } else if (opt.verb == "classify") {
      const auto desc = description_from_json(parse_json_text(text));
      res.out = render(verdict_to_json(mapping_degree_finiteness(desc)), opt.pretty);
    }
  } catch (const Error& e) {
    res.status = exit_code(e.code());
    res.err = error_json(e, file).dump();
  }
  return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Seifert-volume certificates for decorated graph manifolds", "gmanvol"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.files, "input JSON document(s)")->required();
    sub->add_flag("--pretty", opt.pretty, "indent JSON output");
    sub->add_option("--jobs", opt.jobs, "process several files in parallel")
        ->check(CLI::PositiveNumber);
  };
  add_common(app.add_subcommand("validate", "report violated invariants"));
  add_common(app.add_subcommand("invariants", "per-piece filled invariants and |e|(N)"));
  auto* cover = app.add_subcommand("cover", "build a finite covering with certificate");
  add_common(cover);
  cover->add_option("--mode", opt.mode, "characteristic or genus-raising")
      ->check(CLI::IsMember({"characteristic", "genus-raising"}));
  cover->add_option("--prime", opt.prime, "prime covering parameter")->required();
  cover->add_option("--center", opt.center, "center piece for genus-raising");
  auto* volume = app.add_subcommand("volume-bound", "Seifert-volume lower-bound certificate");
  add_common(volume);
  volume->add_option("--alpha-bound", opt.alpha_bound,
                     "assumed bound on adjacent translation-class sums")
      ->check(CLI::NonNegativeNumber);
  add_common(app.add_subcommand("classify", "mapping-degree finiteness verdict"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (cover->parsed() && opt.mode == "genus-raising" && opt.center.empty()) {
      throw CLI::ValidationError("--center", "genus-raising mode needs --center");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  opt.verb = app.get_subcommands().front()->get_name();

  std::vector<Outcome> results(opt.files.size());
  const auto workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(opt.jobs, 1)), opt.files.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < opt.files.size(); ++i) results[i] = run_one(opt, opt.files[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (auto i = next++; i < opt.files.size(); i = next++) {
          results[i] = run_one(opt, opt.files[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  int status = 0;
  for (const auto& r : results) {
    if (!r.out.empty()) out << r.out << '\n';
    if (!r.err.empty()) err << r.err << '\n';
    status = std::max(status, r.status);
  }
  return status;
}

}  // namespace gmanvol::cli
