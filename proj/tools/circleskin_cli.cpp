// circleskin: skins an ordered set of circles from a JSON document.
//
// Exit codes: 0 success, 2 inadmissible input (report as JSON on stderr),
// 1 any other error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include "circleskin/io.hpp"
#include "circleskin/service.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw circleskin::InputError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

int serve(const std::string& host, int port) {
  httplib::Server server;
  circleskin::install_routes(server);
  std::cerr << "circleskin " << circleskin::kVersion << " listening on http://" << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skin an ordered set of circles with rational-envelope curves"};
  app.set_version_flag("--version", circleskin::kVersion);

  std::string input_path;
  std::optional<std::string> mode, spine;
  std::optional<double> lambda, epsilon;
  std::optional<int> samples;
  std::vector<double> offsets;
  std::string svg_path, json_path;
  bool validate_only = false;
  bool no_validate = false;
  std::optional<int> port;
  std::string host = "127.0.0.1";

  app.add_option("--input", input_path, "Input JSON document ('-' for stdin)");
  app.add_option("--mode", mode, "Tangent mode")->check(CLI::IsMember({"inverse", "baseline"}));
  app.add_option("--lambda", lambda, "Catmull-Rom factor for baseline mode")->check(CLI::PositiveNumber);
  app.add_option("--spine", spine, "Spine curve kind")->check(CLI::IsMember({"cubic", "ph"}));
  app.add_option("--samples", samples, "Samples per segment")->check(CLI::Range(2, 1 << 20));
  app.add_option("--offset", offsets, "Offset distance (repeatable)")->allow_extra_args(false);
  app.add_option("--svg", svg_path, "Write SVG here");
  app.add_option("--json", json_path, "Write the output document here");
  app.add_flag("--validate-only", validate_only, "Only check admissibility");
  app.add_flag("--no-validate", no_validate, "Skin even when the input is not admissible");
  app.add_option("--serve", port, "Run the HTTP service on this port")->check(CLI::Range(1, 65535));
  app.add_option("--host", host, "Interface for --serve");
  app.add_option("--epsilon", epsilon, "Relative geometric tolerance")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (port) return serve(host, *port);
  if (input_path.empty()) {
    std::cerr << "error: --input is required (or --serve PORT)\n";
    return 1;
  }

  try {
    circleskin::InputDocument doc = circleskin::parse_input(read_all(input_path));
    circleskin::SkinConfig& cfg = doc.config;
    if (mode) cfg.mode = circleskin::parse_mode(*mode);
    if (spine) cfg.spine = circleskin::parse_spine(*spine);
    if (lambda) cfg.lambda = *lambda;
    if (samples) cfg.samples_per_segment = *samples;
    if (!offsets.empty()) cfg.offsets = offsets;
    if (epsilon) cfg.epsilon = *epsilon;
    if (no_validate) cfg.validate = false;

    if (validate_only) {
      circleskin::AdmissibilityOptions opt;
      opt.eps = cfg.epsilon;
      opt.interpret_segment_conditions = cfg.interpret_segment_conditions;
      const auto report = circleskin::to_record(circleskin::validate_admissibility(doc.circles, opt));
      const std::string text = nlohmann::json(report).dump(2);
      std::cout << text << "\n";
      if (!report.ok) {
        std::cerr << text << "\n";
        return 2;
      }
      return 0;
    }

    const circleskin::OutputDocument out = circleskin::run_document(doc);
    const std::string json_text = nlohmann::json(out).dump(2) + "\n";
    if (!json_path.empty()) write_file(json_path, json_text);
    if (!svg_path.empty()) write_file(svg_path, circleskin::render_svg(doc.circles, out));
    if (json_path.empty() && svg_path.empty()) std::cout << json_text;
    return 0;
  } catch (const circleskin::AdmissibilityError& e) {
    std::cerr << nlohmann::json(circleskin::to_record(e.report())).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
