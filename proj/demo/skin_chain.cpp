// Skins a small overlapping chain in both modes and writes one SVG per mode.
//
//   skin_chain [output-directory]

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "circleskin/io.hpp"

namespace cs = circleskin;

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : ".";
  const std::vector<cs::Circle> chain{{{0, 0}, 1}, {{0.6, 0}, 0.8}, {{2.2, -0.6}, 1.0}};

  for (const auto mode : {cs::SkinMode::inverse, cs::SkinMode::baseline}) {
    cs::SkinConfig cfg;
    cfg.mode = mode;
    cfg.offsets = {0.1};
    const cs::SkinResult r = cs::skin(chain, cfg);
    const char* name = mode == cs::SkinMode::inverse ? "inverse" : "baseline";

    std::printf("%s mode\n", name);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto& w = r.touch_plan.points[i];
      std::printf("  circle %zu  W+ (%.4f, %.4f)  W- (%.4f, %.4f)\n", i, w.plus.x, w.plus.y, w.minus.x, w.minus.y);
    }
    for (const auto& j : r.joints)
      std::printf("  joint at circle %d: left %s, right %s\n", j.circle, j.left_g1 ? "G1" : "broken",
                  j.right_g1 ? "G1" : "broken");
    for (const auto& d : r.diagnostics) std::printf("  ! %s: %s\n", cs::to_string(d.kind), d.message.c_str());

    const std::string path = dir + "/skin_" + name + ".svg";
    std::ofstream(path) << cs::render_svg(chain, cs::make_output(r, cfg));
    std::printf("  wrote %s\n", path.c_str());
  }
}
