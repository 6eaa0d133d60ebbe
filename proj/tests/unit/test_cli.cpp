#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <clocale>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>

#include "helisurf/cli.hpp"
#include "helisurf/errors.hpp"

namespace helisurf::cli {
namespace {

const std::string kConfigs = HELISURF_CONFIG_DIR;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& line : lines_of(text)) n += line.rfind(prefix, 0) == 0;
  return n;
}

TEST(Config, ParsesDocumentedKeys) {
  const Config c = config_from_json(nlohmann::json::parse(R"({
    "kind": "helicoidal", "zeta": "u^2", "phi": "u^3", "pitch": 1.0, "domain": [0.1, 2.0],
    "nu": 5, "nv": 7, "tol_quad": 1e-9, "tol": 1e-5, "fd_step": 2e-3, "h": 1e-3, "u0": 1.0,
    "output": "x.csv", "tolerances": {"isometry": 1e-8}
  })"));
  EXPECT_EQ(c.zeta, "u^2");
  EXPECT_EQ(*c.pitch, 1.0);
  EXPECT_EQ(c.u_min, 0.1);
  EXPECT_EQ(c.nv, 7u);
  EXPECT_EQ(*c.h, 1e-3);
  EXPECT_EQ(c.anchor(), 1.0);
  EXPECT_EQ(c.tolerances.at("isometry"), 1e-8);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, RejectsInvalidConfigurations) {
  auto invalid = [](const char* text) {
    EXPECT_THROW(config_from_json(nlohmann::json::parse(text)).validate(), ConfigError) << text;
  };
  invalid(R"({"zeta": "u", "phi": "0", "pitch": 1, "domain": [2, 1]})");
  invalid(R"({"zeta": "u", "phi": "0", "pitch": 1, "domain": [1, 2], "nu": 1})");
  invalid(R"({"zeta": "u", "phi": "0", "pitch": 0, "domain": [1, 2]})");
  invalid(R"({"zeta": "u", "phi": "0", "domain": [1, 2]})");
  invalid(R"({"zeta": "u", "phi": "0", "pitch": 1})");
  invalid(R"({"zeta": "u", "phi": "0", "pitch": 1, "domain": [1, 2], "colour": "red"})");
  invalid(R"({"kind": "spiral", "domain": [1, 2]})");
  invalid(R"({"kind": "rotational", "radius": "u", "domain": [1, 2]})");
  invalid(R"({"zeta": "u", "phi": "0", "pitch": 1, "domain": [1, 2], "tol_quad": -1})");
  invalid(R"({"zeta": "u", "phi": "0", "pitch": "one", "domain": [1, 2]})");
  invalid(R"({"zeta": "u", "phi": "0", "pitch": 1, "domain": [1, 2], "u0": 5})");
}

TEST(Cli, FlagsOverrideConfigFile) {
  const Outcome from_file =
      run_cli({"bour", "--config", kConfigs + "/cubic_example.json", "--nu", "3"});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  const Outcome overridden = run_cli(
      {"bour", "--config", kConfigs + "/cubic_example.json", "--nu", "3", "--pitch", "2"});
  ASSERT_EQ(overridden.code, 0) << overridden.err;
  EXPECT_NE(from_file.out, overridden.out);
  const Outcome flags_only = run_cli({"bour", "--zeta", "u^2", "--phi", "u^3", "--pitch", "2",
                                      "--domain", "0.5", "2", "--nu", "3"});
  EXPECT_EQ(overridden.out, flags_only.out);
}

TEST(Cli, VerifyRightHelicoidPasses) {
  const Outcome r = run_cli({"verify", "-c", kConfigs + "/right_helicoid.json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count_prefix(r.out, "# PASS"), 1u);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyJsonIsDeterministicAndComplete) {
  const std::vector<std::string> args{"verify", "--json", "-c", kConfigs + "/samegauss.json"};
  const Outcome a = run_cli(args);
  const Outcome b = run_cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto report = nlohmann::json::parse(a.out);
  EXPECT_TRUE(report.at("passed").get<bool>());
  EXPECT_EQ(report.at("checks").size(), 10u);
  EXPECT_EQ(report.at("surface").at("kind"), "samegauss");
}

TEST(Cli, CheckFailureExitsOne) {
  const Outcome r = run_cli({"verify", "-c", kConfigs + "/cubic_example.json"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const std::string path = ::testing::TempDir() + "/tight.json";
  std::ofstream(path) << R"({"kind": "helicoidal", "zeta": "u^2", "phi": "u^3", "pitch": 1,
                             "domain": [0.5, 2], "nu": 4, "nv": 4,
                             "tolerances": {"brioschi_curvature": 1e-15}})";
  const Outcome tight = run_cli({"verify", "-c", path});
  EXPECT_EQ(tight.code, kExitCheckFailed);
  EXPECT_NE(tight.out.find("brioschi_curvature"), std::string::npos);
}

TEST(Cli, FlatPitchIsAConfigError) {
  const Outcome r = run_cli({"mesh", "-c", kConfigs + "/cubic_example_flat.json"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("pitch"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  const Outcome rotational = run_cli({"mesh", "-c", kConfigs + "/cubic_example_rotational.json",
                                      "--nu", "3", "--nv", "3"});
  EXPECT_EQ(rotational.code, kExitOk) << rotational.err;
}

TEST(Cli, Delta3OnCatenoidIsIIIMinimal) {
  const Outcome r = run_cli({"delta3", "-c", kConfigs + "/catenoid.json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 902u);
  EXPECT_EQ(lines.front(), "u,v,dx,dy,dz,norm,parabolic");
  EXPECT_EQ(lines.back().rfind("# max_norm=", 0), 0u);
  EXPECT_NE(lines.back().find("iii_minimal=true"), std::string::npos);
  const double max_norm = std::stod(lines.back().substr(11));
  EXPECT_LE(max_norm, 1e-6);
}

TEST(Cli, Delta3OnCubicExampleFails) {
  const Outcome r = run_cli({"delta3", "-c", kConfigs + "/cubic_example.json", "--nu", "3",
                             "--nv", "3", "--h", "1e-3", "--tol", "1e-6"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("iii_minimal=false"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"spin"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"forms", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"forms", "-c", "/nonexistent/config.json"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"forms", "--kind", "spiral"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bour", "-c", kConfigs + "/catenoid.json"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"samegauss", "-c", kConfigs + "/cubic_example.json"}).code, kExitUsage);
}

TEST(Cli, ParseErrorReportsOffset) {
  const Outcome r = run_cli({"forms", "-c", kConfigs + "/cubic_example.json", "--zeta", "u^2 +"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("zeta"), std::string::npos);
  EXPECT_NE(r.err.find("offset 5"), std::string::npos) << r.err;
}

TEST(Cli, DomainViolationIsNumericalFailure) {
  // The catenoid neck u^2 + a^2 = b^2 lies inside the domain.
  const Outcome r =
      run_cli({"samegauss", "-c", kConfigs + "/samegauss.json", "--domain", "0.5", "3"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, FormsCsvHeaderAndRows) {
  const Outcome r =
      run_cli({"forms", "-c", kConfigs + "/cubic_example.json", "--nu", "2", "--nv", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 7u);
  EXPECT_EQ(lines[0], "u,v,E,F,G,L,M,N,X,Y,Z,K,H,Phi");
  EXPECT_EQ(std::count(lines[1].begin(), lines[1].end(), ','), 13);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, OtherCsvCommands) {
  const std::string cfg = kConfigs + "/samegauss.json";
  const Outcome curvature = run_cli({"curvature", "-c", cfg, "--nu", "2", "--nv", "2"});
  EXPECT_EQ(lines_of(curvature.out).front(), "u,v,K,H,k1,k2");
  const Outcome gauss = run_cli({"gauss", "-c", cfg, "--nu", "2", "--nv", "2", "--image"});
  EXPECT_EQ(lines_of(gauss.out).front(), "u,v,nx,ny,nz");
  const Outcome same = run_cli({"samegauss", "-c", cfg, "--nu", "4"});
  EXPECT_EQ(lines_of(same.out).size(), 5u);
  EXPECT_EQ(lines_of(same.out).front(), "u,zeta,phi,dphi");
  const Outcome bour = run_cli({"bour", "-c", cfg, "--nu", "4"});
  EXPECT_EQ(lines_of(bour.out).front(), "u,radius,twist,height");
}

TEST(Cli, OutputFlagWritesFile) {
  const std::string path = ::testing::TempDir() + "/forms.csv";
  std::filesystem::remove(path);
  const Outcome r = run_cli(
      {"forms", "-c", kConfigs + "/right_helicoid.json", "--nu", "2", "--nv", "2", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "u,v,E,F,G,L,M,N,X,Y,Z,K,H,Phi");
  EXPECT_EQ(run_cli({"forms", "-c", kConfigs + "/right_helicoid.json", "-o",
                     "/nonexistent-dir/forms.csv"})
                .code,
            kExitUsage);
}

TEST(Obj, TwoByTwoGrid) {
  const Surface s = build_surface(config_from_json(nlohmann::json::parse(
      R"({"zeta": "u", "phi": "0", "pitch": 1, "domain": [0.5, 2.0], "nu": 2, "nv": 2})")));
  ParameterGrid grid = ParameterGrid::over(Interval{0.5, 2.0}, 2, 2);
  std::ostringstream out, warn;
  EXPECT_EQ(export_obj(s, grid, out, warn), 0u);
  EXPECT_EQ(count_prefix(out.str(), "v "), 4u);
  EXPECT_EQ(count_prefix(out.str(), "vn "), 4u);
  EXPECT_EQ(count_prefix(out.str(), "f "), 2u);
  EXPECT_NE(out.str().find("f 1//1 3//3 4//4\n"), std::string::npos) << out.str();
  EXPECT_TRUE(warn.str().empty());

  // Winding: the first triangle (0,0) (1,0) (1,1) faces along x_u x x_v.
  const Vec3 p0 = evaluate(s, 0.5, 0.0).x;
  const Vec3 p1 = evaluate(s, 2.0, 0.0).x;
  const Vec3 p2 = evaluate(s, 2.0, M_PI).x;
  const Vec3 n = gauss_map(evaluate(s, 0.5, 0.0));
  EXPECT_GT((p1 - p0).cross(p2 - p0).dot(n), 0.0);
}

TEST(Obj, RightHelicoidFigureMesh) {
  const Outcome r = run_cli({"mesh", "-c", kConfigs + "/figure1_helicoidal.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_prefix(r.out, "v "), 1600u);
  EXPECT_EQ(count_prefix(r.out, "vn "), 1600u);
  EXPECT_EQ(count_prefix(r.out, "f "), 2u * 39u * 39u);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  EXPECT_EQ(r.out.back(), '\n');
  EXPECT_EQ(r.out, run_cli({"mesh", "-c", kConfigs + "/figure1_helicoidal.json"}).out);
}

TEST(Obj, DegenerateNormalsAreWarnedNotFatal) {
  // zeta' vanishes at u = 0.5, so x_u = 0 along that row.
  const HelicoidalSurface pinched(ProfileCurve{ScalarMap::from_text("(u - 0.5)^2 + 1"),
                                               ScalarMap::zero(), Interval{0.0, 1.0}},
                                  1.0);
  std::ostringstream out, warn;
  const std::size_t bad =
      export_obj(Surface{pinched}, ParameterGrid::over(Interval{0.0, 1.0}, 3, 3), out, warn);
  EXPECT_EQ(bad, 3u);
  EXPECT_EQ(count_prefix(warn.str(), "warning"), 3u);
  EXPECT_EQ(count_prefix(out.str(), "vn 0 0 0"), 3u);
  EXPECT_EQ(count_prefix(out.str(), "f "), 8u);
}

TEST(Format, NineSignificantDigitsAndLocaleIndependence) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3.0, 9), "0.333333333");
  EXPECT_EQ(format_number(123456789012.0, 9), "1.23456789e+11");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  for (const char* name : {"de_DE.UTF-8", "fr_FR.UTF-8", "de_DE"}) {
    if (std::setlocale(LC_ALL, name) != nullptr) {
      EXPECT_EQ(format_number(2.5, 9), "2.5");
      std::setlocale(LC_ALL, "C");
      break;
    }
  }
}

}  // namespace
}  // namespace helisurf::cli
