#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cpn/cli/app.hpp"
#include "cpn/cli/checks.hpp"
#include "cpn/cli/complex_parse.hpp"
#include "cpn/cli/figures.hpp"
#include "cpn/error.hpp"
#include "oracles.hpp"

using namespace cpn;
using namespace cpn::cli;
using oracle::kPi;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cpn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Rows of a figure CSV keyed by column name; comment lines are skipped.
std::vector<std::map<std::string, std::string>> csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
  auto split = [](const std::string& s) {
    std::vector<std::string> f;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    return f;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header.empty()) {
      header = split(line);
      continue;
    }
    const auto cells = split(line);
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) row[header[i]] = cells[i];
    rows.push_back(row);
  }
  return rows;
}

double num(const std::map<std::string, std::string>& row, const std::string& key) { return std::stod(row.at(key)); }

}  // namespace

TEST(ComplexParse, Grammar) {
  EXPECT_EQ(parse_complex("1"), Complex(1, 0));
  EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(parse_complex("j"), Complex(0, 1));
  EXPECT_EQ(parse_complex("0.5+2i"), Complex(0.5, 2));
  EXPECT_EQ(parse_complex(" 1e-3-4.5e2j "), Complex(1e-3, -450));
  EXPECT_EQ(parse_complex("2.5i"), Complex(0, 2.5));
  const Amplitudes z = parse_amplitudes("1, 0.5+2i ,-i");
  ASSERT_EQ(z.size(), 3);
  EXPECT_EQ(z[2], Complex(0, -1));
  for (const char* bad : {"", "1+", "i2", "1++2i", "abc", "1+2", "1,,2", "1 2"}) {
    EXPECT_THROW(parse_amplitudes(bad), Error) << bad;
  }
}

TEST(ComplexParse, FormatRoundTrips) {
  oracle::Rng rng(80);
  for (int t = 0; t < 200; ++t) {
    const Complex z(rng.normal() * std::pow(10.0, rng.uniform(-8, 8)), rng.normal());
    EXPECT_EQ(parse_complex(format_complex(z)), z) << format_complex(z);
  }
  const Amplitudes z = parse_amplitudes("1,-2i,3.25-0.5i");
  EXPECT_EQ(parse_amplitudes(format_amplitudes(z)), z);
}

TEST(Cli, DistanceOfOrthogonalStates) {
  const Invocation r = invoke({"distance", "1,0,0,0", "0,1,0,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["distance"].get<double>(), kPi / 2, 1e-15);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"distance", "1,zz", "0,1"}).code, kExitUsage);
  const Invocation dim = invoke({"distance", "1,0,0,0", "0,1,0"});
  EXPECT_EQ(dim.code, kExitDimension);
  EXPECT_NE(dim.err.find("DimensionMismatch"), std::string::npos);
  EXPECT_EQ(invoke({"distance", "0,0", "1,0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--out", "/nonexistent-dir/x.csv", "distance", "1,0", "0,1"}).code, kExitIo);
  EXPECT_EQ(invoke({"figure", "no-such-figure"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sample", "--count", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"orbit-volume", "--sigma", "1.0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"check", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--format", "xml", "distance", "1,0", "0,1"}).code, kExitUsage);
}

TEST(Cli, WritesToOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "cpn_cli_test_out.json";
  const Invocation r = invoke({"--out", path.string(), "curvature", "--sigma", "0.39269908169872414"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_NEAR(j["curvature"].get<double>(), -4.0, 1e-12);
  std::filesystem::remove(path);
}

TEST(Cli, SchmidtOutput) {
  const Invocation bell = invoke({"schmidt", "1,0,0,1"});
  ASSERT_EQ(bell.code, kExitOk) << bell.err;
  const auto b = nlohmann::json::parse(bell.out);
  EXPECT_NEAR(b["sigma"].get<double>(), kPi / 4, 1e-12);
  EXPECT_TRUE(b["max_entangled"].get<bool>());
  EXPECT_FALSE(b["unique"].get<bool>());
  EXPECT_NEAR(b["distance"].get<double>(), kPi / 4, 1e-12);

  const auto s = nlohmann::json::parse(invoke({"schmidt", "2,0,0,1"}).out);
  EXPECT_NEAR(s["sigma"].get<double>(), std::atan(0.5), 1e-12);
  EXPECT_NEAR(s["distance"].get<double>(), std::atan(0.5), 1e-12);
  EXPECT_NEAR(s["bloch_radius"].get<double>(), 0.6, 1e-12);

  const Invocation csv = invoke({"--format", "csv", "schmidt", "2,0,0,1"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.rfind("# schema: cpn-schmidt v1", 0), 0u);
  EXPECT_EQ(invoke({"schmidt", "1,0,0"}).code, kExitDimension);
}

TEST(Cli, ProjectCenterOfCp2) {
  const Invocation r = invoke({"project", "1,1,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& x : j["coords"]) EXPECT_NEAR(x.get<double>(), 0.0, 1e-15);
  EXPECT_EQ(invoke({"project", "1,0,0", "--chart", "mercator"}).code, kExitUsage);
}

TEST(Cli, SampleIsReproducible) {
  const Invocation a = invoke({"sample", "--count", "10", "--seed", "7"});
  const Invocation b = invoke({"sample", "--count", "10", "--seed", "7", "--threads", "3"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(csv_rows(a.out).size(), 10u);
  EXPECT_NE(a.out, invoke({"sample", "--count", "10", "--seed", "8"}).out);
}

TEST(Cli, CheckSuitesPassAtDefaultSeed) {
  for (const char* suite : {"metric", "entanglement", "orbits", "symplectic"}) {
    const Invocation r = invoke({"check", suite, "--seed", "42"});
    EXPECT_EQ(r.code, kExitOk) << suite << "\n" << r.out << r.err;
  }
}

TEST(Cli, SamplingChecksAreDeterministic) {
  const auto a = run_checks(Suite::Sampling, 42);
  const auto b = run_checks(Suite::Sampling, 42);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].measured, b[i].measured);
  }
}

TEST(Cli, MutationIsCaught) {
  const Invocation r = invoke({"check", "orbits", "--mutate", "orbit-metric-sign"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.err.find("orbits/orbit-metric-pullback"), std::string::npos) << r.err;
  EXPECT_THROW(mutated_providers("nope"), Error);
}

TEST(Cli, Figures) {
  for (const auto& name : figure_names()) {
    const Invocation r = invoke({"figure", name, "--grid", "4", "--samples", "6"});
    ASSERT_EQ(r.code, kExitOk) << name << r.err;
    EXPECT_EQ(r.out.rfind("# schema: cpn-figure/" + name + " v1", 0), 0u) << name;
    EXPECT_FALSE(csv_rows(r.out).empty()) << name;
  }
  EXPECT_EQ(csv_rows(invoke({"figure", "separable-surface", "--grid", "2"}).out).size(), 4u);

  for (const auto& row : csv_rows(invoke({"figure", "constant-sigma", "--sigma", "0.39269908169872414"}).out)) {
    EXPECT_LT(std::abs(num(row, "sigma_residual")), 1e-9);
  }

  double closest = 1.0;
  for (const auto& row : csv_rows(invoke({"figure", "max-entangled", "--samples", "13"}).out)) {
    double worst = 0.0;
    for (const char* key : {"n0", "n1", "n2", "n3"}) worst = std::max(worst, std::abs(num(row, key) - 0.5));
    closest = std::min(closest, worst);
    EXPECT_LT(num(row, "unitarity_residual"), 1e-12);
  }
  EXPECT_LT(closest, 1e-12);
}
