#include "doctest.h"

#include <sstream>

#include "hartogs/cli.hpp"

using namespace hartogs;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string text;
  json report() const { return json::parse(text); }
};

Result run_doc(json doc, OutputFormat format = OutputFormat::Json, std::uint64_t seed = 0) {
  RunConfig cfg;
  cfg.doc = std::move(doc);
  cfg.format = format;
  cfg.seed = seed;
  std::ostringstream os;
  const int code = run(cfg, os);
  return {code, os.str()};
}

long long small_binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

json p0(int n) { return {{"n", n}}; }

}  // namespace

TEST_CASE("coeffs CSV reproduces the binomial products") {
  auto r = run_doc({{"command", "coeffs"}, {"pa", p0(2)}, {"m", {2, 3}}, {"window", {8, 8}}}, OutputFormat::Csv);
  CHECK(r.code == kExitOk);
  std::istringstream in(r.text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "alpha_1,alpha_2,value");
  int rows = 0;
  while (std::getline(in, line)) {
    int a1 = 0, a2 = 0;
    long long v = 0;
    REQUIRE(std::sscanf(line.c_str(), "%d,%d,%lld", &a1, &a2, &v) == 3);
    CHECK(v == small_binomial(a1 + 1, 1) * small_binomial(a2 + 2, 2));
    ++rows;
  }
  CHECK(rows == 81);
}

TEST_CASE("input errors exit with code 2") {
  json bad{{"n", 2},
           {"polys", {{{"terms", {{{"alpha", {1, 0}}, {"coeff", "-1"}}}}}, {{"terms", {{{"alpha", {0, 1}}, {"coeff", "1"}}}}}}}};
  auto r = run_doc({{"command", "validate"}, {"tuple", bad}});
  CHECK(r.code == kExitInput);
  CHECK(r.report()["error"] == "NegativeCoefficient");

  CHECK(run_doc({{"command", "frobnicate"}}).report()["error"] == "UnknownCommand");
  CHECK(run_doc(json{{"pa", p0(2)}}).code == kExitInput);
  CHECK(run_doc({{"command", "coeffs"}, {"pa", p0(2)}, {"window", {2, 2}}}).report()["error"] == "InvalidConfig");
  CHECK(run_doc({{"command", "dettrace"}, {"pa", p0(2)}, {"m", {1, 1}}, {"truncation", 4}}, OutputFormat::Csv).code ==
        kExitInput);
  CHECK(run_doc({{"command", "coeffs"}, {"pa", p0(2)}, {"m", {0, 1}}, {"window", {2, 2}}}).report()["error"] ==
        "InvalidMultiplicity");
}

TEST_CASE("validate reports admissibility") {
  auto r = run_doc({{"command", "validate"}, {"pa", {{"n", 3}, {"a", "1"}}}});
  CHECK(r.code == kExitOk);
  CHECK(r.report()["admissibility"]["degree"] == 2);
  CHECK(r.report()["admissibility"]["admissible"] == false);
  CHECK(run_doc({{"command", "validate"}, {"pa", p0(2)}}).report()["admissibility"]["degree"] == "all");
}

TEST_CASE("dettrace on the Hartogs triangle") {
  auto r = run_doc({{"command", "dettrace"}, {"pa", p0(2)}, {"m", {2, 2}}, {"truncation", 998}});
  CHECK(r.code == kExitOk);
  const json j = r.report();
  CHECK(j["partial_trace"] == "997002999/1000000000");
  CHECK(j["verdict"] == "positive");
  auto one = run_doc({{"command", "dettrace"}, {"pa", p0(2)}, {"m", {1, 1}}, {"truncation", 10}}).report();
  CHECK(one["partial_trace"] == "1");
  CHECK(run_doc({{"command", "dettrace"}, {"pa", {{"n", 2}, {"a", 1}}}, {"m", {1, 1}}, {"truncation", 3}})
            .report()["error"] == "NotAdmissible");
}

TEST_CASE("domain, kernel and weights") {
  auto d = run_doc({{"command", "domain"}, {"pa", p0(2)}, {"points", {{0.2, 0.5}, {0.5, 0.2}, {0.2, 0.0}}}},
                   OutputFormat::Csv);
  CHECK(d.text == "index,inside\n0,true\n1,false\n2,false\n");

  auto k = run_doc({{"command", "kernel"}, {"pa", p0(2)}, {"m", {1, 1}}, {"cutoff", 60}, {"points", {{0.0, 0.5}}}});
  CHECK(k.code == kExitOk);
  const json kj = k.report();
  CHECK(std::abs(kj["rows"][0]["closed"][0].get<double>() - 16.0 / 3.0) < 1e-13);
  CHECK(kj["rows"][0]["abs_err"].get<double>() < 1e-8);

  auto w = run_doc({{"command", "weights"}, {"pa", p0(2)}, {"m", {1, 2}}, {"window", {1, 1}}}, OutputFormat::Csv);
  std::istringstream in(w.text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "alpha_1,alpha_2,j,omega,sigma,hypo_diag");
  std::getline(in, line);
  CHECK(line.rfind("0,0,1,", 0) == 0);
  std::getline(in, line);
  CHECK(line.rfind("0,0,2,0.70710678118654", 0) == 0);
}

TEST_CASE("probes, radius and subnormality verdicts") {
  json probes{{"command", "probes"}, {"pa", p0(2)}, {"m", {1, 2}}, {"window", {4, 4}}};
  auto a = run_doc(probes, OutputFormat::Json, 7);
  auto b = run_doc(probes, OutputFormat::Json, 7);
  CHECK(a.code == kExitOk);
  CHECK(a.text == b.text);
  CHECK(a.report()["probe"]["triangle_nonzero"]["alpha"] == json({1, 0}));

  auto rad = run_doc({{"command", "radius"}, {"pa", p0(2)}, {"m", {1, 1}}, {"k_max", 5}, {"n_max", 5}}).report();
  CHECK(rad["radii"][0]["estimate"] == 1.0);

  auto sub = run_doc({{"command", "subnormality"}, {"hartogs", true}, {"m", {2, 3}}, {"window", {3, 3}}, {"order", 4}});
  CHECK(sub.code == kExitOk);
  CHECK(sub.report()["verdict"] == "PASS");
  auto gen = run_doc({{"command", "subnormality"}, {"pa", p0(2)}, {"m", {2, 1}}, {"window", {6, 6}}, {"order", 3}});
  CHECK(gen.report()["verdict"] == "PASS: consistent with Hausdorff moment up to order 3");
}

TEST_CASE("hereditary and pick verdicts") {
  auto iso = run_doc({{"command", "hereditary"}, {"matrices", {{{0.0}}, {{1.0}}}}});
  CHECK(iso.code == kExitOk);
  CHECK(iso.report()["classification"] == "isometry");
  auto bad = run_doc({{"command", "hereditary"}, {"matrices", {{{0.5}}, {{0.1}}}}});
  CHECK(bad.code == kExitVerdict);
  CHECK(bad.report()["ordering"]["chain_holds"] == false);
  auto lift = run_doc({{"command", "hereditary"}, {"matrices", {{{0.5}}, {{0.8}}}}, {"lift", true}});
  CHECK(lift.report()["classification"] == "contraction");
  auto nc = run_doc({{"command", "hereditary"}, {"matrices", {{{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}}}});
  CHECK(nc.report()["error"] == "NonCommuting");

  json pick{{"command", "pick-verify"}, {"nodes", {{0.0, 0.5}}}, {"targets", {0.0}}, {"a1", {{0.0}}}, {"a2", {{4.0 / 3.0}}}};
  CHECK(run_doc(pick).code == kExitOk);
  pick["targets"] = {1.0};
  CHECK(run_doc(pick).code == kExitVerdict);
  pick["nodes"] = {{0.6, 0.5}};
  CHECK(run_doc(pick).report()["error"] == "PointOutsideDomain");
}

TEST_CASE("quadrature command") {
  auto q = run_doc({{"command", "quadrature"},
                    {"beta", {{0, 0}, {2, 3}}},
                    {"hardy", {{{"alpha", {1, 2}}}}},
                    {"bergman", {{{"m", {2, 2}}, {"alpha", {1, 1}}}}}});
  CHECK(q.code == kExitOk);
  CHECK(q.report()["verdict"] == "PASS");
  CHECK(run_doc({{"command", "quadrature"}}).code == kExitInput);
}
