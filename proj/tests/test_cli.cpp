#include <catch_amalgamated.hpp>

#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "slicetorus/certificate_io.hpp"
#include "slicetorus/knots.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  slicetorus::Json json() const { return slicetorus::Json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(stdin_text);
  const int code = slicetorus::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

const std::string k10125 = "3: 1 1 1 1 1 -2 -1 -1 -1 -2";

}  // namespace

TEST_CASE("bennequin verb", "[cli]") {
  const auto r = run({"bennequin", "--braid", k10125});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"lower\":\"0/1\",\"upper\":\"1/1\"}\n");
}

TEST_CASE("genus verb", "[cli]") {
  CHECK(run({"genus", "--braid", "1:"}).out == "{\"genus\":\"0/1\"}\n");
  CHECK(run({"genus", "--braid", "2: 1 1 1"}).json()["genus"] == "1/1");

  const auto open = run({"genus", "--braid", k10125}).json();
  CHECK(open["genus"].is_null());
  CHECK(open["bracket"]["lower"] == "0/1");
  CHECK(open["bracket"]["upper"] == "4/1");

  const auto certified =
      run({"genus", "--braid", k10125, "--certs", oracle::data_path("10_125_to_unknot_genus1.json")}).json();
  CHECK(certified["bracket"]["upper"] == "1/1");
}

TEST_CASE("summary verb and braid files", "[cli]") {
  const auto r = run({"summary", "--braid", "2: 1 1"}).json();
  CHECK(r["components"] == 2);
  CHECK(r["writhe"] == 2);
  CHECK(r["is_positive_word"] == true);

  const auto stdin_braid = run({"summary", "--braid-file", "-"}, "3: 1 -2\n").json();
  CHECK(stdin_braid["components"] == 1);
  CHECK(stdin_braid["missing_positive"] == 1);
}

TEST_CASE("build and verify round-trip", "[cli]") {
  const auto built = run({"cobordism-build", "lemma2", "--p", "4"});
  REQUIRE(built.code == 0);
  const auto report = run({"cobordism-verify", "--cert", "-"}, built.out).json();
  CHECK(report["genus"] == "3/1");
  CHECK(report["saddle_count"] == 6);
  CHECK(report["connected"] == true);

  const auto lemma1 = run({"cobordism-build", "lemma1", "--braid", "3: 1 1 1 2 2 2"});
  const auto report1 = run({"cobordism-verify"}, lemma1.out).json();
  CHECK(report1["genus"] == "8/1");
  CHECK(report1["end"] == slicetorus::render_braid(slicetorus::torus_braid(5, 6)));

  // Byte-identical on repeat.
  CHECK(run({"cobordism-build", "lemma2", "--p", "4"}).out == built.out);
}

TEST_CASE("verify reports the failing step", "[cli]") {
  const auto r = run({"cobordism-verify", "--cert", oracle::data_path("invalid_relation.json")});
  CHECK(r.code == 1);
  CHECK(r.json()["step"] == 0);
  CHECK(r.json()["error"].is_string());
}

TEST_CASE("squeezed verb", "[cli]") {
  const auto r = run({"squeezed", "--plus", oracle::data_path("trefoil_identity.json"), "--minus",
                      oracle::data_path("trefoil_to_unknot.json"), "--t-plus", "2,3", "--t-minus", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"squeezed\":true,\"value\":\"1/1\"}\n");
}

TEST_CASE("vbound verb", "[cli]") {
  const auto r = run({"vbound", "--braid", k10125, "--fixtures", oracle::data_path("10_125_sn_fixture.json")}).json();
  CHECK(r["outer"]["lower"] == "0/1");
  CHECK(r["outer"]["upper"] == "1/1");
  CHECK(r["inner"]["lower"] == "0/1");
  CHECK(r["inner"]["upper"] == "1/1");

  const auto bare = run({"vbound", "--braid", "2: 1 1 1"}).json();
  CHECK(bare["inner"].is_null());

  const auto squeezed = run({"vbound", "--braid", "2: 1 1 1", "--squeezed-value", "1"}).json();
  CHECK(squeezed["inner"]["upper"] == "1/1");
}

TEST_CASE("ell and sum verbs", "[cli]") {
  const auto ell = run({"ell", "--braid", "2: 1 1 1", "--p-max", "3"}).json();
  CHECK(ell["lower"] == "1/1");
  CHECK(ell["upper"] == "1/1");

  CHECK(run({"sum", "--lower", "0", "--upper", "1", "--a", "2", "--b", "-1"}).out ==
        "{\"lower\":\"-1/1\",\"upper\":\"1/1\"}\n");
  CHECK(run({"sum", "--lower", "0", "--upper", "1", "--a", "-1", "--b", "0"}).code == 1);
}

TEST_CASE("error handling and exit codes", "[cli]") {
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.json()["error"] == "unknown verb 'frobnicate'");

  CHECK(run({}).code == 2);
  CHECK(run({"bennequin", "--no-such-flag"}).code == 2);
  CHECK(run({"bennequin", "--braid", "2: 5"}).code == 1);
  CHECK(run({"bennequin", "--braid", "2: 1 1"}).code == 1);
  CHECK(run({"bennequin"}).code == 1);

  const auto missing = run({"genus", "--braid", "1:", "--certs", "/nonexistent/file.json"});
  CHECK(missing.code == 1);
  CHECK(missing.json()["error"].get<std::string>().find("/nonexistent/file.json") != std::string::npos);
  CHECK(run({"vbound", "--braid", "1:", "--fixtures", "/nonexistent"}).code == 1);

  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.empty());
  CHECK(help.err.find("cobordism-verify") != std::string::npos);
}

TEST_CASE("human flag writes only to stderr", "[cli]") {
  const auto plain = run({"bennequin", "--braid", k10125});
  const auto human = run({"--human", "bennequin", "--braid", k10125});
  CHECK(human.out == plain.out);
  CHECK_FALSE(human.err.empty());
  CHECK(plain.err.empty());
}
