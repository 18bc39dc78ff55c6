#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using json   = nlohmann::json;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  std::string slurp(fs::path const& p) {
    std::ifstream      in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path scratch(std::string const& name) {
    auto dir = fs::temp_directory_path() / "wilson-cli-test";
    fs::create_directories(dir);
    return dir / name;
  }

  Run wilson(std::string const& args) {
    auto const out = scratch("stdout.txt");
    auto const err = scratch("stderr.txt");
    std::string const cmd = std::string("\"") + WILSON_CLI + "\" " + args + " >\"" + out.string()
                            + "\" 2>\"" + err.string() + "\"";
    int const status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return Run{WEXITSTATUS(status), slurp(out), slurp(err)};
  }

  std::string data(char const* name) {
    return "\"" + (fs::path(WILSON_DATA_DIR) / name).string() + "\"";
  }

  json report(std::string const& args) {
    auto const path = scratch("report.json");
    fs::remove(path);
    auto const r = wilson("--output \"" + path.string() + "\" " + args);
    INFO(r.err);
    REQUIRE(fs::exists(path));
    return json::parse(slurp(path));
  }

}  // namespace

TEST_CASE("validate", "[cli]") {
  CHECK(wilson("validate " + data("z3.txt")).code == 0);
  CHECK(wilson("validate " + data("z3_instance.json")).code == 0);
  auto const bad = wilson("validate " + data("nonassociative.txt"));
  CHECK(bad.code == 1);
  CHECK((bad.out + bad.err).find("(0, 0, 1)") != std::string::npos);
  auto const malformed = wilson("validate " + data("malformed.txt"));
  CHECK(malformed.code == 2);
  CHECK((malformed.out + malformed.err).find("line 3") != std::string::npos);
  CHECK(wilson("validate " + data("not_square_generated.txt")).code == 1);
  CHECK(wilson("validate /nonexistent/file.txt").code == 2);
  CHECK(wilson("frobnicate").code == 2);
}

TEST_CASE("classify", "[cli]") {
  auto const z3 = report("classify " + data("z3_instance.json") + " --equation eq1");
  CHECK(z3.at("tool") == "wilson");
  REQUIRE(z3.at("families").size() == 3);
  CHECK(z3.at("families")[0].at("tag") == "EQ1_F1");
  CHECK(z3.at("families")[1].at("tag") == "EQ1_F2");

  auto const two = report("classify " + data("zero_one.json") + " --equation eq2");
  REQUIRE(two.at("families").size() == 3);
  CHECK(two.at("families")[2].at("tag") == "EQ2_F2");

  CHECK(wilson("classify " + data("z3_instance.json") + " --equation dalembert").code == 0);
  auto const blanket = wilson("classify " + data("not_square_generated.txt"));
  CHECK(blanket.code == 1);
  CHECK((blanket.out + blanket.err).find("blanket assumption violated") != std::string::npos);
  CHECK(wilson("classify " + data("z3_instance.json") + " --equation eq7").code == 2);
}

TEST_CASE("verify is deterministic and reports failures", "[cli]") {
  auto const args = "verify " + data("z3_instance.json") + " --seed 5 --random-g 10";
  CHECK(wilson(args).code == 0);
  auto const a = report(args);
  auto const b = report(args);
  CHECK(a.dump() == b.dump());
  CHECK(a.at("seed") == 5);
  CHECK(wilson(args + " --test-corrupt-predicted").code == 1);
  CHECK(wilson("verify " + data("zero_one.json") + " --equation eq2").code == 0);
}

TEST_CASE("census", "[cli][census]") {
  auto const small = report("census --max-order 3 --jobs 2");
  CHECK(small.at("scanned") == 113);
  CHECK(small.at("failures") == 0);
  CHECK(wilson("census --max-order 3").code == 0);
  CHECK(wilson("census --max-order 9").code == 2);

  auto const four = report("census --max-order 4 --min-order 4 --jobs 4");
  CHECK(four.at("scanned") == 3492);
  CHECK(four.at("failures") == 0);
}

TEST_CASE("qspace-verify", "[cli]") {
  auto const grid = report("qspace-verify");
  CHECK(grid.at("zero_residuals") == 15);
  CHECK(wilson("qspace-verify " + data("qspace_swap.json")).code == 0);
  auto const odd = wilson("qspace-verify " + data("qspace_not_odd.json"));
  CHECK(odd.code == 1);
  CHECK((odd.out + odd.err).find("additive-not-odd") != std::string::npos);
}
