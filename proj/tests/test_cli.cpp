#include <doctest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  std::string cmd = std::string(SKEWPLANE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path fresh_dir(const char* name) {
  fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("exit code contract") {
  CHECK(run("--help") == 0);
  CHECK(run("verify --help") == 0);
  CHECK(run("") == 2);                                  // subcommand required
  CHECK(run("frobnicate") == 2);                        // unknown subcommand
  CHECK(run("verify --suite axioms") == 2);             // no plane given
  CHECK(run("verify --field 3 --suite axioms --mode sampled") == 2);  // no seed
  CHECK(run("verify --field 3 --suite nope") == 2);
  CHECK(run("verify --field 4,1 --suite axioms") == 2);  // 4 is not prime
  CHECK(run("verify --field 5 --suite pappus-countermodel") == 2);
  CHECK(run("verify --quaternion --suite axioms --mode exhaustive --seed 1") == 2);
  CHECK(run("cayley --quaternion") == 2);
  CHECK(run("cayley --field 3 --out /nonexistent_dir_for_cli_test") == 2);
  CHECK(run("witness --field 3") == 2);
}

TEST_CASE("verify passes on small planes") {
  CHECK(run("verify --field 2 --suite all") == 0);
  CHECK(run("verify --field 3,1 --suite axioms --suite skewfield") == 0);
  CHECK(run("verify --field 3 --suite desargues --mode sampled --seed 4 --samples 100") == 0);
  CHECK(run("verify --quaternion --suite skewfield --seed 4 --samples 60") == 0);
}

TEST_CASE("cayley writes both tables") {
  fs::path dir = fresh_dir("skewplane_cli_cayley");
  CHECK(run("cayley --field 2,2 --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "add.csv"));
  CHECK(fs::exists(dir / "mul.csv"));
  // GF(4): header + 4 rows
  std::string add = slurp(dir / "add.csv");
  CHECK(std::count(add.begin(), add.end(), '\n') == 5);
}

TEST_CASE("witness hunt and its budget") {
  fs::path dir = fresh_dir("skewplane_cli_witness");
  CHECK(run("witness --quaternion --seed 7 --samples 20000 --out " + dir.string()) == 0);
  std::string text = slurp(dir / "witness.txt");
  CHECK(text.find("A*C") != std::string::npos);
  CHECK(text.find("pappus violation") != std::string::npos);
  CHECK(text.find("not found") == std::string::npos);
  // zero budget cannot find anything
  CHECK(run("witness --quaternion --seed 7 --samples 0 --out " + dir.string()) == 3);
}

TEST_CASE("sampled runs are byte-identical for a fixed seed") {
  fs::path dir = fresh_dir("skewplane_cli_repro");
  std::string base =
      "verify --field 5 --suite desargues --suite pappus --mode sampled "
      "--seed 99 --samples 300 --csv ";
  CHECK(run(base + (dir / "a.csv").string()) == 0);
  CHECK(run(base + (dir / "b.csv").string()) == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(slurp(dir / "a.csv").find("pass") != std::string::npos);
}
