#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "aomdd/uai.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path =
      fs::temp_directory_path() / ("aomdd_cli_out_" + std::to_string(counter++) + ".txt");
  const std::string command =
      std::string(AOMDD_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  fs::remove(out_path);
  return result;
}

fs::path write_temp(const std::string& name, const std::string& contents) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

fs::path c9_uai_path() {
  std::ostringstream os;
  aomdd::write_uai(aomdd_test::c9_model(), os);
  return write_temp("aomdd_c9.uai", os.str());
}

fs::path c9_order_path() {
  return write_temp("aomdd_c9.order", "0\n1\n2\n3\n4\n5\n6\n7\n");
}

fs::path bayes_uai_path() {
  std::ostringstream os;
  aomdd::write_uai(aomdd_test::bayes_chain(), os);
  return write_temp("aomdd_bayes.uai", os.str());
}

}  // namespace

TEST_CASE("cli compile reports matching pipelines on the fixture") {
  const RunResult r = run_cli("compile " + c9_uai_path().string() + " --method both" +
                              " --order-file " + c9_order_path().string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("instance,method,n,dmax,e,w,h,zeros_pct,time_sec,cm,aomdd,ratio") !=
        std::string::npos);
  CHECK(r.out.find("aomdd_c9.uai,both,8,2,0,3,3") != std::string::npos);
  CHECK(r.out.find(",26,18,") != std::string::npos);  // cm, aomdd columns
}

TEST_CASE("cli compile fails cleanly on a missing file") {
  const RunResult r = run_cli("compile /nonexistent/model.uai");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("cli compile fails cleanly on malformed input") {
  const fs::path bad = write_temp("aomdd_bad.uai", "MARKOV\n1\n2\n1\n1 0\n3\n1 2 3\n");
  const RunResult r = run_cli("compile " + bad.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("cli eval prints the assignment value") {
  SUBCASE("Bayes chain") {
    const fs::path assignment = write_temp("aomdd_assign.txt", "0 0\n1 1\n");
    const RunResult r =
        run_cli("eval " + bayes_uai_path().string() + " " + assignment.string());
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(0.18).epsilon(1e-12));
  }
  SUBCASE("all-ones on the constraint fixture evaluates to zero") {
    const fs::path assignment = write_temp(
        "aomdd_ones.txt", "0 1\n1 1\n2 1\n3 1\n4 1\n5 1\n6 1\n7 1\n");
    const RunResult r =
        run_cli("eval " + c9_uai_path().string() + " " + assignment.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 1) == "0");
  }
  SUBCASE("partial assignments are an error") {
    const fs::path assignment = write_temp("aomdd_partial.txt", "");
    const RunResult r =
        run_cli("eval " + bayes_uai_path().string() + " " + assignment.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("partial") != std::string::npos);
  }
}

TEST_CASE("cli gen-grid") {
  SUBCASE("2x2 grid has 4 variables and 4 edge factors") {
    const fs::path out = fs::temp_directory_path() / "aomdd_grid22.uai";
    const RunResult r = run_cli("gen-grid 2 2 --seed 3 -o " + out.string());
    CHECK(r.exit_code == 0);
    const aomdd::GraphicalModel model = aomdd::parse_uai_file(out.string());
    CHECK(model.num_variables() == 4);
    CHECK(model.factors().size() == 4);
  }
  SUBCASE("generation is deterministic under the seed") {
    const fs::path a = fs::temp_directory_path() / "aomdd_grid_a.uai";
    const fs::path b = fs::temp_directory_path() / "aomdd_grid_b.uai";
    run_cli("gen-grid 4 4 --seed 9 --zero-fraction 0.45 -o " + a.string());
    run_cli("gen-grid 4 4 --seed 9 --zero-fraction 0.45 -o " + b.string());
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) != "");
  }
  SUBCASE("zero fraction lands near the requested share") {
    const fs::path out = fs::temp_directory_path() / "aomdd_grid44.uai";
    run_cli("gen-grid 4 4 --seed 1 --zero-fraction 0.45 -o " + out.string());
    const aomdd::GraphicalModel model = aomdd::parse_uai_file(out.string());
    CHECK(model.zero_fraction() == doctest::Approx(0.45).epsilon(0.25));
  }
}

TEST_CASE("cli stats output is deterministic and DOT matches the counts") {
  const fs::path stats_a = fs::temp_directory_path() / "aomdd_stats_a.csv";
  const fs::path stats_b = fs::temp_directory_path() / "aomdd_stats_b.csv";
  const fs::path dot_path = fs::temp_directory_path() / "aomdd_c9.dot";
  const std::string base = "compile " + c9_uai_path().string() + " --method search" +
                           " --order-file " + c9_order_path().string();
  CHECK(run_cli(base + " --stats " + stats_a.string() + " --dot " + dot_path.string())
            .exit_code == 0);
  CHECK(run_cli(base + " --stats " + stats_b.string()).exit_code == 0);

  auto strip_time = [](const std::string& csv) {
    // Drop the time_sec column (index 8) from every row.
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string field;
      int index = 0;
      while (std::getline(fields, field, ',')) {
        if (index != 8) out << field << ",";
        ++index;
      }
      out << "\n";
    }
    return out.str();
  };
  CHECK(strip_time(slurp(stats_a)) == strip_time(slurp(stats_b)));

  // DOT nodes/edges equal the stats counts (18 meta-nodes, 47 edges).
  const std::string dot = slurp(dot_path);
  std::size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = dot.find("[label=\"{X", pos)) != std::string::npos) {
    ++nodes;
    pos += 1;
  }
  pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    ++edges;
    pos += 1;
  }
  CHECK(nodes == 18);
  CHECK(edges == 47);
}
