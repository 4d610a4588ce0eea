#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "phaserqa/csv.hpp"
#include "phaserqa/pipeline.hpp"
#include "phaserqa/rqa.hpp"
#include "temp_dir.hpp"

namespace {

int run(const std::string& args, const TempDir& dir) {
  const std::string cmd = std::string("\"") + PHASERQA_CLI_PATH + "\" " + args + " >\"" +
                          (dir / "stdout.txt").string() + "\" 2>\"" +
                          (dir / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string q(const std::filesystem::path& p) { return "\"" + p.string() + "\""; }

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("generate writes index,value rows") {
  TempDir dir;
  REQUIRE(run("generate --system noise --n 10 --seed 3 --out " + q(dir / "n.csv"), dir) == 0);
  const auto text = slurp(dir / "n.csv");
  CHECK(text.rfind("index,value\n0,", 0) == 0);
  CHECK(line_count(text) == 11);

  REQUIRE(run("generate --system lorenz --n 5 --states --out -", dir) == 0);
  CHECK(slurp(dir / "stdout.txt").rfind("index,x,y,z\n", 0) == 0);
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(run("generate --system nope --n 10 --out -", dir) == 2);
  CHECK(run("rqa --out -", dir) == 2);
  CHECK(run("frobnicate", dir) == 2);
  CHECK(run("rqa --in " + q(dir / "absent.csv") + " --out -", dir) == 1);
  CHECK(!slurp(dir / "stderr.txt").empty());

  dir.write("short.csv", "index,value\n0,1\n1,2\n2,3\n");
  // too short for m=6, tau=8: reported per file, command fails
  CHECK(run("rqa --in " + q(dir / "short.csv") + " --out " + q(dir / "r.csv"), dir) == 1);
  CHECK(slurp(dir / "r.csv").find("42") != std::string::npos);
}

TEST_CASE("rqa output matches the library") {
  TempDir dir;
  REQUIRE(run("generate --system noise --n 300 --seed 4 --out " + q(dir / "n.csv"), dir) == 0);
  REQUIRE(run("rqa --in " + q(dir / "n.csv") + " --m 3 --tau 2 --eps 1.5 --out " +
                  q(dir / "r.csv"),
              dir) == 0);
  const auto table = phaserqa::csv::read_file(dir / "r.csv");
  REQUIRE(table.rows.size() == 1);
  const auto x = phaserqa::csv::load_series(dir / "n.csv", "value");
  const auto m = phaserqa::rqa::rqa_all(x, {3, 2}, 1.5);
  CHECK(phaserqa::csv::parse_double(table.rows[0][table.column_index("REC")]) == m.rec);
  CHECK(phaserqa::csv::parse_double(table.rows[0][table.column_index("DET")]) == m.det);
}

TEST_CASE("sweep, preprocess, embed-params, rss and rp-export run end to end") {
  TempDir dir;
  REQUIRE(run("generate --system lorenz --n 600 --out " + q(dir / "l.csv"), dir) == 0);
  REQUIRE(run("preprocess --in " + q(dir / "l.csv") + " --smooth sg1 --window-length 500 --out " +
                  q(dir / "p.csv"),
              dir) == 0);
  CHECK(line_count(slurp(dir / "p.csv")) == 501);

  REQUIRE(run("sweep --in " + q(dir / "p.csv") + " --m 1:3 --tau 1:2 --eps 0.5:1.5:0.5 --out " +
                  q(dir / "s.csv"),
              dir) == 0);
  const auto sweep_text = slurp(dir / "s.csv");
  CHECK(sweep_text.rfind("m,tau,eps,REC,DET,RATIO,ENT\n", 0) == 0);
  CHECK(line_count(sweep_text) == 1 + 3 * 2 * 3);

  REQUIRE(run("embed-params --in " + q(dir / "p.csv") + " --m-max 6 --tau-max 20 --cao-tau 1:3 --out " +
                  q(dir / "e.csv"),
              dir) == 0);
  CHECK(slurp(dir / "e.csv").find("summary") != std::string::npos);

  REQUIRE(run("rss --in " + q(dir / "p.csv") + " --m 4 --tau 3 --out " + q(dir / "r.csv"), dir) == 0);
  const auto rss = slurp(dir / "r.csv");
  CHECK(rss.rfind("# explained_variance:", 0) == 0);
  CHECK(line_count(rss) == 2 + 500 - 9);

  REQUIRE(run("rp-export --in " + q(dir / "p.csv") + " --m 2 --tau 1 --eps 0.3 --out " +
                  q(dir / "rp.pgm"),
              dir) == 0);
  CHECK(slurp(dir / "rp.pgm").rfind("P5\n499 499\n255\n", 0) == 0);
}

TEST_CASE("batch command") {
  TempDir dir;
  std::string imu = "acc_x,acc_y,acc_z,gyro_x,gyro_y,gyro_z\n";
  for (int i = 0; i < 200; ++i) {
    const double t = i * 0.1;
    imu += std::to_string(std::sin(t)) + "," + std::to_string(std::cos(t)) + ",1," +
           std::to_string(std::sin(2 * t)) + "," + std::to_string(std::sin(0.7 * t)) + "," +
           std::to_string(std::sin(0.3 * t) + 0.1 * std::cos(3.1 * t)) + "\n";
  }
  dir.write("a.csv", imu);
  dir.write("manifest.csv",
            "path,participant,sensor,activity,axis,smoothness,window_offset,window_length\n"
            "a.csv,P01,HS01,HN,,sg0,0,0\n");
  dir.write("config.txt", "m=3\ntau=2\neps=0.8\n");
  REQUIRE(run("batch --manifest " + q(dir / "manifest.csv") + " --config " +
                  q(dir / "config.txt") + " --out " + q(dir / "out.csv"),
              dir) == 0);
  const auto table = phaserqa::csv::read_file(dir / "out.csv");
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0][table.column_index("axis")] == "GyroZ");
  CHECK(table.rows[0][table.column_index("m")] == "3");
  CHECK(table.rows[0][table.column_index("error")].empty());
}
