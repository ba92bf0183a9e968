#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lipdist/error.hpp"
#include "lipdist/report.hpp"

using namespace lipdist;

TEST_CASE("SHA-256 matches the published test vectors") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("configuration text sets fields and ignores comments") {
  RunConfig c;
  apply_config_text(c, "# comment\n n = 2\njgrid=8  # inline\n\ntheta = 0.25\njmin = 3\nout = results\n");
  CHECK(c.n == 2);
  CHECK(c.jgrid == 8);
  CHECK(c.theta == 0.25);
  CHECK(c.resolved_range().lo == 3);
  CHECK(c.resolved_range().hi == 6);
  CHECK(c.out == "results");
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("default range follows the grid") {
  RunConfig c;
  c.jgrid = 12;
  CHECK(c.resolved_range().lo == 6);
  CHECK(c.resolved_range().hi == 10);
}

TEST_CASE("bad configuration is a validation error") {
  RunConfig c;
  CHECK_THROWS_AS(apply_config_text(c, "colour = red\n"), ValidationError);
  CHECK_THROWS_AS(apply_config_text(c, "jgrid = twelve\n"), ValidationError);
  CHECK_THROWS_AS(apply_config_text(c, "jgrid\n"), ValidationError);
  RunConfig d;
  d.s = 1.5;
  CHECK_THROWS_AS(d.validate(), ValidationError);
  RunConfig e;
  e.n = 2;
  e.jgrid = 12;
  CHECK_THROWS_AS(e.validate(), ValidationError);
  RunConfig g;
  g.j_range = LevelRange{5, 13};
  CHECK_THROWS_AS(g.validate(), ValidationError);
}

TEST_CASE("reports are reproducible apart from the timestamp") {
  RunConfig c;
  const nlohmann::json inputs = {{"spec", "trig k=1 a=1"}};
  auto a = make_report("distance", c, inputs, {{"value", 1.5}});
  auto b = make_report("distance", c, inputs, {{"value", 1.5}});
  CHECK(a["input_hash"] == b["input_hash"]);
  CHECK(a["config"]["J_grid"] == 14);
  a.erase("generated_at");
  b.erase("generated_at");
  CHECK(dump_json(a) == dump_json(b));
  c.seed = 1;
  CHECK(make_report("distance", c, inputs, {})["input_hash"] != a["input_hash"]);
}

TEST_CASE("atomic writes replace the file and leave no temporary") {
  const auto dir = std::filesystem::temp_directory_path() / "lipdist_report_test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "nested" / "out.json";
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "nested" / "out.json.tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("config files load") {
  const auto path = std::filesystem::temp_directory_path() / "lipdist_config_test.cfg";
  {
    std::ofstream out(path);
    out << "s = 0.5\nwavelet-p = 4\n";
  }
  const RunConfig c = load_config_file(path);
  CHECK(c.s == 0.5);
  CHECK(c.wavelet_p == 4);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_config_file(path), ValidationError);
}
