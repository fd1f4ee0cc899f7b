// End-to-end checks of the sukit binary: output formats, exit statuses and
// determinism.  The binary path comes from the build system.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(SUKIT_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), n);
  int raw = pclose(pipe);
  return RunResult{WEXITSTATUS(raw), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/sukit_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const std::string kChain2 = "frame chain2\npoints 2\nedge 0 1\nclosure\nend\n";

}  // namespace

TEST_CASE("cli parse") {
  auto r = run_cli("parse \"~p -> q\"");
  CHECK(r.status == 0);
  CHECK(r.out == "~p -> q\n");

  auto bad = run_cli("parse \"p & q | r\"", true);
  CHECK(bad.status == 3);
  CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("cli validate") {
  std::string path = write_temp("chain2.kf", kChain2);
  auto ok = run_cli("validate " + path + " \"p -> p\"");
  CHECK(ok.status == 0);
  CHECK(ok.out == "true\n");

  auto refuted = run_cli("validate " + path + " \"p | ~p\"");
  CHECK(refuted.status == 1);
  CHECK(refuted.out == "false\nval p 1\npoint 0\n");
}

TEST_CASE("cli su2 and uni") {
  auto med = run_cli("medvedev --size 3");
  REQUIRE(med.status == 0);
  std::string path = write_temp("med3.kf", med.out);

  auto su2 = run_cli("su2 " + path);
  CHECK(su2.status == 0);
  CHECK(su2.out == "true\n");
  auto uni = run_cli("uni " + path);
  CHECK(uni.status == 0);

  std::string fork = write_temp(
      "fork3.kf", "frame fork3\npoints 4\nedge 0 1\nedge 0 2\nedge 0 3\nclosure\nend\n");
  auto f = run_cli("su2 " + fork);
  CHECK(f.status == 1);
  CHECK(f.out == "false\nwitness w=0 x=1 y=2\n");
}

TEST_CASE("cli medvedev output shape") {
  auto r = run_cli("medvedev --size 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("frame medvedev2\n") == 0);
  CHECK(r.out.find("# pointmap 2 = {1,2}") != std::string::npos);
  CHECK(r.out.find("points 3\n") != std::string::npos);
}

TEST_CASE("cli star") {
  auto r = run_cli("star --size 4");
  CHECK(r.status == 0);
  CHECK(r.out == "true\n");
}

TEST_CASE("cli product") {
  std::string one = write_temp("one.kf", "frame one\npoints 1\nedge 0 0\nend\n");
  auto r = run_cli("product " + one + " " + one);
  CHECK(r.status == 0);
  CHECK(r.out.find("frame one_x_one\n") == 0);
  CHECK(r.out.find("points 3\n") != std::string::npos);
  CHECK(r.out.find("# pointmap 2 = pair (0, 0)") != std::string::npos);
}

TEST_CASE("cli prove") {
  auto ipc = run_cli("prove --logic ipc \"p, p -> q |- q\"");
  CHECK(ipc.status == 0);
  CHECK(ipc.out.find("provable\n") == 0);

  auto open = run_cli("prove --logic ipc \"|- p | ~p\"");
  CHECK(open.status == 1);
  CHECK(open.out == "not provable\n");

  auto su = run_cli("prove --logic su --depth 0 \"|- (~p -> q | r) -> (~p -> q) | (~p -> r)\"");
  CHECK(su.status == 0);
  CHECK(su.out.find("provable\ninstance: ") == 0);

  auto inconclusive = run_cli("prove --logic su --depth 0 \"|- p | ~p\"");
  CHECK(inconclusive.status == 2);
  CHECK(inconclusive.out == "inconclusive\n");

  // Premises fold through the deduction theorem.
  auto with_premises = run_cli("prove --logic su --depth 0 \"~p -> q | r |- (~p -> q) | (~p -> r)\"");
  CHECK(with_premises.status == 0);
}

TEST_CASE("cli countermodel") {
  auto found = run_cli("countermodel --max-points 4 \"p | ~p\"");
  CHECK(found.status == 1);
  CHECK(found.out.find("countermodel found\n") == 0);
  CHECK(found.out.find("points 2\n") != std::string::npos);
  CHECK(found.out.find("point 0\n") != std::string::npos);

  auto none = run_cli("countermodel --max-points 3 \"p -> p\"");
  CHECK(none.status == 2);
  CHECK(none.out == "no countermodel up to 3 points\n");
}

TEST_CASE("cli dp-witness") {
  std::string m1 = write_temp("m1.km",
                              "frame m1\npoints 2\nedge 0 1\nclosure\nval p 1\nend\n");
  std::string m2 = write_temp("m2.km",
                              "frame m2\npoints 2\nedge 0 1\nclosure\nval q 1\nend\n");
  auto r = run_cli("dp-witness " + m1 + " " + m2 + " \"p | ~p\" \"q | ~q\"");
  CHECK(r.status == 0);
  CHECK(r.out.find("points 8\n") != std::string::npos);
  CHECK(r.out.find("root 4\n") != std::string::npos);
  CHECK(r.out.find("verified:") != std::string::npos);

  // Same-variable models need --rename-apart to keep the variables distinct.
  auto clash = run_cli("dp-witness " + m1 + " " + m1 + " \"p | ~p\" \"p | ~p\" --rename-apart");
  CHECK(clash.status == 0);
  CHECK(clash.out.find("refutes p | ~p | (p_2 | ~p_2)") != std::string::npos);
  CHECK(clash.out.find("val p_2 3") != std::string::npos);
}

TEST_CASE("cli correspondence") {
  auto r = run_cli("correspondence --enumerate 3");
  CHECK(r.status == 0);
  CHECK(r.out == "29 frames, 29 agree\n");

  auto rnd = run_cli("correspondence --random 12 --points 5 --seed 7");
  CHECK(rnd.status == 0);
  CHECK(rnd.out == "12 frames, 12 agree\n");

  auto report = run_cli("correspondence --enumerate 2 --report");
  CHECK(report.status == 0);
  CHECK(report.out.find("e2:0 su2=") != std::string::npos);
  CHECK(report.out.find("4 frames, 4 agree\n") != std::string::npos);
}

TEST_CASE("cli output is byte-identical across runs") {
  auto a = run_cli("correspondence --random 8 --points 6 --seed 11 --report");
  auto b = run_cli("correspondence --random 8 --points 6 --seed 11 --report");
  CHECK(a.out == b.out);
  CHECK(a.status == b.status);
}

TEST_CASE("cli input errors give status 3") {
  auto missing = run_cli("su2 /nonexistent.kf", true);
  CHECK(missing.status == 3);
  CHECK(missing.out.find("error:") != std::string::npos);

  auto badflag = run_cli("correspondence --random 5", true);
  CHECK(badflag.status == 3);
}

TEST_CASE("upset cap env var") {
  std::string path = write_temp("chain2b.kf", kChain2);
  std::string cmd = "SU_KIT_CAP_UPSETS=2 " + std::string(SUKIT_CLI_PATH) +
                    " validate " + path + " \"p -> p\" 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), n);
  int status = WEXITSTATUS(pclose(pipe));
  CHECK(status == 3);
  CHECK(out.find("exceeds cap") != std::string::npos);
}
