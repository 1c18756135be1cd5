#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run qident(const std::string& args) {
  const std::string cmd = std::string("'") + QIDENT_CLI + "' --catalog '" + QIDENT_TEST_CATALOG + "' " + args +
                          " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("table prints a TSV counter table") {
  const Run r = qident("table spt --max 4");
  CHECK(r.code == 0);
  CHECK(r.out == "n\tspt\n1\t1\n2\t3\n3\t5\n4\t10\n");
  CHECK(qident("table N --max 3 --extra 1").out == "n\tN\n1\t0\n2\t1\n3\t0\n");
  CHECK(qident("table nope --max 3").code == 2);
}

TEST_CASE("wtable prints weighted sums") {
  const Run r = qident("wtable W_FFW --max 3");
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "3\tc^2 + c");
  CHECK(qident("wtable W_NOPE --max 3").code == 2);
}

TEST_CASE("expand") {
  Run r = qident("expand \"sum(n=1..inf, q^n/(1-q^n))\" --order 6");
  CHECK(r.code == 0);
  CHECK(r.out == "q + 2*q^2 + 2*q^3 + 3*q^4 + 2*q^5 + 4*q^6\n");
  r = qident("expand \"1/(1-z*q)\" -N 2 --z 1/2 --c 1");
  CHECK(r.out == "1 + 1/2*q + 1/4*q^2\n");
  CHECK(qident("expand \"sum(n=1..inf, q^n/(1-q^n)\" --order 6").code == 2);
  CHECK(qident("expand \"sum(n=1..inf, q^0)\" --order 6").code == 1);
}

TEST_CASE("verify exit codes") {
  Run r = qident("verify kluyver --order 100");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(qident("verify no_such_identity").code == 2);
  CHECK(qident("verify").code == 2);
  CHECK(qident("frobnicate").code == 2);
  CHECK(qident("verify kluyver --mode sideways").code == 2);
}

TEST_CASE("every listed id verifies") {
  const Run list = qident("list");
  REQUIRE(list.code == 0);
  std::string ids;
  int n = 0;
  for (const auto& line : lines(list.out)) {
    ids += " " + line.substr(0, line.find('\t'));
    ++n;
  }
  CHECK(n >= 80);
  const Run r = qident("verify" + ids + " --order 8 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == static_cast<std::size_t>(n));
  CHECK(lines(qident("list --only weighted").out).size() < static_cast<std::size_t>(n));
}

TEST_CASE("JSON output is byte-identical across runs") {
  const std::string args = "verify-all --order 12 --seed 7 --format json";
  const Run a = qident(args), b = qident(args + " --jobs 1");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("a perturbed catalog exits 1") {
  std::ifstream in(QIDENT_TEST_CATALOG);
  auto cat = nlohmann::ordered_json::parse(in);
  auto& arr = cat.is_object() ? cat["entries"] : cat;
  for (auto& e : arr)
    if (e["id"] == "kluyver") e["rhs"] = e["rhs"].get<std::string>() + " + q^5";
  const auto path = std::filesystem::temp_directory_path() / "qident_perturbed_catalog.json";
  std::ofstream(path) << cat.dump();
  const std::string prefix = std::string("'") + QIDENT_CLI + "' --catalog '" + path.string() + "' ";
  CHECK(WEXITSTATUS(std::system((prefix + "verify kluyver --order 10 >/dev/null").c_str())) == 1);
  CHECK(WEXITSTATUS(std::system((prefix + "verify kluyver --order 4 >/dev/null").c_str())) == 0);
  std::filesystem::remove(path);
}
