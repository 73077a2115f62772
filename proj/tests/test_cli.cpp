#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

// Runs the tool through the shell; stderr is discarded.
Outcome run(const std::string& args) {
  std::string cmd = std::string(LATTICE_CODES_BIN) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string temp_path(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "latcodes_cli_tests";
  fs::create_directories(dir);
  return (dir / name).string();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, EnumerateCounterexample) {
  Outcome o = run("enumerate --graph torus:4,6 --kind one-perfect --count-only");
  EXPECT_EQ(o.out, "0\n");
  EXPECT_EQ(o.code, 1);
  o = run("enumerate --graph torus:5,5 --kind one-perfect --count-only --parallel 2");
  EXPECT_EQ(o.out, "10\n");
  EXPECT_EQ(o.code, 0);
}

TEST(Cli, EnumerateOrbitsAndLimit) {
  Outcome o = run("enumerate --graph torus:5,5 --kind one-perfect --orbits");
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(has(o.out, "orbits: 2"));
  o = run("enumerate --graph prism:6 --kind tpc --limit 1");
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(has(o.out, "count: 1"));
}

TEST(Cli, PhiConstruction) {
  Outcome o = run("construct phi --period 011");
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(has(o.out, "\"dims\"")) << o.out;
  EXPECT_TRUE(has(o.out, "12")) << o.out;
  EXPECT_TRUE(has(o.out, "\"ptpc\""));
}

TEST(Cli, ConstructThenVerify) {
  const std::pair<std::string, std::string> cases[] = {
      {"phi --period 0", "ptpc: true"},
      {"phi --period 1", "ptpc: true"},
      {"phi --period 011", "ptpc: true"},
      {"d-perfect --d 1 --dims 5,5", "d-perfect: true"},
      {"d-perfect --d 1 --dims 10,5 --mirror", "d-perfect: true"},
      {"d-perfect --d 2 --dims 13,13", "d-perfect: true"},
      {"r-perfect --r 3 --dims 7,7,7", "one-perfect: true"},
      {"r-perfect --r 4 --dims 9,9,3,9", "one-perfect: true"},
      {"s2 --dims 4,4", "ptpc: true"},
      {"s2 --dims 8,12", "ptpc: true"},
      {"prism-tpc --n 6", "tpc: true"},
      {"prism-tpc --n 12", "tpc: true"},
      {"prism-one-perfect --n 8", "one-perfect: true"},
  };
  const std::string file = temp_path("code.json");
  for (const auto& [args, verdict] : cases) {
    for (int cls : {0, 1}) {
      Outcome c = run("construct " + args + " --class " + std::to_string(cls) + " --out " + file);
      if (c.code != 0) {
        // Single-code constructions take no class beyond 0.
        EXPECT_EQ(cls, 1) << args;
        continue;
      }
      Outcome v = run("verify --file " + file);
      EXPECT_EQ(v.code, 0) << args;
      EXPECT_TRUE(has(v.out, verdict)) << args << "\n" << v.out;
    }
  }
}

TEST(Cli, VerifyReportsFailure) {
  const std::string file = temp_path("bad.json");
  FILE* f = fopen(file.c_str(), "w");
  ASSERT_TRUE(f);
  fputs(R"({"graph": {"family": "torus", "dims": [4, 4]}, "kind": "tpc", "members": [[0, 0]]})", f);
  fclose(f);
  Outcome v = run("verify --file " + file);
  EXPECT_EQ(v.code, 1);
  EXPECT_TRUE(has(v.out, "tpc: false"));
  EXPECT_EQ(run("verify --file " + temp_path("does-not-exist.json")).code, 2);
}

TEST(Cli, Analyze) {
  Outcome q = run("analyze quotient --d 1 --dims 5,5");
  EXPECT_EQ(q.code, 0);
  EXPECT_TRUE(has(q.out, "\"equals_circulant\": true"));
  Outcome a = run("analyze pds-array --period 0 --window 0,0,11,11");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.substr(0, 12), "32 12 32 12\n");
  Outcome k = run("analyze kg --m 2 --n 3 --search");
  EXPECT_EQ(k.code, 0);
  EXPECT_TRUE(has(k.out, "search: true"));
  const std::string file = temp_path("s2.json");
  ASSERT_EQ(run("construct s2 --dims 4,4 --out " + file).code, 0);
  Outcome fl = run("analyze f-labeling --file " + file);
  EXPECT_EQ(fl.code, 0);
  EXPECT_EQ(fl.out, "2213\n0044\n1322\n4400\n");
}

TEST(Cli, Render) {
  const std::string file = temp_path("render.json");
  ASSERT_EQ(run("construct s2 --dims 4,4 --out " + file).code, 0);
  Outcome ascii = run("render --file " + file + " --ascii");
  EXPECT_EQ(ascii.out, "**..\n....\n..**\n....\n");
  Outcome svg = run("render --file " + file + " --svg");
  EXPECT_EQ(svg.code, 0);
  EXPECT_TRUE(has(svg.out, "</svg>"));
  Outcome m = run("render m-array --period 00011101");
  EXPECT_EQ(m.out.substr(0, 66), "64206420642064275310642753175310\n75317531753175310642753106420642\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("enumerate --graph torus:4").code, 2);
  EXPECT_EQ(run("enumerate --graph cube:3 --kind tpc").code, 2);
  EXPECT_EQ(run("enumerate --graph torus:15,15 --kind pds").code, 2);
  EXPECT_EQ(run("construct s2 --dims 4,5").code, 2);
  EXPECT_EQ(run("construct phi --period 012").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, GuardOverride) {
  std::string cmd = "LATTICE_CODES_GUARD=8 " + std::string(LATTICE_CODES_BIN) +
                    " enumerate --graph torus:4,4 --kind ptpc --count-only >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

TEST(Cli, CheckTheoremsSingleCriterion) {
  Outcome o = run("check-theorems --criterion 1");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out.substr(0, 4), "PASS");
}
