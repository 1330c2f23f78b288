#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "seriate/cli.hpp"
#include "seriate/io.hpp"

using namespace seriate;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int line_count(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

// RAII temp file under the system temp directory.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kPathIncidence = "1,0,0\n1,1,0\n0,1,1\n0,0,1\n";

}  // namespace

TEST_CASE("seriate on the bundled 5-cycle emits the fifteen orderings") {
  const RunResult r = run({"seriate", "--family", "cycle", "--n", "5"});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(line_count(r.out), 15);
  CHECK(r.out.starts_with("1,2,3,5,4\n"));
}

TEST_CASE("count-only output is a bare number") {
  const RunResult r = run({"seriate", "--family", "cycle", "--n", "5", "--count-only"});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(r.out, "15\n");
  const RunResult gpg =
      run({"seriate", "--family", "petersen", "--n", "5", "--count-only"});
  CHECK_EQ(gpg.out, "5600\n");
}

TEST_CASE("json output is byte-identical across runs") {
  const std::vector<std::string> args = {"seriate", "--family", "modified_star", "--n", "6",
                                         "--format", "json"};
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK_EQ(a.code, 0);
  CHECK_EQ(a.out, b.out);
  CHECK(a.out.find("\"count\": 72") != std::string::npos);
  CHECK(a.out.find("\"method\": \"graphical\"") != std::string::npos);
  CHECK(a.out.find("\"multiplicity\": 2") != std::string::npos);
}

TEST_CASE("montecarlo output is seed-deterministic") {
  const std::vector<std::string> args = {"seriate", "--family",     "cycle",  "--n",
                                         "5",       "--method",     "montecarlo",
                                         "--samples", "1000",       "--seed", "7",
                                         "--format", "json"};
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK_EQ(a.code, 0);
  CHECK_EQ(a.out, b.out);
  CHECK(a.out.find("\"seed\": 7") != std::string::npos);
  CHECK(a.out.find("\"samples\": 1000") != std::string::npos);
}

TEST_CASE("oracle method agrees with the sweep on a small cycle") {
  const RunResult sweep = run({"seriate", "--family", "cycle", "--n", "6"});
  const RunResult oracle =
      run({"seriate", "--family", "cycle", "--n", "6", "--method", "oracle"});
  CHECK_EQ(oracle.code, 0);
  CHECK_EQ(sweep.out, oracle.out);
}

TEST_CASE("argument errors exit with code 1") {
  CHECK_EQ(run({}).code, 1);
  CHECK_EQ(run({"serrate"}).code, 1);
  CHECK_EQ(run({"seriate"}).code, 1);
  CHECK_EQ(run({"seriate", "--family", "cycle"}).code, 1);
  CHECK_EQ(run({"seriate", "--n", "5"}).code, 1);
  CHECK_EQ(run({"seriate", "--family", "triangle", "--n", "5"}).code, 1);
  CHECK_EQ(run({"seriate", "--family", "cycle", "--n", "5", "--frmt", "json"}).code, 1);
  CHECK_EQ(run({"seriate", "--family", "cycle", "--n", "2"}).code, 1);
  CHECK_EQ(run({"seriate", "--input", "/nonexistent/file.csv"}).code, 1);
  const TempFile f("seriate_both.csv", kPathIncidence);
  CHECK_EQ(run({"seriate", "--family", "cycle", "--n", "5", "--input", f.str()}).code, 1);
}

TEST_CASE("help prints usage and exits cleanly") {
  const RunResult top = run({"--help"});
  CHECK_EQ(top.code, 0);
  CHECK(top.out.find("seriate") != std::string::npos);
  CHECK_EQ(run({"seriate", "--help"}).code, 0);
}

TEST_CASE("a disconnected input exits with code 2") {
  const TempFile f("seriate_zero.csv", "0,0\n0,0\n0,0\n");
  const RunResult r = run({"seriate", "--input", f.str(), "--no-header"});
  CHECK_EQ(r.code, 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("an oversized expansion exits with code 3") {
  const RunResult r = run({"seriate", "--family", "petersen", "--n", "24", "--method",
                           "graphical", "--count-only"});
  CHECK_EQ(r.code, 3);
  const RunResult oracle =
      run({"seriate", "--family", "cycle", "--n", "9", "--method", "oracle"});
  CHECK_EQ(oracle.code, 3);
}

TEST_CASE("an eigenspace beyond dimension 2 exits with code 4 unless sampled") {
  const RunResult r =
      run({"seriate", "--family", "star", "--n", "6", "--method", "graphical"});
  CHECK_EQ(r.code, 4);
  const RunResult lines = run({"lines", "--family", "star", "--n", "6"});
  CHECK_EQ(lines.code, 4);

  const RunResult sampled = run({"seriate", "--family", "star", "--n", "6", "--format", "json",
                                 "--samples", "200", "--count-only"});
  CHECK_EQ(sampled.code, 0);
  CHECK(sampled.out.find("\"warning\"") != std::string::npos);
  CHECK(sampled.out.find("\"method\": \"montecarlo\"") != std::string::npos);
  CHECK(sampled.err.find("warning") != std::string::npos);
}

TEST_CASE("a simple fiedler value falls back to plain sorting") {
  const TempFile f("seriate_path.csv", kPathIncidence);
  const RunResult r = run({"seriate", "--input", f.str(), "--format", "json"});
  CHECK_EQ(r.code, 0);
  CHECK(r.out.find("\"method\": \"simple\"") != std::string::npos);
  CHECK(r.out.find("\"multiplicity\": 1") != std::string::npos);
  CHECK(r.out.find("[1,2,3,4]") != std::string::npos);
}

TEST_CASE("csv header sniffing and the no-header override") {
  const TempFile with_header("seriate_hdr.csv", std::string("a,b,c\n") + kPathIncidence);
  const RunResult r = run({"seriate", "--input", with_header.str()});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(r.out, "1,2,3,4\n");
  const RunResult forced = run({"seriate", "--input", with_header.str(), "--no-header"});
  CHECK_EQ(forced.code, 1);
  const TempFile plain("seriate_plain.csv", kPathIncidence);
  const RunResult no_header = run({"seriate", "--input", plain.str(), "--no-header"});
  CHECK_EQ(no_header.code, 0);
  CHECK_EQ(no_header.out, "1,2,3,4\n");
}

TEST_CASE("matrix market input, coordinate pattern form") {
  const TempFile f("seriate_mm.mtx",
                   "%%MatrixMarket matrix coordinate pattern general\n"
                   "% chain of four units\n"
                   "4 3 6\n"
                   "1 1\n2 1\n2 2\n3 2\n3 3\n4 3\n");
  const RunResult r = run({"seriate", "--input", f.str()});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(r.out, "1,2,3,4\n");
}

TEST_CASE("matrix market input, array real form") {
  const TempFile f("seriate_mm_arr.mtx",
                   "%%MatrixMarket matrix array real general\n"
                   "4 3\n"
                   "1\n1\n0\n0\n" "0\n1\n1\n0\n" "0\n0\n1\n1\n");
  const RunResult r = run({"seriate", "--input", f.str()});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(r.out, "1,2,3,4\n");
}

TEST_CASE("malformed inputs exit with code 1") {
  const TempFile ragged("seriate_ragged.csv", "1,2,3\n1,2\n");
  CHECK_EQ(run({"seriate", "--input", ragged.str(), "--no-header"}).code, 1);
  const TempFile negative("seriate_neg.csv", "1,-2\n3,4\n");
  CHECK_EQ(run({"seriate", "--input", negative.str(), "--no-header"}).code, 1);
  const TempFile bad_mm("seriate_bad.mtx", "%%MatrixMarket matrix coordinate complex general\n"
                                           "2 2 1\n1 1 1 0\n");
  CHECK_EQ(run({"seriate", "--input", bad_mm.str()}).code, 1);
  const TempFile word("seriate_word.csv", "1,2\nfoo,3\n");
  CHECK_EQ(run({"seriate", "--input", word.str()}).code, 1);
}

TEST_CASE("csv round trip preserves every value") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 5;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = (rng() % 2) ? static_cast<double>(rng() % 1000)
                              : static_cast<double>(rng() % 1000) / 7.0;
    const DataMatrix a(m);
    std::stringstream buf;
    write_csv_data_matrix(buf, a);
    const DataMatrix back = read_csv_data_matrix(buf);
    CHECK(back == a);
  }
}

TEST_CASE("output lands in the requested file byte-for-byte") {
  const auto out_path = std::filesystem::temp_directory_path() / "seriate_out.json";
  const RunResult direct =
      run({"seriate", "--family", "cycle", "--n", "5", "--format", "json"});
  const RunResult filed = run({"seriate", "--family", "cycle", "--n", "5", "--format", "json",
                               "--out", out_path.string()});
  CHECK_EQ(filed.code, 0);
  CHECK_EQ(filed.out, "");
  CHECK_EQ(slurp(out_path), direct.out);
  std::filesystem::remove(out_path);
}

TEST_CASE("line arrangement export in all three formats") {
  const RunResult csv = run({"lines", "--family", "cycle", "--n", "5"});
  CHECK_EQ(csv.code, 0);
  CHECK(csv.out.find("line,1,") != std::string::npos);
  int crossings = 0;
  for (std::size_t pos = 0; (pos = csv.out.find("crossing,", pos)) != std::string::npos; ++pos)
    ++crossings;
  CHECK_EQ(crossings, 5);

  const RunResult json = run({"lines", "--family", "cycle", "--n", "5", "--format", "json"});
  CHECK_EQ(json.code, 0);
  CHECK(json.out.find("\"crossings\"") != std::string::npos);
  CHECK_EQ(json.out, run({"lines", "--family", "cycle", "--n", "5", "--format", "json"}).out);

  const RunResult svg = run({"lines", "--family", "cycle", "--n", "5", "--format", "svg"});
  CHECK_EQ(svg.code, 0);
  CHECK(svg.out.starts_with("<svg"));
  CHECK(svg.out.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.out.find("</svg>") != std::string::npos);
}

TEST_CASE("a two-unit input never has a double fiedler value") {
  // A 2x2 laplacian has eigenvalues {0, 2s}, so the second one is always
  // simple and the line arrangement is unreachable from real input.
  const TempFile f("seriate_toy.csv", "1,1,0\n1,0,1\n");
  const RunResult r = run({"lines", "--input", f.str(), "--no-header"});
  CHECK_EQ(r.code, 4);
}

TEST_CASE("bench verifies a filtered row set") {
  const RunResult r = run({"bench", "--family", "cycle", "--n", "5"});
  CHECK_EQ(r.code, 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("1/1 rows passed") != std::string::npos);

  const RunResult mc = run({"bench", "--family", "cycle", "--n", "4", "--mc", "--samples",
                            "500", "--seed", "2"});
  CHECK_EQ(mc.code, 0);
  CHECK(mc.out.find("mc_found") != std::string::npos);
}

TEST_CASE("worker count from the environment") {
  char saved[32] = "";
  const char* prev = std::getenv("SERIATE_THREADS");
  if (prev) std::snprintf(saved, sizeof saved, "%s", prev);

  setenv("SERIATE_THREADS", "3", 1);
  CHECK_EQ(threads_from_env(), 3);
  setenv("SERIATE_THREADS", "garbage", 1);
  CHECK(threads_from_env() >= 1);
  setenv("SERIATE_THREADS", "0", 1);
  CHECK(threads_from_env() >= 1);
  unsetenv("SERIATE_THREADS");
  CHECK(threads_from_env() >= 1);

  if (prev) setenv("SERIATE_THREADS", saved, 1);
}
