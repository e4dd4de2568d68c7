#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "idstat/report.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs the installed binary with stdout/stderr captured to scratch files.
CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "idstat_cli_test";
  fs::create_directories(dir);
  const fs::path out = dir / ("out_" + std::to_string(counter));
  const fs::path err = dir / ("err_" + std::to_string(counter));
  ++counter;
  const std::string command = std::string(IDSTAT_BIN) + " " + args + " >" + out.string() +
                              " 2>" + err.string();
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return result;
}

class Workspace {
 public:
  Workspace() {
    static int counter = 0;
    root_ = fs::temp_directory_path() / ("idstat_cli_ws_" + std::to_string(counter++));
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(root_, ec);
  }

  const fs::path& root() const { return root_; }

  fs::path add(const std::string& rel, const std::string& contents) {
    const fs::path p = root_ / rel;
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << contents;
    return p;
  }

 private:
  fs::path root_;
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("project scan writes csv and exits zero") {
  Workspace ws;
  ws.add("proj/a.c", "int lpQueueHead;\nfloat monthly_interest;\n");
  const fs::path out = ws.root() / "rows.csv";
  auto r = run_cli("--language c --input " + (ws.root() / "proj").string() + " --out " +
                   out.string());
  CHECK(r.exit_code == 0);
  auto rows = idstat::read_rows(slurp(out), idstat::RowFormat::Csv);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].project == "proj");
  CHECK(rows[0].language == "C");
  CHECK(rows[0].hungarian == 1);
  CHECK(rows[0].underline == 1);
  CHECK(rows[0].total_ids == 2);
  CHECK(rows[0].total_loc == 2);
  CHECK(rows[0].total_files == 1);
  // with --out, stdout carries only the summary tables
  CHECK(r.out.find("match ratio") != std::string::npos);
  CHECK(r.out.find("project,version,language") == std::string::npos);
}

TEST_CASE("rows go to stdout when --out is omitted") {
  Workspace ws;
  ws.add("proj/a.c", "int onlyOne;\n");
  auto r = run_cli("--language c --input " + (ws.root() / "proj").string());
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] ==
        "project,version,language,pascal,camel,hungarian,underline,capital,total_ids,"
        "total_loc,total_files");
  CHECK(lines[1] == "proj,,C,0,1,0,0,0,1,1,1");
}

TEST_CASE("jsonl format emits parseable rows") {
  Workspace ws;
  ws.add("proj/a.java", "class Account {}\n");
  const fs::path out = ws.root() / "rows.jsonl";
  auto r = run_cli("--language java --mode project --input " + (ws.root() / "proj").string() +
                   " --format jsonl --out " + out.string());
  CHECK(r.exit_code == 0);
  auto rows = idstat::read_rows(slurp(out), idstat::RowFormat::Jsonl);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].language == "Java");
  CHECK(rows[0].pascal == 1);
}

TEST_CASE("multi mode emits one row per project subdirectory") {
  Workspace ws;
  ws.add("corpus/p1/a.c", "int one;\n");
  ws.add("corpus/p2/b.c", "int two;\n");
  const fs::path out = ws.root() / "rows.csv";
  auto r = run_cli("--language c --mode multi --input " + (ws.root() / "corpus").string() +
                   " --out " + out.string());
  CHECK(r.exit_code == 0);
  auto rows = idstat::read_rows(slurp(out), idstat::RowFormat::Csv);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].project == "p1");
  CHECK(rows[1].project == "p2");
}

TEST_CASE("file mode scans a single file") {
  Workspace ws;
  const fs::path file = ws.add("main.c", "int a;\nint b;\nint c;\n");
  auto r = run_cli("--language c --mode file --input " + file.string() + " --out " +
                   (ws.root() / "rows.csv").string());
  CHECK(r.exit_code == 0);
  auto rows = idstat::read_rows(slurp(ws.root() / "rows.csv"), idstat::RowFormat::Csv);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].project == "main.c");
  CHECK(rows[0].total_loc == 3);
}

TEST_CASE("missing input path exits 1 and names the path") {
  auto r = run_cli("--language c --input /no/such/path/at/all");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("/no/such/path/at/all") != std::string::npos);
}

TEST_CASE("a scan matching zero files exits 2") {
  Workspace ws;
  ws.add("proj/readme.txt", "nothing to see\n");
  auto r = run_cli("--language java --input " + (ws.root() / "proj").string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("usage errors exit non-zero with help text") {
  auto bad_enum = run_cli("--language cobol --input .");
  CHECK(bad_enum.exit_code == 1);
  CHECK(bad_enum.err.find("--language") != std::string::npos);

  auto unknown = run_cli("--language c --input . --frobnicate");
  CHECK(unknown.exit_code == 1);

  auto missing = run_cli("--language c");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("--input") != std::string::npos);
}

TEST_CASE("help exits zero") {
  auto r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("--language") != std::string::npos);
}

TEST_CASE("detailed mode emits per-identifier json lines on stdout") {
  Workspace ws;
  ws.add("proj/a.c", "int lpQueueHead; lpQueueHead = 0;\n");
  auto r = run_cli("--language c --detailed --input " + (ws.root() / "proj").string() +
                   " --out " + (ws.root() / "rows.csv").string());
  CHECK(r.exit_code == 0);
  bool found = false;
  for (const std::string& line : lines_of(r.out)) {
    if (line.starts_with("{")) {
      CHECK(line.find("\"name\":\"lpQueueHead\"") != std::string::npos);
      CHECK(line.find("\"convention\":\"Hungarian\"") != std::string::npos);
      CHECK(line.find("\"occurrences\":2") != std::string::npos);
      CHECK(line.find("\"lines\":[1,1]") != std::string::npos);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("without --out, stdout carries rows, then detail, then summary") {
  Workspace ws;
  ws.add("proj/a.c", "int lpQueueHead;\n");
  auto r = run_cli("--language c --detailed --input " + (ws.root() / "proj").string());
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 4);
  CHECK(lines[0].starts_with("project,version,language"));
  CHECK(lines[1].starts_with("proj,,C,"));
  CHECK(lines[2].starts_with("{\"project\":\"proj\""));
  const auto summary_at = r.out.find("Totals and match ratio");
  CHECK(summary_at != std::string::npos);
  CHECK(summary_at > r.out.find("lpQueueHead"));
}

TEST_CASE("quiet suppresses the detailed listing") {
  Workspace ws;
  ws.add("proj/a.c", "int lpQueueHead;\n");
  auto r = run_cli("--language c --detailed --quiet --input " + (ws.root() / "proj").string() +
                   " --out " + (ws.root() / "rows.csv").string());
  CHECK(r.exit_code == 0);
  for (const std::string& line : lines_of(r.out)) CHECK_FALSE(line.starts_with("{"));
}

TEST_CASE("debug logs scanned files to stderr only") {
  Workspace ws;
  ws.add("proj/a.c", "int x;\n");
  auto r = run_cli("--language c --debug --input " + (ws.root() / "proj").string() + " --out " +
                   (ws.root() / "rows.csv").string());
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("scanning") != std::string::npos);
  CHECK(r.err.find("a.c") != std::string::npos);
  CHECK(r.out.find("scanning") == std::string::npos);
}

TEST_CASE("diagnostics stay on stderr and never pollute the data stream") {
  Workspace ws;
  ws.add("proj/bad.c", "/* never closed\n");
  const fs::path out = ws.root() / "rows.csv";
  auto r = run_cli("--language c --quiet --input " + (ws.root() / "proj").string() + " --out " +
                   out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("unterminated block comment") != std::string::npos);
  CHECK(r.out.find("unterminated") == std::string::npos);
  CHECK_NOTHROW(idstat::read_rows(slurp(out), idstat::RowFormat::Csv));
}
