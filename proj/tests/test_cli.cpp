#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "tcent/cli.hpp"
#include "tcent/tvg.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result tcent_run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"tcent"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  int code = tcent::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tcent-cli-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("cli: generate, sweep, dist, rank, churn on a small TVG") {
  TempDir dir;
  Result gen = tcent_run({"generate", "--nodes", "20", "--instants", "60", "--prob", "0.02", "--seed", "5", "--out",
                          dir / "g.tvg"});
  REQUIRE(gen.code == 0);
  CHECK(gen.err.find("# tcent ") != std::string::npos);
  CHECK(gen.err.find("seed=5") != std::string::npos);
  CHECK(slurp(dir / "g.tvg").rfind("tvg v1 20 60\n", 0) == 0);

  Result ct = tcent_run({"ct", dir / "g.tvg", "--tau", "0.1", "--range", "0:40", "--out", dir / "ct.csv"});
  REQUIRE(ct.code == 0);
  CHECK(ct.err.find("required_count=2") != std::string::npos);
  const std::string table = slurp(dir / "ct.csv");
  CHECK(count_lines(table) == 41);
  CHECK(table.rfind("time_index,value,unreached_starts\n", 0) == 0);

  // Default range is the first ceil(0.825 N) instants; stdout when no --out.
  Result tcc = tcent_run({"tcc", dir / "g.tvg", "--phi", "10"});
  REQUIRE(tcc.code == 0);
  CHECK(count_lines(tcc.out) == 1 + 50);

  Result dist = tcent_run({"dist", dir / "ct.csv", "--kind", "cdf"});
  REQUIRE(dist.code == 0);
  CHECK(dist.out.rfind("value,cum_fraction\n", 0) == 0);
  CHECK(dist.out.substr(dist.out.size() - 3) == ",1\n");

  Result rank = tcent_run({"rank", dir / "ct.csv", "--metric", "ct", "--k", "3"});
  REQUIRE(rank.code == 0);
  CHECK(count_lines(rank.out) == 4);

  Result churn = tcent_run({"churn", dir / "g.tvg"});
  REQUIRE(churn.code == 0);
  CHECK(churn.out.rfind("churn_rate\n", 0) == 0);
}

TEST_CASE("cli: compare writes summary and CSV") {
  TempDir dir;
  REQUIRE(tcent_run({"generate", "--nodes", "16", "--instants", "80", "--prob", "0.03", "--out", dir / "g.tvg"}).code ==
          0);
  Result cmp = tcent_run({"compare", dir / "g.tvg", "--metric", "tcc", "--phi", "20", "--k", "5", "--seed", "7",
                          "--out", dir / "cmp.csv"});
  REQUIRE(cmp.code == 0);
  CHECK(cmp.out.find("top-k") != std::string::npos);
  CHECK(cmp.out.find("random-k") != std::string::npos);
  const std::string csv = slurp(dir / "cmp.csv");
  CHECK(count_lines(csv) == 11);
  CHECK(csv.find("\nrandom,5,") != std::string::npos);
}

TEST_CASE("cli: ingest") {
  TempDir dir;
  {
    std::ofstream f(dir / "contacts.csv");
    f << "timestamp,a,b\r\n0,alice,bob\r\n10,bob,alice\r\n30,bob,carol\r\n95,carol,dave\r\n";
  }
  Result r = tcent_run({"ingest", "--granularity", "30", dir / "contacts.csv", "--out", dir / "m.tvg", "--labels",
                        dir / "labels.csv"});
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "m.tvg") == "tvg v1 4 4\n0 0 1\n1 1 2\n3 2 3\n");
  CHECK(slurp(dir / "labels.csv") == "node_id,label\n0,alice\n1,bob\n2,carol\n3,dave\n");

  Result windowed = tcent_run({"ingest", dir / "contacts.csv", "--start", "30", "--end", "89", "--out", dir / "w.tvg"});
  REQUIRE(windowed.code == 0);
  CHECK(windowed.err.find("rejected 3") != std::string::npos);
}

TEST_CASE("cli: identical config gives identical bytes for any worker count") {
  TempDir dir;
  REQUIRE(tcent_run({"generate", "--paper-defaults", "--seed", "3", "--out", dir / "a.tvg"}).code == 0);
  REQUIRE(tcent_run({"generate", "--paper-defaults", "--seed", "3", "--out", dir / "b.tvg"}).code == 0);
  CHECK(slurp(dir / "a.tvg") == slurp(dir / "b.tvg"));

  REQUIRE(tcent_run({"tcc", dir / "a.tvg", "--phi", "25", "--range", "0:40", "--workers", "1", "--out",
                     dir / "w1.csv"}).code == 0);
  REQUIRE(tcent_run({"tcc", dir / "a.tvg", "--phi", "25", "--range", "0:40", "--workers", "4", "--out",
                     dir / "w4.csv"}).code == 0);
  CHECK(slurp(dir / "w1.csv") == slurp(dir / "w4.csv"));
}

TEST_CASE("cli: exit codes") {
  TempDir dir;
  CHECK(tcent_run({}).code == 1);
  CHECK(tcent_run({"bogus"}).code == 1);
  CHECK(tcent_run({"--help"}).code == 0);
  CHECK(tcent_run({"generate", "--out", dir / "x.tvg"}).code == 1);
  CHECK(tcent_run({"generate", "--paper-defaults", "--nodes", "5", "--out", dir / "x.tvg"}).code == 1);
  CHECK(tcent_run({"ct", dir / "missing.tvg", "--tau", "0.1"}).code == 2);

  {
    std::ofstream f(dir / "bad.tvg");
    f << "tvg v1 3 2\n0 1 1\n";
  }
  CHECK(tcent_run({"churn", dir / "bad.tvg"}).code == 2);

  {
    std::ofstream f(dir / "ok.tvg");
    f << "tvg v1 3 4\n0 0 1\n";
  }
  CHECK(tcent_run({"ct", dir / "ok.tvg", "--tau", "1.5"}).code == 1);
  CHECK(tcent_run({"ct", dir / "ok.tvg", "--tau", "0.5", "--range", "3:2"}).code == 1);
  CHECK(tcent_run({"ct", dir / "ok.tvg", "--tau", "0.5", "--range", "0:5"}).code == 1);
  CHECK(tcent_run({"tcc", dir / "ok.tvg", "--phi", "0"}).code == 1);
  CHECK(tcent_run({"compare", dir / "ok.tvg", "--metric", "ct", "--k", "1"}).code == 1);
  CHECK(tcent_run({"compare", dir / "ok.tvg", "--metric", "ct", "--tau", "0.5", "--k", "3"}).code == 1);
  CHECK(tcent_run({"dist", dir / "ok.tvg"}).code == 2);

  {
    std::ofstream f(dir / "contacts.csv");
    f << "0,a,b\nnope,a,b\n";
  }
  Result bad_ingest = tcent_run({"ingest", dir / "contacts.csv", "--out", dir / "m.tvg"});
  CHECK(bad_ingest.code == 2);
  CHECK(bad_ingest.err.find("line 2") != std::string::npos);
}

TEST_CASE("cli: oracle-check") {
  Result r = tcent_run({"oracle-check", "--instances", "50", "--seed", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mismatches 0") != std::string::npos);
}
