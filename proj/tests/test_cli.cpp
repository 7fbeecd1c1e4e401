#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    const fs::path d = fs::temp_directory_path() / "quartix_cli_tests";
    fs::create_directories(d);
    return d;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

struct RunResult {
    int code = -1;
    std::string out, err;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = scratch_dir() / "stdout.txt";
    const fs::path err = scratch_dir() / "stderr.txt";
    const std::string cmd =
        std::string(QUARTIX_BIN) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

const std::string kExample1 = std::string(QUARTIX_CONFIG_DIR) + "/example1.json";
const std::string kExample2 = std::string(QUARTIX_CONFIG_DIR) + "/example2.json";

}  // namespace

TEST_CASE("shipped example configs analyze to the published counts") {
    const RunResult r1 = run_cli("analyze " + kExample1);
    CHECK(r1.code == 0);
    CHECK(r1.out.find("\"table_row\": 7") != std::string::npos);
    CHECK(r1.out.find("\"n_fix\": 3") != std::string::npos);

    const RunResult r2 = run_cli("analyze " + kExample2);
    CHECK(r2.code == 0);
    CHECK(r2.out.find("\"table_row\": 17") != std::string::npos);
    CHECK(r2.out.find("\"n_fix\": 5") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical reports") {
    const RunResult a = run_cli("analyze " + kExample2);
    const RunResult b = run_cli("analyze " + kExample2);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("--out writes the same bytes as stdout") {
    const fs::path target = scratch_dir() / "report.json";
    const RunResult direct = run_cli("analyze " + kExample1);
    const RunResult filed = run_cli("analyze " + kExample1 + " --out " + target.string());
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(target) == direct.out);
}

TEST_CASE("text format is available") {
    const RunResult r = run_cli("analyze " + kExample2 + " --format text");
    CHECK(r.code == 0);
    CHECK(r.out.find("n_fix: 5") != std::string::npos);
    CHECK(r.out.find("regime: table_2 (row 17)") != std::string::npos);
}

TEST_CASE("input errors exit 1 with a field-naming message") {
    const fs::path bad = write_file("bad_coeff.json", R"({
      "schema": "quartix/1", "mode": "operator",
      "a": [1, 1, -1, 1, 1], "b": [1, 1, 1, 1, 1]})");
    const RunResult r = run_cli("analyze " + bad.string());
    CHECK(r.code == 1);
    CHECK(r.err.find("a2") != std::string::npos);

    CHECK(run_cli("analyze /nonexistent.json").code == 1);

    const fs::path garbled = write_file("garbled.json", "{");
    CHECK(run_cli("analyze " + garbled.string()).code == 1);
}

TEST_CASE("subcommand and config mode must match") {
    const fs::path gibbs = write_file("ones.json", R"({
      "schema": "quartix/1", "mode": "gibbs",
      "phi1": [1], "phi2": [1], "psi1": [1], "psi2": [1], "J": 1, "beta": 1})");
    const RunResult wrong = run_cli("analyze " + gibbs.string());
    CHECK(wrong.code == 1);
    CHECK(wrong.err.find("gibbs subcommand") != std::string::npos);
    CHECK(run_cli("gibbs " + kExample1).code == 1);
}

TEST_CASE("gibbs subcommand certifies the uniform model") {
    const fs::path ones = write_file("ones2.json", R"({
      "schema": "quartix/1", "mode": "gibbs",
      "phi1": [1], "phi2": [1], "psi1": [1], "psi2": [1], "J": 1, "beta": 1})");
    const RunResult r = run_cli("gibbs " + ones.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("\"n_measures\": 1") != std::string::npos);
    CHECK(r.out.find("\"certified\": true") != std::string::npos);

    const fs::path neg = write_file("neg.json", R"({
      "schema": "quartix/1", "mode": "gibbs",
      "phi1": [1], "phi2": [1, -2], "psi1": [1], "psi2": [1], "J": 1, "beta": 1})");
    const RunResult bad = run_cli("gibbs " + neg.string());
    CHECK(bad.code == 1);
    CHECK(bad.err.find("phi2") != std::string::npos);
}

TEST_CASE("--no-oracle refuses inputs outside the decisive regimes") {
    // symmetric extrema: the closed form cannot decide this one
    const fs::path sym = write_file("symmetric.json", R"({
      "schema": "quartix/1", "mode": "operator",
      "a": [5, 1, 1, 1, 0.2],
      "b": [1, 0.25, 0.66666666666666663, 1.9166666666666667, 4]})");
    const RunResult refused = run_cli("analyze " + sym.string() + " --no-oracle");
    CHECK(refused.code == 2);

    const RunResult resolved = run_cli("analyze " + sym.string());
    CHECK(resolved.code == 0);
    CHECK(resolved.out.find("\"method\": \"oracle_fallback\"") != std::string::npos);

    // the decisive examples run fine without the oracle
    const RunResult ok = run_cli("analyze " + kExample1 + " --no-oracle");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"n_fix\": 3") != std::string::npos);
}

TEST_CASE("flag validation happens before any work") {
    CHECK(run_cli("analyze " + kExample1 + " --oracle-only --no-oracle").code == 1);
    CHECK(run_cli("analyze " + kExample1 + " --tol -1").code == 1);
    CHECK(run_cli("analyze " + kExample1 + " --format yaml").code == 1);
    CHECK(run_cli("").code == 1);
    CHECK(run_cli("--help").code == 0);
}
