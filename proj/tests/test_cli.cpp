#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("noma_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// args are appended after the binary path; output captures stdout + stderr
RunResult run_cli(const TempDir& tmp, const std::string& args,
                  const std::string& env_prefix = "") {
    const std::string log = tmp.file("last_run.log");
    const std::string cmd =
        env_prefix + " \"" + NOMALAB_PATH + "\" " + args + " > " + log + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.output = slurp(log);
    return r;
}

const std::string kTinySweep =
    "sweep --constellation qpsk --gammas 0.5 --alphas 0.8 --snrs 0,4 "
    "--target-errors 100 --max-symbols 16384";

}  // namespace

TEST_CASE("analyze prints both optima and exits cleanly") {
    TempDir tmp;
    const RunResult r = run_cli(tmp, "analyze");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("constellation qpsk") != std::string::npos);
    CHECK(r.output.find("optimal alpha: 0.8") != std::string::npos);
    CHECK(r.output.find("constellation 16qam") != std::string::npos);
    CHECK(r.output.find("optimal alpha: 0.9411764706") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("sweep writes a parseable csv and reports the row count") {
    TempDir tmp;
    const std::string out = tmp.file("tiny.csv");
    const RunResult r = run_cli(tmp, kTinySweep + " --seed 3 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("wrote 2 rows") != std::string::npos);

    const std::string text = slurp(out);
    CHECK(text.rfind("constellation,detector,gamma,alpha,snr_db", 0) == 0);
    int lines = 0;
    for (char ch : text) lines += ch == '\n';
    CHECK(lines == 3);  // header + 2 points
    CHECK_FALSE(fs::exists(out + ".tmp"));
}

TEST_CASE("worker count never changes the bytes") {
    TempDir tmp;
    const std::string a = tmp.file("w1.csv");
    const std::string b = tmp.file("w6.csv");
    CHECK(run_cli(tmp, kTinySweep + " --seed 3 --workers 1 --out " + a).exit_code == 0);
    CHECK(run_cli(tmp, kTinySweep + " --seed 3 --workers 6 --out " + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("seed resolution: flag beats environment, environment beats default") {
    TempDir tmp;
    const std::string flagged = tmp.file("flag.csv");
    const std::string env = tmp.file("env.csv");
    const std::string both = tmp.file("both.csv");
    const std::string other = tmp.file("other.csv");

    CHECK(run_cli(tmp, kTinySweep + " --seed 3 --out " + flagged).exit_code == 0);
    CHECK(run_cli(tmp, kTinySweep + " --out " + env, "NOMA_LAB_SEED=3").exit_code == 0);
    CHECK(slurp(flagged) == slurp(env));

    CHECK(run_cli(tmp, kTinySweep + " --seed 3 --out " + both, "NOMA_LAB_SEED=9")
              .exit_code == 0);
    CHECK(slurp(both) == slurp(flagged));

    CHECK(run_cli(tmp, kTinySweep + " --seed 5 --out " + other).exit_code == 0);
    CHECK(slurp(other) != slurp(flagged));
}

TEST_CASE("config file supplies defaults, flags override") {
    TempDir tmp;
    const std::string cfg = tmp.file("run.cfg");
    std::ofstream(cfg) << "constellation = qpsk\n"
                       << "gammas = 0.5\n"
                       << "alphas = 0.8\n"
                       << "snrs = 0,4\n"
                       << "target-errors = 100\n"
                       << "max-symbols = 16384\n"
                       << "seed = 3\n";
    const std::string from_cfg = tmp.file("cfg.csv");
    const std::string from_flags = tmp.file("flags.csv");
    const std::string overridden = tmp.file("override.csv");

    CHECK(run_cli(tmp, "sweep --config " + cfg + " --out " + from_cfg).exit_code == 0);
    CHECK(run_cli(tmp, kTinySweep + " --seed 3 --out " + from_flags).exit_code == 0);
    CHECK(slurp(from_cfg) == slurp(from_flags));

    CHECK(run_cli(tmp, "sweep --config " + cfg + " --snrs 0,8 --out " + overridden)
              .exit_code == 0);
    CHECK(slurp(overridden) != slurp(from_cfg));
    CHECK(slurp(overridden).find(",8,") != std::string::npos);

    const std::string bad = tmp.file("bad.cfg");
    std::ofstream(bad) << "banana = 1\n";
    const RunResult r =
        run_cli(tmp, "sweep --config " + bad + " --out " + tmp.file("x.csv"));
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("banana") != std::string::npos);
}

TEST_CASE("presets expand to full sweeps") {
    TempDir tmp;
    const std::string out = tmp.file("preset.csv");
    // trimmed error budget keeps this a smoke test, not a measurement
    const RunResult r = run_cli(
        tmp, "sweep --preset fig2 --snrs 0,10 --target-errors 100 "
             "--max-symbols 16384 --seed 3 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("wrote 12 rows") != std::string::npos);  // 6 alphas x 2

    const RunResult bad = run_cli(tmp, "sweep --preset fig99 --out " + out);
    CHECK(bad.exit_code == 1);
}

TEST_CASE("sweep rejects bad invocations with exit code 1") {
    TempDir tmp;
    CHECK(run_cli(tmp, kTinySweep).exit_code == 1);  // no --out
    CHECK(run_cli(tmp, "sweep --gammas 0.5 --snrs 0 --alphas 0.3 --out " +
                           tmp.file("y.csv")).exit_code == 1);
    CHECK(run_cli(tmp, kTinySweep + " --workers 0 --out " + tmp.file("z.csv"))
              .exit_code == 1);
    CHECK(run_cli(tmp, kTinySweep + " --detector zf --out " + tmp.file("w.csv"))
              .exit_code == 1);
    CHECK(run_cli(tmp, "frobnicate").exit_code == 1);
    CHECK(run_cli(tmp, "").exit_code == 1);  // a subcommand is required
}

TEST_CASE("sweep can render its own plot") {
    TempDir tmp;
    const std::string out = tmp.file("curve.csv");
    const std::string svg = tmp.file("curve.svg");
    const RunResult r =
        run_cli(tmp, kTinySweep + " --seed 3 --out " + out + " --svg " + svg);
    CHECK(r.exit_code == 0);
    const std::string text = slurp(svg);
    CHECK(text.rfind("<svg", 0) == 0);
}

TEST_CASE("plot renders an existing csv and fails cleanly on a missing one") {
    TempDir tmp;
    const std::string out = tmp.file("curve.csv");
    const std::string svg = tmp.file("replot.svg");
    CHECK(run_cli(tmp, kTinySweep + " --seed 3 --out " + out).exit_code == 0);

    const RunResult ok =
        run_cli(tmp, "plot --csv " + out + " --svg " + svg + " --title demo");
    CHECK(ok.exit_code == 0);
    CHECK(slurp(svg).find("demo") != std::string::npos);

    const RunResult missing =
        run_cli(tmp, "plot --csv " + tmp.file("absent.csv") + " --svg " + svg);
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("error:") != std::string::npos);
}

TEST_CASE("validate passes at a healthy sample size") {
    TempDir tmp;
    const RunResult r = run_cli(tmp, "validate --samples 150000 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("validate reports statistical failure with exit code 2") {
    TempDir tmp;
    // 400 samples cannot pin the coefficient variance to 1%, so the suite
    // must report failures; what matters here is the exit code contract
    const RunResult r = run_cli(tmp, "validate --samples 400 --seed 1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("[FAIL]") != std::string::npos);
}
