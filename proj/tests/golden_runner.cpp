// Golden-file checker: runs every job in the golden directory through the
// CLI (timing omitted) and compares the report byte-for-byte against the
// committed .expected.json, plus a determinism rerun.
//   lapalg_golden <cli_path> <golden_dir>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string run_command(const std::string& cmd, int* exit_code = nullptr) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: lapalg_golden <cli_path> <golden_dir>" << std::endl;
        return 2;
    }
    std::string cli = argv[1];
    fs::path dir = argv[2];

    std::vector<fs::path> jobs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json" &&
            entry.path().string().find(".expected.") == std::string::npos)
            jobs.push_back(entry.path());
    std::sort(jobs.begin(), jobs.end());

    int failures = 0;
    for (const auto& job : jobs) {
        fs::path expected_path = job;
        expected_path.replace_extension(".expected.json");
        std::string cmd = cli + " run " + job.string() + " --no-timing 2>/dev/null";
        std::string got = run_command(cmd);
        std::string again = run_command(cmd);
        bool ok = true;
        if (got.empty()) {
            std::cout << "[FAIL] " << job.filename() << ": no output" << std::endl;
            ok = false;
        } else if (got != again) {
            std::cout << "[FAIL] " << job.filename() << ": output differs across reruns"
                      << std::endl;
            ok = false;
        } else if (!fs::exists(expected_path)) {
            std::cout << "[FAIL] " << job.filename() << ": missing " << expected_path.filename()
                      << std::endl;
            ok = false;
        } else if (got != read_file(expected_path)) {
            std::cout << "[FAIL] " << job.filename() << ": output differs from the golden file"
                      << std::endl;
            ok = false;
        }
        if (ok) std::cout << "[PASS] " << job.filename() << std::endl;
        failures += !ok;
    }
    if (jobs.empty()) {
        std::cerr << "no golden jobs found in " << dir << std::endl;
        return 2;
    }

    // Exit-code contract: 0 verdict, 2 input error, 3 budget/INDETERMINATE.
    auto expect_exit = [&](const std::string& label, const std::string& args, int want) {
        int code = -1;
        run_command(cli + " " + args + " 2>/dev/null", &code);
        if (code == want) {
            std::cout << "[PASS] exit code " << want << " for " << label << std::endl;
        } else {
            std::cout << "[FAIL] exit code for " << label << ": got " << code << ", want "
                      << want << std::endl;
            ++failures;
        }
    };
    expect_exit("a NOT_LAPLACIAN verdict (still a verdict)",
                "check-laplacian --n 2 --poly \"x1^2+x2^2\" --poly \"x1^4*x2^4\" --no-timing", 0);
    expect_exit("a syntax error", "membership --n 1 --poly \"x1 +\" --gen \"x1\" --no-timing", 2);
    expect_exit("a missing r^2 precondition",
                "check-laplacian --n 2 --poly \"x1^2-x2^2\" --no-timing", 2);
    fs::path tiny = fs::temp_directory_path() / "lapalg_tiny_budget.json";
    {
        std::ofstream out(tiny);
        out << "{\"command\":\"membership\",\"n\":2,\"polynomial\":\"x1^2+x2^2\","
               "\"generators\":[\"x1+x2\",\"x1*x2\"],\"groebner_budget\":3,\"seed\":0}";
    }
    expect_exit("budget exhaustion (INDETERMINATE)", "run " + tiny.string() + " --no-timing", 3);
    fs::remove(tiny);

    // --json-out writes exactly what lands on stdout
    fs::path out_path = fs::temp_directory_path() / "lapalg_json_out.json";
    std::string stdout_text = run_command(cli + " run " + jobs.front().string() +
                                          " --no-timing --json-out " + out_path.string() +
                                          " 2>/dev/null");
    std::string file_text = read_file(out_path);
    fs::remove(out_path);
    if (stdout_text == file_text) {
        std::cout << "[PASS] --json-out matches stdout" << std::endl;
    } else {
        std::cout << "[FAIL] --json-out differs from stdout" << std::endl;
        ++failures;
    }

    return failures == 0 ? 0 : 1;
}
