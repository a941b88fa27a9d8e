// End-to-end checks against the built seqkernel binary: output bytes and
// exit-status contract (0 success, 1 usage error, 2 check failure).
// Usage: cli_exec_tests <path-to-seqkernel>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(1);
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok   " << what << "\n";
    } else {
        std::cout << "FAIL " << what << "\n";
        ++g_failures;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cli_exec_tests <seqkernel-binary>\n";
        return 1;
    }
    const std::string bin = argv[1];

    {
        const auto r = run(bin + " seq partition --from 0 --to 4 --format bfile");
        expect(r.exit_code == 0 && r.out == "0 1\n1 1\n2 2\n3 3\n4 5\n",
               "partition b-file bytes");
    }
    {
        const auto r = run(bin + " seq bernoulli --from 12 --to 12");
        expect(r.exit_code == 0 && r.out == "-691/2730\n", "bernoulli plain value");
    }
    {
        const auto r = run(bin + " seq euler --from 10 --to 10 --format json");
        expect(r.exit_code == 0 && r.out.find("\"-50521\"") != std::string::npos,
               "euler json value string");
    }
    {
        const auto r = run(bin + " seq partition --from 0 --to 30 --method determinant");
        expect(r.exit_code == 0 && r.out.find("5604\n") != std::string::npos,
               "determinant method reaches p(30)");
    }
    {
        const auto r = run(bin +
                           " seq slice --from 7 --to 7 --param modulus=25 --param residue=24");
        expect(r.exit_code == 0 && r.out == "3646072432125\n", "p(199) through the slice");
    }
    {
        const auto r = run(bin + " seq nosuch --from 0 --to 1 2>/dev/null");
        expect(r.exit_code == 1, "unknown sequence exits 1");
    }
    {
        const auto r = run(bin + " seq partition --from 0 --to 3 --method nosuch 2>/dev/null");
        expect(r.exit_code == 1, "unknown method exits 1");
    }
    {
        const auto r = run(bin + " seq partition --from 0 2>/dev/null");
        expect(r.exit_code == 1, "missing required option exits 1");
    }
    {
        const auto r = run(bin + " --help");
        expect(r.exit_code == 0, "--help exits 0");
    }
    {
        const std::string path = "/tmp/seqkernel_ref_ok.txt";
        std::ofstream ref(path);
        ref << "# comment line\n0 1\n1 1\n2 2\n3 3\n4 5\n";
        ref.close();
        const auto r = run(bin + " seq partition --from 0 --to 4 --compare " + path +
                           " 2>/dev/null");
        expect(r.exit_code == 0, "matching --compare exits 0");
    }
    {
        const std::string path = "/tmp/seqkernel_ref_bad.txt";
        std::ofstream ref(path);
        ref << "0 1\n1 1\n2 999\n3 3\n4 5\n";
        ref.close();
        const auto r = run(bin + " seq partition --from 0 --to 4 --compare " + path +
                           " 2>/dev/null");
        expect(r.exit_code == 2, "mismatching --compare exits 2");
    }
    {
        const auto r = run(bin + " bench --seq partition --nmax 12");
        expect(r.exit_code == 0 && r.out.find("recurrence_time_us") != std::string::npos,
               "bench CSV header");
    }
    {
        const auto r = run("SEQKERNEL_THREADS=2 " + bin + " crosscheck");
        expect(r.exit_code == 0 && r.out.find("all checks passed") != std::string::npos,
               "quick crosscheck exits 0");
    }

    if (g_failures) {
        std::cout << g_failures << " failure(s)\n";
        return 1;
    }
    std::cout << "all cli exec checks passed\n";
    return 0;
}
