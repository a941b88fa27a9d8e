// seqkernel: exact integer-sequence computations from series powers and
// Toeplitz determinants.
//
// Exit status: 0 success, 1 usage error, 2 cross-check or comparison failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqkernel/seqkernel.hpp"

namespace {

int run_seq(const seqkernel::cli::SequenceRequest& req, const std::string& format,
            const std::string& compare_path) {
    using namespace seqkernel::cli;
    Format fmt = Format::plain;
    if (format == "bfile") fmt = Format::bfile;
    else if (format == "json") fmt = Format::json;
    else if (format != "plain") throw UsageError("format must be plain, bfile or json");

    const std::vector<OutputRecord> records = compute_sequence(req);
    std::cout << render(req, records, fmt);

    if (!compare_path.empty()) {
        std::ifstream ref(compare_path);
        if (!ref) throw UsageError("cannot open comparison file: " + compare_path);
        const CompareResult cmp = compare_bfile(records, ref);
        if (!cmp.ok()) {
            std::cerr << "compare: " << cmp.mismatches.size() << " mismatch(es) out of "
                      << cmp.checked << " values\n";
            for (const auto& m : cmp.mismatches) std::cerr << "  " << m << "\n";
            return 2;
        }
        std::cerr << "compare: all " << cmp.checked << " values match " << compare_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sequence kernel: partition, Bernoulli, Euler and Stirling numbers"};
    app.require_subcommand(1);

    // --- seq ---------------------------------------------------------------
    auto* seq = app.add_subcommand("seq", "compute a sequence over an index range");
    std::string sequence;
    std::size_t from = 0, to = 0;
    std::string method, format = "plain", compare_path;
    std::vector<std::string> params;
    seq->add_option("name", sequence, "sequence name")->required();
    seq->add_option("--from", from, "first index (inclusive)")->required();
    seq->add_option("--to", to, "last index (inclusive)")->required();
    seq->add_option("--method", method, "method tag (sequence-specific)");
    seq->add_option("--param", params, "extra parameter key=value (repeatable)");
    seq->add_option("--format", format, "plain | bfile | json");
    seq->add_option("--compare", compare_path, "diff against a local b-file");

    // --- crosscheck ---------------------------------------------------------
    auto* cross = app.add_subcommand("crosscheck", "run the method-agreement suites");
    bool full = false;
    cross->add_flag("--full", full, "extended ranges (includes the p(199) slice)");

    // --- bench --------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "timing/operand-size table as CSV");
    std::string bench_seq = "partition";
    std::size_t bench_nmax = 60;
    bench->add_option("--seq", bench_seq, "sequence to benchmark (partition)");
    bench->add_option("--nmax", bench_nmax, "largest index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(seq)) {
            seqkernel::cli::SequenceRequest req;
            req.sequence = sequence;
            req.from = from;
            req.to = to;
            req.method = method;
            for (const auto& kv : params) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw seqkernel::cli::UsageError("--param expects key=value, got: " + kv);
                req.params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            return run_seq(req, format, compare_path);
        }
        if (app.got_subcommand(cross)) {
            const auto report = seqkernel::cli::run_crosscheck(full);
            std::cout << seqkernel::cli::format_crosscheck(report);
            return report.all_pass() ? 0 : 2;
        }
        if (app.got_subcommand(bench)) {
            if (bench_seq != "partition")
                throw seqkernel::cli::UsageError("bench supports --seq partition");
            std::cout << seqkernel::cli::bench_partition_csv(bench_nmax);
            return 0;
        }
    } catch (const seqkernel::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
