#pragma once

/**
 * @file cli.hpp
 * @brief Sequence requests, output formats, the cross-check suite and the
 *        benchmark table behind the seqkernel command-line tool.
 *
 * All numeric output is string-typed: values like p(199) or B_24 overflow
 * native integers, so JSON carries decimal strings and rationals render as
 * "num/den" (denominator omitted when 1).
 */

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "seqkernel/errors.hpp"
#include "seqkernel/numeric.hpp"
#include "seqkernel/partitions.hpp"
#include "seqkernel/ramanujan.hpp"
#include "seqkernel/series_pow.hpp"
#include "seqkernel/special.hpp"

namespace seqkernel::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { plain, bfile, json };

struct SequenceRequest {
    std::string sequence;
    std::size_t from = 0;
    std::size_t to = 0;
    std::string method;  // empty selects the sequence default
    std::map<std::string, std::string> params;
};

struct OutputRecord {
    std::size_t n = 0;
    std::string value;
};

/// Worker cap: SEQKERNEL_THREADS bounds the hardware count when set.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SEQKERNEL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

namespace detail {

/// Evaluates f(n) for n in [from, to] across workers; results come back in
/// ascending n regardless of completion order.
inline std::vector<std::string> parallel_values(std::size_t from, std::size_t to,
                                                const std::function<std::string(std::size_t)>& f) {
    const std::size_t count = to - from + 1;
    std::vector<std::string> out(count);
    unsigned workers = worker_count();
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(from + i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = f(from + i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

inline std::size_t need_uint_param(const SequenceRequest& req, const std::string& key) {
    const auto it = req.params.find(key);
    if (it == req.params.end())
        throw UsageError("sequence '" + req.sequence + "' needs --param " + key + "=...");
    try {
        return static_cast<std::size_t>(std::stoull(it->second));
    } catch (const std::exception&) {
        throw UsageError("parameter " + key + " must be a non-negative integer");
    }
}

inline std::string pick_method(const SequenceRequest& req,
                               const std::vector<std::string>& valid,
                               const std::string& fallback) {
    if (req.method.empty()) return fallback;
    for (const auto& v : valid)
        if (v == req.method) return req.method;
    std::string list;
    for (const auto& v : valid) list += (list.empty() ? "" : ", ") + v;
    throw UsageError("method '" + req.method + "' is not valid for sequence '" + req.sequence +
                     "' (valid: " + list + ")");
}

inline PartitionMethod parse_partition_method(const std::string& m) {
    if (m == "pentagonal_sum") return PartitionMethod::pentagonal_sum;
    if (m == "series") return PartitionMethod::series;
    if (m == "determinant") return PartitionMethod::determinant;
    return PartitionMethod::recurrence;
}

inline BernoulliMethod parse_bernoulli_method(const std::string& m) {
    if (m == "partition_36a") return BernoulliMethod::partition_36a;
    if (m == "composition_36b") return BernoulliMethod::composition_36b;
    if (m == "sinh_38") return BernoulliMethod::sinh_38;
    if (m == "general_41") return BernoulliMethod::general_41;
    if (m == "laplace_det_3") return BernoulliMethod::laplace_det_3;
    if (m == "vella_35") return BernoulliMethod::vella_35;
    if (m == "det_56a") return BernoulliMethod::det_56a;
    return BernoulliMethod::recurrence_oracle;
}

inline EulerMethod parse_euler_method(const std::string& m) {
    if (m == "even_partition_39a") return EulerMethod::even_partition_39a;
    if (m == "even_composition_42") return EulerMethod::even_composition_42;
    if (m == "odd_composition_prop") return EulerMethod::odd_composition_prop;
    if (m == "odd_partition_48") return EulerMethod::odd_partition_48;
    if (m == "det_56b") return EulerMethod::det_56b;
    return EulerMethod::secant_oracle;
}

} // namespace detail

/// Computes one record per n for the requested sequence and method.
/// Invalid sequence/method/parameter combinations raise UsageError.
inline std::vector<OutputRecord> compute_sequence(const SequenceRequest& req) {
    if (req.from > req.to) throw UsageError("--from must not exceed --to");
    const std::size_t from = req.from, to = req.to;
    std::vector<std::string> values;

    if (req.sequence == "partition") {
        const std::string m = detail::pick_method(
            req, {"pentagonal_sum", "series", "determinant", "recurrence"}, "series");
        if (m == "series") {
            const TruncSeries inv = series_inverse(pentagonal_series(to));
            for (std::size_t n = from; n <= to; ++n) values.push_back(rat_num(inv[n]).str());
        } else if (m == "recurrence") {
            const auto table = partition_numbers_upto(to);
            for (std::size_t n = from; n <= to; ++n) values.push_back(table[n].str());
        } else {
            const PartitionMethod pm = detail::parse_partition_method(m);
            values = detail::parallel_values(
                from, to, [pm](std::size_t n) { return partition_number(n, pm).str(); });
        }
    } else if (req.sequence == "partition_distinct") {
        const std::string m =
            detail::pick_method(req, {"determinant", "alternating_sum"}, "determinant");
        values = detail::parallel_values(from, to, [&m](std::size_t n) {
            return (m == "determinant" ? distinct_partition_number(n)
                                       : restricted_partition_alternating(1, n))
                .str();
        });
    } else if (req.sequence == "partition_restricted") {
        const std::size_t D = detail::need_uint_param(req, "D");
        if (D == 0) throw UsageError("partition_restricted needs D >= 1");
        const std::string m =
            detail::pick_method(req, {"determinant", "alternating_sum"}, "determinant");
        values = detail::parallel_values(from, to, [&m, D](std::size_t n) {
            return (m == "determinant" ? restricted_partition_number(D, n)
                                       : restricted_partition_alternating(D, n))
                .str();
        });
    } else if (req.sequence == "bernoulli") {
        const std::string m = detail::pick_method(
            req,
            {"recurrence_oracle", "partition_36a", "composition_36b", "sinh_38", "general_41",
             "laplace_det_3", "vella_35", "det_56a"},
            "recurrence_oracle");
        if (m == "recurrence_oracle") {
            const auto table = bernoulli_table(to);
            for (std::size_t n = from; n <= to; ++n) values.push_back(rat_to_string(table[n]));
        } else {
            const BernoulliMethod bm = detail::parse_bernoulli_method(m);
            try {
                values = detail::parallel_values(from, to, [bm](std::size_t n) {
                    return rat_to_string(bernoulli(n, bm));
                });
            } catch (const UnsupportedInputError& e) {
                throw UsageError(std::string("method not defined on the requested range: ") + e.what());
            }
        }
    } else if (req.sequence == "euler") {
        const std::string m = detail::pick_method(
            req,
            {"secant_oracle", "even_partition_39a", "even_composition_42", "odd_composition_prop",
             "odd_partition_48", "det_56b"},
            "secant_oracle");
        if (m == "secant_oracle") {
            const auto table = euler_table(to);
            for (std::size_t n = from; n <= to; ++n) values.push_back(table[n].str());
        } else {
            const EulerMethod em = detail::parse_euler_method(m);
            try {
                values = detail::parallel_values(
                    from, to, [em](std::size_t n) { return euler_number(n, em).str(); });
            } catch (const UnsupportedInputError& e) {
                throw UsageError(std::string("method not defined on the requested range: ") + e.what());
            }
        }
    } else if (req.sequence == "stirling1" || req.sequence == "stirling2") {
        const bool second = (req.sequence == "stirling2");
        const std::size_t k = detail::need_uint_param(req, "k");
        const std::string m = detail::pick_method(
            req,
            second ? std::vector<std::string>{"triangle", "partition_sum_53", "det_56c"}
                   : std::vector<std::string>{"triangle", "higher_bernoulli_54", "partition_sum",
                                              "det_56d"},
            "triangle");
        values = detail::parallel_values(from, to, [&, k](std::size_t n) -> std::string {
            if (k > n) return "0";
            if (k == 0) return n == 0 ? "1" : "0";
            const std::size_t p = n - k;
            Int v;
            if (second) {
                if (m == "partition_sum_53") v = stirling2(n, p);
                else if (m == "det_56c") v = stirling2_det_56c(n, p);
                else v = stirling2_triangle(n, k);
            } else {
                if (m == "higher_bernoulli_54") v = stirling1(n, p);
                else if (m == "partition_sum") v = stirling1_partition_sum(n, p);
                else if (m == "det_56d") v = stirling1_det_56d(n, p);
                else v = stirling1_triangle(n, k);
            }
            return v.str();
        });
    } else if (req.sequence == "higher_bernoulli") {
        const std::size_t order = detail::need_uint_param(req, "order");
        detail::pick_method(req, {"series"}, "series");
        values = detail::parallel_values(from, to, [order](std::size_t p) {
            return rat_to_string(higher_bernoulli(p, order));
        });
    } else if (req.sequence == "slice") {
        const std::size_t modulus = detail::need_uint_param(req, "modulus");
        const std::size_t residue = detail::need_uint_param(req, "residue");
        const bool has_eta_quotient = (modulus == 5 && residue == 4) ||
                                      (modulus == 7 && residue == 5) ||
                                      (modulus == 25 && residue == 24);
        const bool has_residue_tower = (modulus == 5 && residue <= 4) ||
                                       (modulus == 25 && residue % 5 == 4 && residue <= 24);
        if (!has_eta_quotient && !has_residue_tower)
            throw UsageError("slice supports modulus/residue 5/0..4, 7/5, 25/{4,9,14,19,24}");
        std::vector<std::string> valid;
        if (has_eta_quotient) valid.push_back("eta_quotient");
        if (has_residue_tower) valid.push_back("residue_tower");
        const std::string m = detail::pick_method(
            req, valid, has_eta_quotient ? "eta_quotient" : "residue_tower");
        values = detail::parallel_values(from, to, [&, modulus, residue](std::size_t k) {
            SliceFamily fam;
            if (m == "eta_quotient") {
                const SliceId id = modulus == 5    ? SliceId::m5r4
                                   : modulus == 7 ? SliceId::m7r5
                                                  : SliceId::m25r24;
                fam = slice_family(id, k);
            } else if (modulus == 5) {
                fam = slice_family_mod5(static_cast<unsigned>(residue), k);
            } else {
                fam = slice_family_mod25(static_cast<unsigned>(residue), k);
            }
            return slice_value(fam).str();
        });
    } else {
        throw UsageError("unknown sequence '" + req.sequence +
                         "' (valid: partition, partition_distinct, partition_restricted, "
                         "bernoulli, euler, stirling1, stirling2, higher_bernoulli, slice)");
    }

    std::vector<OutputRecord> records;
    records.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        records.push_back(OutputRecord{from + i, std::move(values[i])});
    return records;
}

/// Resolved method name (the default when the request left it empty).
inline std::string effective_method(const SequenceRequest& req) {
    static const std::map<std::string, std::string> defaults = {
        {"partition", "series"},
        {"partition_distinct", "determinant"},
        {"partition_restricted", "determinant"},
        {"bernoulli", "recurrence_oracle"},
        {"euler", "secant_oracle"},
        {"stirling1", "triangle"},
        {"stirling2", "triangle"},
        {"higher_bernoulli", "series"},
    };
    if (!req.method.empty()) return req.method;
    if (req.sequence == "slice") {
        const auto mod = req.params.find("modulus");
        const auto res = req.params.find("residue");
        if (mod != req.params.end() && res != req.params.end()) {
            const std::string key = mod->second + "/" + res->second;
            if (key == "5/4" || key == "7/5" || key == "25/24") return "eta_quotient";
        }
        return "residue_tower";
    }
    const auto it = defaults.find(req.sequence);
    return it == defaults.end() ? req.method : it->second;
}

inline std::string render(const SequenceRequest& req, const std::vector<OutputRecord>& records,
                          Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::plain:
            for (const auto& r : records) out << r.value << "\n";
            break;
        case Format::bfile:
            for (const auto& r : records) out << r.n << " " << r.value << "\n";
            break;
        case Format::json: {
            nlohmann::ordered_json doc;
            doc["sequence"] = req.sequence;
            doc["method"] = effective_method(req);
            doc["values"] = nlohmann::ordered_json::array();
            for (const auto& r : records) {
                doc["values"].push_back({{"n", r.n}, {"value", r.value}});
            }
            out << doc.dump() << "\n";
            break;
        }
    }
    return out.str();
}

struct CompareResult {
    std::size_t checked = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Diffs computed records against a local b-file; '#' comments and blank
/// lines in the reference are ignored.
inline CompareResult compare_bfile(const std::vector<OutputRecord>& records, std::istream& ref) {
    std::map<long long, std::string> reference;
    std::string line;
    while (std::getline(ref, line)) {
        std::istringstream ls(line);
        std::string first, second;
        if (!(ls >> first)) continue;
        if (first[0] == '#') continue;
        if (!(ls >> second)) continue;
        reference[std::stoll(first)] = second;
    }
    CompareResult result;
    for (const auto& r : records) {
        ++result.checked;
        const auto it = reference.find(static_cast<long long>(r.n));
        if (it == reference.end()) {
            result.mismatches.push_back("n=" + std::to_string(r.n) + ": missing from reference");
        } else if (it->second != r.value) {
            result.mismatches.push_back("n=" + std::to_string(r.n) + ": computed " + r.value +
                                        ", reference " + it->second);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Cross-check suite
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    std::string detail;  // first discrepancy, empty when passing
};

struct CrosscheckReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

using PentagonalProvider = std::function<TruncSeries(std::size_t)>;

namespace detail {

inline void fail(CheckResult& c, const std::string& what) {
    if (c.pass) {
        c.pass = false;
        c.detail = what;
    }
}

inline CheckResult check_partition_methods(std::size_t n_max, const PentagonalProvider& pent) {
    CheckResult c{"partition method agreement", true, 0, ""};
    const auto table = partition_numbers_upto(n_max);
    const TruncSeries inv = series_inverse(pent(n_max));
    for (std::size_t n = 0; n <= n_max; ++n) {
        ++c.cases;
        if (rat_num(inv[n]) != table[n]) {
            fail(c, "series vs recurrence at n=" + std::to_string(n));
            break;
        }
        if (n <= 60) {
            if (partition_number(n, PartitionMethod::pentagonal_sum) != table[n]) {
                fail(c, "pentagonal_sum vs recurrence at n=" + std::to_string(n));
                break;
            }
            std::vector<Rat> tower(n + 1);
            tower[0] = 1;
            TowerSpec spec(LttColumn::from_series(pent(n)), std::move(tower));
            if (rat_num(tower_det(spec, TowerDetMode::explicit_bareiss)) != table[n]) {
                fail(c, "determinant vs recurrence at n=" + std::to_string(n));
                break;
            }
        }
    }
    return c;
}

inline CheckResult check_restricted(std::size_t n_max) {
    CheckResult c{"restricted partitions: tower vs alternating sum", true, 0, ""};
    for (std::size_t D = 1; D <= 3 && c.pass; ++D) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            ++c.cases;
            if (restricted_partition_number(D, n) != restricted_partition_alternating(D, n)) {
                fail(c, "D=" + std::to_string(D) + ", n=" + std::to_string(n));
                break;
            }
        }
    }
    return c;
}

inline CheckResult check_slices_mod5(std::size_t k_max) {
    CheckResult c{"p(5k+a) slice determinants", true, 0, ""};
    const auto p = cached_partition_values(5 * k_max + 4);
    for (unsigned a = 0; a <= 4 && c.pass; ++a) {
        for (std::size_t k = 0; k <= k_max; ++k) {
            ++c.cases;
            if (p_5k_a(a, k) != (*p)[5 * k + a]) {
                fail(c, "a=" + std::to_string(a) + ", k=" + std::to_string(k));
                break;
            }
        }
    }
    for (std::size_t k = 0; k <= k_max && c.pass; ++k) {
        ++c.cases;
        if (ramanujan_slice(SliceId::m5r4, k) != (*p)[5 * k + 4])
            fail(c, "m5r4 at k=" + std::to_string(k));
    }
    return c;
}

inline CheckResult check_slices_mod7(std::size_t k_max) {
    CheckResult c{"p(7k+5) slice determinants", true, 0, ""};
    const auto p = cached_partition_values(7 * k_max + 5);
    for (std::size_t k = 0; k <= k_max; ++k) {
        ++c.cases;
        const Int v = ramanujan_slice(SliceId::m7r5, k);
        if (v != (*p)[7 * k + 5]) {
            fail(c, "k=" + std::to_string(k));
            break;
        }
        if (v % 7 != 0) {
            fail(c, "divisibility by 7 fails at k=" + std::to_string(k));
            break;
        }
    }
    return c;
}

inline CheckResult check_slices_mod25(std::size_t k_max) {
    CheckResult c{"p(25k+a) slice determinants", true, 0, ""};
    const auto p = cached_partition_values(25 * k_max + 24);
    for (unsigned a = 4; a <= 24 && c.pass; a += 5) {
        for (std::size_t k = 0; k <= k_max; ++k) {
            ++c.cases;
            if (p_25k_a(a, k) != (*p)[25 * k + a]) {
                fail(c, "a=" + std::to_string(a) + ", k=" + std::to_string(k));
                break;
            }
        }
    }
    for (std::size_t k = 0; k <= k_max && c.pass; ++k) {
        ++c.cases;
        if (ramanujan_slice(SliceId::m25r24, k) != (*p)[25 * k + 24])
            fail(c, "m25r24 at k=" + std::to_string(k));
    }
    return c;
}

inline CheckResult check_bernoulli_methods(std::size_t n_max) {
    CheckResult c{"bernoulli method agreement", true, 0, ""};
    const auto oracle = bernoulli_table(n_max);
    for (std::size_t n = 0; n <= n_max && c.pass; ++n) {
        std::vector<BernoulliMethod> methods = {
            BernoulliMethod::partition_36a, BernoulliMethod::composition_36b,
            BernoulliMethod::vella_35, BernoulliMethod::laplace_det_3};
        if (n != 1) methods.push_back(BernoulliMethod::general_41);
        if (n % 2 == 0) {
            methods.push_back(BernoulliMethod::sinh_38);
            methods.push_back(BernoulliMethod::det_56a);
        }
        for (const auto m : methods) {
            ++c.cases;
            if (bernoulli(n, m) != oracle[n]) {
                fail(c, "n=" + std::to_string(n));
                break;
            }
        }
    }
    return c;
}

inline CheckResult check_euler_methods(std::size_t n_max) {
    CheckResult c{"euler method agreement", true, 0, ""};
    const auto oracle = euler_table(n_max);
    for (std::size_t n = 0; n <= n_max && c.pass; ++n) {
        std::vector<EulerMethod> methods = {EulerMethod::even_composition_42};
        if (n >= 2) methods.push_back(EulerMethod::odd_composition_prop);
        if (n % 2 == 0) {
            methods.push_back(EulerMethod::even_partition_39a);
            methods.push_back(EulerMethod::det_56b);
            if (n >= 2) methods.push_back(EulerMethod::odd_partition_48);
        }
        for (const auto m : methods) {
            ++c.cases;
            if (euler_number(n, m) != oracle[n]) {
                fail(c, "n=" + std::to_string(n));
                break;
            }
        }
    }
    return c;
}

inline CheckResult check_stirling(std::size_t n_max) {
    CheckResult c{"stirling methods vs triangle recurrences", true, 0, ""};
    for (std::size_t n = 0; n <= n_max && c.pass; ++n) {
        for (std::size_t p = 0; p <= n; ++p) {
            ++c.cases;
            const Int want2 = stirling2_triangle(n, n - p);
            if (stirling2(n, p) != want2 || stirling2_det_56c(n, p) != want2) {
                fail(c, "S(" + std::to_string(n) + "," + std::to_string(n - p) + ")");
                break;
            }
            if (n >= 1 && p + 1 <= n) {
                const Int want1 = stirling1_triangle(n, n - p);
                if (stirling1(n, p) != want1 || stirling1_partition_sum(n, p) != want1 ||
                    stirling1_det_56d(n, p) != want1) {
                    fail(c, "s(" + std::to_string(n) + "," + std::to_string(n - p) + ")");
                    break;
                }
            }
        }
    }
    return c;
}

inline CheckResult check_j_identities(std::size_t L) {
    CheckResult c{"ramanujan J identities", true, 0, ""};
    const IdentityReport rep = ramanujan_j_identities(L);
    c.cases = rep.checks.size();
    for (const auto& chk : rep.checks) {
        if (!chk.pass) {
            fail(c, chk.name + " first mismatch at coefficient " +
                        std::to_string(chk.first_mismatch));
            break;
        }
    }
    return c;
}

inline CheckResult check_corollary(std::size_t p_max) {
    CheckResult c{"alternating multinomial corollary", true, 0, ""};
    for (std::size_t p = 0; p <= p_max; ++p) {
        ++c.cases;
        const Int want = (p % 2 == 0) ? 1 : -1;
        if (corollary_identity(p) != want) {
            fail(c, "p=" + std::to_string(p));
            break;
        }
    }
    return c;
}

inline CheckResult check_weighted(std::size_t k_max) {
    CheckResult c{"weighted partition sums: three modes", true, 0, ""};
    const std::vector<Rat> xs = {Rat(1), Rat(-1), Rat(2), Rat(1, 2), Rat(-3, 7)};
    for (const Rat& x : xs) {
        for (std::size_t k = 0; k <= k_max && c.pass; ++k) {
            ++c.cases;
            const Rat direct = weighted_partition_sum(x, k, WeightedSumMode::direct);
            if (weighted_partition_sum(x, k, WeightedSumMode::det_c1) != direct ||
                weighted_partition_sum(x, k, WeightedSumMode::det_c2) != direct) {
                fail(c, "x=" + rat_to_string(x) + ", k=" + std::to_string(k));
            }
        }
    }
    return c;
}

inline CheckResult check_euler_recursion(std::size_t p_max) {
    CheckResult c{"euler odd-composition recursion", true, 0, ""};
    for (std::size_t p = 1; p <= p_max; ++p) {
        ++c.cases;
        if (!euler_recursion_check(p).pass) {
            fail(c, "p=" + std::to_string(p));
            break;
        }
    }
    return c;
}

} // namespace detail

/// Runs the full method-agreement matrix.  The pentagonal provider exists
/// so tests can inject a corrupted series and watch the suite fail.
inline CrosscheckReport run_crosscheck(bool full,
                                       const PentagonalProvider& pent = [](std::size_t L) {
                                           return pentagonal_series(L);
                                       }) {
    CrosscheckReport report;
    report.checks.push_back(detail::check_partition_methods(full ? 120 : 60, pent));
    report.checks.push_back(detail::check_restricted(full ? 80 : 40));
    report.checks.push_back(detail::check_slices_mod5(full ? 30 : 10));
    report.checks.push_back(detail::check_slices_mod7(full ? 30 : 10));
    report.checks.push_back(detail::check_slices_mod25(full ? 8 : 4));
    report.checks.push_back(detail::check_bernoulli_methods(full ? 24 : 12));
    report.checks.push_back(detail::check_euler_methods(full ? 16 : 10));
    report.checks.push_back(detail::check_stirling(full ? 12 : 8));
    report.checks.push_back(detail::check_j_identities(full ? 30 : 12));
    report.checks.push_back(detail::check_corollary(full ? 12 : 8));
    report.checks.push_back(detail::check_weighted(full ? 20 : 8));
    report.checks.push_back(detail::check_euler_recursion(full ? 6 : 4));
    return report;
}

inline std::string format_crosscheck(const CrosscheckReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks) {
        if (c.pass) {
            out << "ok   " << c.name << " (" << c.cases << " cases)\n";
        } else {
            out << "FAIL " << c.name << ": " << c.detail << "\n";
        }
    }
    out << (report.all_pass() ? "crosscheck: all checks passed\n"
                              : "crosscheck: FAILURES present\n");
    return out.str();
}

// ---------------------------------------------------------------------------
// Benchmark table
// ---------------------------------------------------------------------------

constexpr std::size_t kBenchNMaxCap = 300;
constexpr std::size_t kBenchDetCap = 60;

/// CSV with per-method value, wall time and peak operand width for p(n).
/// pentagonal_sum and determinant stop at n = 60; their cells read "skipped"
/// beyond that.
inline std::string bench_partition_csv(std::size_t n_max) {
    if (n_max > kBenchNMaxCap)
        throw UsageError("bench: n_max capped at " + std::to_string(kBenchNMaxCap));
    using clock = std::chrono::steady_clock;
    std::ostringstream out;
    const char* methods[] = {"pentagonal_sum", "series", "recurrence", "determinant"};
    out << "n";
    for (const char* m : methods)
        out << "," << m << "_value," << m << "_time_us," << m << "_peak_bits";
    out << "\n";
    for (std::size_t n = 0; n <= n_max; ++n) {
        out << n;
        for (const std::string m : methods) {
            const bool capped =
                (m == "pentagonal_sum" || m == "determinant") && n > kBenchDetCap;
            if (capped) {
                out << ",skipped,skipped,skipped";
                continue;
            }
            std::size_t peak = 1;
            Int value;
            const auto t0 = clock::now();
            if (m == "pentagonal_sum") {
                value = seqkernel::detail::partition_pentagonal_sum(n, &peak);
            } else if (m == "series") {
                const TruncSeries inv = series_inverse(pentagonal_series(n));
                value = rat_num(inv[n]);
                for (std::size_t q = 0; q <= n; ++q) {
                    const std::size_t b = bit_size(inv[q]);
                    if (b > peak) peak = b;
                }
            } else if (m == "recurrence") {
                const auto table = partition_numbers_upto(n);
                value = table[n];
                for (const Int& v : table) {
                    const std::size_t b = bit_size(v);
                    if (b > peak) peak = b;
                }
            } else {
                std::vector<Rat> tower(n + 1);
                tower[0] = 1;
                TowerSpec spec(LttColumn::from_series(pentagonal_series(n)), std::move(tower));
                value = rat_num(bareiss_det(tower_matrix(spec), &peak));
            }
            const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                                clock::now() - t0)
                                .count();
            out << "," << value.str() << "," << us << "," << peak;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace seqkernel::cli
