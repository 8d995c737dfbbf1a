// waerden: exact computation and verification of van der Waerden-type
// functions.  Subcommands: compute, verify, table, bounds, relations, lll.
//
// Exit codes: 0 success; 1 verification failure or inequality FAIL;
// 2 usage error or malformed certificate; 3 budget exhaustion.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "waerden/bounds.hpp"
#include "waerden/io.hpp"
#include "waerden/lll.hpp"
#include "waerden/relations.hpp"
#include "waerden/solver.hpp"
#include "waerden/table.hpp"
#include "waerden/version.hpp"

namespace {

using namespace waerden;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct BudgetOpts {
    int max_n = 0;
    std::uint64_t max_nodes = 0;
    double time_limit = 0;
    int threads = 1;

    SearchBudget to_budget() const {
        SearchBudget b;
        if (max_n > 0) b.max_n = max_n;
        if (max_nodes > 0) b.max_nodes = max_nodes;
        if (time_limit > 0) b.time_limit_seconds = time_limit;
        b.threads = threads;
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetOpts& opts) {
    cmd->add_option("--max-n", opts.max_n, "stop once n exceeds this");
    cmd->add_option("--max-nodes", opts.max_nodes, "node budget for the search");
    cmd->add_option("--time-limit", opts.time_limit, "wall-clock budget in seconds");
    cmd->add_option("--threads", opts.threads, "worker threads")->check(CLI::Range(1, 64));
}

Store open_store(const std::string& flag) {
    if (!flag.empty()) return Store(flag);
    return Store::from_env_or("waerden_store");
}

std::vector<int> parse_lengths(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--lengths", "malformed integer '" + tok + "'");
        }
        if (used != tok.size() || v < 1)
            throw CLI::ValidationError("--lengths", "lengths must be positive integers");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--lengths", "need at least one length");
    return out;
}

/// Stores the witness certificate and the value record; a value conflict is
/// a mathematical red flag and surfaces as a verification failure.
int cache_result(Store& store, const ComputedValue& cv, bool deterministic) {
    ComputedValue copy = cv;
    if (deterministic) copy.elapsed_seconds = 0;
    std::string ref;
    if (copy.witness) {
        Certificate cert = *copy.witness;
        cert.created_at = deterministic ? "" : now_iso8601_utc();
        ref = store.put_certificate(cert);
    }
    try {
        store.put(record_for(copy, ref));
    } catch (const StoreError& e) {
        std::cerr << e.what() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_compute(const std::string& family, const std::string& lengths_text, int k, int s, int n,
                int m, const BudgetOpts& budget_opts, bool no_cache, const std::string& store_path,
                bool deterministic) {
    const auto fam = family_from_name(family);
    if (!fam) {
        std::cerr << "unknown family '" << family << "' (use w, wdiag, w1, G, M, wstar, r, chi)\n";
        return kExitUsage;
    }
    const SearchBudget budget = budget_opts.to_budget();
    Store store = open_store(store_path);

    if (*fam == Family::R) {
        if (k < 2 || n < 0) {
            std::cerr << "r needs --k >= 2 and --n >= 0\n";
            return kExitUsage;
        }
        const auto res = solve_r(k, n);
        std::cout << res.size << "\n";
        if (!no_cache && res.size >= 1) {
            Certificate cert;
            cert.spec = ProblemSpec::r(k, n);
            cert.n = res.size;
            cert.claim = ClaimKind::GoodWitness;
            cert.set = res.witness;
            cert.created_at = deterministic ? "" : now_iso8601_utc();
            const std::string ref = store.put_certificate(cert);
            CacheRecord rec{ProblemSpec::r(k, n), res.size, ref, 0, std::string(kSolverVersion)};
            try {
                store.put(rec);
            } catch (const StoreError& e) {
                std::cerr << e.what() << "\n";
                return kExitVerification;
            }
        }
        return kExitOk;
    }
    if (*fam == Family::Chi) {
        if (k < 2 || m < 1) {
            std::cerr << "chi needs --k >= 2 and --m >= 1\n";
            return kExitUsage;
        }
        const auto res = solve_chi(k, m, budget);
        if (!res) {
            std::cerr << "budget exhausted before chi_" << k << "(" << m << ") was determined\n";
            return kExitBudget;
        }
        std::cout << res->colors << "\n";
        if (!no_cache) {
            Certificate cert;
            cert.spec = ProblemSpec::chi(k, m);
            cert.n = res->colors;
            cert.claim = ClaimKind::GoodWitness;
            cert.coloring = res->witness;
            cert.created_at = deterministic ? "" : now_iso8601_utc();
            const std::string ref = store.put_certificate(cert);
            CacheRecord rec{ProblemSpec::chi(k, m), res->colors, ref, 0, std::string(kSolverVersion)};
            try {
                store.put(rec);
            } catch (const StoreError& e) {
                std::cerr << e.what() << "\n";
                return kExitVerification;
            }
        }
        return kExitOk;
    }

    ProblemSpec spec;
    if (*fam == Family::WMixed) {
        if (lengths_text.empty()) {
            std::cerr << "w needs --lengths, e.g. --lengths 3,3\n";
            return kExitUsage;
        }
        spec = ProblemSpec::mixed(parse_lengths(lengths_text));
    } else {
        if (k < 2 || s < 1) {
            std::cerr << family << " needs --k >= 2 and --s >= 1\n";
            return kExitUsage;
        }
        spec.family = *fam;
        spec.k = k;
        spec.s = s;
    }
    if (!spec.valid()) {
        std::cerr << "invalid parameters for " << spec.key() << "\n";
        return kExitUsage;
    }

    const auto result = solve(spec, budget);
    if (result.status == SolveStatus::BudgetExhausted) {
        std::cout << ">=" << result.lower_bound << "\n";
        std::cerr << "budget exhausted; " << spec.key() << " >= " << result.lower_bound << "\n";
        return kExitBudget;
    }
    std::cout << result.value->value << "\n";
    if (!no_cache) return cache_result(store, *result.value, deterministic);
    return kExitOk;
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        return kExitUsage;
    }
    int checked = 0;
    int bad = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Certificate cert;
        try {
            cert = certificate_from_line(line);
        } catch (const CertificateError& e) {
            std::cerr << path << ":" << lineno << ": " << e.what() << "\n";
            return kExitUsage;
        }
        if (cert.claim == ClaimKind::ExtremalAttested) {
            std::cout << "ATTESTED " << cert.spec.key() << " n=" << cert.n
                      << " (exhaustive-search attestation; not independently re-checkable)\n";
            continue;
        }
        ++checked;
        Verdict verdict;
        try {
            verdict = verify_certificate(cert);
        } catch (const CertificateError& e) {
            std::cerr << path << ":" << lineno << ": " << e.what() << "\n";
            return kExitUsage;
        }
        if (verdict.clean) {
            std::cout << "OK " << cert.spec.key() << " n=" << cert.n << "\n";
        } else {
            ++bad;
            std::cout << "BAD " << cert.spec.key() << " n=" << cert.n << ": "
                      << violation_text(*verdict.violation) << "\n";
        }
    }
    if (bad > 0) return kExitVerification;
    if (checked == 0 && lineno == 0) std::cout << "no certificates found\n";
    return kExitOk;
}

int cmd_table(int k, int s_max, const std::string& functions_text, const std::string& format_text,
              bool published, bool compute, const BudgetOpts& budget_opts, bool no_cache,
              const std::string& store_path, bool deterministic) {
    TableFormat format;
    if (format_text == "table")
        format = TableFormat::Table;
    else if (format_text == "csv")
        format = TableFormat::Csv;
    else if (format_text == "json")
        format = TableFormat::JsonDoc;
    else {
        std::cerr << "unknown format '" << format_text << "' (use table, csv, json)\n";
        return kExitUsage;
    }
    std::vector<std::string> functions;
    if (functions_text.empty()) {
        functions = table_functions();
    } else {
        std::istringstream in(functions_text);
        std::string tok;
        while (std::getline(in, tok, ',')) functions.push_back(tok);
    }
    for (const auto& fn : functions) {
        try {
            table_spec(fn, k, 2);
        } catch (const std::invalid_argument& e) {
            std::cerr << e.what() << "\n";
            return kExitUsage;
        }
    }
    if (published && compute) {
        std::cerr << "--published is read-only; it cannot be combined with --compute\n";
        return kExitUsage;
    }

    TableSource source;
    Store store = open_store(store_path);
    if (published) {
        source = reference_table_source();
    } else {
        // every cached value the table prints must be backed by a clean
        // certificate
        std::vector<std::pair<std::string, TableEntry>> values;
        for (const auto& rec : store.records()) {
            if (!rec.certificate_ref.empty()) {
                const auto cert = store.load_certificate(rec.certificate_ref);
                if (!cert) {
                    std::cerr << rec.spec.key() << ": dangling certificate ref "
                              << rec.certificate_ref << "\n";
                    return kExitUsage;
                }
                if (cert->claim == ClaimKind::GoodWitness && !verify_certificate(*cert).clean) {
                    std::cerr << rec.spec.key() << ": cached witness failed verification\n";
                    return kExitVerification;
                }
            }
            values.emplace_back(rec.spec.cache_key(), TableEntry{rec.value, true});
        }
        source = [values](const ProblemSpec& spec) -> std::optional<TableEntry> {
            const std::string key = spec.cache_key();
            for (const auto& [k2, v] : values)
                if (k2 == key) return v;
            return std::nullopt;
        };
    }

    auto doc = build_table(functions, k, s_max, source);
    if (compute) {
        const SearchBudget budget = budget_opts.to_budget();
        for (std::size_t r = 0; r < functions.size(); ++r) {
            for (int s = 2; s <= s_max; ++s) {
                auto& cell = doc.cells[r][static_cast<std::size_t>(s - 2)];
                if (cell != "?") continue;
                const ProblemSpec spec = table_spec(functions[r], k, s);
                const auto result = solve(spec, budget);
                if (result.status == SolveStatus::Solved) {
                    cell = std::to_string(result.value->value);
                    if (!no_cache) {
                        const int rc = cache_result(store, *result.value, deterministic);
                        if (rc != kExitOk) return rc;
                    }
                } else {
                    cell = ">=" + std::to_string(result.lower_bound);
                }
            }
        }
    }
    std::cout << render_table(doc, format);
    return kExitOk;
}

std::string lognumber_text(const BoundEntry& e) {
    if (e.tower) {
        std::ostringstream os;
        os << "tower(base " << e.tower->base << ", height " << e.tower->height << ", top "
           << e.tower->top << ")";
        return os.str();
    }
    if (e.value) return e.value->str();
    return "-";
}

int cmd_bounds(int k, int m, int s, double c, double d, const std::string& store_path) {
    if (m > 0 && s > 0) {
        std::cerr << "give either --m or --s, not both\n";
        return kExitUsage;
    }
    const int mors = m > 0 ? m : s;
    BoundConstants consts;
    consts.c = c;
    consts.d = d;
    if (!consts.valid()) {
        std::cerr << "--c and --d must be positive\n";
        return kExitUsage;
    }

    // anchors compare against the published dataset plus local records
    Store store = open_store(store_path);
    const auto local = store.value_source();
    const ExactLookup exact = [local](const ProblemSpec& spec) -> std::optional<long long> {
        if (auto v = reference_lookup(spec)) return v;
        return local(spec);
    };

    std::vector<BoundEntry> entries;
    if (k >= 2 && mors >= 1) {
        const auto lower = lower_bounds(k, mors, consts, exact);
        entries.insert(entries.end(), lower.entries.begin(), lower.entries.end());
    }
    const int kors = k >= 2 ? k : mors;
    if (kors >= 2) {
        const auto upper = upper_bounds(kors, consts, exact);
        entries.insert(entries.end(), upper.entries.begin(), upper.entries.end());
    }
    if (entries.empty()) {
        std::cerr << "nothing to evaluate: give --k (and --m or --s for the lower bounds)\n";
        return kExitUsage;
    }

    int inconsistent = 0;
    for (const auto& e : entries) {
        std::cout << (e.kind == BoundKind::Lower ? "LOWER " : "UPPER ") << e.name << " "
                  << e.subject.key() << ": " << e.statement;
        if (!e.applicable) {
            std::cout << " [inapplicable: " << e.note << "]\n";
            continue;
        }
        std::cout << " = " << lognumber_text(e);
        if (e.constant_dependent) std::cout << " [constant-dependent]";
        if (e.anchor) {
            std::cout << " vs exact " << e.anchor->exact << " -> ";
            if (e.anchor->consistent)
                std::cout << "consistent";
            else if (e.anchor->informational)
                std::cout << "inconsistent (informational)";
            else {
                std::cout << "INCONSISTENT";
                ++inconsistent;
            }
        }
        if (!e.note.empty() && e.applicable) std::cout << " (" << e.note << ")";
        std::cout << "\n";
    }
    return inconsistent > 0 ? kExitVerification : kExitOk;
}

int cmd_relations(int k, const std::string& range_text, const std::string& source_name,
                  const std::string& store_path) {
    int lo = 2, hi = 2;
    const auto colon = range_text.find(':');
    try {
        if (colon == std::string::npos) {
            lo = 2;
            hi = std::stoi(range_text);
        } else {
            lo = std::stoi(range_text.substr(0, colon));
            hi = std::stoi(range_text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        std::cerr << "--s-range wants LO:HI or HI, e.g. 2:16\n";
        return kExitUsage;
    }

    ValueSource values;
    if (source_name == "published") {
        values = reference_source();
    } else if (source_name == "local") {
        values = open_store(store_path).value_source();
    } else {
        std::cerr << "unknown --source '" << source_name << "' (use published or local)\n";
        return kExitUsage;
    }

    std::vector<InequalityCheck> checks;
    try {
        checks = check_inequalities(k, lo, hi, values);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    int holds = 0, fails = 0, unknowns = 0;
    for (const auto& c : checks) {
        std::cout << to_string(c.status) << " " << c.name << " (k=" << c.k << ", s=" << c.s
                  << "): " << c.statement;
        if (c.lhs && c.rhs) std::cout << " [" << *c.lhs << " vs " << *c.rhs << "]";
        if (c.informational) std::cout << " (informational)";
        std::cout << "\n";
        if (c.informational) continue;
        switch (c.status) {
            case IneqStatus::Holds: ++holds; break;
            case IneqStatus::Fails: ++fails; break;
            case IneqStatus::Unknown: ++unknowns; break;
        }
    }
    std::cout << holds << " hold, " << unknowns << " unknown, " << fails << " fail\n";
    return fails > 0 ? kExitVerification : kExitOk;
}

int cmd_lll(int k, int m, int n, std::uint64_t seed, std::uint64_t max_rounds) {
    SampleParams params;
    try {
        params = make_sample_params(k, m, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    if (n < 1 || max_rounds < 1) {
        std::cerr << "need --n >= 1 and --max-rounds >= 1\n";
        return kExitUsage;
    }
    std::cout << "alpha=" << params.alpha << " pRed=" << params.p_red << "\n";
    const auto report = lll_resample(params, n, max_rounds);
    if (report.success) {
        std::cout << "success after " << report.rounds << " resamples\n";
        std::cout << "witness " << encode_coloring(*report.final_coloring) << "\n";
        return kExitOk;
    }
    std::cout << "no proper coloring after " << report.rounds << " resamples\n";
    return kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation and verification of van der Waerden-type functions"};
    app.set_version_flag("--version", std::string(kSolverVersion));
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string store_path;
    bool deterministic = false;
    app.add_option("--store", store_path,
                   "store directory (default: $WAERDEN_STORE, else ./waerden_store)");
    app.add_flag("--deterministic", deterministic,
                 "suppress timestamps and timings in cache artifacts");

    // compute
    auto* compute = app.add_subcommand("compute", "solve one family instance exactly");
    std::string family, lengths_text;
    int c_k = 0, c_s = 0, c_n = -1, c_m = 0;
    BudgetOpts c_budget;
    bool no_cache = false;
    compute->add_option("family", family, "w, wdiag, w1, G, M, wstar, r, chi")->required();
    compute->add_option("--lengths", lengths_text, "mixed lengths, e.g. 3,3");
    compute->add_option("--k", c_k, "progression length");
    compute->add_option("--s", c_s, "colors / max gap / block width");
    compute->add_option("--n", c_n, "interval length for r");
    compute->add_option("--m", c_m, "interval length for chi");
    add_budget_flags(compute, c_budget);
    compute->add_flag("--no-cache", no_cache, "do not write the store");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check certificates in a file");
    std::string verify_path;
    verify->add_option("file", verify_path, "certificate file, one JSON line each")->required();

    // table
    auto* table = app.add_subcommand("table", "render the small-value table");
    int t_k = 3, t_smax = 4;
    std::string t_functions, t_format = "table";
    bool t_published = false, t_compute = false, t_no_cache = false;
    BudgetOpts t_budget;
    table->add_option("--k", t_k, "progression length (default 3)");
    table->add_option("--s-max", t_smax, "last s column (default 4)");
    table->add_option("--functions", t_functions, "comma list from G,w,M,w1,wstar,wdiag");
    table->add_option("--format", t_format, "table, csv, or json");
    table->add_flag("--published", t_published, "use the published dataset instead of the store");
    table->add_flag("--compute", t_compute, "solve missing cells under the budget");
    table->add_flag("--no-cache", t_no_cache, "do not write computed cells to the store");
    add_budget_flags(table, t_budget);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate closed-form bounds");
    int b_k = 0, b_m = 0, b_s = 0;
    double b_c = 1.0, b_d = 1.0;
    bounds->add_option("--k", b_k, "progression length");
    bounds->add_option("--m", b_m, "second parameter in its m role");
    bounds->add_option("--s", b_s, "second parameter in its s role");
    bounds->add_option("--c", b_c, "constant c (default 1)");
    bounds->add_option("--d", b_d, "constant d (default 1)");

    // relations
    auto* relations = app.add_subcommand("relations", "instance-check the inequality network");
    int r_k = 3;
    std::string r_range = "2:16", r_source = "published";
    relations->add_option("--k", r_k, "progression length (default 3)");
    relations->add_option("--s-range", r_range, "s range LO:HI (default 2:16)");
    relations->add_option("--source", r_source, "published or local (default published)");

    // lll
    auto* lll = app.add_subcommand("lll", "run the resampling construction");
    int l_k = 0, l_m = 0, l_n = 0;
    std::uint64_t l_seed = 1, l_rounds = 100000;
    lll->add_option("--k", l_k, "red progression length")->required();
    lll->add_option("--m", l_m, "blue progression length")->required();
    lll->add_option("--n", l_n, "interval length")->required();
    lll->add_option("--seed", l_seed, "rng seed (default 1)");
    lll->add_option("--max-rounds", l_rounds, "resampling budget (default 100000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(family, lengths_text, c_k, c_s, c_n, c_m, c_budget, no_cache,
                               store_path, deterministic);
        if (verify->parsed()) return cmd_verify(verify_path);
        if (table->parsed())
            return cmd_table(t_k, t_smax, t_functions, t_format, t_published, t_compute, t_budget,
                             t_no_cache, store_path, deterministic);
        if (bounds->parsed()) return cmd_bounds(b_k, b_m, b_s, b_c, b_d, store_path);
        if (relations->parsed()) return cmd_relations(r_k, r_range, r_source, store_path);
        if (lll->parsed()) return cmd_lll(l_k, l_m, l_n, l_seed, l_rounds);
    } catch (const CertificateError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const StoreError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
