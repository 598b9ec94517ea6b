#include "ltlfmt_tools/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ltlfmt/bench/families.hpp"
#include "ltlfmt/bench/transition_system.hpp"
#include "ltlfmt/errors.hpp"
#include "ltlfmt/parser.hpp"
#include "ltlfmt/solver.hpp"
#include "ltlfmt/trace_json.hpp"

namespace ltlfmt::tools {

namespace {

struct Globals {
    std::string solver = smt::default_solver();
    std::vector<std::string> solver_args;
    std::string logic;
    std::size_t max_k = 300;
    std::string engine = "encoding";
    std::string dump_smt;
    std::string dump_tableau;
};

class FileError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FileError(path + ": cannot open file");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SolveOptions make_options(const Globals& g, const std::optional<std::string>& file_logic)
{
    SolveOptions opts;
    opts.max_k = g.max_k;
    opts.backend.executable = g.solver;
    if (!g.solver_args.empty())
        opts.backend.args = g.solver_args;
    opts.backend.logic = !g.logic.empty() ? g.logic : file_logic.value_or("");
    opts.backend.transcript_path = g.dump_smt;
    opts.dot_path = g.dump_tableau;
    opts.engine = g.engine == "tableau" ? Engine::Tableau : g.engine == "both" ? Engine::Both : Engine::Encoding;
    return opts;
}

int report(const SolveOutcome& r, bool model, std::ostream& out, std::ostream& err)
{
    switch (r.status) {
    case SolveStatus::Sat:
        out << "SAT (k=" << r.k << ")\n";
        break;
    case SolveStatus::Unsat:
        out << "UNSAT (k=" << r.k << ")\n";
        break;
    case SolveStatus::Unknown:
        out << "UNKNOWN (" << r.reason << ")\n";
        break;
    }
    if (model && r.trace)
        out << to_json(*r.trace, 2) << "\n";
    int code = r.status == SolveStatus::Sat ? ExitSat : r.status == SolveStatus::Unsat ? ExitUnsat : ExitUnknown;
    if (r.verification) {
        out << "verification: " << to_string(r.verification->verdict);
        if (!r.verification->detail.empty())
            out << " (" << r.verification->detail << ")";
        out << "\n";
        if (r.verification->verdict == Verdict::Invalid) {
            err << "error: the witness trace does not satisfy the formula\n";
            code = ExitBackend;
        }
    }
    if (r.divergence) {
        err << "error: engine divergence: " << *r.divergence << "\n";
        code = ExitBackend;
    }
    return code;
}

struct BenchRow {
    std::string line;
    bool done = false;
};

void run_bench(const Globals& g, bench::Family family, unsigned from, unsigned to, double timeout_s, unsigned jobs,
               std::ostream& out)
{
    out << "family,N,result,k,wall_ms\n";
    if (to < from)
        return;
    std::vector<BenchRow> rows(to - from + 1);
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<unsigned> next{from};

    auto worker = [&] {
        for (unsigned n; (n = next++) <= to;) {
            auto opts = make_options(g, std::nullopt);
            opts.backend.transcript_path.clear();
            opts.dot_path.clear();
            if (timeout_s > 0) {
                auto budget = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));
                opts.time_budget = budget;
                opts.backend.timeout_ms = static_cast<unsigned>(budget.count());
            }
            auto start = std::chrono::steady_clock::now();
            std::string result;
            std::string k;
            try {
                auto problem = bench::gen_benchmark(family, n);
                auto r = solve(problem.formula, problem.signature, opts);
                result = to_string(r.status);
                k = std::to_string(r.k);
                if (r.status == SolveStatus::Unknown && r.reason == "timeout")
                    result = "TIMEOUT";
            } catch (const std::exception&) {
                result = "ERROR";
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            std::lock_guard lock(mutex);
            rows[n - from].line = bench::family_id(family) + "," + std::to_string(n) + "," + result + "," + k + ","
                + std::to_string(ms.count());
            rows[n - from].done = true;
            ready.notify_all();
        }
    };

    std::vector<std::thread> threads;
    for (unsigned j = 0; j < std::max(1u, jobs); ++j)
        threads.emplace_back(worker);
    for (auto& row : rows) {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return row.done; });
        out << row.line << "\n";
        out.flush();
    }
    for (auto& t : threads)
        t.join();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Satisfiability checker for LTL over finite traces modulo theories", "ltlfmt"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--solver", g.solver, "SMT solver executable")->capture_default_str();
    app.add_option("--solver-arg", g.solver_args, "Argument for the solver (repeatable; default: -in)");
    app.add_option("--logic", g.logic, "SMT-LIB logic (default: inferred)");
    app.add_option("--max-k", g.max_k, "Largest unraveling depth, 0 for none")->capture_default_str();
    app.add_option("--engine", g.engine, "encoding, tableau or both")
        ->check(CLI::IsMember({"encoding", "tableau", "both"}))
        ->capture_default_str();
    app.add_option("--dump-smt", g.dump_smt, "Write the SMT-LIB transcript to this file");
    app.add_option("--dump-tableau", g.dump_tableau, "Write the explored tableau as DOT to this file");

    std::string file;
    bool model = false;
    bool verify = false;
    auto* solve_cmd = app.add_subcommand("solve", "Decide satisfiability of a .ltlmt file");
    solve_cmd->add_option("file", file, "Input file")->required();
    solve_cmd->add_flag("--model", model, "Print the witness trace as JSON");
    solve_cmd->add_flag("--verify", verify, "Check the witness against the formula");

    auto* ts_cmd = app.add_subcommand("check-ts", "Check a transition system: init & G(trans) & property");
    ts_cmd->add_option("file", file, "Input file")->required();
    ts_cmd->add_flag("--model", model, "Print the witness trace as JSON");
    ts_cmd->add_flag("--verify", verify, "Check the witness against the formula");

    std::string family;
    unsigned from = 1;
    unsigned to = 1;
    double timeout = 0;
    unsigned jobs = 1;
    std::vector<std::string> family_ids;
    for (auto f : bench::all_families())
        family_ids.push_back(bench::family_id(f));
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark family and print CSV");
    bench_cmd->add_option("--family", family, "Benchmark family")->required()->check(CLI::IsMember(family_ids));
    bench_cmd->add_option("--from", from, "First N")->capture_default_str();
    bench_cmd->add_option("--to", to, "Last N")->capture_default_str();
    bench_cmd->add_option("--timeout", timeout, "Seconds per instance, 0 for none")->capture_default_str();
    bench_cmd->add_option("--jobs", jobs, "Instances run in parallel")->capture_default_str();

    unsigned n = 1;
    auto* gen_cmd = app.add_subcommand("gen", "Print a benchmark instance");
    gen_cmd->add_option("--family", family, "Benchmark family")->required()->check(CLI::IsMember(family_ids));
    gen_cmd->add_option("--n", n, "Parameter N")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : ExitUsage;
    }

    try {
        if (*gen_cmd) {
            out << bench::generate_source(*bench::parse_family(family), n);
            return 0;
        }
        if (*bench_cmd) {
            run_bench(g, *bench::parse_family(family), from, to, timeout, jobs, out);
            return 0;
        }
        std::string text = read_file(file);
        Problem problem{Signature{}, TemporalFormula::top(), std::nullopt};
        try {
            if (*ts_cmd) {
                auto ts = parse_transition_system(text);
                problem = Problem{ts.signature, compile_transition_system(ts), std::nullopt};
            } else {
                problem = parse(text);
            }
        } catch (const ParseError& e) {
            err << file << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
            return ExitUsage;
        }
        auto opts = make_options(g, problem.logic);
        opts.verify_witness = verify;
        auto result = solve(problem.formula, problem.signature, opts);
        return report(result, model, out, err);
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return ExitUsage;
    } catch (const BackendError& e) {
        err << "backend error: " << e.what() << "\n";
        return ExitBackend;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ExitUsage;
    }
}

} // namespace ltlfmt::tools
