#include "critset/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "critset/bounds.hpp"
#include "critset/constructions.hpp"
#include "critset/criticality.hpp"
#include "critset/enumeration.hpp"
#include "critset/solver.hpp"

namespace critset {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fixed4(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << v;
    return s.str();
}

std::string fixed4(const std::optional<double>& v) { return v ? fixed4(*v) : "undefined"; }

struct Options {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    std::string file;
    std::uint64_t count_cap = 1'000'000;
    bool witnesses = false;

    std::uint64_t seed = 0;
    std::string removal_order = "row-major";

    int n = 0;
    bool exhaustive = false;
    bool heuristic = false;
    bool allow_larger = false;

    std::string kind;
    int construct_n = 5;
    std::string in_file;
    bool verify = false;

    bool list = false;

    std::int64_t n_from = 0;
    std::int64_t n_to = 0;
    bool csv = false;
    bool show_crossover = false;

    std::optional<int> lcs_value;
};

int cmd_complete(const Options& o, std::ostream& out) {
    const auto p = parse_partial(read_input(o.file));
    const auto report = count_completions(p, o.count_cap, o.threads);
    out << "completions: " << report.count << '\n';
    out << "capped: " << yes_no(report.capped) << '\n';
    if (o.witnesses) {
        for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
            out << "witness " << i + 1 << ":\n" << serialize(report.witnesses[i]);
        }
    } else if (report.count == 1 && !report.capped) {
        out << serialize(report.witnesses.front());
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto c = parse_partial(read_input(o.file));
    const auto report = verify_critical(c, o.threads);
    out << "size: " << report.size << '\n';
    out << "uniquely completable: " << yes_no(report.uniquely_completable);
    if (!report.uniquely_completable) {
        out << " (completions: " << (report.witnesses.empty() ? "0" : "2+") << ")";
    }
    out << '\n';
    out << "minimal: " << yes_no(report.minimal) << '\n';
    if (!report.violations.empty()) {
        out << "non-minimal entries:";
        for (const auto& v : report.violations) out << ' ' << to_string(v.entry);
        out << '\n';
    }
    out << "critical: " << yes_no(report.critical());
    if (report.critical()) out << " (size " << report.size << ")";
    out << '\n';
    return report.critical() ? kExitOk : kExitPropertyFails;
}

int cmd_minimize(const Options& o, std::ostream& out) {
    const auto p = parse_partial(read_input(o.file));
    const auto order = o.removal_order == "random" ? RemovalOrder::Random : RemovalOrder::RowMajor;
    out << serialize(minimize_uc(p, order, o.seed));
    return kExitOk;
}

int cmd_lcs(const Options& o, std::ostream& out) {
    const bool exhaustive = o.exhaustive || (!o.heuristic && o.n <= kMaxExhaustiveOrder);
    const auto record =
        exhaustive ? lcs_exhaustive(o.n, o.threads, o.allow_larger) : lcs_heuristic(o.n, o.seed, o.threads);
    if (record.exact) {
        out << "lcs(" << record.order << ") = " << record.value << '\n';
    } else {
        out << "lcs(" << record.order << ") >= " << record.value << " (heuristic lower bound)\n";
    }
    out << "square:\n" << serialize(record.witness_square);
    out << "critical set:\n" << serialize(record.witness_set);
    return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.kind == "back-circulant") {
        const auto l = back_circulant(o.construct_n);
        out << serialize(l);
        // Validity is enforced at construction.
        if (o.verify) err << "verified: Latin square of order " << l.order() << '\n';
        return kExitOk;
    }
    if (o.kind == "minus-first-rc") {
        const auto l = o.in_file.empty() ? back_circulant(o.construct_n)
                                         : parse_latin(read_input(o.in_file));
        const auto p = all_but_first_row_col(l);
        out << serialize(p);
        if (!o.verify) return kExitOk;
        const bool uc = is_uniquely_completable(p);
        err << "uniquely completable: " << yes_no(uc) << '\n';
        return uc ? kExitOk : kExitPropertyFails;
    }
    const auto p = o.kind == "paper-5x5" ? paper_example() : nelder_triangle(o.construct_n);
    out << serialize(p);
    if (!o.verify) return kExitOk;
    const auto report = verify_critical(p, o.threads);
    err << "critical: " << yes_no(report.critical()) << " (size " << report.size << ")\n";
    return report.critical() ? kExitOk : kExitPropertyFails;
}

int cmd_count(const Options& o, std::ostream& out) {
    const auto result = count_all(o.n, o.allow_larger);
    out << "R(" << o.n << ") = " << result.reduced_count << '\n';
    out << "L(" << o.n << ") = " << result.total_count << '\n';
    if (o.list) {
        for_each_reduced(
            o.n, [&](const LatinSquare& l) { out << '\n' << serialize(l); }, o.allow_larger);
    }
    return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    if (o.show_crossover) {
        out << crossover() << '\n';
        return kExitOk;
    }
    if (o.n_from == 0 || o.n_to == 0) throw UsageError("bounds needs <n_from> <n_to> or --crossover");
    const auto rows = bounds_table(o.n_from, o.n_to);
    const std::vector<std::string> header{"n",         "nelder",   "bm_upper",
                                          "theorem1",  "exact_counting_lower",
                                          "svr",       "log_Ln_lower",
                                          "log_cs_ln2_term", "log_cs_lnn_coeff"};
    std::vector<std::vector<std::string>> table;
    for (const auto& r : rows) {
        table.push_back({std::to_string(r.order), r.nelder.str(), r.bm_upper.str(),
                         fixed4(r.theorem1), fixed4(r.exact_counting_lower),
                         r.svr ? r.svr->str() : (o.csv ? "" : "-"), fixed4(r.log_Ln_lower),
                         fixed4(r.log_cs_count_upper_coeffs.first),
                         fixed4(r.log_cs_count_upper_coeffs.second)});
    }
    if (o.csv) {
        auto emit = [&](const std::vector<std::string>& fields) {
            for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
            out << '\n';
        };
        emit(header);
        for (const auto& t : table) emit(t);
        return kExitOk;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& t : table)
        for (std::size_t i = 0; i < t.size(); ++i) width[i] = std::max(width[i], t[i].size());
    auto emit = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out << "  ";
            out << std::setw(static_cast<int>(width[i])) << fields[i];
        }
        out << '\n';
    };
    emit(header);
    for (const auto& t : table) emit(t);
    return kExitOk;
}

int cmd_check_chain(const Options& o, std::ostream& out) {
    const auto lcs = o.lcs_value ? o.lcs_value : known_lcs(o.n);
    if (!lcs) throw UsageError("no lcs value known for n = " + std::to_string(o.n) + "; pass --lcs");
    const auto c = check_chain(o.n, *lcs);
    out << "n = " << c.order << ", lcs = " << *lcs << '\n';
    out << "ln lower bound: " << fixed4(c.lhs_log) << '\n';
    out << "ln L(n):        " << fixed4(c.mid_log) << '\n';
    out << "ln upper bound: " << fixed4(c.rhs_log) << '\n';
    out << "holds: " << yes_no(c.holds) << '\n';
    return c.holds ? kExitOk : kExitPropertyFails;
}

int cmd_check_stirling(const Options& o, std::ostream& out) {
    if (o.n < 1 || o.n > 300) throw UsageError("check-stirling needs 1 <= n_max <= 300");
    for (int k = 1; k <= o.n; ++k) {
        if (!stirling_check(k)) {
            out << "stirling: fails at n = " << k << '\n';
            return kExitPropertyFails;
        }
    }
    out << "stirling: holds for n = 1.." << o.n << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Critical sets of Latin squares: completion, criticality, lcs and bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--threads", o.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);

    auto* complete = app.add_subcommand("complete", "Count completions of a partial square");
    complete->add_option("file", o.file, "Grid file ('-' for stdin)")->required();
    complete->add_option("--count-cap", o.count_cap, "Stop counting at this many")
        ->check(CLI::PositiveNumber);
    complete->add_flag("--witnesses", o.witnesses, "Print up to two completions");

    auto* verify = app.add_subcommand("verify", "Check whether a partial square is a critical set");
    verify->add_option("file", o.file, "Grid file ('-' for stdin)")->required();

    auto* minimize = app.add_subcommand("minimize", "Shrink a uniquely completable set to a critical set");
    minimize->add_option("file", o.file, "Grid file ('-' for stdin)")->required();
    minimize->add_option("--seed", o.seed, "Seed for --order random");
    minimize->add_option("--order", o.removal_order, "Removal order")
        ->check(CLI::IsMember({"row-major", "random"}));

    auto* lcs = app.add_subcommand("lcs", "Largest critical set of order n");
    lcs->add_option("n", o.n, "Order")->required()->check(CLI::Range(1, kMaxOrder));
    auto* exhaustive = lcs->add_flag("--exhaustive", o.exhaustive, "Exact search (n <= 4)");
    auto* heuristic = lcs->add_flag("--heuristic", o.heuristic, "Seeded greedy search (lower bound)");
    exhaustive->excludes(heuristic);
    lcs->add_option("--seed", o.seed, "Seed for the heuristic");
    lcs->add_flag("--allow-order-5", o.allow_larger, "Permit exhaustive search at n = 5 (slow)");

    auto* construct = app.add_subcommand("construct", "Emit a named construction");
    construct->add_option("kind", o.kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"back-circulant", "nelder-triangle", "paper-5x5", "minus-first-rc"}));
    construct->add_option("--n", o.construct_n, "Order")->check(CLI::Range(1, kMaxOrder));
    construct->add_option("--in", o.in_file, "Latin square file for minus-first-rc");
    construct->add_flag("--verify", o.verify, "Verify the construction; exit 1 on failure");

    auto* count = app.add_subcommand("count", "Count Latin squares of order n");
    count->add_option("n", o.n, "Order")->required();
    count->add_flag("--list", o.list, "Stream the reduced squares");
    count->add_flag("--allow-order-6", o.allow_larger, "Permit n = 6");

    auto* bounds = app.add_subcommand("bounds", "Tabulate the lcs bounds");
    bounds->add_option("n_from", o.n_from, "First order");
    bounds->add_option("n_to", o.n_to, "Last order");
    bounds->add_flag("--csv", o.csv, "CSV with a header row");
    bounds->add_flag("--crossover", o.show_crossover,
                     "Print the order from which the counting bound beats (n^2-n)/2");

    auto* chain = app.add_subcommand("check-chain", "Check the counting inequality chain at n");
    chain->add_option("n", o.n, "Order (1..5)")->required();
    chain->add_option("--lcs", o.lcs_value, "lcs(n) to use instead of the known value");

    auto* stirling = app.add_subcommand("check-stirling", "Check Stirling's lower bound up to n_max");
    stirling->add_option("n_max", o.n, "Largest order")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (complete->parsed()) return cmd_complete(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (minimize->parsed()) return cmd_minimize(o, out);
        if (lcs->parsed()) return cmd_lcs(o, out);
        if (construct->parsed()) return cmd_construct(o, out, err);
        if (count->parsed()) return cmd_count(o, out);
        if (bounds->parsed()) return cmd_bounds(o, out);
        if (chain->parsed()) return cmd_check_chain(o, out);
        if (stirling->parsed()) return cmd_check_stirling(o, out);
    } catch (const NotUniquelyCompletable& e) {
        err << "error: " << e.what() << '\n';
        return kExitPropertyFails;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace critset
