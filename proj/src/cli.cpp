#include "sixterm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sixterm/bounds.hpp"
#include "sixterm/equation.hpp"
#include "sixterm/parallel.hpp"
#include "sixterm/parametric.hpp"
#include "sixterm/records_io.hpp"
#include "sixterm/search.hpp"
#include "sixterm/sequence.hpp"

namespace sixterm::cli {

namespace {

using nlohmann::json;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Options shared by the subcommands; unused fields stay at their defaults.
struct RunConfig {
    std::int64_t A = 0;
    int n = 0;
    std::vector<std::int64_t> a_range;
    std::optional<std::int64_t> X;
    std::vector<std::int64_t> coeffs;
    bool normalized = false;
    bool collide = false;
    std::string pool = "units";
    std::vector<std::string> family_coeffs;
    unsigned workers = default_workers();
    std::string out_path;
    std::string in_path;
    bool strict = false;
    double budget = kDefaultLeafBudget;
    int base_range = 20;
};

// Output is opened before any work so an unwritable path fails fast.
class RecordSink {
public:
    explicit RecordSink(const std::string& path) {
        if (path.empty()) return;
        file_.open(path, std::ios::out | std::ios::trunc);
        if (!file_) throw ValidationError("cannot open output file for writing: " + path);
        enabled_ = true;
    }
    void write(const json& record) {
        if (enabled_) file_ << to_line(record) << '\n';
    }
    void close() {
        if (!enabled_) return;
        file_.flush();
        if (!file_) throw std::runtime_error("failed writing output file");
        file_.close();
    }

private:
    std::ofstream file_;
    bool enabled_ = false;
};

void check_budget(double workload, double budget) {
    if (workload > budget) {
        std::ostringstream msg;
        msg << "estimated workload " << workload << " leaves exceeds budget " << budget << " (raise --budget)";
        throw BudgetError(msg.str());
    }
}

ARange resolve_range(const RunConfig& cfg, std::int64_t X) {
    if (cfg.A != 0) return {cfg.A, cfg.A};
    if (!cfg.a_range.empty()) return {cfg.a_range[0], cfg.a_range[1]};
    return {3, a_cap(X)};
}

std::string render_solution(const SolutionRecord& r) {
    std::ostringstream os;
    os << "A=" << r.A << "  x_" << r.indices[0];
    bool first = true;
    if (r.coefficients[0] != 1) os << " * " << r.coefficients[0];
    os << " =";
    for (std::size_t i = 1; i < 6; ++i) {
        const std::int64_t c = -r.coefficients[i];
        if (c == 0) continue;
        os << (first ? (c < 0 ? " -" : "") : (c < 0 ? " -" : " +"));
        if (std::abs(c) != 1) os << ' ' << std::abs(c) << " *";
        os << " x_" << r.indices[i];
        first = false;
    }
    if (first) os << " 0";
    os << "   m=(";
    for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << r.indices[i];
    os << ") a=(";
    for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << r.coefficients[i];
    os << ')';
    return os.str();
}

template <class Array>
std::string join(const Array& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : a) {
        os << (first ? "" : " ") << v;
        first = false;
    }
    return os.str();
}

void print_bounds(const BoundSet& b, std::ostream& out) {
    out << "X " << b.X << '\n';
    out << "a_cap " << b.a_cap << '\n';
    out << "sporadic caps (m1..m6): " << join(b.sporadic) << '\n';
    out << "form-1 caps (l k j i): " << join(b.form1) << '\n';
    out << "form-2 caps (m l k j i): " << join(b.form2) << '\n';
}

int cmd_seq(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1) throw ValidationError("--n must be >= 1");
    RecordSink sink(cfg.out_path);
    const auto table = SequenceTable::build({cfg.A}, cfg.n);
    out << table.x(cfg.n) << '\n';
    out << "x: " << join(table.xs()) << '\n';
    out << "y: " << join(table.ys()) << '\n';
    sink.write(header_record("seq", json{{"A", cfg.A}, {"n", cfg.n}}, compute_bounds(1)));
    for (int k = 0; k <= cfg.n; ++k) sink.write(term_record(cfg.A, k, table.x(k), table.y(k)));
    sink.close();
    return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    RecordSink sink(cfg.out_path);
    const BoundSet b = compute_bounds(cfg.X.value_or(1));
    print_bounds(b, out);
    sink.write(header_record("bounds", json{{"X", b.X}}, b));
    sink.close();
    return kOk;
}

NormalizedEquation equation_from(const RunConfig& cfg) {
    Coefficients c{};
    std::copy(cfg.coeffs.begin(), cfg.coeffs.end(), c.begin());
    if (cfg.normalized) {
        if (cfg.collide) throw ValidationError("--collide applies only to two-sided coefficients");
        return direct_equation(c, cfg.X);
    }
    auto eq = normalize(CoefficientSet{c}, cfg.collide);
    if (cfg.X) eq.X = *cfg.X;
    return eq;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
    const NormalizedEquation eq = equation_from(cfg);
    const BoundSet b = compute_bounds(eq.X);
    const ARange range = resolve_range(cfg, eq.X);
    if (range.lo < 3 || range.hi > b.a_cap || range.lo > range.hi)
        throw ValidationError("A range must lie within [3, " + std::to_string(b.a_cap) + "]");
    check_budget(search_workload(range, b.sporadic, CoefficientSpace::single(eq.a)), cfg.budget);
    RecordSink sink(cfg.out_path);

    SearchOptions opts;
    opts.workers = cfg.workers;
    opts.strict = cfg.strict;
    const auto found = search_all(eq, range, opts);

    print_bounds(b, out);
    out << "equation A1..A6: " << join(eq.a) << "   A in [" << range.lo << ", " << range.hi << "]\n";
    for (const auto& r : found) out << render_solution(r) << '\n';
    out << "solutions: " << found.size() << '\n';

    json config{{"coefficients", cfg.coeffs},
                {"normalized", cfg.normalized},
                {"collide", cfg.collide},
                {"equation", eq.a},
                {"A_range", {range.lo, range.hi}},
                {"strict", cfg.strict}};
    sink.write(header_record("search", config, b));
    for (const auto& r : found) sink.write(solution_record(r, eq.X));
    sink.close();
    return kOk;
}

std::vector<std::int64_t> parse_tuple(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError("bad coefficient tuple '" + text + "'");
        }
    }
    return out;
}

int cmd_families(const RunConfig& cfg, std::ostream& out) {
    const std::int64_t X = cfg.X.value_or(1);
    const BoundSet b = compute_bounds(X);
    const ARange range = resolve_range(cfg, X);
    if (range.lo < 3 || range.hi > b.a_cap || range.lo > range.hi)
        throw ValidationError("A range must lie within [3, " + std::to_string(b.a_cap) + "]");

    std::vector<std::vector<std::int64_t>> pool;
    if (cfg.family_coeffs.empty()) {
        if (cfg.pool != "units") throw ValidationError("unknown --pool '" + cfg.pool + "' (expected 'units')");
        pool = unit_coefficient_pool();
    } else {
        for (const auto& t : cfg.family_coeffs) pool.push_back(parse_tuple(t));
    }
    check_budget(family_workload(range, pool, X), cfg.budget);
    RecordSink sink(cfg.out_path);

    const auto families = enumerate_families(range, pool, X, cfg.workers);
    print_bounds(b, out);
    for (const auto& f : families) {
        out << "A=" << f.A << " " << to_string(f.form) << " offsets=(" << join(f.offsets) << ") coefficients=("
            << join(f.coefficients) << ")\n";
    }
    out << "families: " << families.size() << '\n';

    json config{{"A_range", {range.lo, range.hi}}, {"pool", cfg.family_coeffs.empty() ? json(cfg.pool) : json(pool)}};
    sink.write(header_record("families", config, b));
    for (const auto& f : families) sink.write(family_record(f, X));
    sink.close();
    return kOk;
}

bool ranked(const IndexTuple& m) {
    if (!(m[0] > m[1])) return false;
    for (std::size_t i = 2; i < 6; ++i)
        if (m[i] > m[i - 1]) return false;
    return m[5] >= 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream in(cfg.in_path);
    if (!in) throw ValidationError("cannot open input file: " + cfg.in_path);

    std::optional<BoundSet> bounds;
    std::size_t line_no = 0;
    std::size_t solutions = 0;
    std::size_t families = 0;
    std::size_t failures = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
        }
        const std::string kind = j.value("kind", "");
        auto fail = [&](const std::string& why) {
            ++failures;
            err << "line " << line_no << ": " << why << '\n';
        };
        try {
            if (kind == "header") {
                bounds = bounds_from_json(j.at("bounds"));
            } else if (kind == "solution") {
                ++solutions;
                const SolutionRecord r = solution_from_json(j);
                if (r.A < 3) {
                    fail("A must be >= 3");
                    continue;
                }
                if (r.coefficients[0] == 0 || !ranked(r.indices)) {
                    fail("indices must satisfy m1 > m2 >= ... >= m6 >= 0 with A1 != 0");
                    continue;
                }
                if (bounds) {
                    if (r.A > bounds->a_cap) fail("A exceeds a_cap");
                    for (std::size_t i = 0; i < 6; ++i)
                        if (static_cast<unsigned>(r.indices[i]) > bounds->sporadic[i]) {
                            fail("index m" + std::to_string(i + 1) + " exceeds its cap");
                            break;
                        }
                }
                const auto table = SequenceTable::build({r.A}, std::max(1, r.indices[0]));
                if (!satisfies(r.coefficients, r.indices, table)) fail("equation does not hold");
            } else if (kind == "family") {
                ++families;
                const FamilyRecord f = family_from_json(j);
                if (!is_gamma_root(f.polynomial(), f.A))
                    fail("gamma is not a root of the family polynomial");
                else if (!verify_family(f, cfg.base_range))
                    fail("shifted sums do not vanish");
            } else if (kind != "term") {
                fail("unknown record kind '" + kind + "'");
            }
        } catch (const std::invalid_argument& e) {
            fail(std::string("malformed record: ") + e.what());
        }
    }
    out << "verified " << solutions << " solution(s) and " << families << " family record(s); " << failures
        << " failure(s)\n";
    return failures == 0 ? kOk : kVerifyFailed;
}

int cmd_repro(const RunConfig& cfg, std::ostream& out) {
    const BoundSet b = compute_bounds(1);
    const ARange range{3, b.a_cap};
    check_budget(search_workload(range, b.sporadic, CoefficientSpace::sign_patterns()), cfg.budget);
    RecordSink sink(cfg.out_path);

    SearchOptions opts;
    opts.workers = cfg.workers;
    opts.strict = cfg.strict;
    const ReproResult res = reproduce_example(opts);

    print_bounds(res.bounds, out);
    out << "note: m3 ranges over [m4, " << res.bounds.sporadic[2] << "], the derived cap, not [m4, 24]\n";
    out << "sweep: A in [3, " << res.bounds.a_cap << "], leading coefficient +1, others in {-1, 0, 1}"
        << (cfg.strict ? ", two-sided strict form" : "") << '\n';
    for (const auto& r : res.solutions) out << render_solution(r) << '\n';
    out << "raw hits: " << res.raw_hits << '\n';
    out << "distinct solutions: " << res.solutions.size() << '\n';
    out << (res.reference_found ? "PASS" : "FAIL")
        << ": reference solution A=5 x_2 = x_1 + x_1 + x_1 + x_1 + x_1 "
        << (res.reference_found ? "found" : "not found") << '\n';

    json config{{"A_range", {range.lo, range.hi}}, {"patterns", "leading +1, others in {-1,0,1}"},
                {"strict", cfg.strict}};
    sink.write(header_record("repro", config, res.bounds));
    for (const auto& r : res.solutions) sink.write(solution_record(r, 1));
    sink.close();
    return res.reference_found ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solutions of six-term equations over balancing-like sequences", "sixterm"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_workers = [&](CLI::App* sub) {
        sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_path, "Write JSON Lines records here"); };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "Refuse runs estimated above this many leaves")
            ->check(CLI::PositiveNumber);
    };
    auto add_range = [&](CLI::App* sub) {
        auto* a = sub->add_option("--A", cfg.A, "Single A value");
        auto* r = sub->add_option("--A-range", cfg.a_range, "Inclusive A range LO HI")->expected(2);
        a->excludes(r);
    };

    auto* seq = app.add_subcommand("seq", "Print x_0..x_n and the companion y_0..y_n");
    seq->add_option("--A", cfg.A, "Recurrence parameter (>= 2)")->required();
    seq->add_option("--n", cfg.n, "Largest index")->required();
    add_out(seq);

    auto* bounds = app.add_subcommand("bounds", "Print a_cap and every index cap for X");
    bounds->add_option("--X", cfg.X, "Size parameter (default 1)");
    add_out(bounds);

    auto* search = app.add_subcommand("search", "Enumerate sporadic solutions of one equation");
    search->add_option("--coeffs", cfg.coeffs, "C1..C6 (or A1..A6 with --normalized)")->expected(6)->required();
    search->add_flag("--normalized", cfg.normalized, "Coefficients are already A1..A6");
    search->add_flag("--collide", cfg.collide, "Rewrite for the n1 == n4 case");
    search->add_option("--X", cfg.X, "Override the size parameter");
    add_range(search);
    search->add_flag("--strict", cfg.strict, "Keep only two-sided strict-form solutions");
    add_workers(search);
    add_out(search);
    add_budget(search);

    auto* families = app.add_subcommand("families", "Enumerate parametric families");
    families->add_option("--X", cfg.X, "Size parameter (default 1)");
    add_range(families);
    families->add_option("--pool", cfg.pool, "Coefficient pool ('units': every +-1 tuple of length 3..6)");
    families->add_option("--coeffs", cfg.family_coeffs, "Coefficient tuple such as 1,-6,1 (repeatable)");
    add_workers(families);
    add_out(families);
    add_budget(families);

    auto* verify = app.add_subcommand("verify", "Re-verify every record of a JSON Lines file");
    verify->add_option("--in", cfg.in_path, "Input file")->required();
    verify->add_option("--base-range", cfg.base_range, "Shifts checked per family")->check(CLI::NonNegativeNumber);

    auto* repro = app.add_subcommand("repro", "Sweep the X = 1 numerical example");
    repro->add_flag("--strict", cfg.strict, "Keep only two-sided strict-form solutions");
    add_workers(repro);
    add_out(repro);
    add_budget(repro);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }
    try {
        if (seq->parsed()) return cmd_seq(cfg, out);
        if (bounds->parsed()) return cmd_bounds(cfg, out);
        if (search->parsed()) return cmd_search(cfg, out);
        if (families->parsed()) return cmd_families(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (repro->parsed()) return cmd_repro(cfg, out);
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid input: " << e.what() << '\n';
        return kValidationError;
    }
    return kValidationError;
}

}  // namespace sixterm::cli
