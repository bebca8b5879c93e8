#include "tricode/cli.hpp"

#include "tricode/code.hpp"
#include "tricode/counting.hpp"
#include "tricode/identities.hpp"
#include "tricode/serialize.hpp"
#include "tricode/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tricode::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Accepts plain integers and exact scientific notation such as 1e10.
std::uint64_t parse_budget(const std::string& text) {
    std::size_t used = 0;
    long double v = 0;
    try {
        v = std::stold(text, &used);
    } catch (const std::exception&) {
        throw ConfigurationError("budget '" + text + "' is not a number");
    }
    if (used != text.size() || !(v >= 1) || v > 1.8e19L || std::floor(v) != v)
        throw ConfigurationError("budget '" + text + "' must be a positive integer");
    return static_cast<std::uint64_t>(v);
}

void require_m(const RunConfig& c) {
    if (c.m < 1 || c.m > kMaxBaseDegree)
        throw ConfigurationError("--m must lie in [1, " + std::to_string(kMaxBaseDegree) + "], got " +
                                 std::to_string(c.m));
}

void require_format(const RunConfig& c, bool text_ok) {
    if (c.format == "json" || c.format == "csv" || (text_ok && c.format == "text")) return;
    throw ConfigurationError("unsupported --format '" + c.format + "' for " + c.command);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

ojson item_json(const VerifyItem& it) {
    ojson j;
    j["suite"] = it.suite;
    j["name"] = it.name;
    j["status"] = std::string(to_string(it.status));
    j["expected"] = it.expected;
    j["actual"] = it.actual;
    j["note"] = it.note;
    return j;
}

struct Outcome {
    std::string body;
    int code = kExitOk;
    std::string diagnostic;  // one-line JSON for stderr on mismatch
};

// ---------------------------------------------------------------------------

Outcome cmd_weights(const RunConfig& c, std::ostream& err) {
    require_m(c);
    require_format(c, false);
    WeightDistribution d;
    if (c.method == "closed") {
        d = theorem_table(3, c.m);
    } else if (c.method == "rank" || c.method == "direct") {
        const FieldContext ctx = FieldContext::create(3, c.m);
        EnumerationOptions opts;
        opts.budget = c.budget;
        opts.parallelism = c.parallelism;
        const bool checkpointed = c.method == "rank" && c.m >= 6 && !c.checkpoint_dir.empty();
        if (checkpointed) opts.checkpoint = checkpoint_path(c);
        if (c.progress)
            opts.progress = [&err](std::uint64_t done, std::uint64_t total) {
                err << ojson{{"progress", {{"done", done}, {"total", total}}}}.dump() << std::endl;
            };
        d = enumerate_distribution(ctx, c.method == "rank" ? EnumerationMethod::Rank : EnumerationMethod::Direct, opts);
        // A finished run needs no resume point.
        if (checkpointed) std::filesystem::remove(*opts.checkpoint);
    } else {
        throw ConfigurationError("unknown --method '" + c.method + "' (closed, rank, direct)");
    }
    return {c.format == "csv" ? to_csv(d) : to_json(d) + "\n", kExitOk, {}};
}

Outcome cmd_verify(const RunConfig& c, std::ostream& err) {
    require_m(c);
    require_format(c, false);
    VerifyOptions v;
    v.m = c.m;
    v.budget = c.budget;
    v.parallelism = c.parallelism;
    v.seed = c.seed;
    if (c.progress)
        v.progress = [&err](const std::string& msg) { err << ojson{{"progress", msg}}.dump() << std::endl; };
    const auto items = run_suite(c.suite, v);

    std::size_t counts[5] = {0, 0, 0, 0, 0};
    const VerifyItem* first_bad = nullptr;
    for (const auto& it : items) {
        ++counts[static_cast<int>(it.status)];
        if (it.status == ItemStatus::Mismatch && !first_bad) first_bad = &it;
    }

    Outcome out;
    if (c.format == "csv") {
        out.body = "suite,name,status,expected,actual,note\n";
        for (const auto& it : items)
            out.body += csv_field(it.suite) + "," + csv_field(it.name) + "," + std::string(to_string(it.status)) + "," +
                        csv_field(it.expected) + "," + csv_field(it.actual) + "," + csv_field(it.note) + "\n";
    } else {
        ojson j;
        j["m"] = c.m;
        j["suite"] = c.suite;
        j["seed"] = std::to_string(c.seed);
        j["passed"] = first_bad == nullptr;
        j["summary"] = {{"match", counts[0]},
                        {"mismatch", counts[1]},
                        {"skipped", counts[2]},
                        {"remark_held", counts[3]},
                        {"remark_violated", counts[4]}};
        j["items"] = ojson::array();
        for (const auto& it : items) j["items"].push_back(item_json(it));
        out.body = j.dump(2) + "\n";
    }
    if (first_bad) {
        out.code = kExitMismatch;
        out.diagnostic = ojson{{"error", "mismatch"}, {"first", item_json(*first_bad)}}.dump();
    }
    return out;
}

Outcome cmd_count(const RunConfig& c) {
    require_m(c);
    require_format(c, false);
    const SystemId id = system_from_string(c.system);
    const FieldContext ctx = FieldContext::create(3, c.m);
    const Integer count = count_bruteforce(id, ctx, {c.budget, c.parallelism}).count;

    ojson j;
    j["count"] = to_decimal(count);
    bool match = true;
    if (c.oracle) {
        bool any = false;
        if (has_closed_form(id)) {
            const Integer closed = closed_form_count(id, 3, c.m).count;
            j["closed_form"] = to_decimal(closed);
            match = match && closed == count;
            any = true;
        }
        for (TableId t : kAllTables) {
            if (variety_table(t).system != id) continue;
            const Integer v = variety_count(t, ctx, {c.budget, c.parallelism}).count;
            j["variety"] = to_decimal(v);
            match = match && v == count;
            any = true;
        }
        if (id == SystemId::SYS6_HOM && c.m % 2 == 0) {
            EnumerationOptions opts;
            opts.budget = c.budget;
            opts.parallelism = c.parallelism;
            const ClassHistogram h = class_histogram(ctx, opts);
            const Integer v = m6_from_frequencies(frequencies_from_histogram(h), 3, c.m, from_u64(h.slots[0]));
            j["frequency_formula"] = to_decimal(v);
            match = match && v == count;
            any = true;
        }
        if (!any) throw ConfigurationError("no oracle available for " + c.system);
        j["match"] = match;
    }

    Outcome out;
    if (c.format == "csv") {
        std::string head, row;
        for (const auto& [k, v] : j.items()) {
            head += (head.empty() ? "" : ",") + k;
            row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        out.body = head + "\n" + row + "\n";
    } else {
        out.body = j.dump() + "\n";
    }
    if (!match) {
        out.code = kExitMismatch;
        out.diagnostic = ojson{{"error", "mismatch"}, {"first", j}}.dump();
    }
    return out;
}

Outcome cmd_cosets(const RunConfig& c) {
    require_m(c);
    require_format(c, false);
    const std::uint64_t n = saturating_pow(3, static_cast<unsigned>(c.m)) - 1;
    std::vector<CycloCoset> cosets;
    for (std::uint64_t s : {2U, 4U, 10U}) cosets.push_back(cyclotomic_coset(s % n, 3, c.m));
    Outcome out;
    if (c.format == "csv") {
        out.body = "s,size,elements\n";
        for (const auto& cs : cosets) {
            std::string el;
            for (auto e : cs.elements) el += (el.empty() ? "" : " ") + std::to_string(e);
            out.body += std::to_string(cs.s) + "," + std::to_string(cs.size()) + "," + el + "\n";
        }
    } else {
        ojson j;
        j["m"] = c.m;
        j["modulus"] = std::to_string(n);
        j["cosets"] = ojson::array();
        for (const auto& cs : cosets) j["cosets"].push_back({{"s", cs.s}, {"size", cs.size()}, {"elements", cs.elements}});
        j["dimension"] = code_dimension(3, c.m);
        out.body = j.dump() + "\n";
    }
    return out;
}

Outcome cmd_dump_tables(const RunConfig& c) {
    require_format(c, true);
    if (c.format == "text") return {dump_tables(), kExitOk, {}};
    Outcome out;
    if (c.format == "csv") {
        out.body = "table,system,block,constraint\n";
        for (TableId id : kAllTables) {
            const auto& t = variety_table(id);
            for (std::size_t b = 0; b < t.blocks.size(); ++b)
                for (const auto& con : t.blocks[b].constraints)
                    out.body += std::string(to_string(id)) + "," + std::string(to_string(t.system)) + "," +
                                std::to_string(b + 1) + "," + csv_field(con.text) + "\n";
        }
        return out;
    }
    ojson j;
    j["systems"] = ojson::array();
    for (SystemId id : kAllSystems) j["systems"].push_back({{"id", to_string(id)}, {"equations", describe_system(id, 3)}});
    j["tables"] = ojson::array();
    for (TableId id : kAllTables) {
        const auto& t = variety_table(id);
        ojson blocks = ojson::array();
        for (const auto& b : t.blocks) {
            ojson cons = ojson::array();
            for (const auto& con : b.constraints) cons.push_back(con.text);
            blocks.push_back(cons);
        }
        j["tables"].push_back(
            {{"id", to_string(id)}, {"system", to_string(t.system)}, {"variables", t.variables}, {"blocks", blocks}});
    }
    out.body = j.dump(2) + "\n";
    return out;
}

Outcome dispatch(const RunConfig& c, std::ostream& err) {
    if (c.parallelism < 1) throw ConfigurationError("--parallelism must be at least 1");
    if (c.command == "weights") return cmd_weights(c, err);
    if (c.command == "verify") return cmd_verify(c, err);
    if (c.command == "count") return cmd_count(c);
    if (c.command == "cosets") return cmd_cosets(c);
    if (c.command == "dump-tables") return cmd_dump_tables(c);
    throw ConfigurationError("unknown command '" + c.command + "'");
}

} // namespace

std::string error_json(const std::string& kind, const std::string& message) {
    return ojson{{"error", kind}, {"message", message}}.dump();
}

std::string checkpoint_path(const RunConfig& config) {
    return (std::filesystem::path(config.checkpoint_dir) /
            ("tricode-m" + std::to_string(config.m) + "-" + config.method + ".checkpoint.json"))
        .string();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const Outcome o = dispatch(config, err);
        if (config.output.empty()) {
            out << o.body << std::flush;
        } else {
            std::ofstream f(config.output, std::ios::binary | std::ios::trunc);
            if (!f) throw ConfigurationError("cannot open output file " + config.output);
            f << o.body;
        }
        if (!o.diagnostic.empty()) err << o.diagnostic << std::endl;
        return o.code;
    } catch (const BudgetExceeded& e) {
        err << ojson{{"error", "budget_exceeded"},
                     {"message", e.what()},
                     {"required", std::to_string(e.required())},
                     {"budget", std::to_string(e.budget())}}
                   .dump()
            << std::endl;
        return kExitInvalid;
    } catch (const HypothesisError& e) {
        err << error_json("hypothesis", e.what()) << std::endl;
        return kExitInvalid;
    } catch (const ConfigurationError& e) {
        err << error_json("invalid_input", e.what()) << std::endl;
        return kExitInvalid;
    } catch (const IntegrityError& e) {
        err << error_json("integrity", e.what()) << std::endl;
        return kExitInvalid;
    } catch (const InconsistencyError& e) {
        err << error_json("inconsistency", e.what()) << std::endl;
        return kExitMismatch;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()) << std::endl;
        return kExitInvalid;
    }
}

int run(const RunConfig& config) { return run(config, std::cout, std::cerr); }

ParseResult parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    std::string budget = std::to_string(kDefaultBudget);
    bool quiet = false;
    bool dump_flag = false;

    CLI::App app{"Weight distribution of a ternary cyclic code with three nonzeros, with exact cross-checks"};
    app.set_help_all_flag("--help-all", "Help for every subcommand");
    app.require_subcommand(0, 1);
    app.fallthrough();

    app.add_option("--parallelism", c.parallelism, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", budget, "Maximum field evaluations before refusing (integer or 1e10 form)");
    app.add_option("--seed", c.seed, "Seed for sampled checks");
    app.add_option("--output", c.output, "Write results here instead of standard output");
    app.add_option("--format", c.format, "json, csv (dump-tables also: text)");
    app.add_option("--checkpoint-dir", c.checkpoint_dir, "Directory for rank-enumeration checkpoints; empty disables");
    app.add_flag("--quiet", quiet, "No progress lines on standard error");
    app.add_flag("--dump-tables", dump_flag, "Same as the dump-tables subcommand");

    auto* weights = app.add_subcommand("weights", "Weight distribution");
    weights->add_option("--m", c.m, "Extension degree")->required();
    weights->add_option("--method", c.method, "closed, rank or direct");

    auto* verify = app.add_subcommand("verify", "Oracle comparison suites");
    verify->add_option("--m", c.m, "Extension degree")->required();
    verify->add_option("--suite", c.suite, "moments, expsum, variety, codewords, dual or all");

    auto* count = app.add_subcommand("count", "Solutions of a power-sum system");
    count->add_option("--system", c.system, "System id, e.g. SYS4_HOM")->required();
    count->add_option("--m", c.m, "Extension degree")->required();
    count->add_flag("--oracle", c.oracle, "Compare against every independent count");

    auto* cosets = app.add_subcommand("cosets", "Cyclotomic cosets of the three exponents");
    cosets->add_option("--m", c.m, "Extension degree")->required();

    app.add_subcommand("dump-tables", "Print the component tables and systems");

    try {
        app.parse(argc, argv);
        c.budget = parse_budget(budget);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return {std::nullopt, kExitOk};
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return {std::nullopt, kExitOk};
    } catch (const CLI::ParseError& e) {
        err << error_json("invalid_input", e.what()) << std::endl;
        return {std::nullopt, kExitInvalid};
    } catch (const ConfigurationError& e) {
        err << error_json("invalid_input", e.what()) << std::endl;
        return {std::nullopt, kExitInvalid};
    }

    if (!app.get_subcommands().empty()) c.command = app.get_subcommands().front()->get_name();
    if (dump_flag) {
        if (!c.command.empty() && c.command != "dump-tables") {
            err << error_json("invalid_input", "--dump-tables cannot be combined with " + c.command) << std::endl;
            return {std::nullopt, kExitInvalid};
        }
        c.command = "dump-tables";
        if (c.format == "json" && !app.count("--format")) c.format = "text";
    }
    if (c.command.empty()) {
        err << error_json("invalid_input", "a subcommand is required (weights, verify, count, cosets, dump-tables)")
            << std::endl;
        return {std::nullopt, kExitInvalid};
    }
    c.progress = !quiet;
    return {c, kExitOk};
}

} // namespace tricode::cli
