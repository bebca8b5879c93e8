#include "tricode/counting.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace tricode {

namespace {

struct RawTable {
    TableId id;
    std::string_view name;
    SystemId system;
    std::vector<std::string> variables;
    std::vector<std::vector<std::string_view>> blocks;
};

// One group of Table I: the monomial v^2 with eight pairs of linear forms.
void add_group(std::vector<std::vector<std::string_view>>& blocks, std::string_view square,
               const std::array<std::string_view, 8>& first, const std::array<std::string_view, 8>& second) {
    for (std::size_t i = 0; i < 8; ++i) blocks.push_back({square, first[i], second[i]});
}

std::vector<RawTable> raw_tables() {
    std::vector<RawTable> out;

    RawTable t1{TableId::TABLE_I, "TABLE_I", SystemId::SYS5_HOM, {"x", "y", "z", "w", "u"}, {}};
    add_group(t1.blocks, "x^2", {"y-w-u", "y-w-u", "y-w+u", "y-w+u", "y+w-u", "y+w-u", "y+w+u", "y+w+u"},
              {"z-w+u", "z+w-u", "z-w-u", "z+w+u", "z-w-u", "z+w+u", "z-w+u", "z+w-u"});
    add_group(t1.blocks, "y^2", {"x-w-u", "x-w-u", "x-w+u", "x-w+u", "x+w-u", "x+w-u", "x+w+u", "x+w+u"},
              {"z-w+u", "z+w-u", "z-w-u", "z+w+u", "z-w-u", "z+w+u", "z-w+u", "z+w-u"});
    add_group(t1.blocks, "z^2", {"x-w-u", "x-w-u", "x-w+u", "x-w+u", "x+w-u", "x+w-u", "x+w+u", "x+w+u"},
              {"y-w+u", "y+w-u", "y-w-u", "y+w+u", "y-w-u", "y+w+u", "y-w+u", "y+w-u"});
    add_group(t1.blocks, "w^2", {"x-z-u", "x-z-u", "x-z+u", "x-z+u", "x+z-u", "x+z-u", "x+z+u", "x+z+u"},
              {"y-z+u", "y+z-u", "y-z-u", "y+z+u", "y-z-u", "y+z+u", "y-z+u", "y+z-u"});
    add_group(t1.blocks, "u^2", {"x-z-w", "x-z-w", "x-z+w", "x-z+w", "x+z-w", "x+z-w", "x+z+w", "x+z+w"},
              {"y-z+w", "y+z-w", "y-z-w", "y+z+w", "y-z-w", "y+z+w", "y-z+w", "y+z-w"});
    out.push_back(std::move(t1));

    out.push_back({TableId::TABLE_II,
                   "TABLE_II",
                   SystemId::DUAL_W4_ONEFLIP,
                   {"x", "y", "z", "w"},
                   {{"y^4", "x^2+y^2", "z-w"},
                    {"y^4", "x^2+y^2", "z+w"},
                    {"z^4", "x^2+z^2", "y-w"},
                    {"z^4", "x^2+z^2", "y+w"},
                    {"z^4", "y^2+z^2", "x-w"},
                    {"z^4", "y^2+z^2", "x+w"},
                    {"w^4", "y^2-yz+z^2+w^2", "x-y+z"},
                    {"w^4", "y^2-yz+z^2+w^2", "x+y-z"},
                    {"w^4", "y^2+yz+z^2+w^2", "x-y-z"},
                    {"w^4", "y^2+yz+z^2+w^2", "x+y+z"}}});

    out.push_back({TableId::TABLE_III,
                   "TABLE_III",
                   SystemId::DUAL_W4_TWOFLIP,
                   {"x", "y", "z", "w"},
                   {{"x-z", "y-w"},
                    {"x-z", "y+w"},
                    {"x+z", "y-w"},
                    {"x+z", "y+w"},
                    {"x-w", "y-z"},
                    {"x-w", "y+z"},
                    {"x+w", "y-z"},
                    {"x+w", "y+z"}}});
    return out;
}

const std::vector<RawTable>& raw() {
    static const std::vector<RawTable> tables = raw_tables();
    return tables;
}

std::vector<VarietyTable> build_tables() {
    std::vector<VarietyTable> out;
    for (const auto& r : raw()) {
        VarietyTable t{r.id, r.system, r.variables, {}};
        for (const auto& b : r.blocks) {
            ComponentBlock block;
            for (auto text : b) block.constraints.push_back(parse_constraint(text, r.variables));
            t.blocks.push_back(std::move(block));
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

std::string_view to_string(TableId id) noexcept {
    for (const auto& r : raw())
        if (r.id == id) return r.name;
    return "UNKNOWN";
}

TableId table_from_string(std::string_view name) {
    for (const auto& r : raw())
        if (r.name == name) return r.id;
    throw ConfigurationError("unknown table id: " + std::string(name));
}

Constraint parse_constraint(std::string_view text, const std::vector<std::string>& variables) {
    if (variables.size() > 6) throw ConfigurationError("at most six variables are supported");
    Constraint c{std::string(text), {}};
    std::size_t i = 0;
    auto fail = [&](const std::string& why) -> void {
        throw ConfigurationError("cannot parse constraint '" + std::string(text) + "': " + why);
    };
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&] {
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = 10 * v + (text[i++] - '0');
        return v;
    };

    skip_space();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_space();
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;

        Monomial mono;
        mono.coef = sign;
        bool any_factor = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mono.coef *= read_int();
            any_factor = true;
        }
        while (i < text.size()) {
            skip_space();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_space();
            }
            if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
            std::size_t var = variables.size();
            for (std::size_t v = 0; v < variables.size(); ++v)
                if (text.substr(i, variables[v].size()) == variables[v]) {
                    var = v;
                    break;
                }
            if (var == variables.size()) fail("unknown symbol at position " + std::to_string(i));
            i += variables[var].size();
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = read_int();
                if (e <= 0) fail("bad exponent");
            }
            mono.exps[var] = static_cast<std::uint8_t>(mono.exps[var] + e);
            any_factor = true;
        }
        if (!any_factor) fail("empty term");
        c.terms.push_back(mono);
        skip_space();
    }
    if (c.terms.empty()) fail("empty polynomial");
    return c;
}

const VarietyTable& variety_table(TableId id) {
    static const std::vector<VarietyTable> tables = build_tables();
    for (const auto& t : tables)
        if (t.id == id) return t;
    throw ConfigurationError("unknown table id");
}

std::string dump_tables() {
    std::ostringstream os;
    for (const auto& r : raw()) {
        os << r.name << " (" << to_string(r.system) << ", variables";
        for (const auto& v : r.variables) os << ' ' << v;
        os << ", " << r.blocks.size() << " blocks)\n";
        for (std::size_t b = 0; b < r.blocks.size(); ++b) {
            os << "  " << (b + 1) << ":";
            for (std::size_t k = 0; k < r.blocks[b].size(); ++k) os << (k ? ", " : " ") << r.blocks[b][k];
            os << '\n';
        }
    }
    return os.str();
}

std::uint32_t evaluate_constraint(const IndexTables& tables, const Constraint& c, const std::uint32_t* values) {
    std::uint64_t acc = 0;
    for (const auto& term : c.terms) {
        const int coef = ((term.coef % 3) + 3) % 3;
        if (coef == 0) continue;
        std::uint32_t v = 1;
        for (std::size_t k = 0; k < term.exps.size() && v; ++k)
            if (term.exps[k]) v = tables.mul(v, tables.pow(values[k], term.exps[k]));
        const std::uint64_t packed = tables.packed(v);
        acc = packed3::add(acc, coef == 1 ? packed : packed3::neg(packed));
    }
    return tables.unpack(acc);
}

namespace {

class BlockSolver {
public:
    BlockSolver(const IndexTables& tables, int nvars, std::unordered_set<std::uint64_t>& out)
        : tables_(tables), n_(nvars), out_(out) {}

    void run(const ComponentBlock& block) {
        block_ = &block;
        values_.fill(0);
        solve(0);
    }

private:
    unsigned var_mask(const Constraint& c) const {
        unsigned mask = 0;
        for (const auto& t : c.terms)
            for (int k = 0; k < n_; ++k)
                if (t.exps[static_cast<std::size_t>(k)]) mask |= 1U << k;
        return mask;
    }

    int degree_in(const Constraint& c, int v) const {
        int d = 0;
        for (const auto& t : c.terms) d = std::max(d, static_cast<int>(t.exps[static_cast<std::size_t>(v)]));
        return d;
    }

    void record() {
        std::uint64_t code = 0;
        for (int k = n_ - 1; k >= 0; --k) code = code * tables_.q() + values_[static_cast<std::size_t>(k)];
        out_.insert(code);
    }

    void solve(unsigned assigned) {
        const unsigned all = (1U << n_) - 1;
        const Constraint* single = nullptr;
        int single_var = -1;
        for (const auto& c : block_->constraints) {
            const unsigned unknown = var_mask(c) & ~assigned;
            if (unknown == 0) {
                if (evaluate_constraint(tables_, c, values_.data()) != 0) return;
            } else if ((unknown & (unknown - 1)) == 0 && !single) {
                single = &c;
                single_var = __builtin_ctz(unknown);
            }
        }
        if (assigned == all) {
            record();
            return;
        }
        auto& slot = values_[static_cast<std::size_t>(single ? single_var : __builtin_ctz(~assigned & all))];
        if (single) {
            const unsigned next = assigned | (1U << single_var);
            if (degree_in(*single, single_var) == 1) {
                // f(v) = f(0) + (f(1) - f(0)) v.
                slot = 0;
                const std::uint32_t f0 = evaluate_constraint(tables_, *single, values_.data());
                slot = 1;
                const std::uint32_t f1 = evaluate_constraint(tables_, *single, values_.data());
                const std::uint32_t a = tables_.add(f1, tables_.neg(f0));
                if (a != 0) {
                    const std::uint32_t inv = tables_.exp((tables_.order() - tables_.log(a)) % tables_.order());
                    slot = tables_.mul(tables_.neg(f0), inv);
                    solve(next);
                    return;
                }
                if (f0 != 0) return;
                // Constraint vanishes identically in v: fall through to enumeration.
            }
            for (std::uint32_t x = 0; x < tables_.q(); ++x) {
                slot = x;
                if (evaluate_constraint(tables_, *single, values_.data()) == 0) solve(next);
            }
            return;
        }
        const int v = __builtin_ctz(~assigned & all);
        for (std::uint32_t x = 0; x < tables_.q(); ++x) {
            slot = x;
            solve(assigned | (1U << v));
        }
    }

    const IndexTables& tables_;
    int n_;
    std::unordered_set<std::uint64_t>& out_;
    const ComponentBlock* block_ = nullptr;
    std::array<std::uint32_t, 6> values_{};
};

} // namespace

SolutionCount variety_count(TableId id, const FieldContext& ctx, const CountOptions& options) {
    if (ctx.p() != 3) throw ConfigurationError("variety counting is implemented for p = 3");
    const VarietyTable& table = variety_table(id);
    const int n = static_cast<int>(table.variables.size());
    if (saturating_pow(ctx.q(), static_cast<unsigned>(n)) == UINT64_MAX)
        throw ConfigurationError("field too large for tuple encoding");

    std::uint64_t required = 0;
    for (const auto& b : table.blocks) {
        const int free = std::max(0, n - static_cast<int>(b.constraints.size()));
        required = std::min<std::uint64_t>(UINT64_MAX - 1, required + saturating_pow(ctx.q(), static_cast<unsigned>(free)));
    }
    if (required > options.budget) throw BudgetExceeded(required, options.budget);

    const IndexTables tables(ctx);
    std::unordered_set<std::uint64_t> points;
    BlockSolver solver(tables, n, points);
    for (const auto& b : table.blocks) solver.run(b);
    return {table.system, ctx.m(), from_u64(points.size())};
}

} // namespace tricode
