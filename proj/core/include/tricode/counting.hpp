#pragma once

#include "tricode/errors.hpp"
#include "tricode/gf.hpp"
#include "tricode/numeric.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tricode {

/// Power-sum systems sum_i s_i x_i^e + c = 0 for e in {2, p+1, p^2+1}.
enum class SystemId {
    SYS2_HOM,
    SYS3_AFF,
    SYS3_HOM,
    SYS4_AFF,
    SYS4_HOM,
    SYS5_HOM,
    SYS6_HOM,
    DUAL_W3_SAME,
    DUAL_W3_MIX,
    DUAL_W4_PAIR,
    DUAL_W4_ONEFLIP,
    DUAL_W4_TWOFLIP,
};

inline constexpr std::array<SystemId, 12> kAllSystems{
    SystemId::SYS2_HOM,     SystemId::SYS3_AFF,    SystemId::SYS3_HOM,     SystemId::SYS4_AFF,
    SystemId::SYS4_HOM,     SystemId::SYS5_HOM,    SystemId::SYS6_HOM,     SystemId::DUAL_W3_SAME,
    SystemId::DUAL_W3_MIX,  SystemId::DUAL_W4_PAIR, SystemId::DUAL_W4_ONEFLIP, SystemId::DUAL_W4_TWOFLIP,
};

std::string_view to_string(SystemId id) noexcept;
/// Throws ConfigurationError for unknown names.
SystemId system_from_string(std::string_view name);

struct SystemSpec {
    std::vector<int> signs;  // one +1/-1 per variable
    int constant = 0;        // added to every equation
};

const SystemSpec& system_spec(SystemId id);

/// Human-readable equations, one per exponent.
std::vector<std::string> describe_system(SystemId id, int p);

struct SolutionCount {
    SystemId system = SystemId::SYS2_HOM;
    int m = 0;
    Integer count;
};

struct CountOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned parallelism = 1;
};

/// Exact count by enumeration of all variables but the last, which is recovered from the
/// degree-2 equation by a square-root table. Refuses when q^{#variables} exceeds the budget.
SolutionCount count_bruteforce(SystemId id, const FieldContext& ctx, const CountOptions& options = {});

bool has_closed_form(SystemId id) noexcept;

/// M2 = 1, T3 = p + 1, M3 = M2 + (q-1) T3, T4 = 4(2q - 3), M4 = 8(q-1)^2 + 1,
/// M5 = 5(q-1)(8q - 2p - 10) + 1. Throws ConfigurationError if there is no formula and
/// HypothesisError for T4, M4, M5 when p != 3.
SolutionCount closed_form_count(SystemId id, int p, int m);

// ---------------------------------------------------------------------------
// Component tables

enum class TableId { TABLE_I, TABLE_II, TABLE_III };

inline constexpr std::array<TableId, 3> kAllTables{TableId::TABLE_I, TableId::TABLE_II, TableId::TABLE_III};

std::string_view to_string(TableId id) noexcept;
TableId table_from_string(std::string_view name);

/// coef * prod_v x_v^{exps[v]}.
struct Monomial {
    int coef = 1;
    std::array<std::uint8_t, 6> exps{};
};

/// Polynomial constraint "poly = 0"; `text` is the literal it was parsed from.
struct Constraint {
    std::string text;
    std::vector<Monomial> terms;
};

struct ComponentBlock {
    std::vector<Constraint> constraints;
};

struct VarietyTable {
    TableId id;
    SystemId system;               // the full system the components decompose
    std::vector<std::string> variables;
    std::vector<ComponentBlock> blocks;
};

/// Parses a polynomial such as "y^2-y*z+z^2+w^2" over the given variable names.
Constraint parse_constraint(std::string_view text, const std::vector<std::string>& variables);

const VarietyTable& variety_table(TableId id);

/// Block listing for human audit, one block per line.
std::string dump_tables();

/// Size of the union of the block solution sets over F_q. Requires q^{#variables} < 2^64.
SolutionCount variety_count(TableId id, const FieldContext& ctx, const CountOptions& options = {});

/// Evaluates a constraint at element indices (one per table variable).
std::uint32_t evaluate_constraint(const IndexTables& tables, const Constraint& c, const std::uint32_t* values);

// ---------------------------------------------------------------------------

/// The points x = s(theta + 1/theta)/2, y = s t (theta - 1/theta)/2 for theta in F_{q^2}^*,
/// where s^2 = a and t^2 = -1 in F_{q^2}. `a` is a nonzero element of the base field.
std::vector<std::pair<FieldElement, FieldElement>> circle_solutions(const QuadraticExtension& ext,
                                                                    const FieldElement& a);

} // namespace tricode
