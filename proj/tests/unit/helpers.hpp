#pragma once

#include "tricode/errors.hpp"
#include "tricode/expsum.hpp"
#include "tricode/gf.hpp"

#include <array>
#include <memory>
#include <random>

namespace tricode::test {

inline FieldElement random_element(const FieldContext& ctx, std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, ctx.q() - 1);
    return ctx.from_index(d(rng));
}

inline Triple random_triple(const FieldContext& ctx, std::mt19937_64& rng) {
    return {random_element(ctx, rng), random_element(ctx, rng), random_element(ctx, rng)};
}

inline Triple triple_at(const FieldContext& ctx, std::uint64_t i) {
    const std::uint64_t q = ctx.q();
    return {ctx.from_index(i / (q * q)), ctx.from_index((i / q) % q), ctx.from_index(i % q)};
}

// Fields built once per process; construction at m >= 8 is not free.
inline const FieldContext& field(int m) {
    static std::array<std::unique_ptr<FieldContext>, kMaxBaseDegree + 1> cache;
    auto& slot = cache[static_cast<std::size_t>(m)];
    if (!slot) slot = std::make_unique<FieldContext>(FieldContext::create(3, m));
    return *slot;
}

} // namespace tricode::test
