#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gbcodex/arithmetic.hpp"
#include "gbcodex/distance.hpp"

namespace gbcodex::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

struct ConstructArgs {
    std::optional<std::string> a;
    std::optional<std::string> b;
    std::optional<std::int64_t> alpha;
    std::int64_t n = 0;
};

struct DistanceArgs {
    std::int64_t alpha = 0;
    std::int64_t n = 0;
    DistanceBudget budget;
};

struct BoundArgs {
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::int64_t n = 0;
};

struct SweepArgs {
    std::int64_t max_length = 200;
    std::string output;  // empty: stdout
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    DistanceBudget budget;
};

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err);
int cmd_distance(const DistanceArgs& args, std::ostream& out, std::ostream& err);
int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace gbcodex::cli
