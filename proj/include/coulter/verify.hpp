// verify.hpp
//
// Parameter sweeps that compare every closed form against its enumeration
// oracle, plus the orthogonality / Gauss-sum / quadratic-sum identities
// that must hold along the way. A sweep walks the grid in a canonical
// order, records exact-comparison failures as first-class Discrepancy
// entries (never tolerances, never floats), counts how often every
// dispatcher branch fired, and reports skipped points explicitly --
// silence is never success.
//
// Reports are deterministic: the same GridSpec and seed produce identical
// content regardless of worker count, and the JSON serialization is
// byte-stable (timing is kept out of the serialized report).

#pragma once

#include <optional>
#include <map>
#include <string>
#include <vector>

#include "coulter/numeric.hpp"

#include "json.hpp"

namespace coulter {

struct GridSpec {
    std::vector<i64> primes{3, 5, 7, 11, 13};
    i64 max_q = 20000;
    // nullopt = every alpha in 1..e.
    std::optional<std::vector<int>> alphas;

    enum class BPolicy {
        ExhaustiveThenSample,  // all b in F_q^* while q <= threshold, else sampled
        SampleOnly,
    };
    BPolicy b_policy = BPolicy::ExhaustiveThenSample;
    i64 exhaustive_threshold = 343;
    int b_sample_count = 5;

    enum class Parity { OddOnly, EvenOnly, Both };
    Parity parity = Parity::Both;

    u64 seed = 1;
    int weil_pairs = 25;   // sampled (a, b) pairs per point above the threshold
    int quad_triples = 100;
    int jobs = 1;

    nlohmann::json to_json() const;
};

struct Discrepancy {
    i64 p = 0;
    int e = 0;
    int alpha = 0;
    std::string kind;  // S, S0, A, B, n, N, N-literal, eq16, eq17, sum, marginal, gaussP, gaussQ, quad
    i64 a = -1, c = -1, b_enc = -1;
    std::string oracle_value;
    std::string closed_value;
    std::string branch;
    std::string note;
};

struct SkippedPoint {
    i64 p = 0;
    int e = 0;
    int alpha = 0;  // 0 when the whole field was skipped
    std::string family;
    std::string reason;
};

struct VerifyReport {
    u64 points_checked = 0;
    std::vector<Discrepancy> discrepancies;
    std::vector<SkippedPoint> skipped;
    std::map<std::string, u64> branch_coverage;  // every registered id present
    double wall_seconds = 0.0;
    nlohmann::json grid_echo;

    std::vector<std::string> uncovered_branches() const;
    bool passed() const { return discrepancies.empty() && uncovered_branches().empty(); }
    // Deterministic serialization; wall time deliberately excluded so two
    // identical runs write identical bytes.
    nlohmann::json to_json() const;
};

VerifyReport sweep(const GridSpec& grid);

// Smallest grid point (canonical order) whose closed-form evaluation lands
// in the given dispatcher branch; nullopt when the grid never reaches it.
struct BranchInstance {
    i64 p = 0;
    int e = 0;
    int alpha = 0;
    i64 a = -1, c = -1, b_enc = -1;
    std::string kind;
};
std::optional<BranchInstance> find_branch_instance(const std::string& case_id, const GridSpec& grid);

// Reproducible 64-bit linear congruential generator used for all sampling.
// state' = state * 6364136223846793005 + 1442695040888963407; draws take
// the top 31 bits. Per-point substreams are seeded with seed ^ mix(p,e,alpha).
class Lcg {
public:
    explicit Lcg(u64 seed) : state_(seed) {}
    u64 next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }

private:
    u64 state_;
};

u64 substream_seed(u64 seed, i64 p, int e, int alpha);

}  // namespace coulter
