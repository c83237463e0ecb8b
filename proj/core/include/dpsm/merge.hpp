#pragma once

#include "dpsm/partition.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace dpsm {

/// Label value for nodes dropped as noise.
inline constexpr std::int64_t kNoiseLabel = -1;

/// CluCut with explicit bookkeeping for zero-intra sides: a cluster with
/// no internal edge contributes an infinite term when its inter weight is
/// positive, so singleton clusters merge first. Ordering is by count of
/// infinite terms, then by the finite remainder.
struct CluCutValue {
    int infinite_terms = 0;
    double finite_sum = 0.0;

    double value() const {
        return infinite_terms > 0 ? std::numeric_limits<double>::infinity() : finite_sum;
    }
    bool is_finite() const { return infinite_terms == 0; }

    friend auto operator<=>(const CluCutValue& a, const CluCutValue& b) = default;
};

struct MergeRecord {
    std::uint32_t step;          // 1-based
    NodeId root_a;               // root_a < root_b
    NodeId root_b;
    double clucut;               // +inf when a zero-intra side was involved
    std::size_t clusters_after;
};

struct MergeTrace {
    std::vector<MergeRecord> records;
    std::vector<NodeId> pruned_roots;
    std::vector<NodeId> pruned_nodes;
    /// Best remaining candidate at the halt point, when any pair was left.
    std::optional<double> halt_candidate;
    std::string note;
};

enum class RemainderPolicy { nearest, drop };

struct MergeOptions {
    /// Fixed target count; empty selects auto termination via drop_ratio.
    std::optional<std::size_t> target_k;
    double drop_ratio = 0.5;
    double prune_fraction = 0.05;
    /// Pruning defaults to on in auto mode and off in target_k mode.
    std::optional<bool> prune;
    /// Experimental: absorb shared margin nodes whose clustered neighbors
    /// all lie in the merged pair. Off by default.
    bool absorb_shared_margins = false;

    bool prune_enabled() const { return prune.value_or(!target_k.has_value()); }
};

/// Total weight of edges with both endpoints inside `cluster`
/// (0 for singletons). `cluster` need not be sorted.
double r_intra(std::span<const NodeId> cluster, const WeightedGraph& graph);

/// Incremental merge engine over a PartitionState. Keeps per-cluster
/// intra weights, margin sets and margin-to-cluster weights up to date
/// across merges; candidate pairs live in a lazy-invalidation priority
/// queue keyed by per-root version stamps.
class MergeEngine {
public:
    MergeEngine(const WeightedGraph& graph, const PartitionState& state);

    void set_absorb_shared_margins(bool on) { absorb_shared_margins_ = on; }

    std::size_t cluster_count() const { return live_.size(); }
    std::vector<NodeId> live_roots() const { return {live_.begin(), live_.end()}; }
    bool is_live(NodeId root) const { return live_.count(root) != 0; }

    const std::vector<NodeId>& members(NodeId root) const;
    const std::vector<NodeId>& margin(NodeId root) const;
    double intra(NodeId root) const;

    bool adjacent(NodeId a, NodeId b) const;
    double r_inter(NodeId a, NodeId b) const;
    CluCutValue clucut_value(NodeId a, NodeId b) const;
    double clucut(NodeId a, NodeId b) const { return clucut_value(a, b).value(); }

    struct Candidate {
        NodeId a; // a < b
        NodeId b;
        CluCutValue key;
    };

    /// Highest-CluCut live adjacent pair, ties to the lexicographically
    /// smallest (a,b). Discards stale heap entries as a side effect.
    std::optional<Candidate> best_candidate();

    /// Merges b's cluster into a's (survivor = smaller root id), updates
    /// margins, stats and the candidate queue. Throws invariant_error when
    /// either root is dead or the pair is not adjacent.
    MergeRecord merge_pair(NodeId a, NodeId b);

    /// Deletes every live cluster whose size and intra both fall under
    /// fraction * the respective live averages; their nodes become
    /// unassigned. Returns the pruned roots (sorted).
    std::vector<NodeId> prune(double fraction, std::vector<NodeId>* pruned_nodes = nullptr);

    /// Materializes the current clusters, margins and unassigned pool.
    PartitionState state() const;

private:
    struct HeapEntry {
        CluCutValue key;
        NodeId a;
        NodeId b;
        std::uint64_t stamp_a;
        std::uint64_t stamp_b;
        bool operator<(const HeapEntry& o) const {
            if (key != o.key) return key < o.key;
            // smaller pair wins ties, so it must compare "greater"
            if (a != o.a) return a > o.a;
            return b > o.b;
        }
    };

    const WeightedGraph* graph_;
    std::size_t n_;
    std::set<NodeId> live_;
    std::map<NodeId, std::vector<NodeId>> members_;
    std::map<NodeId, std::vector<NodeId>> margin_;   // sorted
    std::map<NodeId, double> intra_;
    std::vector<std::int64_t> assigned_root_;        // node -> live root, or kUnassigned
    std::vector<std::vector<NodeId>> margin_roots_;  // node -> sorted roots whose margin holds it
    std::vector<std::map<NodeId, double>> weight_into_; // margin node -> root -> weight
    std::map<NodeId, std::uint64_t> stamp_;
    std::priority_queue<HeapEntry> heap_;
    std::uint32_t steps_done_ = 0;
    bool absorb_shared_margins_ = false;

    void push_candidates_for(NodeId root);
    void absorb_into(NodeId survivor, const std::vector<NodeId>& nodes);
};

/// Runs the merge loop to completion. target_k mode merges while the live
/// count exceeds the target and pairs remain (disconnected components can
/// leave the count high; that is reported in the trace note, not an
/// error). Auto mode stops before a merge whose CluCut drops under
/// drop_ratio times the previously executed one; an infinite predecessor
/// never arms the comparison. Pruning runs once after termination.
std::pair<PartitionState, MergeTrace> run_merging(const WeightedGraph& graph,
                                                  const PartitionState& state,
                                                  const MergeOptions& options);

/// Resolves unassigned nodes into final labels. `nearest` sweeps them in
/// descending density, each joining the cluster with the largest total
/// edge weight among already-labeled neighbors (ties: smaller root id);
/// anything still unreachable, and everything under `drop`, becomes
/// kNoiseLabel.
std::vector<std::int64_t> assign_remainder(const PartitionState& state,
                                           const WeightedGraph& graph,
                                           const DensityRank& rank,
                                           RemainderPolicy policy);

} // namespace dpsm
