#include "dpsm/knn.hpp"

#include "dpsm/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace dpsm {

namespace {

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

constexpr double kEdgeFloor = 1e-12;

} // namespace

double max_pairwise_distance(const PointSet& points) {
    const std::size_t n = points.size();
    std::vector<std::size_t> ids;
    if (n <= 20000) {
        ids.resize(n);
        for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    } else {
        // sampled diameter; only rescales sigma, never graph topology
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        ids.resize(1000);
        for (auto& id : ids) id = rng() % n;
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
    double best = 0.0;
    for (std::size_t a = 0; a < ids.size(); ++a) {
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            best = std::max(best, sq_dist(points.point(ids[a]), points.point(ids[b])));
        }
    }
    return std::sqrt(best);
}

WeightedGraph knn_graph(const PointSet& points, const KnnParams& params) {
    const std::size_t n = points.size();
    if (params.k < 1 || params.k >= n) {
        throw input_error("k must satisfy 1 <= k < n (k=" + std::to_string(params.k) +
                          ", n=" + std::to_string(n) + ")");
    }
    if (!(params.sigma_scale > 0.0)) throw input_error("sigma_scale must be positive");

    const double d_max = max_pairwise_distance(points);
    const double sigma = params.sigma_scale * d_max;

    struct Cand {
        double d;
        NodeId j;
    };
    // directed normalized weights, keyed (min,max) -> (a~ from min side, a~ from max side)
    std::unordered_map<std::uint64_t, std::pair<double, double>> tilde;
    tilde.reserve(n * params.k);

    std::vector<Cand> cands(n - 1);
    std::vector<double> expo(params.k);
    for (NodeId i = 0; i < n; ++i) {
        std::size_t m = 0;
        for (NodeId j = 0; j < n; ++j) {
            if (j == i) continue;
            cands[m++] = {sq_dist(points.point(i), points.point(j)), j};
        }
        auto closer = [](const Cand& a, const Cand& b) {
            return a.d != b.d ? a.d < b.d : a.j < b.j;
        };
        std::nth_element(cands.begin(), cands.begin() + params.k - 1, cands.end(), closer);
        std::sort(cands.begin(), cands.begin() + params.k, closer);

        // normalize in a shifted exponent frame; exact in real arithmetic
        // and immune to underflow when sigma * d is large
        double d_min = std::sqrt(cands[0].d);
        double denom = 0.0;
        for (std::size_t t = 0; t < params.k; ++t) {
            double d = std::sqrt(cands[t].d);
            double e = (params.kernel == KernelForm::product)
                           ? -sigma * (d - d_min)
                           : (sigma > 0.0 ? -(d - d_min) / sigma : 0.0);
            expo[t] = std::exp(e);
            denom += expo[t];
        }
        for (std::size_t t = 0; t < params.k; ++t) {
            NodeId j = cands[t].j;
            double a = expo[t] / denom;
            NodeId lo = std::min<NodeId>(i, j), hi = std::max<NodeId>(i, j);
            auto& slot = tilde[(static_cast<std::uint64_t>(lo) << 32) | hi];
            (i == lo ? slot.first : slot.second) = a;
        }
    }

    std::vector<Edge> edges;
    edges.reserve(tilde.size());
    for (const auto& [key, a] : tilde) {
        double w = a.first + a.second - a.first * a.second;
        if (w < kEdgeFloor) continue;
        edges.push_back({static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu), w});
    }
    return WeightedGraph(static_cast<NodeId>(n), std::move(edges));
}

} // namespace dpsm
