#include "dpsm/weighted_graph.hpp"

#include "dpsm/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <unordered_set>

namespace dpsm {

WeightedGraph::WeightedGraph(NodeId node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u == e.v) {
            throw invariant_error("self-loop at node " + std::to_string(e.u));
        }
        if (e.u >= node_count_ || e.v >= node_count_) {
            throw invariant_error("edge id beyond node count");
        }
        if (!(e.w > 0.0) || !std::isfinite(e.w)) {
            throw invariant_error("edge weight must be positive and finite");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
            throw invariant_error("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                                  std::to_string(edges_[i].v) + ")");
        }
    }

    offsets_.assign(node_count_ + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    adj_.resize(edges_.size() * 2);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adj_[cursor[e.u]++] = {e.v, e.w};
        adj_[cursor[e.v]++] = {e.u, e.w};
    }
    // neighbor lists sorted by id for deterministic iteration
    for (NodeId v = 0; v < node_count_; ++v) {
        std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1],
                  [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
    }
    weighted_degree_.assign(node_count_, 0.0);
    for (NodeId v = 0; v < node_count_; ++v) {
        for (const auto& nb : neighbors(v)) weighted_degree_[v] += nb.w;
    }
}

double WeightedGraph::weight(NodeId u, NodeId v) const {
    auto nbrs = neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const Neighbor& n, NodeId id) { return n.to < id; });
    if (it != nbrs.end() && it->to == v) return it->w;
    return 0.0;
}

std::vector<std::vector<NodeId>> WeightedGraph::connected_components() const {
    std::vector<std::vector<NodeId>> comps;
    std::vector<bool> seen(node_count_, false);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < node_count_; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        stack.push_back(s);
        std::vector<NodeId> comp;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (const auto& nb : neighbors(u)) {
                if (!seen[nb.to]) {
                    seen[nb.to] = true;
                    stack.push_back(nb.to);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

WeightedGraph load_edges(std::istream& in, std::optional<NodeId> node_count) {
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen_pairs;
    NodeId max_id = 0;
    bool any = false;
    std::string line;
    std::size_t line_no = 0;

    auto fail = [&](const std::string& what) {
        throw input_error("line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto fields = split_ws(line);
        if (fields.size() != 3) fail("expected 'u v w'");

        auto parse_id = [&](const std::string& tok) -> NodeId {
            std::uint32_t v{};
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                fail("node id '" + tok + "' is not a nonnegative integer");
            }
            return v;
        };
        NodeId u = parse_id(fields[0]);
        NodeId v = parse_id(fields[1]);
        double w{};
        {
            const auto& tok = fields[2];
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                fail("weight '" + tok + "' is not a number");
            }
        }
        if (u == v) fail("self-loop at node " + std::to_string(u));
        if (!(w > 0.0) || !std::isfinite(w)) fail("weight must be positive and finite");
        if (node_count && (u >= *node_count || v >= *node_count)) {
            fail("node id beyond declared node count " + std::to_string(*node_count));
        }
        NodeId a = std::min(u, v), b = std::max(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (!seen_pairs.insert(key).second) {
            fail("duplicate pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        max_id = std::max(max_id, b);
        edges.push_back({a, b, w});
        any = true;
    }

    if (!any && !node_count) throw input_error("empty input: no edges");
    NodeId n = node_count ? *node_count : max_id + 1;
    return WeightedGraph(n, std::move(edges));
}

} // namespace dpsm
