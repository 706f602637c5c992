#include "ctrlmode/digraph.hpp"

#include <algorithm>
#include <unordered_map>

#include "ctrlmode/errors.hpp"

namespace ctrlmode {

namespace {

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

DiGraph::DiGraph(NodeId node_count, std::vector<Edge> edges,
                 std::vector<std::string> labels)
    : n_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) {
        throw Error("node count must be non-negative");
    }
    if (!labels_.empty() && static_cast<NodeId>(labels_.size()) != n_) {
        throw Error("label map must cover every node");
    }
    for (const Edge& e : edges_) {
        if (e.from < 0 || e.from >= n_ || e.to < 0 || e.to >= n_) {
            throw Error("edge endpoint out of range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_adjacency();
}

void DiGraph::build_adjacency() {
    const auto n = static_cast<std::size_t>(n_);
    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    for (const Edge& e : edges_) {
        ++out_offsets_[static_cast<std::size_t>(e.from) + 1];
        ++in_offsets_[static_cast<std::size_t>(e.to) + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) {
        out_offsets_[i] += out_offsets_[i - 1];
        in_offsets_[i] += in_offsets_[i - 1];
    }
    out_targets_.resize(edges_.size());
    in_sources_.resize(edges_.size());
    std::vector<std::uint32_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
    // edges_ is sorted by (from, to); filling in order keeps both adjacency
    // lists ascending.
    for (const Edge& e : edges_) {
        out_targets_[out_fill[static_cast<std::size_t>(e.from)]++] = e.to;
        in_sources_[in_fill[static_cast<std::size_t>(e.to)]++] = e.from;
    }
}

DiGraph DiGraph::parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    std::unordered_map<std::string_view, NodeId> ids;

    auto intern = [&](std::string_view token) -> NodeId {
        auto it = ids.find(token);
        if (it != ids.end()) {
            return it->second;
        }
        const auto id = static_cast<NodeId>(labels.size());
        ids.emplace(token, id);
        labels.emplace_back(token);
        return id;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        std::string_view tokens[2];
        std::size_t token_count = 0;
        std::size_t i = 0;
        bool comment = false;
        while (i < line.size()) {
            while (i < line.size() && is_blank(line[i])) ++i;
            if (i >= line.size()) break;
            if (token_count == 0 && line[i] == '#') {
                comment = true;
                break;
            }
            std::size_t start = i;
            while (i < line.size() && !is_blank(line[i])) ++i;
            if (token_count == 2) {
                throw ParseError(line_no, "expected 'u v' or a single node token");
            }
            tokens[token_count++] = line.substr(start, i - start);
        }
        if (comment || token_count == 0) continue;
        if (token_count == 1) {
            intern(tokens[0]);  // declares an isolated node
        } else {
            const NodeId u = intern(tokens[0]);
            const NodeId v = intern(tokens[1]);
            edges.push_back({u, v});
        }
    }
    const auto node_count = static_cast<NodeId>(labels.size());
    return DiGraph(node_count, std::move(edges), std::move(labels));
}

std::string DiGraph::write_edge_list() const {
    std::string out;
    std::vector<char> incident(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        incident[static_cast<std::size_t>(e.from)] = 1;
        incident[static_cast<std::size_t>(e.to)] = 1;
    }
    for (const Edge& e : edges_) {
        out += display_label(e.from);
        out += '\t';
        out += display_label(e.to);
        out += '\n';
    }
    for (NodeId v = 0; v < n_; ++v) {
        if (!incident[static_cast<std::size_t>(v)]) {
            out += display_label(v);
            out += '\n';
        }
    }
    return out;
}

DiGraph DiGraph::remove_edges(std::span<const Edge> removals) const {
    std::vector<Edge> rs(removals.begin(), removals.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    for (const Edge& e : rs) {
        if (!has_edge(e.from, e.to)) {
            throw Error("cannot remove absent edge (" + display_label(e.from) +
                        ", " + display_label(e.to) + "): stale plan?");
        }
    }
    std::vector<Edge> kept;
    kept.reserve(edges_.size() - rs.size());
    std::set_difference(edges_.begin(), edges_.end(), rs.begin(), rs.end(),
                        std::back_inserter(kept));
    return DiGraph(n_, std::move(kept), labels_);
}

bool DiGraph::has_edge(NodeId from, NodeId to) const {
    const Edge e{from, to};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return it != edges_.end() && *it == e;
}

std::span<const NodeId> DiGraph::out_neighbors(NodeId u) const {
    const auto i = static_cast<std::size_t>(u);
    return {out_targets_.data() + out_offsets_[i],
            out_targets_.data() + out_offsets_[i + 1]};
}

std::span<const NodeId> DiGraph::in_neighbors(NodeId v) const {
    const auto i = static_cast<std::size_t>(v);
    return {in_sources_.data() + in_offsets_[i],
            in_sources_.data() + in_offsets_[i + 1]};
}

std::string DiGraph::display_label(NodeId v) const {
    if (v < 0 || v >= n_) {
        throw Error("node id out of range");
    }
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

double DiGraph::average_degree() const {
    return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / n_;
}

}  // namespace ctrlmode
