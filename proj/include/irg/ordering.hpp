#pragma once

#include <vector>

namespace irg {

// A linear arrangement of the vertices 0..n-1: `order` maps positions to
// vertex ids, `pos` is its inverse. Both directions are kept because the
// checks walk positions while adjacency is keyed by vertex id.
class VertexOrdering {
public:
    static VertexOrdering identity(int n);

    // Validates that `order` is a permutation of 0..n-1; throws
    // std::invalid_argument otherwise.
    static VertexOrdering from_order(std::vector<int> order);

    int size() const { return static_cast<int>(order_.size()); }
    int vertex_at(int position) const { return order_[position]; }
    int position_of(int vertex) const { return pos_[vertex]; }

    const std::vector<int>& order() const { return order_; }
    const std::vector<int>& positions() const { return pos_; }

    VertexOrdering reversed() const;

    friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
        return a.order_ == b.order_;
    }

private:
    VertexOrdering() = default;
    std::vector<int> order_;  // position -> vertex id
    std::vector<int> pos_;    // vertex id -> position
};

}  // namespace irg
