#include "irg/ordering.hpp"

#include <numeric>
#include <stdexcept>

namespace irg {

VertexOrdering VertexOrdering::identity(int n) {
    VertexOrdering o;
    o.order_.resize(static_cast<std::size_t>(n));
    std::iota(o.order_.begin(), o.order_.end(), 0);
    o.pos_ = o.order_;
    return o;
}

VertexOrdering VertexOrdering::from_order(std::vector<int> order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < n; ++p) {
        const int v = order[static_cast<std::size_t>(p)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("ordering is not a permutation of 0..n-1");
        pos[static_cast<std::size_t>(v)] = p;
    }
    VertexOrdering o;
    o.order_ = std::move(order);
    o.pos_ = std::move(pos);
    return o;
}

VertexOrdering VertexOrdering::reversed() const {
    std::vector<int> rev(order_.rbegin(), order_.rend());
    return from_order(std::move(rev));
}

}  // namespace irg
