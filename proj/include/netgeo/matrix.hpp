#pragma once

#include <cstdint>
#include <vector>

#include "netgeo/errors.hpp"

namespace netgeo {

// Dense square matrix, row-major. Small helper shared by hop-count,
// geodesic and weighted-shortest-path tables.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int32_t n, T fill = T{}) : n_(n), data_(static_cast<size_t>(n) * n, fill) {}

    int32_t size() const noexcept { return n_; }

    T& operator()(int32_t i, int32_t j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    const T& operator()(int32_t i, int32_t j) const { return data_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<T>& data() const noexcept { return data_; }

private:
    int32_t n_ = 0;
    std::vector<T> data_;
};

using HopMatrix = SquareMatrix<int32_t>;
using DistMatrix = SquareMatrix<double>;

}  // namespace netgeo
