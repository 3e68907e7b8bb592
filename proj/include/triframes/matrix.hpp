#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace triframes {

// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    std::span<const double> row(std::size_t i) const {
        if (i >= rows) throw std::out_of_range("matrix row out of range");
        return {data.data() + i * cols, cols};
    }
    std::span<double> row(std::size_t i) {
        if (i >= rows) throw std::out_of_range("matrix row out of range");
        return {data.data() + i * cols, cols};
    }
};

}  // namespace triframes
