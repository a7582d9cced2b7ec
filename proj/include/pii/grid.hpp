#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pii {

using cplx = std::complex<double>;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

constexpr bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// Integer pixel displacement, (row, col) order.
struct PixelOffset {
    int row = 0;
    int col = 0;

    friend bool operator==(const PixelOffset& a, const PixelOffset& b) {
        return a.row == b.row && a.col == b.col;
    }
    friend bool operator!=(const PixelOffset& a, const PixelOffset& b) { return !(a == b); }
};

inline std::string to_string(const PixelOffset& p) {
    return "(" + std::to_string(p.row) + ", " + std::to_string(p.col) + ")";
}

/// Dense row-major 2D array.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(int height, int width, T fill = T{}) : height_(height), width_(width) {
        require(height > 0 && width > 0, "grid dims must be positive");
        data_.assign(static_cast<std::size_t>(height) * width, fill);
    }

    int height() const { return height_; }
    int width() const { return width_; }
    std::size_t size() const { return data_.size(); }

    T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * width_ + c]; }
    const T& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * width_ + c];
    }

    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }

    T* row(int r) { return data_.data() + static_cast<std::size_t>(r) * width_; }
    const T* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * width_; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool in_bounds(int r, int c) const { return r >= 0 && r < height_ && c >= 0 && c < width_; }

    template <typename U>
    bool same_dims(const Grid<U>& o) const {
        return height_ == o.height() && width_ == o.width();
    }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.height_ == b.height_ && a.width_ == b.width_ && a.data_ == b.data_;
    }

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<T> data_;
};

using RealGrid = Grid<double>;
using ComplexGrid = Grid<cplx>;

inline bool all_finite(const RealGrid& g) {
    for (double v : g.data())
        if (!std::isfinite(v)) return false;
    return true;
}

inline bool all_finite(const ComplexGrid& g) {
    for (const cplx& v : g.data())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

inline double sum(const RealGrid& g) {
    double s = 0.0;
    for (double v : g.data()) s += v;
    return s;
}

inline double energy(const ComplexGrid& g) {
    double s = 0.0;
    for (const cplx& v : g.data()) s += std::norm(v);
    return s;
}

}  // namespace pii
