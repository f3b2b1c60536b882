#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pfstereo/errors.hpp"

namespace pfstereo {

// Dense 4-axis shape. The axes are (n, c, h, w) for image-like tensors but get
// re-purposed where convenient: batched matrices are (G, 1, M, N), correlation
// volumes are (B, H, W, D).
struct Shape {
    int n = 1;
    int c = 1;
    int h = 1;
    int w = 1;

    std::int64_t numel() const {
        return static_cast<std::int64_t>(n) * c * h * w;
    }
    bool operator==(const Shape& o) const {
        return n == o.n && c == o.c && h == o.h && w == o.w;
    }
    bool operator!=(const Shape& o) const { return !(*this == o); }

    std::string str() const {
        return "(" + std::to_string(n) + "," + std::to_string(c) + "," +
               std::to_string(h) + "," + std::to_string(w) + ")";
    }
};

// Contiguous row-major tensor (w fastest).
template <typename T>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape s) : shape(s), data(static_cast<std::size_t>(s.numel()), T(0)) {}
    Tensor(Shape s, T fill) : shape(s), data(static_cast<std::size_t>(s.numel()), fill) {}

    static Tensor zeros(Shape s) { return Tensor(s); }
    static Tensor full(Shape s, T v) { return Tensor(s, v); }

    std::int64_t numel() const { return shape.numel(); }
    bool empty() const { return data.empty(); }

    std::int64_t index(int n, int c, int h, int w) const {
        return ((static_cast<std::int64_t>(n) * shape.c + c) * shape.h + h) * shape.w + w;
    }
    T& at(int n, int c, int h, int w) { return data[index(n, c, h, w)]; }
    const T& at(int n, int c, int h, int w) const { return data[index(n, c, h, w)]; }

    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }

    bool all_finite() const {
        for (const T& v : data) {
            if (!std::isfinite(static_cast<double>(v))) return false;
        }
        return true;
    }

    T min() const {
        T m = data.empty() ? T(0) : data[0];
        for (const T& v : data) m = std::min(m, v);
        return m;
    }
    T max() const {
        T m = data.empty() ? T(0) : data[0];
        for (const T& v : data) m = std::max(m, v);
        return m;
    }
    double mean() const {
        double s = 0;
        for (const T& v : data) s += static_cast<double>(v);
        return data.empty() ? 0.0 : s / static_cast<double>(data.size());
    }

    template <typename U>
    Tensor<U> cast() const {
        Tensor<U> out;
        out.shape = shape;
        out.data.resize(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
        return out;
    }

    Shape shape;
    std::vector<T> data;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DimensionError(msg);
}

// Seeded RNG used for parameter init and the data generator. Determinism per
// seed is part of the contract, so all randomness funnels through here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double normal(double mean = 0.0, double stddev = 1.0) {
        std::normal_distribution<double> d(mean, stddev);
        return d(gen_);
    }
    double uniform(double lo = 0.0, double hi = 1.0) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(gen_);
    }
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive range
        std::uniform_int_distribution<std::int64_t> d(lo, hi);
        return d(gen_);
    }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

template <typename T>
void fill_normal(Tensor<T>& t, Rng& rng, double mean, double stddev) {
    for (auto& v : t.data) v = static_cast<T>(rng.normal(mean, stddev));
}

template <typename T>
void fill_uniform(Tensor<T>& t, Rng& rng, double lo, double hi) {
    for (auto& v : t.data) v = static_cast<T>(rng.uniform(lo, hi));
}

}  // namespace pfstereo
