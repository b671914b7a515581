#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace ctxmap {

// Dense row-major tensor of doubles. Shape is a small vector of extents;
// rank 1 and 2 are the common cases, rank 3 is used for (H, W, C) rasters.
struct Tensor {
    std::vector<int> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
        data.assign(static_cast<size_t>(count(shape)), 0.0);
    }

    static int64_t count(const std::vector<int>& s) {
        int64_t n = 1;
        for (int d : s) n *= d;
        return n;
    }

    static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }

    static Tensor full(std::vector<int> s, double v) {
        Tensor t(std::move(s));
        std::fill(t.data.begin(), t.data.end(), v);
        return t;
    }

    static Tensor from(std::vector<int> s, std::vector<double> d) {
        Tensor t;
        t.shape = std::move(s);
        assert(static_cast<int64_t>(d.size()) == count(t.shape));
        t.data = std::move(d);
        return t;
    }

    int64_t size() const { return static_cast<int64_t>(data.size()); }
    int rank() const { return static_cast<int>(shape.size()); }
    int dim(int i) const { return shape[static_cast<size_t>(i)]; }

    double& operator[](int64_t i) { return data[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data[static_cast<size_t>(i)]; }

    double& at(int i, int j) {
        assert(rank() == 2);
        return data[static_cast<size_t>(i) * shape[1] + j];
    }
    double at(int i, int j) const {
        assert(rank() == 2);
        return data[static_cast<size_t>(i) * shape[1] + j];
    }
    double& at(int i, int j, int k) {
        assert(rank() == 3);
        return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
    }
    double at(int i, int j, int k) const {
        assert(rank() == 3);
        return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
    }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline std::string shape_str(const std::vector<int>& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

// Deterministic RNG helpers; every stochastic component takes an explicit seed.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}

    double normal(double mean = 0.0, double stddev = 1.0) {
        std::normal_distribution<double> d(mean, stddev);
        return d(eng);
    }
    double uniform(double lo = 0.0, double hi = 1.0) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng);
    }
    int64_t uniform_int(int64_t lo, int64_t hi) {  // inclusive bounds
        std::uniform_int_distribution<int64_t> d(lo, hi);
        return d(eng);
    }
    void fill_normal(Tensor& t, double mean, double stddev) {
        std::normal_distribution<double> d(mean, stddev);
        for (auto& v : t.data) v = d(eng);
    }
};

}  // namespace ctxmap
