#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "bettiforge/exactla.hpp"

using bf::FieldSpec;
using bf::SparseMatrix;

namespace {

// Naive Gaussian elimination oracles, independent of the code under test.
template <typename T, typename IsZero, typename Eliminate>
int eliminate_rank(std::vector<std::vector<T>> a, IsZero is_zero,
                   Eliminate eliminate) {
    if (a.empty() || a[0].empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!is_zero(a[r][col])) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r)
            if (!is_zero(a[r][col])) eliminate(a[r], a[rank], col);
        ++rank;
    }
    return rank;
}

int naive_rank(const SparseMatrix& m, const FieldSpec& f) {
    if (f.characteristic == 0) {
        using Rat = boost::multiprecision::cpp_rational;
        std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols, 0));
        for (const auto& e : m.entries) a[e.row][e.col] += e.value;
        return eliminate_rank(
            std::move(a), [](const Rat& x) { return x == 0; },
            [](std::vector<Rat>& row, const std::vector<Rat>& piv, int col) {
                const Rat factor = row[col] / piv[col];
                for (std::size_t c = col; c < row.size(); ++c)
                    row[c] -= factor * piv[c];
            });
    }
    const long long p = f.characteristic;
    std::vector<std::vector<long long>> a(m.rows,
                                          std::vector<long long>(m.cols, 0));
    for (const auto& e : m.entries)
        a[e.row][e.col] = ((a[e.row][e.col] + e.value) % p + p) % p;
    auto modpow = [p](long long b, long long e) {
        long long out = 1;
        b %= p;
        for (; e > 0; e >>= 1, b = b * b % p)
            if (e & 1) out = out * b % p;
        return out;
    };
    return eliminate_rank(
        std::move(a), [](long long x) { return x == 0; },
        [&](std::vector<long long>& row, const std::vector<long long>& piv,
            int col) {
            const long long factor = row[col] * modpow(piv[col], p - 2) % p;
            for (std::size_t c = col; c < row.size(); ++c)
                row[c] = ((row[c] - factor * piv[c]) % p + p) % p;
        });
}

SparseMatrix identity(int n) {
    SparseMatrix m;
    m.rows = m.cols = n;
    for (int i = 0; i < n; ++i) m.add(i, i, 1);
    return m;
}

}  // namespace

TEST_CASE("identity and zero matrices") {
    const FieldSpec q0{0};
    CHECK(bf::rank(identity(5), q0) == 5);
    SparseMatrix z;
    z.rows = 4;
    z.cols = 7;
    CHECK(bf::rank(z, q0) == 0);
    SparseMatrix empty;
    CHECK(bf::rank(empty, q0) == 0);
}

TEST_CASE("triangle boundary has rank 2") {
    // edges {0,1},{0,2},{1,2} against vertices 0,1,2
    SparseMatrix m;
    m.rows = 3;
    m.cols = 3;
    m.add(0, 0, -1);
    m.add(1, 0, 1);
    m.add(0, 1, -1);
    m.add(2, 1, 1);
    m.add(1, 2, -1);
    m.add(2, 2, 1);
    CHECK(bf::rank(m, FieldSpec{0}) == 2);
    CHECK(bf::rank(m, FieldSpec{2}) == 2);
    CHECK(bf::rank(m, FieldSpec{101}) == 2);
}

TEST_CASE("invalid characteristic rejected") {
    CHECK(FieldSpec{0}.is_valid());
    CHECK(FieldSpec{2}.is_valid());
    CHECK(FieldSpec{31}.is_valid());
    CHECK_FALSE(FieldSpec{4}.is_valid());
    CHECK_FALSE(FieldSpec{1}.is_valid());
    CHECK_THROWS_AS(bf::rank(identity(2), FieldSpec{6}), std::invalid_argument);
}

TEST_CASE("random small matrices match a naive eliminator") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 8), coeff(-1, 1);
    for (int trial = 0; trial < 200; ++trial) {
        SparseMatrix m;
        m.rows = dim(rng);
        m.cols = dim(rng);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) {
                int v = coeff(rng);
                if (v != 0) m.add(r, c, v);
            }
        for (auto p : {0u, 2u, 3u, 32749u}) {
            const FieldSpec f{p};
            const int got = bf::rank(m, f);
            CHECK(got == naive_rank(m, f));
            CHECK(got <= std::min(m.rows, m.cols));
        }
    }
}

TEST_CASE("rank is invariant under row and column permutation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-2, 2);
    SparseMatrix m;
    m.rows = 6;
    m.cols = 6;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            int v = coeff(rng);
            if (v != 0) m.add(r, c, v);
        }
    const int base = bf::rank(m, FieldSpec{0});
    std::vector<int> pr{3, 1, 4, 0, 5, 2}, pc{5, 0, 3, 2, 1, 4};
    SparseMatrix permuted;
    permuted.rows = 6;
    permuted.cols = 6;
    for (const auto& e : m.entries) permuted.add(pr[e.row], pc[e.col], e.value);
    CHECK(bf::rank(permuted, FieldSpec{0}) == base);
}
