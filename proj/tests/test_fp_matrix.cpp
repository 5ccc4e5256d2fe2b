#include <doctest.h>

#include <random>
#include <set>

#include "dlcoh/errors.hpp"
#include "dlcoh/fp_matrix.hpp"

using namespace dlcoh;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Matrix::Scalar p, std::mt19937& rng) {
    Matrix a(r, c, p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a.set(i, j, static_cast<std::int64_t>(rng() % p));
    return a;
}

// size of the column span over F_2, by enumerating every combination
std::size_t span_size_f2(const Matrix& a) {
    std::set<std::vector<int>> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << a.cols()); ++mask) {
        std::vector<int> v(a.rows(), 0);
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (mask >> j & 1)
                for (std::size_t i = 0; i < a.rows(); ++i) v[i] ^= static_cast<int>(a(i, j));
        seen.insert(v);
    }
    return seen.size();
}

}  // namespace

TEST_CASE("primality and construction") {
    CHECK(is_prime(2));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(Matrix(2, 2, 4), InvalidArgument);
    Matrix a(1, 1, 5);
    a.set(0, 0, -1);
    CHECK(a(0, 0) == 4);
}

TEST_CASE("rank agrees with brute-force span size over F_2") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        auto a = random_matrix(1 + rng() % 5, 1 + rng() % 6, 2, rng);
        CHECK((std::size_t{1} << rank(a)) == span_size_f2(a));
    }
}

TEST_CASE("nullspace, solve and inverse over several primes") {
    std::mt19937 rng(11);
    for (Matrix::Scalar p : {2u, 3u, 5u, 7u}) {
        for (int t = 0; t < 60; ++t) {
            auto a = random_matrix(1 + rng() % 5, 1 + rng() % 6, p, rng);
            auto ns = nullspace(a);
            CHECK(ns.cols() + rank(a) == a.cols());
            CHECK((a * ns).is_zero());
            auto x = random_matrix(a.cols(), 2, p, rng);
            auto b = a * x;
            auto sol = solve(a, b);
            REQUIRE(sol.has_value());
            CHECK(a * *sol == b);
            CHECK(column_span_contains(a, b));
        }
        auto sq = random_matrix(4, 4, p, rng);
        if (auto inv = inverse(sq)) CHECK(sq * *inv == Matrix::identity(4, p));
        else CHECK(rank(sq) < 4);
    }
}

TEST_CASE("complement basis fills out the space") {
    Matrix sub(3, 1, 3);
    sub.set(0, 0, 1);
    sub.set(1, 0, 2);
    auto c = complement_basis(sub, 3, 3);
    CHECK(c.cols() == 2);
    CHECK(rank(Matrix::hstack(sub, c)) == 3);
}

TEST_CASE("inconsistent system has no solution") {
    Matrix a(2, 1, 5), b(2, 1, 5);
    a.set(0, 0, 1);
    b.set(1, 0, 1);
    CHECK_FALSE(solve(a, b).has_value());
}
