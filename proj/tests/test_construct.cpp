#include <doctest.h>

#include "oracles.hpp"
#include "semipos/classify.hpp"
#include "semipos/construct.hpp"
#include "semipos/genfuzz.hpp"

using namespace semipos;
using namespace semipos::construct;
using semipos::testing::mat;
using semipos::testing::vec;

namespace {

genfuzz::Generator make_gen(std::uint64_t seed) {
    genfuzz::GenConfig cfg;
    cfg.seed = seed;
    cfg.entry_bound = 5;
    cfg.denominators = {1};
    return genfuzz::Generator(cfg);
}

RatVector mixed_vector(genfuzz::Generator& g, std::size_t n) {
    for (;;) {
        RatVector v = g.integer_vector(n, 5);
        if (sign_profile(v).mixed()) return v;
    }
}

}  // namespace

TEST_CASE("build_np worked example") {
    const RatVector v = vec({1, 0, -5, -1});
    const RatVector w = vec({3, 2, -10, 0});
    const NpConstruction r = build_np(v, w);
    CHECK(r.b == mat({{3, 0, 0, 0}, {2, 1, 0, 0}, {0, 0, 1, 5}, {1, 0, 0, 1}}));
    CHECK(r.b * v == w);
    CHECK(r.trace.step1 == 'a');
    CHECK(r.trace.step2 == std::vector<char>{'c', 'e'});
    CHECK(r.trace.step3 == 'e');
}

TEST_CASE("build_np small hand-executed cases") {
    NpConstruction r = build_np(vec({1, -1}), vec({1, 0}));
    CHECK(r.b == mat({{1, 0}, {1, 1}}));
    CHECK(r.trace.step1 == 'a');
    CHECK(r.trace.step3 == 'e');

    r = build_np(vec({1, -1}), vec({-1, 2}));
    CHECK(r.b == mat({{0, 1}, {2, 0}}));
    CHECK(r.trace.step1 == 'b');
    CHECK(r.trace.step3 == 'a');
}

TEST_CASE("build_np rejects invalid input") {
    CHECK_THROWS_AS(build_np(vec({1, 2}), vec({1, 1})), InvalidInputError);
    CHECK_THROWS_AS(build_np(vec({1, -1}), vec({0, 0})), InvalidInputError);
    CHECK_THROWS_AS(build_np(vec({1, -1}), vec({1, 0, 0})), InvalidInputError);
    CHECK_THROWS_AS(build_np(vec({-1}), vec({1})), InvalidInputError);
}

TEST_CASE("build_np on random input") {
    auto g = make_gen(41);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(2, 8));
        const RatVector v = mixed_vector(g, n);
        RatVector w;
        do w = g.integer_vector(n, 5);
        while (w.is_zero());
        const NpConstruction r = build_np(v, w);
        CHECK(r.b.is_nonnegative());
        CHECK_FALSE(det(r.b).is_zero());
        CHECK(r.b * v == w);
        CHECK(r.trace.step2.size() == n - 2);
    }
}

TEST_CASE("build_pos examples") {
    CHECK(build_pos(vec({1, 0}), vec({1, 1})).b == mat({{1, 0}, {1, 1}}));
    CHECK(build_pos(vec({1, 1}), vec({1, 1})).b ==
          RatMatrix{{Rational(1), Rational(0)}, {Rational(1, 2), Rational(1, 2)}});
    CHECK(build_pos(vec({2}), vec({3})).b == RatMatrix{{Rational(3, 2)}});

    // Positive entries are moved to the front.
    const PosConstruction r = build_pos(vec({0, 2, 0, 1}), vec({1, 2, 3, 4}));
    CHECK(r.positive_count == 2);
    CHECK(r.b * vec({0, 2, 0, 1}) == vec({1, 2, 3, 4}));
    const RatMatrix p = permutation_matrix(r.order);
    CHECK(is_lower_triangular(p * r.b * p.transpose()));

    CHECK_THROWS_AS(build_pos(vec({0, 0}), vec({1, 1})), InvalidInputError);
    CHECK_THROWS_AS(build_pos(vec({1, -1}), vec({1, 1})), InvalidInputError);
    CHECK_THROWS_AS(build_pos(vec({1, 1}), vec({1, 0})), InvalidInputError);
}

TEST_CASE("build_pos on random input") {
    auto g = make_gen(43);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 8));
        RatVector v(n);
        do
            for (std::size_t i = 0; i < n; ++i) v[i] = g.coin() ? g.nonneg_entry() : Rational(0);
        while (v.is_zero());
        RatVector w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = g.positive_entry();
        const PosConstruction r = build_pos(v, w);
        CHECK(r.b.is_nonnegative());
        CHECK_FALSE(det(r.b).is_zero());
        CHECK(r.b * v == w);
        const RatMatrix p = permutation_matrix(r.order);
        const RatMatrix lower = p * r.b * p.transpose();
        CHECK(is_lower_triangular(lower));
        for (std::size_t i = 0; i < n; ++i) CHECK(lower(i, i).is_positive());
    }
}

TEST_CASE("build_rect examples") {
    const RatMatrix r = build_rect(vec({1, -1, 0}), vec({5}));
    // Hand-executed: w' = (5,1,1) puts case a in the first row.
    CHECK(r == mat({{5, 0, 0}}));
    CHECK(r * vec({1, -1, 0}) == vec({5}));
    CHECK(rank(r) == 1);

    const RatMatrix b = build_rect(vec({1, 0, 2}), vec({1, 1}));
    CHECK(b == mat({{1, 0, 0}, {1, 1, 0}}));
    CHECK(b.is_nonnegative());
    CHECK(rank(b) == 2);
    CHECK(b * vec({1, 0, 2}) == vec({1, 1}));

    CHECK_THROWS_AS(build_rect(vec({1, 1}), RatVector{}), InvalidInputError);
    CHECK_THROWS_AS(build_rect(vec({1, 1}), vec({1, 1})), InvalidInputError);
    CHECK_THROWS_AS(build_rect(vec({1, 1, 0}), vec({1, 0})), InvalidInputError);
    CHECK_THROWS_AS(build_rect(vec({-1, -1, 0}), vec({1})), InvalidInputError);
}

TEST_CASE("build_rect on random input") {
    auto g = make_gen(47);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(2, 7));
        const std::size_t m = static_cast<std::size_t>(g.uniform(1, static_cast<long>(n - 1)));
        RatVector v, w;
        if (k % 2 == 0) {
            v = mixed_vector(g, n);
            w = g.integer_vector(m, 5);
        } else {
            v = RatVector(n);
            do
                for (std::size_t i = 0; i < n; ++i) v[i] = g.coin() ? g.nonneg_entry() : Rational(0);
            while (v.is_zero());
            w = RatVector(m);
            for (std::size_t i = 0; i < m; ++i) w[i] = g.positive_entry();
        }
        const RatMatrix b = build_rect(v, w);
        CHECK(b.rows() == m);
        CHECK(b.cols() == n);
        CHECK(b.is_nonnegative());
        CHECK(rank(b) == m);
        CHECK(b * v == w);
    }
}

TEST_CASE("mixed_sign_vector examples") {
    const RatMatrix x = mat({{1, 0, 0}, {0, -1, 0}, {1, 1, 1}});
    CHECK(inverse(x) == mat({{1, 0, 0}, {0, -1, 0}, {-1, 1, 1}}));
    MixedSignResult r = mixed_sign_vector(x);
    CHECK(r.v == vec({0, -1, 1}));
    CHECK_FALSE(r.combined);
    CHECK(x * r.v == vec({0, 1, 0}));

    r = mixed_sign_vector(mat({{-1, 0}, {0, 1}}));
    CHECK(r.v == vec({-1, 1}));
    CHECK(r.combined);
    CHECK(mat({{-1, 0}, {0, 1}}) * r.v == vec({1, 1}));

    CHECK_THROWS_AS(mixed_sign_vector(RatMatrix::identity(2)), InvalidInputError);
    CHECK_THROWS_AS(mixed_sign_vector(-RatMatrix::identity(2)), InvalidInputError);
    CHECK_THROWS_AS(mixed_sign_vector(mat({{1, 1}, {1, 1}})), InvalidInputError);
}

TEST_CASE("mixed_sign_vector on random input") {
    auto g = make_gen(53);
    std::size_t done = 0;
    while (done < 200) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(2, 6));
        const RatMatrix x = g.integer_matrix(n, n, 3);
        const auto inv = try_inverse(x);
        if (!inv || inv->is_nonnegative() || inv->is_nonpositive()) continue;
        const MixedSignResult r = mixed_sign_vector(x);
        CHECK(sign_profile(r.v).mixed());
        CHECK((x * r.v).is_nonnegative());
        ++done;
    }
}
