#include <doctest.h>

#include "oracles.hpp"
#include "semipos/classify.hpp"
#include "semipos/genfuzz.hpp"
#include "semipos/lp.hpp"

using namespace semipos;
using namespace semipos::classify;
using semipos::testing::mat;
using semipos::testing::vec;

namespace {

const RatMatrix kExampleB = mat({{3, 0, 0, 0}, {2, 1, 0, 0}, {0, 0, 1, 5}, {1, 0, 0, 1}});
const RatMatrix kOnes2 = mat({{1, 1}, {1, 1}});
const RatMatrix kMixedX = mat({{1, 0, 0}, {0, -1, 0}, {1, 1, 1}});
const RatMatrix kTwoThirds{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}};

genfuzz::Generator make_gen(std::uint64_t seed, long bound) {
    genfuzz::GenConfig cfg;
    cfg.seed = seed;
    cfg.entry_bound = bound;
    cfg.denominators = {1};
    return genfuzz::Generator(cfg);
}

}  // namespace

TEST_CASE("is_semipositive examples") {
    auto r = is_semipositive(RatMatrix::identity(3));
    REQUIRE(r.semipositive);
    CHECK(r.witness->is_positive());
    CHECK(is_semipositivity_vector(RatMatrix::identity(3), *r.witness));

    CHECK_FALSE(is_semipositive(-RatMatrix::identity(2)).semipositive);
    CHECK_FALSE(is_semipositive(mat({{1, -1}, {-1, 1}})).semipositive);
    CHECK_FALSE(is_semipositive(mat({{1, -1}, {-1, 1}})).witness.has_value());

    CHECK(kExampleB * RatVector::ones(4) == vec({3, 3, 6, 2}));
    r = is_semipositive(kExampleB);
    REQUIRE(r.semipositive);
    CHECK(is_semipositivity_vector(kExampleB, *r.witness));

    CHECK_FALSE(is_semipositive(RatMatrix(2, 0)).semipositive);
}

TEST_CASE("has_nonneg_left_inverse examples") {
    auto r = has_nonneg_left_inverse(RatMatrix::identity(3));
    REQUIRE(r.exists);
    CHECK(*r.left_inverse == RatMatrix::identity(3));

    r = has_nonneg_left_inverse(mat({{1, 0}, {0, 1}, {1, 1}}));
    REQUIRE(r.exists);
    CHECK(*r.left_inverse == mat({{1, 0, 0}, {0, 1, 0}}));

    CHECK_FALSE(has_nonneg_left_inverse(kOnes2).exists);
    CHECK_THROWS_AS(has_nonneg_left_inverse(mat({{1, 0, 0}, {0, 1, 0}})), DimensionError);
}

TEST_CASE("is_minimally_semipositive and msp_by_deletion examples") {
    CHECK(is_minimally_semipositive(RatMatrix::identity(2)));
    CHECK(is_minimally_semipositive(mat({{2, -1}, {-1, 2}})));
    CHECK_FALSE(is_minimally_semipositive(kOnes2));
    CHECK(is_minimally_semipositive(mat({{1}, {3}})));
    CHECK(is_minimally_semipositive(RatMatrix{{Rational(1, 2)}, {Rational(7)}}));
    CHECK_FALSE(is_minimally_semipositive(mat({{1}, {0}})));

    CHECK(msp_by_deletion(RatMatrix::identity(2)));
    CHECK_FALSE(msp_by_deletion(kOnes2));
    CHECK(msp_by_deletion(mat({{1, 0}, {0, 1}, {1, 1}})));
    CHECK(is_minimally_semipositive(mat({{1, 0}, {0, 1}, {1, 1}})));
}

TEST_CASE("wide matrices are never minimally semipositive") {
    // For m < n, a vertex of {x >= 0, A x >= e} has at most m nonzero
    // coordinates, so some column can be dropped without losing
    // semipositivity.
    auto g = make_gen(3, 3);
    for (int k = 0; k < 150; ++k) {
        const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
        const std::size_t n = m + static_cast<std::size_t>(g.uniform(1, 2));
        const RatMatrix a = k % 2 == 0 ? g.matrix(m, n) : g.semipositive(m, n);
        CHECK_FALSE(msp_by_deletion(a));
        CHECK_FALSE(is_minimally_semipositive(a));
    }
}

TEST_CASE("is_row_positive examples") {
    CHECK(is_row_positive(RatMatrix::identity(3)));
    CHECK_FALSE(is_row_positive(kMixedX));
    CHECK_FALSE(is_row_positive(-kMixedX));
    CHECK_FALSE(is_row_positive(mat({{1, 1}, {0, 0}})));
}

TEST_CASE("is_monomial examples") {
    CHECK(is_monomial(permutation_matrix({2, 0, 1})));
    CHECK(is_monomial(RatMatrix::identity(4)));
    CHECK_FALSE(is_monomial(kOnes2));
    CHECK(is_monomial(mat({{0, 2}, {3, 0}})));
    CHECK_FALSE(is_monomial(mat({{0, -2}, {3, 0}})));
    CHECK_THROWS_AS(is_monomial(mat({{1, 0}})), DimensionError);
}

TEST_CASE("is_inverse_nonnegative examples") {
    auto r = is_inverse_nonnegative(RatMatrix::identity(2));
    CHECK(r.inverse_nonnegative);
    CHECK(*r.inverse == RatMatrix::identity(2));

    r = is_inverse_nonnegative(mat({{2, -1}, {-1, 2}}));
    CHECK(r.inverse_nonnegative);
    CHECK(*r.inverse == kTwoThirds);

    r = is_inverse_nonnegative(mat({{1, 0}, {1, 1}}));
    CHECK_FALSE(r.inverse_nonnegative);
    CHECK(*r.inverse == mat({{1, 0}, {-1, 1}}));

    r = is_inverse_nonnegative(kOnes2);
    CHECK_FALSE(r.inverse_nonnegative);
    CHECK_FALSE(r.inverse.has_value());
}

TEST_CASE("classify_all spot checks") {
    const ClassReport id = classify_all(RatMatrix::identity(3));
    CHECK(id.nonnegative);
    CHECK_FALSE(id.positive);
    CHECK(id.row_positive);
    CHECK(id.monomial == true);
    CHECK(id.inverse_nonnegative == true);
    CHECK(id.semipositive);
    CHECK(id.minimally_semipositive);
    CHECK(*id.inv == RatMatrix::identity(3));
    CHECK(*id.left_inv == RatMatrix::identity(3));

    const ClassReport b = classify_all(kExampleB);
    CHECK(b.nonnegative);
    CHECK(b.row_positive);
    CHECK(b.monomial == false);
    CHECK(b.inverse_nonnegative == false);
    CHECK(b.semipositive);
    CHECK_FALSE(b.minimally_semipositive);
    REQUIRE(b.inv.has_value());
    CHECK(kExampleB * *b.inv == RatMatrix::identity(4));

    const ClassReport ones = classify_all(kOnes2);
    CHECK(ones.positive);
    CHECK(ones.row_positive);
    CHECK(ones.monomial == false);
    CHECK(ones.inverse_nonnegative == false);
    CHECK(ones.semipositive);
    CHECK_FALSE(ones.minimally_semipositive);
    CHECK_FALSE(ones.inv.has_value());

    const ClassReport rect = classify_all(mat({{1, 0}, {0, 1}, {1, 1}}));
    CHECK_FALSE(rect.monomial.has_value());
    CHECK_FALSE(rect.inverse_nonnegative.has_value());
    CHECK(rect.minimally_semipositive);
}

TEST_CASE("minimal semipositivity characterizations agree") {
    auto g = make_gen(17, 3);
    std::size_t msp = 0;
    for (int k = 0; k < 250; ++k) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 4));
        const std::size_t m = n + static_cast<std::size_t>(g.uniform(0, static_cast<long>(5 - n)));
        // Mix raw draws with planted members so both verdicts occur.
        const RatMatrix a = k % 3 == 0 ? g.minimally_semipositive(m, n)
                            : k % 3 == 1 ? g.semipositive(m, n)
                                         : g.matrix(m, n);
        const bool fast = is_minimally_semipositive(a);
        CHECK(fast == msp_by_deletion(a));
        if (fast) ++msp;
    }
    CHECK(msp > 50);
    CHECK(msp < 230);
}

TEST_CASE("square minimal semipositivity equals inverse nonnegativity") {
    auto g = make_gen(29, 3);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 5));
        const RatMatrix a = k % 2 == 0 ? g.inverse_nonneg(n) : g.matrix(n, n);
        CHECK(is_minimally_semipositive(a) == is_inverse_nonnegative(a).inverse_nonnegative);
    }
}

TEST_CASE("monomial characterization") {
    auto g = make_gen(31, 2);
    std::size_t monomials = 0;
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 6));
        RatMatrix a = k % 3 == 0 ? g.monomial(n) : k % 3 == 1 ? g.inverse_nonneg(n) : g.row_positive(n, n);
        if (k % 5 == 0) a(0, 0) = a(0, 0) + Rational(1);
        const bool mono = is_monomial(a);
        CHECK(mono == (is_row_positive(a) && is_inverse_nonnegative(a).inverse_nonnegative));
        if (mono) ++monomials;
    }
    CHECK(monomials > 40);
}

TEST_CASE("witness properties") {
    auto g = make_gen(37, 3);
    for (int k = 0; k < 150; ++k) {
        const std::size_t m = static_cast<std::size_t>(g.uniform(1, 5));
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 5));
        const RatMatrix a = g.matrix(m, n);
        const auto r = is_semipositive(a);
        CHECK(r.semipositive == r.witness.has_value());
        if (r.witness) CHECK(is_semipositivity_vector(a, *r.witness));
        CHECK(r.semipositive == lp::feasible_nonneg(a, RatVector::ones(m)).feasible());

        const RatMatrix rp = g.row_positive(m, n);
        CHECK(is_row_positive(rp));
        CHECK(is_semipositivity_vector(rp, RatVector::ones(n)));
        CHECK(is_semipositive(rp).semipositive);

        const ClassReport rep = classify_all(a);
        if (rep.minimally_semipositive) CHECK(rep.semipositive);
        if (rep.monomial == true) CHECK((rep.row_positive && rep.inverse_nonnegative == true));
        if (rep.left_inv) {
            CHECK(rep.left_inv->is_nonnegative());
            CHECK(*rep.left_inv * a == RatMatrix::identity(n));
        }
    }
}
