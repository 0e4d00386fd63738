#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "semipos/matrix.hpp"

namespace semipos::genfuzz {

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t m = 2;
    std::size_t n = 2;
    // Numerators are drawn from [-entry_bound, entry_bound].
    long entry_bound = 5;
    std::vector<long> denominators{1, 2, 3, 4};
};

// SplitMix64 finalizer; derives independent per-trial seeds from a campaign
// seed so trial k is reproducible on its own.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic source of random exact objects. The engine is
// std::mt19937_64 (fully specified by the C++ standard); bounded integers
// come from rejection sampling on its raw 64-bit output, never from
// std::uniform_int_distribution, so sequences are identical across
// standard libraries.
class Generator {
public:
    explicit Generator(GenConfig cfg);

    const GenConfig& config() const { return cfg_; }

    std::uint64_t next_u64() { return engine_(); }
    // Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }

    // Numerator in [lo, hi], denominator from the configured set.
    Rational rational(long lo, long hi);
    Rational entry() { return rational(-cfg_.entry_bound, cfg_.entry_bound); }
    Rational positive_entry() { return rational(1, std::max(1L, cfg_.entry_bound)); }
    Rational nonneg_entry() { return rational(0, cfg_.entry_bound); }

    RatVector vector(std::size_t n);
    RatMatrix matrix(std::size_t m, std::size_t n);
    // Integer entries in [-bound, bound].
    RatMatrix integer_matrix(std::size_t m, std::size_t n, long bound);
    RatVector integer_vector(std::size_t n, long bound);
    Permutation permutation(std::size_t n);

    RatMatrix monomial(std::size_t n);
    RatMatrix inverse_nonneg(std::size_t n);
    RatMatrix semipositive(std::size_t m, std::size_t n);
    RatMatrix minimally_semipositive(std::size_t m, std::size_t n);
    // Nonnegative with no zero row.
    RatMatrix row_positive(std::size_t m, std::size_t n);

private:
    GenConfig cfg_;
    std::mt19937_64 engine_;
};

// One-shot generators: pure functions of their arguments.
RatMatrix gen_monomial(std::size_t n, const GenConfig& cfg);
RatMatrix gen_inverse_nonneg(std::size_t n, const GenConfig& cfg);
RatMatrix gen_sp(std::size_t m, std::size_t n, const GenConfig& cfg);
RatMatrix gen_msp(std::size_t m, std::size_t n, const GenConfig& cfg);

// m*n minimally semipositive matrices, linearly independent in the space of
// m x n matrices. Throws SearchExhaustedError after max_trials samples.
std::vector<RatMatrix> msp_basis_search(std::size_t m, std::size_t n, const GenConfig& cfg,
                                        std::size_t max_trials);

}  // namespace semipos::genfuzz
