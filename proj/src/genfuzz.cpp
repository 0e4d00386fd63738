#include "semipos/genfuzz.hpp"

#include <limits>
#include <stdexcept>

#include "semipos/classify.hpp"

namespace semipos::genfuzz {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Generator::Generator(GenConfig cfg) : cfg_(std::move(cfg)), engine_(cfg_.seed) {
    if (cfg_.denominators.empty()) cfg_.denominators = {1};
    for (long d : cfg_.denominators)
        if (d <= 0) throw std::invalid_argument("GenConfig: denominators must be positive");
    if (cfg_.entry_bound < 1) throw std::invalid_argument("GenConfig: entry_bound must be positive");
}

long Generator::uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Reject the tail so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + static_cast<long>(r % span);
}

Rational Generator::rational(long lo, long hi) {
    const long num = uniform(lo, hi);
    const auto idx = static_cast<std::size_t>(uniform(0, static_cast<long>(cfg_.denominators.size()) - 1));
    return Rational(num, cfg_.denominators[idx]);
}

RatVector Generator::vector(std::size_t n) {
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = entry();
    return v;
}

RatMatrix Generator::matrix(std::size_t m, std::size_t n) {
    RatMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry();
    return a;
}

RatMatrix Generator::integer_matrix(std::size_t m, std::size_t n, long bound) {
    RatMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(uniform(-bound, bound));
    return a;
}

RatVector Generator::integer_vector(std::size_t n, long bound) {
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(uniform(-bound, bound));
    return v;
}

Permutation Generator::permutation(std::size_t n) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

RatMatrix Generator::monomial(std::size_t n) {
    const Permutation p = permutation(n);
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, p[i]) = positive_entry();
    return a;
}

RatMatrix Generator::inverse_nonneg(std::size_t n) {
    // Nonnegative, strictly diagonally dominant N is invertible; return N^{-1}.
    RatMatrix nmat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational off;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            nmat(i, j) = nonneg_entry();
            off += nmat(i, j);
        }
        nmat(i, i) = off + positive_entry();
    }
    return inverse(nmat);
}

RatMatrix Generator::semipositive(std::size_t m, std::size_t n) {
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = positive_entry();
    RatMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        RatVector r(n);
        Rational s;
        do {
            r = vector(n);
            s = dot(r, x);
        } while (s.is_zero());
        if (s.is_negative()) r = -r;
        for (std::size_t j = 0; j < n; ++j) a(i, j) = r[j];
    }
    return a;
}

RatMatrix Generator::row_positive(std::size_t m, std::size_t n) {
    RatMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = nonneg_entry();
        if (a.row(i).is_zero()) {
            const auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            a(i, j) = positive_entry();
        }
    }
    return a;
}

RatMatrix Generator::minimally_semipositive(std::size_t m, std::size_t n) {
    if (n == 0 || m < n) throw std::invalid_argument("minimally_semipositive: needs m >= n >= 1");
    RatMatrix a = inverse_nonneg(n);
    if (m > n) a = vstack(a, row_positive(m - n, n));
    return a;
}

RatMatrix gen_monomial(std::size_t n, const GenConfig& cfg) {
    return Generator(cfg).monomial(n);
}

RatMatrix gen_inverse_nonneg(std::size_t n, const GenConfig& cfg) {
    return Generator(cfg).inverse_nonneg(n);
}

RatMatrix gen_sp(std::size_t m, std::size_t n, const GenConfig& cfg) {
    return Generator(cfg).semipositive(m, n);
}

RatMatrix gen_msp(std::size_t m, std::size_t n, const GenConfig& cfg) {
    return Generator(cfg).minimally_semipositive(m, n);
}

std::vector<RatMatrix> msp_basis_search(std::size_t m, std::size_t n, const GenConfig& cfg,
                                        std::size_t max_trials) {
    if (n == 0 || m < n) throw std::invalid_argument("msp_basis_search: needs m >= n >= 1");
    const std::size_t target = m * n;
    Generator gen(cfg);
    std::vector<RatMatrix> basis;
    std::vector<RatVector> span;
    for (std::size_t trial = 0; trial < max_trials && basis.size() < target; ++trial) {
        RatMatrix a = gen.minimally_semipositive(m, n);
        span.push_back(vectorize(a));
        if (rank(RatMatrix::from_rows(span)) == span.size()) {
            if (!classify::is_minimally_semipositive(a))
                throw std::logic_error("msp_basis_search: generated matrix is not MSP");
            basis.push_back(std::move(a));
        } else {
            span.pop_back();
        }
    }
    if (basis.size() < target)
        throw SearchExhaustedError("msp_basis_search: found " + std::to_string(basis.size()) + " of " +
                                   std::to_string(target) + " independent MSP matrices in " +
                                   std::to_string(max_trials) + " trials");
    return basis;
}

}  // namespace semipos::genfuzz
