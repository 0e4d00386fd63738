#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "semipos/matrix.hpp"

namespace semipos::preserver {

// L(A) = X A Y acting on m x n matrices; X is m x m, Y is n x n.
struct PreserverMap {
    RatMatrix x;
    RatMatrix y;

    PreserverMap(RatMatrix x_, RatMatrix y_);

    std::size_t m() const { return x.rows(); }
    std::size_t n() const { return y.rows(); }
    PreserverMap negated() const { return {-x, -y}; }
};

enum class Status { Yes, No, Unknown };

enum class Reason {
    PositivePair,          // the condition holds for (X, Y)
    NegatedPair,           // the condition holds for (-X, -Y)
    Singular,              // X or Y singular
    Falsified,             // condition fails; certificate attached
    NotSurjective,         // into-preserver but L(S) != S; certificate attached
    NoCounterexampleFound, // randomized search inconclusive
    OutsideDecidedRegime,  // no known criterion for these dimensions
};

enum class MatrixClass { Semipositive, MinimallySemipositive };

enum class CertificateKind {
    IntoViolation,  // A in S, L(A) not in S
    NotInImage,     // A in S, but no member of S maps onto A
};

// Which construction produced the certificate.
enum class ProofCase {
    // into-MSP, square
    SingularFactor,
    MixedSignX,
    YNotInverseNonneg,
    // into-MSP, m x 1
    ColumnNotPositive,
    // into-MSP, m > n >= 2
    Sampled,
    // into-SP
    ZeroRow,
    MixedRow,
    OppositeRows,
    YSingular,
    YInverseNegativeEntry,
    // onto, L singular
    RangeDeficient,
};

struct FalsifyCertificate {
    MatrixClass cls = MatrixClass::Semipositive;
    CertificateKind kind = CertificateKind::IntoViolation;
    ProofCase proof_case = ProofCase::Sampled;
    // Member of the class.
    RatMatrix a;
    // IntoViolation: L(A). NotInImage with L invertible: L^{-1}(A), outside the class.
    std::optional<RatMatrix> image;
    // When both present: image * u = z, with u not >= 0 (MSP cases) or a
    // row index of image that is zero.
    std::optional<RatVector> u;
    std::optional<RatVector> z;
    std::optional<std::size_t> zero_row;
    // NotInImage with X singular: left_null^T X = 0 and left_null^T A != 0.
    std::optional<RatVector> left_null;
};

struct PreserverVerdict {
    Status status = Status::Unknown;
    Reason reason = Reason::OutsideDecidedRegime;
    std::optional<FalsifyCertificate> certificate;
};

struct SearchOptions {
    std::uint64_t seed = 0x5EEDULL;
    std::size_t trials = 200;
    long entry_bound = 3;
};

RatMatrix apply(const PreserverMap& l, const RatMatrix& a);

bool in_class(MatrixClass cls, const RatMatrix& a);

// Re-checks every claim the certificate makes against L.
bool verify(const PreserverMap& l, const FalsifyCertificate& cert);

PreserverVerdict into_sp_preserver(const PreserverMap& l);
PreserverVerdict onto_sp_preserver(const PreserverMap& l);
PreserverVerdict into_msp_preserver(const PreserverMap& l, const SearchOptions& opts = {});
// Square only; DimensionError otherwise.
PreserverVerdict onto_msp_preserver(const PreserverMap& l);

// Throw InvalidInputError when L actually is an into-preserver.
FalsifyCertificate falsify_into_msp(const PreserverMap& l);
FalsifyCertificate falsify_into_sp(const PreserverMap& l);

std::string_view to_string(Status s);
std::string_view to_string(Reason r);
std::string_view to_string(MatrixClass c);
std::string_view to_string(CertificateKind k);
std::string_view to_string(ProofCase c);

}  // namespace semipos::preserver
