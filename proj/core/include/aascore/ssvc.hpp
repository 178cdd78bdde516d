#ifndef AASCORE_SSVC_HPP
#define AASCORE_SSVC_HPP

#include <array>
#include <filesystem>
#include <stdexcept>

#include "aascore/model.hpp"
#include "aascore/vectors.hpp"

namespace aascore {

/// Utility from Automatable x Value Density:
///   (N,D) Laborious, (N,C) Efficient, (Y,D) Efficient, (Y,C) SuperEffective.
SsvcUtility derive_utility(SsvcAutomatable a, SsvcValueDensity v);

/// The supplier decision policy: a total mapping
/// (E in {N,P,A}) x (U in {L,E,S}) x (T in {P,T}) x (P in {M,S}) -> decision,
/// stored as a 36-leaf table so alternate policies can be loaded from disk.
class SupplierTree {
public:
    /// The shipped default policy.
    static const SupplierTree& standard();

    /// Loads a policy file: one leaf per line, "E U T P decision" with the
    /// single-letter factor codes and a decision name. '#' starts a comment.
    /// Rejects duplicate and missing leaves.
    static SupplierTree load(const std::filesystem::path& path);

    SsvcDecision decide(SsvcExploitation e, SsvcUtility u, SsvcTechImpact t,
                        SsvcSafetyImpact p) const;

    /// True when raising any single coordinate (N<P<A, L<E<S, P<T, M<S)
    /// never lowers the decision (Defer < Scheduled < OutOfCycle < Immediate).
    bool is_monotone() const;

    static constexpr int kLeafCount = 36;

private:
    SupplierTree() = default;
    static int index(SsvcExploitation e, SsvcUtility u, SsvcTechImpact t, SsvcSafetyImpact p);

    std::array<SsvcDecision, kLeafCount> leaves_{};
};

class SupplierTreeError : public std::runtime_error {
public:
    enum class Code { Io, Malformed, DuplicateLeaf, MissingLeaf };
    SupplierTreeError(Code code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Decision for a vector under the standard policy. The vector's stored U is
/// trusted (parse_ssvc keeps it consistent with A and V).
SsvcDecision ssvc_decide(const SsvcVector& v);
SsvcDecision ssvc_decide(const SsvcVector& v, const SupplierTree& tree);

} // namespace aascore

#endif
