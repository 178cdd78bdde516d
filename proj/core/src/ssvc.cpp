#include "aascore/ssvc.hpp"

#include <fstream>
#include <sstream>

namespace aascore {

SsvcUtility derive_utility(SsvcAutomatable a, SsvcValueDensity v) {
    if (a == SsvcAutomatable::No)
        return v == SsvcValueDensity::Diffuse ? SsvcUtility::Laborious : SsvcUtility::Efficient;
    return v == SsvcValueDensity::Diffuse ? SsvcUtility::Efficient : SsvcUtility::SuperEffective;
}

int SupplierTree::index(SsvcExploitation e, SsvcUtility u, SsvcTechImpact t, SsvcSafetyImpact p) {
    return static_cast<int>(e) * 12 + static_cast<int>(u) * 4 + static_cast<int>(t) * 2 +
           static_cast<int>(p);
}

namespace {

constexpr SsvcDecision kDefer = SsvcDecision::Defer;
constexpr SsvcDecision kSched = SsvcDecision::Scheduled;
constexpr SsvcDecision kOoc = SsvcDecision::OutOfCycle;
constexpr SsvcDecision kImm = SsvcDecision::Immediate;

// Leaf order: (E, U, T, P) with E in N,P,A / U in L,E,S / T in P,T / P in M,S.
constexpr std::array<SsvcDecision, SupplierTree::kLeafCount> kStandardLeaves = {
    // E = None
    kDefer, kSched, kSched, kOoc, // U=L: (P,M) (P,S) (T,M) (T,S)
    kSched, kOoc, kSched, kOoc,   // U=E
    kSched, kOoc, kOoc, kOoc,     // U=S
    // E = PoC
    kSched, kOoc, kSched, kImm,   // U=L
    kSched, kImm, kOoc, kImm,     // U=E
    kOoc, kImm, kOoc, kImm,       // U=S
    // E = Active
    kOoc, kImm, kOoc, kImm,       // U=L
    kOoc, kImm, kOoc, kImm,       // U=E
    kImm, kImm, kImm, kImm,       // U=S
};

SsvcDecision decision_from_token(const std::string& token) {
    if (token == "Defer") return SsvcDecision::Defer;
    if (token == "Scheduled") return SsvcDecision::Scheduled;
    if (token == "OutOfCycle" || token == "Out-of-cycle" || token == "Out-of-Cycle")
        return SsvcDecision::OutOfCycle;
    if (token == "Immediate") return SsvcDecision::Immediate;
    throw SupplierTreeError(SupplierTreeError::Code::Malformed,
                            "unknown decision \"" + token + "\"");
}

template <typename Enum>
Enum letter_to(char c, std::string_view letters, std::string_view what) {
    size_t pos = letters.find(c);
    if (pos == std::string_view::npos)
        throw SupplierTreeError(SupplierTreeError::Code::Malformed,
                                std::string("bad ") + std::string(what) + " code '" + c + "'");
    return static_cast<Enum>(pos);
}

} // namespace

const SupplierTree& SupplierTree::standard() {
    static const SupplierTree tree = [] {
        SupplierTree t;
        t.leaves_ = kStandardLeaves;
        return t;
    }();
    return tree;
}

SupplierTree SupplierTree::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw SupplierTreeError(SupplierTreeError::Code::Io,
                                "cannot open policy file " + path.string());
    SupplierTree tree;
    std::array<bool, kLeafCount> seen{};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        std::string e, u, t, p, decision;
        if (!(row >> e)) continue; // blank line
        if (!(row >> u >> t >> p >> decision))
            throw SupplierTreeError(SupplierTreeError::Code::Malformed,
                                    "line " + std::to_string(line_no) +
                                        ": expected \"E U T P decision\"");
        std::string extra;
        if (row >> extra)
            throw SupplierTreeError(SupplierTreeError::Code::Malformed,
                                    "line " + std::to_string(line_no) + ": trailing token \"" +
                                        extra + "\"");
        if (e.size() != 1 || u.size() != 1 || t.size() != 1 || p.size() != 1)
            throw SupplierTreeError(SupplierTreeError::Code::Malformed,
                                    "line " + std::to_string(line_no) +
                                        ": factor codes must be single letters");
        int idx = index(letter_to<SsvcExploitation>(e[0], "NPA", "E"),
                        letter_to<SsvcUtility>(u[0], "LES", "U"),
                        letter_to<SsvcTechImpact>(t[0], "PT", "T"),
                        letter_to<SsvcSafetyImpact>(p[0], "MS", "P"));
        if (seen[idx])
            throw SupplierTreeError(SupplierTreeError::Code::DuplicateLeaf,
                                    "line " + std::to_string(line_no) + ": leaf " + e + u + t +
                                        p + " defined twice");
        seen[idx] = true;
        tree.leaves_[idx] = decision_from_token(decision);
    }
    for (int i = 0; i < kLeafCount; ++i)
        if (!seen[i])
            throw SupplierTreeError(SupplierTreeError::Code::MissingLeaf,
                                    "policy is not total: " + std::to_string(i) +
                                        " of 36 leaves missing a definition");
    return tree;
}

SsvcDecision SupplierTree::decide(SsvcExploitation e, SsvcUtility u, SsvcTechImpact t,
                                  SsvcSafetyImpact p) const {
    return leaves_[index(e, u, t, p)];
}

bool SupplierTree::is_monotone() const {
    for (int e = 0; e < 3; ++e)
        for (int u = 0; u < 3; ++u)
            for (int t = 0; t < 2; ++t)
                for (int p = 0; p < 2; ++p) {
                    auto at = [&](int e2, int u2, int t2, int p2) {
                        return leaves_[e2 * 12 + u2 * 4 + t2 * 2 + p2];
                    };
                    SsvcDecision here = at(e, u, t, p);
                    if (e + 1 < 3 && at(e + 1, u, t, p) < here) return false;
                    if (u + 1 < 3 && at(e, u + 1, t, p) < here) return false;
                    if (t + 1 < 2 && at(e, u, t + 1, p) < here) return false;
                    if (p + 1 < 2 && at(e, u, t, p + 1) < here) return false;
                }
    return true;
}

SsvcDecision ssvc_decide(const SsvcVector& v) { return ssvc_decide(v, SupplierTree::standard()); }

SsvcDecision ssvc_decide(const SsvcVector& v, const SupplierTree& tree) {
    return tree.decide(v.exploitation, v.utility, v.technical_impact, v.safety_impact);
}

} // namespace aascore
