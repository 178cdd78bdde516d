#ifndef AASCORE_CHART_HPP
#define AASCORE_CHART_HPP

#include <string>
#include <vector>

#include "aascore/vectors.hpp"

namespace aascore {

/// One spider-chart coordinate: a factor and its integer encoding.
struct ChartPoint {
    std::string factor;
    int encoded{0};

    bool operator==(const ChartPoint&) const = default;
};

/// Spider-chart encoding of a CVSS vector, factor order AV/AC/PR/UI/S/C/I/A.
/// Four-valued factors map to 1..4 in listing order (AV N=1,A=2,L=3,P=4),
/// three-valued to 1..3 (PR N=1,L=2,H=3; C/I/A N=1,L=2,H=3), two-valued to
/// {2,4} (AC L=2,H=4; UI N=2,R=4; S U=2,C=4).
std::vector<ChartPoint> chart_encode(const CvssVector& v);

/// Spider-chart encoding of an SSVC vector, factor order E/A/V/U/T/P.
/// Three-valued factors map to 1..3 (E N=1,P=2,A=3; U L=1,E=2,S=3),
/// two-valued to {1,3} (A N=1,Y=3; V D=1,C=3; T P=1,T=3; P M=1,S=3).
std::vector<ChartPoint> chart_encode(const SsvcVector& v);

} // namespace aascore

#endif
