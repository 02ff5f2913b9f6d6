#pragma once

// Traces of surfaces on the exceptional quadric and the gluing test across
// the ruling swap.

#include "twistor/quadric.hpp"

#include <vector>

namespace twistor::surfaces {

struct SurfaceData {
    int twistor_degree = 1;
    bool contains_line = false;  // if true, the surface is assumed smooth along the line
    friend bool operator==(const SurfaceData&, const SurfaceData&) = default;
};

inline void validate(const SurfaceData& s) {
    if (s.twistor_degree < 1)
        throw Error("SurfaceData: twistor degree must be at least 1, got " + std::to_string(s.twistor_degree));
}

/// d*b if the line is not contained in S, (d-1)*b + w otherwise.
inline quadric::QuadricClass trace_class(const SurfaceData& s) {
    validate(s);
    const Integer d = s.twistor_degree;
    return s.contains_line ? quadric::QuadricClass::bw(d - 1, 1) : quadric::QuadricClass::bw(d, 0);
}

/// Strict transforms glue across Q iff sigma carries one trace onto the other.
inline bool glue_check(const SurfaceData& s1, const SurfaceData& s2) {
    return quadric::sigma_pushforward(trace_class(s1)) == trace_class(s2);
}

/// Degree of the trace over the ruling, after transport to the other branch.
inline Integer section_degree_over_ruling(const SurfaceData& s) {
    if (!s.contains_line)
        throw Error("section_degree_over_ruling: the surface must contain the line");
    return quadric::intersection_number(quadric::sigma_pushforward(trace_class(s)), quadric::QuadricClass::b());
}

struct Configuration {
    SurfaceData first;
    SurfaceData second;
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// All glueable (d1, flag1, d2, flag2) with 1 <= d_i <= d_max, in lexicographic order.
inline std::vector<Configuration> classify_all(int d_max) {
    if (d_max < 1)
        throw Error("classify_all: d_max must be at least 1");
    std::vector<Configuration> out;
    for (int d1 = 1; d1 <= d_max; ++d1)
        for (bool in1 : {true, false})
            for (int d2 = 1; d2 <= d_max; ++d2)
                for (bool in2 : {true, false}) {
                    Configuration c{{d1, in1}, {d2, in2}};
                    if (glue_check(c.first, c.second))
                        out.push_back(c);
                }
    return out;
}

}  // namespace twistor::surfaces
