#include "lctkit/rigidity.hpp"

#include <algorithm>
#include <stdexcept>

namespace lctkit {

std::string to_string(RigidityRegime r)
{
    switch (r) {
    case RigidityRegime::low: return "low";
    case RigidityRegime::high: return "high";
    }
    return "high";
}

RigidityCase superrigidity_certificate(long N)
{
    if (N < 4) throw std::invalid_argument("superrigidity certificate needs N >= 4");
    RigidityCase rc;
    rc.N = N;
    rc.pushforward_degree_coeff = N;
    // N = 6 would fit both regimes; the zero-dimensional locus estimate is
    // used up to 6 inclusive.
    if (N <= 6) {
        rc.regime = RigidityRegime::low;
        rc.lct_lower_bound_coeff = Rat(BigInt(N - 3), BigInt(N));
    } else {
        rc.regime = RigidityRegime::high;
        rc.lct_lower_bound_coeff = Rat(BigInt(3), BigInt(N));
    }
    rc.margin = Rat(4) * rc.lct_lower_bound_coeff - Rat(1);
    rc.contradiction = rc.margin.sign() >= 0;
    return rc;
}

RigidityTable rigidity_range(long n_min, long n_max)
{
    if (n_min < 4 || n_max < n_min) throw std::invalid_argument("rigidity range needs 4 <= n_min <= n_max");
    RigidityTable table;
    table.matches_expected_range = true;
    const long lo = std::max(n_min, 4L);
    const long hi = std::min(n_max, 12L);
    for (long N = n_min; N <= n_max; ++N) {
        auto rc = superrigidity_certificate(N);
        bool expected = lo <= N && N <= hi;
        if (rc.contradiction != expected) table.matches_expected_range = false;
        table.rows.push_back(std::move(rc));
    }
    return table;
}

std::vector<std::string> rigidity_notes()
{
    return {
        "projected cycle: divisor of degree N*r^2 in P^(N-3)",
        "points with e_y > 2r^2 form a set of dimension <= max(N-6, 0)",
        "the pair is log terminal wherever e_y <= 4r^2",
        "low (4<=N<=6): c^2/4 >= (N-3)/(N r^2); high (N>=7): c^2/4 >= 3/(N r^2)",
        "with c < 1/r the bound forces 4*coeff < 1; margin = 4*coeff - 1 >= 0 is a contradiction "
        "(at margin 0 by letting c approach 1/r from below)",
    };
}

}  // namespace lctkit
