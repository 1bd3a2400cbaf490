#include <cmath>

#include "mactc/errors.hpp"
#include "mactc/sum_optimizer.hpp"

namespace mactc {

GainReport gain_vs_mac(const ChannelGains& ch) {
    ch.validate();
    if (ch.g10 <= 0.0 || ch.g20 <= 0.0) throw SingularChannel("gains need g10 > 0 and g20 > 0");
    const double g1 = ch.g10, g2 = ch.g20;
    const double g1s = g1 * g1, g2s = g2 * g2;
    const double cross = 2.0 * g1 * g2 * std::sqrt(ch.p1 * ch.p2);

    GainReport r;
    r.delta_r1 = capacity((g2s + 2.0 * g1 * g2) / g1s);
    r.delta_r2 = capacity((g1s + 2.0 * g1 * g2) / g2s);
    r.delta_sum = capacity(2.0 * g1 * g2 / (g1s + g2s));
    r.finite_r1 = capacity((g2s * ch.p2 + cross) / (1.0 + g1s * ch.p1));
    r.finite_r2 = capacity((g1s * ch.p1 + cross) / (1.0 + g2s * ch.p2));
    r.finite_sum = capacity(cross / (1.0 + g1s * ch.p1 + g2s * ch.p2));
    return r;
}

}  // namespace mactc
