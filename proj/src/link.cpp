#include "rxlimit/link.hpp"

#include <cmath>
#include <numbers>

#include "rxlimit/errors.hpp"

namespace rxlimit {

namespace {

constexpr double kSpeedOfLight = 299792458.0;  // m/s
constexpr double kSafeExponentBound = 1000.0;  // 2^1000 is still a finite double

}  // namespace

const char* to_string(BindingConstraint c) noexcept {
    switch (c) {
        case BindingConstraint::TerminalLimited: return "terminal-limited";
        case BindingConstraint::ChannelLimited: return "channel-limited";
        case BindingConstraint::Tie: return "tie";
    }
    return "?";
}

Rate downlink_rate(const LinkConfig& link) {
    // log1p keeps precision for SNR values far below one.
    const double bits_per_symbol = std::log1p(link.snr_linear()) / std::numbers::ln2;
    return Rate::bps(link.streams() * link.bandwidth_hz() * bits_per_symbol);
}

double snr_from_budget(const LinkBudget& budget, const LinkConfig& link) {
    const double per_stream_power = budget.tx_power().value() / link.streams();
    const double array_gain = static_cast<double>(budget.bs_antennas()) / link.streams();
    const double wavelength = kSpeedOfLight / budget.carrier_hz();
    const double path_gain =
        std::pow(wavelength / (4.0 * std::numbers::pi * budget.distance_m()), 2.0);
    const double noise_power = budget.noise_psd_w_per_hz() * link.bandwidth_hz();
    return per_stream_power * array_gain * path_gain / noise_power;
}

AdaptationDecision adapt(Rate r_max, const LinkConfig& link) {
    const Rate r_dl = downlink_rate(link);
    const double gap = std::abs(r_dl.value() - r_max.value());
    const double scale = std::max(r_dl.value(), r_max.value());

    BindingConstraint binding;
    if (scale == 0.0 || gap < 1e-9 * scale) {
        binding = BindingConstraint::Tie;
    } else if (r_dl.value() > r_max.value()) {
        binding = BindingConstraint::TerminalLimited;
    } else {
        binding = BindingConstraint::ChannelLimited;
    }

    return AdaptationDecision{
        .r_downlink = r_dl,
        .r_max = r_max,
        .r_phone = Rate::bps(std::min(r_dl.value(), r_max.value())),
        .binding = binding,
        .redundancy = Rate::bps(gap),
    };
}

double crossover_snr_db(Rate r_max, double bandwidth_hz, int streams) {
    if (r_max.value() <= 0.0) throw std::invalid_argument("rate ceiling must be > 0");
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
    if (streams < 1) throw std::invalid_argument("stream count must be >= 1");

    const double exponent = r_max.value() / (streams * bandwidth_hz);
    if (exponent > kSafeExponentBound) {
        throw ExponentOverflow("spectral efficiency " + std::to_string(exponent) +
                               " bits/s/Hz exceeds the safe exponent bound");
    }
    // expm1(x ln2) = 2^x - 1 without cancellation for small x.
    const double snr_linear = std::expm1(exponent * std::numbers::ln2);
    return db_from_linear(snr_linear);
}

}  // namespace rxlimit
