#pragma once

// Downlink rate model and the min-rule link adaptation. The channel side is a
// scalar Shannon capacity with equal per-stream SNR:
//
//   R_downlink = streams * BW * log2(1 + SNR)
//
// The effective receiving rate is min(R_downlink, R_max); the crossover SNR
// where the two sides meet is available in closed form. SNR crosses module
// boundaries in dB (dB = 10 * log10(linear)); internal state is linear.

#include "rxlimit/core.hpp"

namespace rxlimit {

inline double db_from_linear(double linear) { return 10.0 * std::log10(linear); }
inline double linear_from_db(double db) { return std::pow(10.0, db / 10.0); }

inline constexpr double kBandwidth20MHz = 20e6;
inline constexpr double kBandwidth500MHz = 500e6;

/// Channel-side configuration: bandwidth, spatial streams (defaults to the
/// handset's four antennas), and a scalar SNR.
class LinkConfig {
public:
    LinkConfig(double bandwidth_hz, int streams, double snr_linear)
        : bandwidth_hz_(bandwidth_hz), streams_(streams), snr_linear_(snr_linear) {
        detail::require(detail::finite(bandwidth_hz_) && bandwidth_hz_ > 0.0,
                        "bandwidth must be finite and > 0 Hz");
        detail::require(streams_ >= 1, "stream count must be >= 1");
        detail::require(detail::finite(snr_linear_) && snr_linear_ > 0.0,
                        "linear SNR must be finite and > 0");
    }

    static LinkConfig with_snr_db(double bandwidth_hz, int streams, double snr_db) {
        return LinkConfig(bandwidth_hz, streams, linear_from_db(snr_db));
    }

    double bandwidth_hz() const noexcept { return bandwidth_hz_; }
    int streams() const noexcept { return streams_; }
    double snr_linear() const noexcept { return snr_linear_; }
    double snr_db() const noexcept { return db_from_linear(snr_linear_); }

    LinkConfig with_snr_linear(double snr_linear) const {
        return LinkConfig(bandwidth_hz_, streams_, snr_linear);
    }

private:
    double bandwidth_hz_;
    int streams_;
    double snr_linear_;
};

/// Base-station side link budget used to derive an SNR from transmit power,
/// array size, free-space path loss and thermal noise. This is a convenience
/// front end for LinkConfig, not part of the headline rate model.
class LinkBudget {
public:
    LinkBudget() = default;

    LinkBudget(Power tx_power, int bs_antennas, double carrier_hz, double distance_m,
               double noise_psd_w_per_hz, double cell_radius_m = 100.0)
        : tx_power_(tx_power),
          bs_antennas_(bs_antennas),
          carrier_hz_(carrier_hz),
          distance_m_(distance_m),
          noise_psd_(noise_psd_w_per_hz),
          cell_radius_m_(cell_radius_m) {
        detail::require(tx_power_.value() > 0.0, "transmit power must be > 0");
        detail::require(bs_antennas_ >= 1, "base-station antenna count must be >= 1");
        detail::require(detail::finite(carrier_hz_) && carrier_hz_ > 0.0,
                        "carrier frequency must be finite and > 0");
        detail::require(detail::finite(distance_m_) && distance_m_ > 0.0,
                        "distance must be finite and > 0");
        detail::require(detail::finite(noise_psd_) && noise_psd_ > 0.0,
                        "noise PSD must be finite and > 0");
        detail::require(detail::finite(cell_radius_m_) && cell_radius_m_ > 0.0,
                        "cell radius must be finite and > 0");
    }

    Power tx_power() const noexcept { return tx_power_; }
    int bs_antennas() const noexcept { return bs_antennas_; }
    double carrier_hz() const noexcept { return carrier_hz_; }
    double distance_m() const noexcept { return distance_m_; }
    double noise_psd_w_per_hz() const noexcept { return noise_psd_; }
    double cell_radius_m() const noexcept { return cell_radius_m_; }

    /// Distance beyond the nominal cell edge is allowed but worth a warning.
    bool beyond_cell_edge() const noexcept { return distance_m_ > cell_radius_m_; }

private:
    Power tx_power_ = Power::watts(5.0);
    int bs_antennas_ = 256;
    double carrier_hz_ = 3.7e9;
    double distance_m_ = 100.0;
    double noise_psd_ = 3.9810717055349725e-21;  // -174 dBm/Hz in W/Hz
    double cell_radius_m_ = 100.0;
};

inline constexpr double kCarrier3p7GHz = 3.7e9;
inline constexpr double kCarrier28GHz = 28e9;

enum class BindingConstraint {
    TerminalLimited,  // r_max < r_downlink: the handset is the bottleneck
    ChannelLimited,   // r_downlink < r_max: the channel is the bottleneck
    Tie,
};

const char* to_string(BindingConstraint c) noexcept;

/// Outcome of the min-rule: the effective rate, which side binds, and the
/// rate redundancy left on the other side.
struct AdaptationDecision {
    Rate r_downlink;
    Rate r_max;
    Rate r_phone;
    BindingConstraint binding;
    Rate redundancy;  // |r_downlink - r_max|
};

/// Shannon-capacity downlink rate for the configured link.
Rate downlink_rate(const LinkConfig& link);

/// Linear SNR implied by a link budget: uniform power split across streams,
/// linear array gain, free-space path loss, thermal noise over the bandwidth.
double snr_from_budget(const LinkBudget& budget, const LinkConfig& link);

/// Applies the min-rule against the given rate ceiling. A tie is declared
/// when the relative gap is below 1e-9.
AdaptationDecision adapt(Rate r_max, const LinkConfig& link);

/// SNR in dB at which the downlink rate equals r_max. Throws ExponentOverflow
/// when r_max / (streams * bandwidth) exceeds the safe exponent bound of 1000.
double crossover_snr_db(Rate r_max, double bandwidth_hz, int streams);

}  // namespace rxlimit
