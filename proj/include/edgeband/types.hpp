#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

namespace edgeband {

// Channel and device constants for one communication cycle.
// Units: Hz, bits/s/Hz, frames/s, parameters/frame, seconds, parameters,
// bits/parameter. All products in the rate constraints come out in bits.
struct SystemParams {
    double bandwidth_hz = 0.0;         // B
    double uplink_efficiency = 0.0;    // S_u, bits/s/Hz
    double downlink_efficiency = 0.0;  // S_d, bits/s/Hz
    double frame_rate = 0.0;           // N, frames/s
    double frame_params = 0.0;         // F, parameters per uploaded frame
    double total_time_s = 0.0;         // T_total, seconds per cycle
    double model_params = 0.0;         // M_max, parameters in the full model
    double bits_per_param = 0.0;       // b, integer >= 1

    // Largest parameter count the downlink can deliver in a full cycle.
    double downlink_cap_params() const {
        return total_time_s * bandwidth_hz * downlink_efficiency / bits_per_param;
    }

    // Upper end of the transmitted-parameter domain.
    double domain_hi() const {
        return std::min(model_params, downlink_cap_params());
    }
};

// Thrown when the transmitted-parameter domain collapses (domain_hi <= 0).
struct DegenerateDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a grid request exceeds the configured evaluation cap.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed instance files (missing keys, unknown families, ...).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation requires a validated instance and validation
// failed; carries the rendered validation report.
struct InvalidInstance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace edgeband
