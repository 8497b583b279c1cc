#pragma once

namespace loracp::phy {

/// Chirp-spread-spectrum modulation parameters (SX127x-class radio).
struct LoraPhyParams {
  double bandwidth_hz = 125000.0;  // 125k / 250k / 500k
  int coding_rate_denominator = 5; // 4/5 .. 4/8; CR = denominator - 4
  int preamble_symbols = 8;
  bool explicit_header = true;
  bool crc_on = true;
  bool low_dr_optimize_high_sf = true;  // enables DE for SF11/SF12 at 125 kHz
};

/// Symbol duration 2^sf / bandwidth, in milliseconds.
double lora_symbol_time_ms(int sf, const LoraPhyParams& params);

/// Time on air for a frame with `payload_bytes` of payload at spreading
/// factor `sf`, in milliseconds: preamble time plus the symbol-aligned
/// payload block. Strictly increasing in SF; piecewise constant (steps) in
/// payload size within a symbol block.
///
/// Throws std::invalid_argument for sf outside [7, 12] or payload outside
/// [0, 255].
double lora_airtime_ms(int sf, int payload_bytes,
                       const LoraPhyParams& params = LoraPhyParams{});

}  // namespace loracp::phy
