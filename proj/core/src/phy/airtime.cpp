#include "loracp/phy/airtime.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace loracp::phy {

double lora_symbol_time_ms(int sf, const LoraPhyParams& params) {
  return 1000.0 * std::pow(2.0, sf) / params.bandwidth_hz;
}

double lora_airtime_ms(int sf, int payload_bytes, const LoraPhyParams& params) {
  if (sf < 7 || sf > 12) {
    throw std::invalid_argument("lora_airtime: sf out of range [7,12]: " +
                                std::to_string(sf));
  }
  if (payload_bytes < 0 || payload_bytes > 255) {
    throw std::invalid_argument("lora_airtime: payload_bytes out of range [0,255]");
  }

  const double t_sym = lora_symbol_time_ms(sf, params);
  const double t_preamble = (params.preamble_symbols + 4.25) * t_sym;

  const int de =
      (params.low_dr_optimize_high_sf && sf >= 11 && params.bandwidth_hz <= 125000.0)
          ? 1
          : 0;
  const int ih = params.explicit_header ? 0 : 1;
  const int crc = params.crc_on ? 1 : 0;
  const int cr = params.coding_rate_denominator - 4;

  const double num = 8.0 * payload_bytes - 4.0 * sf + 28.0 + 16.0 * crc - 20.0 * ih;
  const double den = 4.0 * (sf - 2 * de);
  const double blocks = std::max(std::ceil(num / den), 0.0);
  const double payload_symbols = 8.0 + blocks * (cr + 4);

  return t_preamble + payload_symbols * t_sym;
}

}  // namespace loracp::phy
