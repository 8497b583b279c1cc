#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace loracp {

using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr NodeId kBroadcast = kNoNode - 1;

/// Simulated time in integer milliseconds since run start. Sub-millisecond
/// effects (clock offsets, timestamping noise) are carried as real-valued
/// millisecond offsets next to tick time, never inside it.
struct SimTime {
  std::int64_t ticks = 0;  // ms

  static constexpr SimTime from_ms(std::int64_t ms) { return SimTime{ms}; }
  static constexpr SimTime from_s(double s) {
    return SimTime{static_cast<std::int64_t>(s * 1000.0 + 0.5)};
  }

  constexpr double seconds() const { return static_cast<double>(ticks) / 1000.0; }

  constexpr SimTime operator+(std::int64_t ms) const { return SimTime{ticks + ms}; }
  constexpr SimTime operator-(std::int64_t ms) const { return SimTime{ticks - ms}; }
  constexpr std::int64_t operator-(SimTime rhs) const { return ticks - rhs.ticks; }
  constexpr auto operator<=>(const SimTime&) const = default;
};

enum class ChannelRole { kTdma, kUrgent };

/// One LoRa channel. Spreading factors are orthogonal, so each SF is its own
/// channel; SF6 is excluded by convention.
struct Channel {
  int sf = 7;  // in [7, 12]
  ChannelRole role = ChannelRole::kTdma;
};

enum class FrameKind { kData, kBeacon, kReport, kHeartbeat, kCommand, kNak };

const char* to_string(FrameKind kind);

/// A single reported link estimate: the cost of the directed data-plane edge
/// from the reporting node to `neighbor`.
struct ReportEntry {
  NodeId neighbor = kNoNode;
  double etx = 1.0;
};

struct DataPayload {
  NodeId origin = kNoNode;
  std::uint32_t seq = 0;
  int hops = 0;
};

struct BeaconPayload {
  double retx = 0.0;  // advertised route cost; +inf when the sender has no route
};

struct ReportPayload {
  std::vector<ReportEntry> links;
};

struct CommandPayload {
  NodeId target = kNoNode;
  NodeId new_parent = kNoNode;  // kNoNode means "detach" (no route exists)
};

struct NakPayload {
  std::vector<std::uint32_t> missing;  // counters to retransmit
};

using FramePayload = std::variant<std::monostate, DataPayload, BeaconPayload,
                                  ReportPayload, CommandPayload, NakPayload>;

/// One transmission unit, on either plane. Frames are semantic records; only
/// payload_bytes feeds the airtime and slot-sizing math, there is no
/// bit-level encoding.
struct Frame {
  NodeId src = kNoNode;
  NodeId dst = kNoNode;  // kBroadcast for data-plane beacons only
  FrameKind kind = FrameKind::kData;
  int payload_bytes = 0;
  std::uint32_t counter = 0;  // per (src, direction), consecutive at the sender
  double piggyback_t0_ms = 0.0;             // sender clock at TX start (uplink)
  std::optional<double> piggyback_delta_ms; // clock correction (downlink)
  FramePayload payload;
};

enum class Protocol { kCtp, kCtpScdp };

const char* to_string(Protocol p);

}  // namespace loracp
