#pragma once

namespace concord {

/// Execution mode for the data-parallel kernels. Serial is the reference
/// implementation; Parallel shards work across OpenMP threads. The two modes
/// produce bit-identical results by construction (fixed block sharding).
enum class Exec { Serial, Parallel };

}  // namespace concord
