#pragma once

#include <cstdint>

namespace jiffy {

enum class SlotState : std::uint8_t { Empty = 0, Set = 1, Handled = 2 };

/// Points inside the queue operations where an instrumented build can pause
/// or observe. Each sits immediately before the shared-memory action it
/// names, so a test scheduler that owns these points controls every
/// cross-thread interleaving that matters.
enum class Hook : unsigned {
    EnqAfterFaa = 0,
    EnqBeforeAppendCas,
    EnqRetractStep,
    EnqBeforePayloadWrite,
    EnqBeforeSetStore,
    EnqBeforePrealloc,
    DeqEnter,
    DeqSkipStep,
    DeqBeforeEmptyCheck,
    DeqScanStep,
    DeqRescanStep,
    DeqBeforeHandledStore,
    HookCount_
};

inline constexpr unsigned kHookCount = static_cast<unsigned>(Hook::HookCount_);

/// Loop/iteration counts for one enqueue call, used by wait-freedom tests.
struct EnqueueStats {
    std::uint64_t location = 0;
    std::uint64_t append_loop_iters = 0;   // forward loop: allocate/advance until owning buffer exists
    std::uint64_t retract_steps = 0;       // backward loop over prev links
    std::uint64_t buffers_appended = 0;    // successful next-CAS appends by this call
    std::uint64_t tail_pos_entry = 0;      // position of tailOfQueue when the loop started
    std::uint64_t tail_pos_exit = 0;       // position of the buffer the element landed in / tail after
};

/// Step counts for one dequeue call.
struct DequeueStats {
    std::uint64_t skip_steps = 0;
    std::uint64_t scan_steps = 0;
    std::uint64_t rescan_steps = 0;
    std::uint64_t rescan_restarts = 0;
    std::uint64_t folds = 0;
    bool returned_empty = false;
};

/// Zero-cost default: every hook inlines to nothing, so the release queue
/// carries no instrumentation overhead.
struct DefaultTraits {
    void pause(Hook, std::uint64_t /*detail*/) {}
    void onSlotState(std::uint64_t /*slot*/, SlotState /*from*/, SlotState /*to*/,
                     bool /*by_consumer*/) {}
    void onEnqueueStats(const EnqueueStats&) {}
    void onDequeueStats(const DequeueStats&) {}
};

} // namespace jiffy
