#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

namespace jiffy {

/// Plain snapshot of the queue's counters at one instant.
///
/// `buffers_allocated` / `buffers_freed` count slot-array allocations and
/// releases (the memory that dominates the footprint). A folded buffer whose
/// array is gone but whose metadata record is still parked on the garbage
/// list counts as freed here; the record itself shows up in `garbage_len`.
struct Metrics {
    std::uint64_t buffers_allocated = 0;
    std::uint64_t buffers_freed = 0;
    std::uint64_t folds_performed = 0;
    std::uint64_t cas_attempts = 0;
    std::uint64_t cas_failures = 0;
    std::uint64_t faa_count = 0;
    std::uint64_t dequeue_rmw_count = 0;
    std::uint64_t dequeue_scan_restarts = 0;
    std::uint64_t peak_live_buffers = 0;
    std::uint64_t garbage_len = 0;
    std::uint64_t garbage_retired = 0;
    std::uint64_t garbage_released = 0;
    std::uint64_t pool_hits = 0;
    std::uint64_t pool_misses = 0;

    std::uint64_t live_buffers() const { return buffers_allocated - buffers_freed; }
};

/// Shared mutable counter block. Producers bump their counters with
/// fetch_add; counters owned by the single consumer are advanced with plain
/// load+store so the dequeue path never executes an atomic read-modify-write.
/// Held by shared_ptr so snapshots stay meaningful after queue destruction
/// (the destructor folds its final frees in here) and so a BufferPool can
/// account fresh allocations against the same block.
class MetricsState {
public:
    // producer-side (and pool-side), RMW-updated
    std::atomic<std::uint64_t> buffers_allocated{0};
    std::atomic<std::uint64_t> buffers_freed_shared{0};
    std::atomic<std::uint64_t> cas_attempts{0};
    std::atomic<std::uint64_t> cas_failures{0};
    std::atomic<std::uint64_t> peak_live_buffers{0};
    std::atomic<std::uint64_t> pool_hits{0};
    std::atomic<std::uint64_t> pool_misses{0};

    // consumer-side, single-writer (store-only updates)
    std::atomic<std::uint64_t> buffers_freed_consumer{0};
    std::atomic<std::uint64_t> folds_performed{0};
    std::atomic<std::uint64_t> dequeue_scan_restarts{0};
    std::atomic<std::uint64_t> dequeue_rmw_count{0};
    std::atomic<std::uint64_t> garbage_len{0};
    std::atomic<std::uint64_t> garbage_retired{0};
    std::atomic<std::uint64_t> garbage_released{0};

    // mirror of the queue's tail counter, refreshed on snapshot and at
    // destruction so post-mortem snapshots still carry it
    std::atomic<std::uint64_t> faa_total{0};

    void onArrayAllocated() {
        const auto allocated = buffers_allocated.fetch_add(1, std::memory_order_relaxed) + 1;
        const auto freed = freedTotal();
        const auto live = allocated > freed ? allocated - freed : 0;
        auto peak = peak_live_buffers.load(std::memory_order_relaxed);
        while (live > peak &&
               !peak_live_buffers.compare_exchange_weak(peak, live, std::memory_order_relaxed)) {
        }
    }

    void onArrayFreedByProducer() { buffers_freed_shared.fetch_add(1, std::memory_order_relaxed); }

    // single-writer increment helpers; no fetch_add on purpose
    static void bumpSingleWriter(std::atomic<std::uint64_t>& counter) {
        counter.store(counter.load(std::memory_order_relaxed) + 1, std::memory_order_relaxed);
    }
    static void dropSingleWriter(std::atomic<std::uint64_t>& counter) {
        counter.store(counter.load(std::memory_order_relaxed) - 1, std::memory_order_relaxed);
    }

    std::uint64_t freedTotal() const {
        return buffers_freed_shared.load(std::memory_order_relaxed) +
               buffers_freed_consumer.load(std::memory_order_relaxed);
    }

    Metrics snapshot() const {
        Metrics m;
        m.buffers_allocated = buffers_allocated.load(std::memory_order_relaxed);
        m.buffers_freed = freedTotal();
        m.folds_performed = folds_performed.load(std::memory_order_relaxed);
        m.cas_attempts = cas_attempts.load(std::memory_order_relaxed);
        m.cas_failures = cas_failures.load(std::memory_order_relaxed);
        m.faa_count = faa_total.load(std::memory_order_relaxed);
        m.dequeue_rmw_count = dequeue_rmw_count.load(std::memory_order_relaxed);
        m.dequeue_scan_restarts = dequeue_scan_restarts.load(std::memory_order_relaxed);
        m.peak_live_buffers = peak_live_buffers.load(std::memory_order_relaxed);
        m.garbage_len = garbage_len.load(std::memory_order_relaxed);
        m.garbage_retired = garbage_retired.load(std::memory_order_relaxed);
        m.garbage_released = garbage_released.load(std::memory_order_relaxed);
        m.pool_hits = pool_hits.load(std::memory_order_relaxed);
        m.pool_misses = pool_misses.load(std::memory_order_relaxed);
        return m;
    }
};

using MetricsHandle = std::shared_ptr<MetricsState>;

} // namespace jiffy
