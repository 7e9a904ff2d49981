#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "jiffy/buffer.hpp"
#include "jiffy/contract.hpp"
#include "jiffy/metrics.hpp"

namespace jiffy {

/// How the queue disposes of buffer metadata after the slot array is gone.
///
/// Paper: retired records are swept whenever the consumer's head advances
/// past them (boundary = successor position). Frugal, but a producer that
/// loaded tailOfQueue and then got descheduled can still dereference a swept
/// record; on dedicated cores the window is unobservable, on an
/// oversubscribed box it is not.
///
/// Deferred: records are kept until releaseRetiredMetadata() or queue
/// destruction. Slot arrays are still released eagerly, so the memory that
/// matters behaves identically; only the ~48-byte records accumulate.
enum class ReclamationMode { Paper, Deferred };

namespace detail {

/// Consumer-owned list of retired buffer metadata, ordered by position.
/// Records arrive with their slot arrays already released. Retirement is
/// usually in ascending position order; a scan that folds a buffer a
/// stalled producer pinned for a long time can retire below the maximum,
/// which the sorted insert absorbs.
template <typename T>
class GarbageList {
public:
    void retire(Buffer<T>* meta) {
        JIFFY_CONTRACT(meta != nullptr, "retire: null record");
        JIFFY_CONTRACT(meta->slots == nullptr, "retire: slot array still attached");
        auto it = std::lower_bound(records_.begin(), records_.end(), meta,
                                   [](const Buffer<T>* a, const Buffer<T>* b) {
                                       return a->position < b->position;
                                   });
        JIFFY_CONTRACT(it == records_.end() || (*it)->position != meta->position,
                       "retire: duplicate position");
        records_.insert(it, meta);
    }

    /// Releases every record with position < boundary; returns how many.
    std::uint64_t sweep(std::uint64_t boundary_position) {
        std::uint64_t released = 0;
        while (!records_.empty() && records_.front()->position < boundary_position) {
            delete records_.front();
            records_.pop_front();
            ++released;
        }
        return released;
    }

    std::uint64_t releaseAll() { return sweep(UINT64_MAX); }

    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    std::vector<std::uint64_t> positions() const {
        std::vector<std::uint64_t> out;
        out.reserve(records_.size());
        for (auto* r : records_) out.push_back(r->position);
        return out;
    }

    ~GarbageList() { releaseAll(); }

private:
    std::deque<Buffer<T>*> records_;
};

} // namespace detail

/// Recycles slot-array allocations so bursts of buffer turnover skip the
/// allocator. Entries are keyed by capacity; a stale-capacity entry is never
/// handed out. Global mode shares one stack under a lock (producers hit it
/// on the alloc path only, which is rare); PerThread keeps a small
/// thread-local stack per pool instance and needs no synchronization.
template <typename T>
class BufferPool {
public:
    enum class Sharing { PerThread, Global };

    struct Config {
        Sharing sharing = Sharing::PerThread;
        std::size_t limit = 8; // max pooled arrays (per thread in PerThread mode)
    };

    explicit BufferPool(Config cfg = {}, MetricsHandle metrics = nullptr)
        : cfg_(cfg), metrics_(std::move(metrics)) {}

    ~BufferPool() { drain(); }

    BufferPool(const BufferPool&) = delete;
    BufferPool& operator=(const BufferPool&) = delete;

    /// Returns a slot array of exactly `capacity` entries, recycled when one
    /// is pooled, freshly allocated otherwise. Recycled arrays come back
    /// fully reset: all states Empty.
    detail::Slot<T>* acquire(std::uint64_t capacity) {
        if (auto* recycled = takePooled(capacity)) {
            for (std::uint64_t i = 0; i < capacity; ++i)
                recycled[i].state.store(SlotState::Empty, std::memory_order_relaxed);
            if (metrics_) metrics_->pool_hits.fetch_add(1, std::memory_order_relaxed);
            return recycled;
        }
        if (metrics_) metrics_->pool_misses.fetch_add(1, std::memory_order_relaxed);
        return new detail::Slot<T>[capacity];
    }

    /// Stores the array if the pool is below its limit, else releases it to
    /// the environment. The caller guarantees it is unreachable from any
    /// queue chain.
    /// Returns true when pooled, false when released.
    bool release(detail::Slot<T>* array, std::uint64_t capacity) {
        if (cfg_.sharing == Sharing::Global) {
            std::lock_guard<std::mutex> lock(mutex_);
            if (global_.size() < cfg_.limit) {
                global_.push_back(Entry{array, capacity});
                return true;
            }
        } else {
            auto& local = localStack();
            if (local.size() < cfg_.limit) {
                local.push_back(Entry{array, capacity});
                return true;
            }
        }
        delete[] array;
        return false;
    }

    /// Frees every pooled array back to the environment; returns the count.
    /// Per-thread stacks are drained lazily from the threads that own them;
    /// this drains the calling thread's stack and the global one.
    std::uint64_t drain() {
        std::uint64_t n = 0;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            for (auto& e : global_) {
                delete[] e.array;
                ++n;
            }
            global_.clear();
        }
        auto& local = localStack();
        for (auto& e : local) {
            delete[] e.array;
            ++n;
        }
        local.clear();
        return n;
    }

    std::size_t pooledCount() const {
        if (cfg_.sharing == Sharing::Global) {
            std::lock_guard<std::mutex> lock(mutex_);
            return global_.size();
        }
        return localStack().size();
    }

    MetricsHandle metrics() const { return metrics_; }

private:
    struct Entry {
        detail::Slot<T>* array;
        std::uint64_t capacity;
    };

    detail::Slot<T>* takePooled(std::uint64_t capacity) {
        if (cfg_.sharing == Sharing::Global) {
            std::lock_guard<std::mutex> lock(mutex_);
            return takeFrom(global_, capacity);
        }
        return takeFrom(localStack(), capacity);
    }

    static detail::Slot<T>* takeFrom(std::vector<Entry>& stack, std::uint64_t capacity) {
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            if (it->capacity == capacity) {
                detail::Slot<T>* array = it->array;
                stack.erase(std::next(it).base());
                return array;
            }
        }
        return nullptr;
    }

    // One stack per (thread, pool instance). The indirection keeps distinct
    // pools from sharing entries of different element types or lifetimes.
    std::vector<Entry>& localStack() const {
        thread_local std::unordered_map<const void*, std::vector<Entry>> stacks;
        return stacks[this];
    }

    Config cfg_;
    MetricsHandle metrics_;
    mutable std::mutex mutex_;
    std::vector<Entry> global_;
};

} // namespace jiffy
