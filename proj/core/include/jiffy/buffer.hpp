#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <type_traits>

#include "jiffy/traits.hpp"

namespace jiffy::detail {

/// One queue cell. The payload is published by the producer's plain write
/// followed by the release-store of Set; the consumer's acquire-load of Set
/// is the other half of that edge. A default-constructed payload sits in
/// Empty slots and is never handed out.
template <typename T>
struct Slot {
    T payload{};
    std::atomic<SlotState> state{SlotState::Empty};
};

/// Fixed-capacity segment of the chain. `next` is CAS-appended by producers.
/// `prev` is written at construction and rewired by the consumer when a
/// middle buffer is folded out, while producers may be retracting through
/// it, hence atomic. `head` and the slot array contents behind `head` are
/// touched only by the single consumer.
template <typename T>
struct Buffer {
    Slot<T>* slots = nullptr; // released early on fold; metadata outlives it
    std::atomic<Buffer*> next{nullptr};
    std::atomic<Buffer*> prev{nullptr};
    std::uint64_t position = 1; // ordinal in the chain, >= 1
    std::uint64_t head = 0;     // first unread slot index, consumer-local

    Buffer(Slot<T>* array, std::uint64_t pos, Buffer* previous)
        : slots(array), prev(previous), position(pos) {}

    Buffer(const Buffer&) = delete;
    Buffer& operator=(const Buffer&) = delete;
};

template <typename T>
std::uint64_t firstGlobalIndex(const Buffer<T>& b, std::uint64_t capacity) {
    return capacity * (b.position - 1);
}

} // namespace jiffy::detail
