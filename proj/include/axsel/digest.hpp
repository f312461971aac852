#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace axsel {

/// 64-bit FNV-1a, used for cache keys only.
class Fnv1a {
public:
    void update(std::span<const unsigned char> bytes) {
        for (unsigned char b : bytes) {
            state_ ^= b;
            state_ *= 0x100000001b3ULL;
        }
    }
    void update(std::string_view text) {
        update({reinterpret_cast<const unsigned char*>(text.data()), text.size()});
        update_separator();
    }
    template <typename T>
    void update_pod(const T& value) {
        update({reinterpret_cast<const unsigned char*>(&value), sizeof(T)});
    }
    std::uint64_t value() const noexcept { return state_; }
    std::string hex() const;

private:
    void update_separator() {
        const unsigned char sep = 0xff;
        update({&sep, 1});
    }

    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace axsel
