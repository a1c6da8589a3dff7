#include "nhq/parallel.hpp"

#include <cstdlib>
#include <string>

namespace nhq {

std::size_t worker_count() noexcept {
    static const std::size_t count = [] {
        if (const char* env = std::getenv("NHQ_THREADS")) {
            try {
                const long v = std::stol(env);
                if (v >= 1) return static_cast<std::size_t>(v);
            } catch (...) {
            }
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return static_cast<std::size_t>(hw == 0 ? 1 : hw);
    }();
    return count;
}

}  // namespace nhq
