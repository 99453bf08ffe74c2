#include <hypercover/parallel.hh>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hypercover
{
    auto resolve_threads(unsigned requested) -> unsigned
    {
        if (requested != 0)
            return requested;
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto parallel_for(std::size_t count, unsigned threads, const std::function<void (std::size_t)> & fn) -> void
    {
        threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1)));
        if (threads <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto worker = [&] {
            while (! failed.load(std::memory_order_relaxed)) {
                auto i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                }
                catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (! error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        };

        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        pool.clear();

        if (error)
            std::rethrow_exception(error);
    }
}
