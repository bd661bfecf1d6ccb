#include <qwave/parallel.hpp>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace qwave {

unsigned worker_count_from_env()
{
    if (const char* env = std::getenv("QWAVE_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n > 0)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body)
{
    if (n == 0)
        return;
    const std::size_t count = std::clamp<std::size_t>(workers, 1, n);
    if (count == 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    struct failure {
        std::size_t index = 0;
        std::exception_ptr ex;
    };
    std::vector<failure> failures(count);
    {
        std::vector<std::jthread> pool;
        pool.reserve(count);
        const std::size_t chunk = (n + count - 1) / count;
        for (std::size_t w = 0; w < count; ++w) {
            pool.emplace_back([&, w] {
                const std::size_t begin = w * chunk;
                const std::size_t end = std::min(n, begin + chunk);
                for (std::size_t i = begin; i < end; ++i) {
                    try {
                        body(i);
                    } catch (...) {
                        failures[w] = {i, std::current_exception()};
                        return;
                    }
                }
            });
        }
    }
    // chunks are ordered, so the first recorded failure has the lowest index
    for (const auto& f : failures)
        if (f.ex)
            std::rethrow_exception(f.ex);
}

} // namespace qwave
