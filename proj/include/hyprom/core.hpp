#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

namespace hyprom {

using Field = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-admissible state (negative density/pressure) met during flux evaluation.
class NonPhysicalStateError : public Error {
public:
    NonPhysicalStateError(const std::string& what, int dof, int component, int step = -1)
        : Error(what), dof(dof), component(component), step(step) {}
    int dof;
    int component;
    int step;
};

#define HYPROM_REQUIRE(cond, msg)                                   \
    do {                                                            \
        if (!(cond)) {                                              \
            std::ostringstream oss_;                                \
            oss_ << msg;                                            \
            throw ::hyprom::Error(oss_.str());                      \
        }                                                           \
    } while (0)

namespace log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

inline Level threshold() {
    static Level lvl = [] {
        const char* env = std::getenv("HYPROM_LOG");
        if (!env) return Level::warn;
        std::string s(env);
        if (s == "error") return Level::error;
        if (s == "warn") return Level::warn;
        if (s == "info") return Level::info;
        if (s == "debug") return Level::debug;
        return Level::warn;
    }();
    return lvl;
}

inline void emit(Level lvl, const std::string& msg) {
    if (lvl > threshold()) return;
    static std::mutex mtx;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::lock_guard<std::mutex> lock(mtx);
    std::cerr << "[hyprom:" << names[static_cast<int>(lvl)] << "] " << msg << "\n";
}

inline void error(const std::string& m) { emit(Level::error, m); }
inline void warn(const std::string& m) { emit(Level::warn, m); }
inline void info(const std::string& m) { emit(Level::info, m); }
inline void debug(const std::string& m) { emit(Level::debug, m); }

}  // namespace log

namespace instrument {

/// Per-thread count of physical flux evaluations (one per vector-valued f(u) call).
inline uint64_t& flux_evals() {
    thread_local uint64_t count = 0;
    return count;
}

struct FluxEvalScope {
    uint64_t start;
    FluxEvalScope() : start(flux_evals()) {}
    uint64_t elapsed() const { return flux_evals() - start; }
};

}  // namespace instrument

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Chunked parallel loop; fn(i) must only write to slot i of preallocated output.
template <typename Fn>
void parallel_for(int n, int workers, Fn&& fn) {
    workers = resolve_workers(workers);
    if (n <= 0) return;
    if (workers <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::mutex err_mtx;
    std::exception_ptr first_error;
    int n_threads = std::min(workers, n);
    pool.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mtx);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hyprom
