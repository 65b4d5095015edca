#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "hopcut/exact.hpp"

namespace hopcut {

// Logical work/span accumulator for the fork-join cost model.
//
// Units of work, per call site: one edge relaxation, one adjacency scan step,
// or one machine-word boolean-matrix operation. Metering is counted, not
// wall-clock, so identical inputs produce identical (work, span) at any
// physical thread count. Every fork/join barrier costs barrier_units() span,
// fixed at ceil(log2 n) for the base problem size n.
class CostMeter {
public:
    CostMeter() = default;
    explicit CostMeter(uint64_t problem_size)
        : barrier_(std::max<uint32_t>(1, ceil_log2(std::max<uint64_t>(2, problem_size)))) {}

    uint64_t work() const { return work_; }
    uint64_t span() const { return span_; }
    uint32_t barrier_units() const { return barrier_; }

    // Fresh zeroed meter with the same barrier scale, for sub-tasks.
    CostMeter sub() const {
        CostMeter s;
        s.barrier_ = barrier_;
        return s;
    }

    void add_serial(uint64_t units) {
        work_ += units;
        span_ += units;
    }

    // One synchronous parallel level: `total_work` spread over independent
    // tasks whose longest chain is `max_task_span`, joined by one barrier.
    void add_level(uint64_t total_work, uint64_t max_task_span) {
        work_ += total_work;
        span_ += max_task_span + barrier_;
    }

    // Parallel composition: work adds, span takes the max, plus one barrier.
    void join_parallel(const std::vector<CostMeter>& subs) {
        uint64_t max_span = 0;
        for (const CostMeter& s : subs) {
            work_ += s.work_;
            max_span = std::max(max_span, s.span_);
        }
        span_ += max_span + barrier_;
    }

    // Sequential composition adds both.
    void join_serial(const CostMeter& s) {
        work_ += s.work_;
        span_ += s.span_;
    }

private:
    uint64_t work_ = 0;
    uint64_t span_ = 0;
    uint32_t barrier_ = 1;
};

// Process-wide worker pool. Tasks must be independent (no shared mutable
// state); results are merged by the caller in task-index order, which keeps
// every downstream artifact deterministic. Nested scoped_parallel calls from
// inside a worker run inline; the meter still applies the parallel formula,
// since it models the schedule, not the host threads.
class TaskPool {
public:
    static TaskPool& instance();

    // 1 = fully inline execution. Must be set before first use or between runs.
    void set_threads(unsigned threads);
    unsigned threads() const { return threads_; }

    void run(std::vector<std::function<void()>>& tasks);

    ~TaskPool();

private:
    TaskPool() = default;
    void ensure_started();
    void worker_loop();

    std::mutex mu_;
    std::condition_variable cv_work_, cv_done_;
    std::vector<std::thread> workers_;
    std::vector<std::function<void()>>* batch_ = nullptr;
    size_t next_ = 0;
    size_t pending_ = 0;
    unsigned threads_ = 1;
    bool started_ = false;
    bool stop_ = false;
};

// Runs fn(i, sub_meter) for i in [0, n_tasks) as independent tasks and folds
// the sub-meters into `m` with the parallel composition rule.
void scoped_parallel(CostMeter& m, size_t n_tasks,
                     const std::function<void(size_t, CostMeter&)>& fn);

} // namespace hopcut
