#include "hopcut/parexec.hpp"

namespace hopcut {

namespace {
thread_local bool t_in_worker = false;
}

TaskPool& TaskPool::instance() {
    static TaskPool pool;
    return pool;
}

void TaskPool::set_threads(unsigned threads) {
    std::unique_lock lk(mu_);
    if (threads == 0) threads = 1;
    if (started_ && threads_ != threads) {
        // Tear down and restart with the new size.
        stop_ = true;
        cv_work_.notify_all();
        lk.unlock();
        for (auto& w : workers_) w.join();
        lk.lock();
        workers_.clear();
        started_ = false;
        stop_ = false;
    }
    threads_ = threads;
}

void TaskPool::ensure_started() {
    if (started_ || threads_ <= 1) return;
    started_ = true;
    for (unsigned i = 0; i + 1 < threads_; ++i)
        workers_.emplace_back([this] { worker_loop(); });
}

void TaskPool::worker_loop() {
    t_in_worker = true;
    std::unique_lock lk(mu_);
    while (true) {
        cv_work_.wait(lk, [this] { return stop_ || (batch_ && next_ < batch_->size()); });
        if (stop_) return;
        while (batch_ && next_ < batch_->size()) {
            size_t i = next_++;
            auto* b = batch_;
            lk.unlock();
            (*b)[i]();
            lk.lock();
            if (--pending_ == 0) cv_done_.notify_all();
        }
    }
}

void TaskPool::run(std::vector<std::function<void()>>& tasks) {
    if (tasks.empty()) return;
    if (threads_ <= 1 || t_in_worker || tasks.size() == 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::unique_lock lk(mu_);
    ensure_started();
    if (batch_ != nullptr) {
        // A batch is already in flight from another caller thread; run inline.
        lk.unlock();
        for (auto& t : tasks) t();
        return;
    }
    batch_ = &tasks;
    next_ = 0;
    pending_ = tasks.size();
    cv_work_.notify_all();
    // The caller participates until its batch drains.
    while (next_ < tasks.size()) {
        size_t i = next_++;
        lk.unlock();
        tasks[i]();
        lk.lock();
        if (--pending_ == 0) cv_done_.notify_all();
    }
    cv_done_.wait(lk, [this] { return pending_ == 0; });
    batch_ = nullptr;
}

TaskPool::~TaskPool() {
    {
        std::unique_lock lk(mu_);
        stop_ = true;
    }
    cv_work_.notify_all();
    for (auto& w : workers_) w.join();
}

void scoped_parallel(CostMeter& m, size_t n_tasks,
                     const std::function<void(size_t, CostMeter&)>& fn) {
    if (n_tasks == 0) return;
    std::vector<CostMeter> subs(n_tasks, m.sub());
    std::vector<std::exception_ptr> errors(n_tasks);
    std::vector<std::function<void()>> tasks;
    tasks.reserve(n_tasks);
    for (size_t i = 0; i < n_tasks; ++i)
        tasks.emplace_back([&, i] {
            try {
                fn(i, subs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    TaskPool::instance().run(tasks);
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    m.join_parallel(subs);
}

} // namespace hopcut
