#pragma once
// Pass/fail records shared by the verification suites and the CLI report.

#include <string>
#include <vector>

namespace qaffine {

struct CheckResult {
    std::string id;
    bool ok = true;
    std::string detail;
    long count = 0;
};

// Accumulates sub-checks under one id; keeps the first few failure messages.
class CheckSink {
public:
    explicit CheckSink(std::string id) { r_.id = std::move(id); }
    void expect(bool cond, const std::string& what) {
        ++count_;
        if (cond) return;
        if (r_.ok) r_.detail.clear();
        r_.ok = false;
        if (++fails_ <= 3) r_.detail += (r_.detail.empty() ? "" : "; ") + what;
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
    const std::string& notes() const { return notes_; }
    long count() const { return count_; }
    CheckResult done() const {
        CheckResult r = r_;
        r.count = count_;
        if (r.ok) r.detail = std::to_string(count_) + " checks" + (notes_.empty() ? "" : "; " + notes_);
        else if (fails_ > 3) r.detail += "; ... " + std::to_string(fails_) + " failures";
        return r;
    }

private:
    CheckResult r_;
    long count_ = 0, fails_ = 0;
    std::string notes_;
};

// Folds several records into one under a new id.
inline CheckResult merge_results(const std::string& id, const std::vector<CheckResult>& parts) {
    CheckResult out{id, true, "", 0};
    std::string fails;
    int shown = 0;
    for (const auto& p : parts) {
        out.count += p.count;
        if (p.ok) continue;
        out.ok = false;
        if (shown++ < 3) fails += (fails.empty() ? "" : "; ") + p.id + ": " + p.detail;
    }
    out.detail = out.ok ? std::to_string(out.count) + " checks" : fails;
    return out;
}

}  // namespace qaffine
