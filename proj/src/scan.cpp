#include "coalition/scan.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "coalition/error.hpp"

namespace coalition {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

}  // namespace

std::size_t default_jobs() {
    if (const char* env = std::getenv("COALITION_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<std::string> read_catalog(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

ScanRecord scan_one(std::size_t index, std::string_view line, const ScanOptions& options) {
    ScanRecord rec;
    rec.index = index;
    rec.graph6 = std::string(line);
    rec.mode = options.mode;
    if (options.mode == ScanMode::Decide) rec.k = options.k;
    const auto start = Clock::now();
    try {
        const Graph g = parse_graph6(line);
        rec.n = g.order();
        rec.delta = g.max_degree();
        if (options.mode == ScanMode::Exact) {
            const SolveResult r = coalition_number(g, options.budget);
            rec.nodes = r.stats.nodes;
            if (r.witness) rec.witness = format_partition(*r.witness);
            if (r.status == SolveStatus::Exact) {
                rec.value = r.value;
            } else if (r.status == SolveStatus::BudgetExhausted) {
                rec.status = "budget";
            } else {
                rec.status = "error";
                rec.error = "no coalition partition found";
            }
        } else if (options.k < 1) {
            throw PreconditionError("decide order must be positive");
        } else if (options.k > g.order()) {
            rec.decision = false;
        } else {
            const SearchResult r = exists_partition_of_order(g, options.k, options.budget);
            rec.nodes = r.stats.nodes;
            if (r.outcome == SearchOutcome::BudgetExhausted) {
                rec.status = "budget";
            } else {
                rec.decision = r.outcome == SearchOutcome::Found;
                if (r.witness) rec.witness = format_partition(*r.witness);
            }
        }
    } catch (const std::exception& e) {
        rec.status = "error";
        rec.error = e.what();
        rec.value.reset();
        rec.decision.reset();
        rec.witness.reset();
    }
    rec.ms = options.timings ? round_ms(std::chrono::duration<double, std::milli>(Clock::now() - start).count()) : 0.0;
    return rec;
}

bool is_hit(const ScanRecord& record) {
    if (record.status != "ok") return false;
    if (record.mode == ScanMode::Decide) return record.decision.value_or(false);
    const std::size_t d = record.delta + 3;
    return record.value && *record.value == d * d / 4;
}

CensusSummary scan_catalog(const std::vector<std::string>& lines, const ScanOptions& options,
                           const std::function<void(const ScanRecord&)>& sink) {
    const auto start = Clock::now();
    CensusSummary summary;
    const std::size_t count = lines.size();
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs == 0 ? default_jobs() : options.jobs, count));

    std::vector<std::optional<ScanRecord>> slots(count);
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> cancelled{false};

    auto worker = [&] {
        for (;;) {
            if (cancelled.load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            ScanRecord rec = scan_one(i, lines[i], options);
            {
                std::lock_guard lock(mutex);
                slots[i] = std::move(rec);
            }
            ready.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);

    std::exception_ptr failure;
    for (std::size_t i = 0; i < count; ++i) {
        ScanRecord rec;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return slots[i].has_value(); });
            rec = std::move(*slots[i]);
            slots[i].reset();
        }
        ++summary.total;
        if (rec.status == "ok") {
            ++summary.ok;
            const std::string key = rec.mode == ScanMode::Exact ? std::to_string(rec.value.value_or(0))
                                                                : (rec.decision.value_or(false) ? "true" : "false");
            ++summary.histogram[key];
        } else if (rec.status == "budget") {
            ++summary.budget;
        } else {
            ++summary.errors;
        }
        if (is_hit(rec)) summary.hits.emplace_back(rec.index, rec.graph6);
        if (sink) {
            try {
                sink(rec);
            } catch (...) {
                failure = std::current_exception();
                cancelled = true;
                break;
            }
        }
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    summary.wall_ms = round_ms(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
    if (!options.timings) summary.wall_ms = 0.0;
    return summary;
}

std::string to_jsonl(const ScanRecord& record) {
    Json j;
    j["index"] = record.index;
    j["graph6"] = record.graph6;
    j["n"] = record.n;
    j["delta"] = record.delta;
    j["mode"] = record.mode == ScanMode::Exact ? std::string("exact") : "decide-" + std::to_string(record.k);
    if (record.mode == ScanMode::Exact && record.value) {
        j["result"] = *record.value;
    } else if (record.mode == ScanMode::Decide && record.decision) {
        j["result"] = *record.decision;
    } else {
        j["result"] = nullptr;
    }
    if (record.witness) {
        j["witness"] = *record.witness;
    } else {
        j["witness"] = nullptr;
    }
    j["nodes"] = record.nodes;
    j["ms"] = record.ms;
    j["status"] = record.status;
    return j.dump();
}

ScanRecord record_from_json(std::string_view line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("scan record: ") + e.what());
    }
    try {
        ScanRecord rec;
        rec.index = j.at("index").get<std::size_t>();
        rec.graph6 = j.at("graph6").get<std::string>();
        rec.n = j.at("n").get<std::size_t>();
        rec.delta = j.at("delta").get<std::size_t>();
        const auto mode = j.at("mode").get<std::string>();
        if (mode == "exact") {
            rec.mode = ScanMode::Exact;
            if (!j.at("result").is_null()) rec.value = j.at("result").get<std::size_t>();
        } else if (mode.rfind("decide-", 0) == 0) {
            rec.mode = ScanMode::Decide;
            rec.k = std::stoul(mode.substr(7));
            if (!j.at("result").is_null()) rec.decision = j.at("result").get<bool>();
        } else {
            throw ParseError("scan record: unknown mode " + mode);
        }
        if (!j.at("witness").is_null()) rec.witness = j.at("witness").get<std::string>();
        rec.nodes = j.at("nodes").get<std::uint64_t>();
        rec.ms = j.at("ms").get<double>();
        rec.status = j.at("status").get<std::string>();
        return rec;
    } catch (const std::exception& e) {
        throw ParseError(std::string("scan record: ") + e.what());
    }
}

std::string summary_csv(const CensusSummary& summary) {
    std::ostringstream out;
    out << "section,key,value\n";
    out << "total,graphs," << summary.total << '\n';
    out << "status,ok," << summary.ok << '\n';
    out << "status,budget," << summary.budget << '\n';
    out << "status,error," << summary.errors << '\n';
    for (const auto& [key, count] : summary.histogram) out << "histogram," << key << ',' << count << '\n';
    for (const auto& [index, g6] : summary.hits) out << "hit," << index << ',' << g6 << '\n';
    out << "wall,ms," << summary.wall_ms << '\n';
    return out.str();
}

}  // namespace coalition
