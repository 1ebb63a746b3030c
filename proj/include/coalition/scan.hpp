#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalition/solver.hpp"

namespace coalition {

enum class ScanMode { Exact, Decide };

struct ScanOptions {
    ScanMode mode = ScanMode::Exact;
    std::size_t k = 9;     // target order for Decide
    std::size_t jobs = 0;  // 0 selects default_jobs()
    Budget budget;
    bool timings = true;   // false writes ms = 0 so output is byte-reproducible
};

// One census row. Exact mode fills `value`, decide mode fills `decision`.
struct ScanRecord {
    std::size_t index = 0;
    std::string graph6;
    std::size_t n = 0;
    std::size_t delta = 0;
    ScanMode mode = ScanMode::Exact;
    std::size_t k = 0;  // decide target; serialized inside mode as "decide-<k>"
    std::optional<std::size_t> value;
    std::optional<bool> decision;
    std::optional<std::string> witness;  // 1-based partition text
    std::uint64_t nodes = 0;
    double ms = 0.0;
    std::string status = "ok";  // ok | budget | error
    std::string error;          // diagnostic for status == error; not serialized
};

struct CensusSummary {
    std::size_t total = 0;
    std::size_t ok = 0;
    std::size_t budget = 0;
    std::size_t errors = 0;
    std::map<std::string, std::size_t> histogram;  // result value -> count, ok records only
    std::vector<std::pair<std::size_t, std::string>> hits;
    double wall_ms = 0.0;
};

// Worker count: COALITION_JOBS if set and positive, else hardware concurrency.
std::size_t default_jobs();

std::vector<std::string> read_catalog(std::istream& in);

ScanRecord scan_one(std::size_t index, std::string_view line, const ScanOptions& options);

// Processes every line on a pool of workers and hands records to `sink` in
// input order. Per-line failures become status "error" records. An exception
// thrown by `sink` cancels outstanding work and propagates.
CensusSummary scan_catalog(const std::vector<std::string>& lines, const ScanOptions& options,
                           const std::function<void(const ScanRecord&)>& sink = {});

// A record is a hit when decide(k) is true, or in exact mode when C reaches
// the degree bound.
bool is_hit(const ScanRecord& record);

// JSON Lines row with fields index, graph6, n, delta, mode, result, witness,
// nodes, ms, status in that order.
std::string to_jsonl(const ScanRecord& record);
ScanRecord record_from_json(std::string_view line);

std::string summary_csv(const CensusSummary& summary);

}  // namespace coalition
