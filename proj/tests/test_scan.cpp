#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "coalition/error.hpp"
#include "coalition/scan.hpp"
#include "support.hpp"

using namespace coalition;
using namespace coalition::testing;

namespace {

std::vector<std::string> small_lines() {
    std::vector<std::string> lines;
    for (const char* name : {"cubic_06.g6", "cubic_08.g6", "cubic_10.g6"})
        for (const auto& l : catalog_lines(name)) lines.push_back(l);
    return lines;
}

std::string run_jsonl(const std::vector<std::string>& lines, ScanOptions options, CensusSummary* summary = nullptr) {
    std::string out;
    const auto s = scan_catalog(lines, options, [&](const ScanRecord& r) { out += to_jsonl(r) + "\n"; });
    if (summary) *summary = s;
    return out;
}

}  // namespace

TEST_CASE("read_catalog strips carriage returns") {
    std::istringstream in("C~\r\nCl\n");
    CHECK(read_catalog(in) == std::vector<std::string>{"C~", "Cl"});
}

TEST_CASE("exact scan of the order-6 catalog") {
    ScanOptions options;
    options.jobs = 2;
    std::vector<ScanRecord> records;
    const auto summary = scan_catalog(catalog_lines("cubic_06.g6"), options,
                                      [&](const ScanRecord& r) { records.push_back(r); });
    REQUIRE(records.size() == 2);
    for (const auto& r : records) {
        CHECK(r.status == "ok");
        CHECK(r.n == 6);
        CHECK(r.delta == 3);
        REQUIRE(r.value.has_value());
        CHECK(*r.value >= 6);
        CHECK(*r.value <= 8);
    }
    // K3,3 is the triangle-free one of the two
    std::size_t triangle_free = 0;
    for (const auto& r : records) {
        const Graph g = parse_graph6(r.graph6);
        bool triangle = false;
        for (const auto& [u, v] : g.edges()) triangle = triangle || g.adjacency(u).intersects(g.adjacency(v));
        if (!triangle) {
            ++triangle_free;
            CHECK(r.value == 6);
        }
    }
    CHECK(triangle_free == 1);
    CHECK(summary.total == 2);
    CHECK(summary.ok == 2);
    CHECK(summary.hits.empty());
}

TEST_CASE("records arrive in input order and are independent of worker count") {
    const auto lines = small_lines();
    ScanOptions options;
    options.timings = false;
    options.jobs = 1;
    CensusSummary one;
    const std::string serial = run_jsonl(lines, options, &one);
    options.jobs = 4;
    CensusSummary four;
    const std::string parallel = run_jsonl(lines, options, &four);
    CHECK(serial == parallel);
    CHECK(one.histogram == four.histogram);

    std::istringstream in(serial);
    std::string line;
    std::size_t expected = 0;
    while (std::getline(in, line)) CHECK(record_from_json(line).index == expected++);
    CHECK(expected == lines.size());
}

TEST_CASE("jsonl round trip re-verifies witnesses") {
    ScanOptions options;
    options.mode = ScanMode::Decide;
    options.k = 7;
    options.jobs = 2;
    std::istringstream in(run_jsonl(small_lines(), options));
    std::string line;
    std::size_t witnesses = 0;
    while (std::getline(in, line)) {
        const ScanRecord r = record_from_json(line);
        CHECK(to_jsonl(r) == line);
        CHECK(r.mode == ScanMode::Decide);
        CHECK(r.k == 7);
        if (r.witness) {
            const Graph g = parse_graph6(r.graph6);
            const auto v = verify_partition(g, parse_partition(*r.witness, g.order()));
            CHECK(v.ok());
            CHECK(v.certificate->order() == 7);
            ++witnesses;
        }
    }
    CHECK(witnesses > 0);
}

TEST_CASE("field order of a record") {
    ScanRecord r;
    r.index = 3;
    r.graph6 = "C~";
    r.n = 4;
    r.delta = 3;
    r.mode = ScanMode::Decide;
    r.k = 9;
    r.decision = false;
    CHECK(to_jsonl(r) ==
          R"({"index":3,"graph6":"C~","n":4,"delta":3,"mode":"decide-9","result":false,"witness":null,"nodes":0,"ms":0.0,"status":"ok"})");
    CHECK_THROWS_AS(record_from_json("{"), ParseError);
    CHECK_THROWS_AS(record_from_json(R"({"index":0})"), ParseError);
}

TEST_CASE("summary conservation and error records") {
    std::vector<std::string> lines = catalog_lines("cubic_08.g6");
    lines.insert(lines.begin() + 2, "not graph6");
    lines.push_back("");
    ScanOptions options;
    options.jobs = 3;
    std::vector<ScanRecord> records;
    const auto summary = scan_catalog(lines, options, [&](const ScanRecord& r) { records.push_back(r); });
    CHECK(summary.total == lines.size());
    CHECK(summary.errors == 2);
    CHECK(records[2].status == "error");
    CHECK_FALSE(records[2].error.empty());
    CHECK(records.back().status == "error");
    const std::size_t histogram_total =
        std::accumulate(summary.histogram.begin(), summary.histogram.end(), std::size_t{0},
                        [](std::size_t acc, const auto& kv) { return acc + kv.second; });
    CHECK(histogram_total == summary.ok);
    CHECK(summary.ok + summary.budget + summary.errors == summary.total);

    const std::string csv = summary_csv(summary);
    CHECK(csv.rfind("section,key,value\ntotal,graphs,7\n", 0) == 0);
    CHECK(csv.find("status,error,2\n") != std::string::npos);
}

TEST_CASE("decide larger than the order is false") {
    ScanOptions options;
    options.mode = ScanMode::Decide;
    options.k = 9;
    const auto r = scan_one(0, "C~", options);
    CHECK(r.status == "ok");
    CHECK(r.decision == false);
    CHECK_FALSE(is_hit(r));
}

TEST_CASE("exact hits reach the degree bound") {
    ScanRecord r;
    r.delta = 3;
    r.value = 9;
    CHECK(is_hit(r));
    r.value = 8;
    CHECK_FALSE(is_hit(r));
    r.value = 9;
    r.status = "budget";
    CHECK_FALSE(is_hit(r));
}

TEST_CASE("budget exhaustion is a distinct status") {
    ScanOptions options;
    options.mode = ScanMode::Decide;
    options.budget.max_nodes = 1;
    const auto r = scan_one(0, catalog_lines("cubic_16.g6").front(), options);
    CHECK(r.status == "budget");
    CHECK_FALSE(r.decision.has_value());
    CHECK_FALSE(is_hit(r));
}

TEST_CASE("empty input gives an empty summary") {
    const auto summary = scan_catalog({}, ScanOptions{});
    CHECK(summary.total == 0);
    CHECK(summary.histogram.empty());
    CHECK(summary.hits.empty());
}

TEST_CASE("a failing sink stops the scan") {
    ScanOptions options;
    options.jobs = 2;
    std::size_t calls = 0;
    CHECK_THROWS_AS(scan_catalog(small_lines(), options,
                                 [&](const ScanRecord&) {
                                     if (++calls == 3) throw std::runtime_error("disk full");
                                 }),
                    std::runtime_error);
    CHECK(calls == 3);
}

TEST_CASE("COALITION_JOBS sets the default worker count") {
    setenv("COALITION_JOBS", "3", 1);
    CHECK(default_jobs() == 3);
    setenv("COALITION_JOBS", "zero", 1);
    CHECK(default_jobs() >= 1);
    unsetenv("COALITION_JOBS");
}
