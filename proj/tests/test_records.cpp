#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "chromatlas/canonical.hpp"
#include "chromatlas/graph6.hpp"
#include "chromatlas/records.hpp"
#include "chromatlas/verify.hpp"
#include "oracles.hpp"

using namespace chromatlas;

TEST_SUITE_BEGIN("records");

TEST_CASE("record fields for the paw graph") {
    Graph paw = oracles::make_paw();
    GraphRecord r = compute_record(to_graph6(paw), paw);
    CHECK(r.n == 4);
    CHECK(r.m == 4);
    CHECK(r.q.entries == std::vector<std::uint64_t>{1, 4, 5, 2, 0, 0, 0, 0, 0, 0});
    CHECK(r.girth == 3);
    CHECK(r.t1 == 1);
    CHECK(r.t2 == 0);
    CHECK(r.t3 == 0);
    CHECK(r.degree_gap == 2);
    CHECK(r.flags.in_j);
    CHECK(r.flags.in_l);
    CHECK(r.flags.threshold);
    CHECK_FALSE(r.flags.is_turan);
    CHECK_FALSE(r.flags.chromatically_minimal);  // second-pass field
}

TEST_CASE("turan flag") {
    Graph t63 = turan(6, 3);
    GraphRecord r = compute_record(canonical_graph6(t63), t63);
    CHECK(r.flags.is_turan);
    GraphRecord k4 = compute_record("K4", oracles::make_complete(4));
    CHECK(k4.flags.is_turan);  // T(4,4)
    GraphRecord paw = compute_record("paw", oracles::make_paw());
    CHECK_FALSE(paw.flags.is_turan);
}

TEST_CASE("jsonl round trip") {
    Graph tree = oracles::make_star(4);
    GraphRecord r = compute_record(to_graph6(tree), tree);
    CHECK_FALSE(r.girth.has_value());
    std::string line = record_to_jsonl(r);
    GraphRecord back = record_from_jsonl(line);
    CHECK(back == r);
    CHECK(record_to_jsonl(back) == line);
}

TEST_CASE("graph6 keys containing a backslash survive the JSON trip") {
    Graph g = from_graph6("EC\\w");
    GraphRecord r = compute_record("EC\\w", g);
    GraphRecord back = record_from_jsonl(record_to_jsonl(r));
    CHECK(back.graph6 == "EC\\w");
    CHECK(back == r);
}

TEST_CASE("records file round trip is byte identical") {
    std::vector<GraphRecord> records;
    for (const Graph& g : {oracles::make_paw(), oracles::make_cycle(5), oracles::make_path(6)})
        records.push_back(compute_record(to_graph6(g), g));
    std::string path = "test_records_tmp.jsonl";
    write_records_file(path, records);
    std::vector<GraphRecord> back = read_records_file(path);
    CHECK(back == records);
    write_records_file(path + "2", back);
    std::ifstream a(path), b(path + "2");
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    std::remove(path.c_str());
    std::remove((path + "2").c_str());
}

TEST_CASE("floats survive 17-digit serialization") {
    double value = 0.1234567890123456789;
    std::string s = format_double(value);
    CHECK(std::stod(s) == value);
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("verify scope parsing") {
    VerifyOptions o = parse_verify_scope("n<=6");
    CHECK(o.max_n == 6);
    CHECK(o.suites.empty());

    VerifyOptions c = parse_verify_scope("suites=compression, random=1000, n<=8, seed=42, random-n=8");
    CHECK(c.suites == std::vector<std::string>{"compression"});
    CHECK(c.random_count == 1000);
    CHECK(c.max_n == 8);
    CHECK(c.seed == 42);
    CHECK(c.random_n == 8);

    CHECK_THROWS(parse_verify_scope("bogus=1"));
}

TEST_CASE("corrupted records are caught by the records suite") {
    Graph paw = oracles::make_paw();
    GraphRecord r = compute_record(to_graph6(paw), paw);
    r.m = 99;  // inject corruption
    std::string path = "test_records_corrupt.jsonl";
    write_records_file(path, {r});
    VerifyOptions options;
    options.suites = {"records"};
    options.records_path = path;
    std::ostringstream log;
    VerifyResult result = run_verify(options, log);
    CHECK_FALSE(result.all_passed);
    CHECK(log.str().find(r.graph6) != std::string::npos);  // witness named
    std::remove(path.c_str());
}

TEST_SUITE_END();
