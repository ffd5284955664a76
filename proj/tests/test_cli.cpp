#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "m0n/cache.hpp"
#include "m0n/cli.hpp"
#include "m0n/oracle.hpp"
#include "m0n/serialize.hpp"
#include "support.hpp"

using namespace m0n;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("m0n-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

ReductionTable table_for(int n, int d)
{
    Reducer r(n);
    for (const auto& m : kernel_reduced_monomials(n, d))
        r.normal_form(m);
    ReductionTable t;
    for (auto& [m, p] : r.memo_snapshot())
        if (m.degree() == d)
            t.emplace_back(m, p);
    return t;
}

CacheKey key_for(int n, int d, OrderConvention c)
{
    return CacheKey{"reduction", n, d, relation_set_hash(generate_relations(n, d)), c};
}

}  // namespace

TEST_CASE("golden outputs")
{
    const fs::path g = M0N_GOLDEN_DIR;
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"basis", "--n", "5", "--degree", "1"}, "basis_n5_d1.txt"},
        {{"basis", "--n", "6", "--format", "json"}, "basis_n6.json"},
        {{"dual", "--n", "6", "--degree", "1"}, "dual_n6_d1.txt"},
        {{"pair", "--n", "5", "--degree", "1"}, "pair_n5_d1.txt"},
        {{"pair", "--n", "6", "--degree", "1", "--format", "csv"}, "pair_n6_d1.csv"},
        {{"relations", "--n", "5"}, "relations_n5.txt"},
        {{"rank", "--n", "8"}, "rank_n8.txt"},
        {{"explain", "--n", "20", "--expr", "a11*D{12,13,18}*D{14,15,19}*D{16,17,20}"}, "explain_n20_v2.txt"},
        {{"reduce", "--n", "6", "--expr", "(D{1,2,3,4}+D{2,3,4})^2", "--format", "json"}, "reduce_n6.json"},
    };
    for (const auto& [args, file] : cases) {
        const Run r = run(args);
        CHECK_MESSAGE(r.code == 0, file);
        CHECK_MESSAGE(r.out == slurp(g / file), file);
    }
}

TEST_CASE("command examples")
{
    const Run basis = run({"basis", "--n", "5", "--degree", "1", "--format", "json"});
    const Json b = Json::parse(basis.out);
    CHECK(b["degrees"][0]["count"] == 5);

    const Run csv = run({"pair", "--n", "6", "--degree", "1", "--format", "csv"});
    REQUIRE(csv.code == 0);
    const CsvMatrix m = parse_csv_matrix(csv.out);
    REQUIRE(m.rows.size() == 16);
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) {
            if (i != j)
                REQUIRE(m.rows[i][j] == 0);
            else
                (m.rows[i][i] == 1 ? plus : minus) += 1;
        }
    CHECK(plus == 6);
    CHECK(minus == 10);

    CHECK(run({"reduce", "--n", "6", "--expr", "D{1,2,3,4}^3"}).out == "a1*a2*a3\n");
    CHECK(run({"integral", "--n", "5", "--expr", "D{1,2,3}^2"}).out == "-1\n");
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"basis"}).code == kExitUsage);
    CHECK(run({"basis", "--n", "2"}).code == kExitUsage);
    CHECK(run({"basis", "--n", "5", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"basis", "--n", "5", "--bogus"}).code == kExitUsage);
    CHECK(run({"basis", "--n", "5", "--degree", "3"}).code == kExitUsage);
    CHECK(run({"pair", "--n", "5", "--format", "csv"}).code == kExitUsage);
    CHECK(run({"reduce", "--n", "6", "--expr", "D{1,2}"}).code == kExitUsage);
    CHECK(run({"reduce", "--n", "6"}).code == kExitUsage);
    CHECK(run({"integral", "--n", "6", "--expr", "a1"}).code == kExitUsage);
    CHECK(run({"dual", "--n", "6", "--expr", "D{1,2,3,4}^3"}).code == kExitUsage);
    CHECK(run({"frobnicate", "--n", "6"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);

    const Run slow = run({"verify", "--n", "7", "--budget-seconds", "0.01"});
    CHECK(slow.code == kExitBudget);
    CHECK(slow.out.empty());

    // the largest-first scan fails the filtration check: a genuine failure report
    const Run fail = run({"verify", "--n", "6", "--order-convention", "desc"});
    CHECK(fail.code == kExitCertificationFailed);
    const Json report = Json::parse(fail.out);
    CHECK(report["passed"] == false);
    bool found = false;
    for (const auto& c : report["checks"])
        if (c["name"] == "filtration_vanishing") {
            found = true;
            CHECK(c["passed"] == false);
            CHECK_FALSE(c["counterexamples"].empty());
        }
    CHECK(found);
}

TEST_CASE("verify passes for small n")
{
    for (int n = 3; n <= 6; ++n) {
        const Run r = run({"verify", "--n", std::to_string(n)});
        CHECK_MESSAGE(r.code == kExitOk, n << ": " << r.out);
    }
}

TEST_CASE("output is deterministic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"pair", "--n", "6", "--format", "json"},
             {"relations", "--n", "6", "--format", "json"},
             {"oracle", "--n", "5", "--format", "json"},
             {"verify", "--n", "5", "--format", "json"}}) {
        const Run a = run(args), b = run(args);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("polynomial documents round trip")
{
    std::mt19937_64 rng(23);
    for (int k = 0; k < 300; ++k) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const Polynomial p = testing::random_polynomial(n, static_cast<int>(rng() % 4), rng);
        int back_n = 0;
        const Json doc = polynomial_document(p, n);
        REQUIRE(polynomial_from_document(Json::parse(doc.dump()), &back_n) == p);
        REQUIRE(back_n == n);
    }
    CHECK_THROWS_AS(polynomial_from_document(Json::parse(R"({"n": 6, "terms": [{"coeff": 1, "a": [], "D": [{"set": [1,2], "exp": 1}]}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_document(Json::parse(R"({"terms": []})")), std::invalid_argument);
}

TEST_CASE("pairing CSV round trip")
{
    for (int n = 4; n <= 6; ++n) {
        const Reducer r(n);
        for (int d = 0; d <= n - 3; ++d) {
            const auto rep = pairing_matrix(n, d, r);
            const CsvMatrix m = parse_csv_matrix(pairing_csv(rep));
            REQUIRE(m.rows == rep.matrix);
            REQUIRE(m.header.size() == rep.basis.size());
            for (std::size_t i = 0; i < m.header.size(); ++i)
                REQUIRE(testing::mono(m.header[i], n) == rep.basis[i]);
        }
    }
    CHECK_THROWS_AS(parse_csv_matrix("\"a1\"\n1,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv_matrix("\"a1\"\nx\n"), std::invalid_argument);
}

TEST_CASE("forest documents")
{
    const auto v = StandardMonomial::from(testing::mono("D{1,2,3,4,5,6,7,8,9,10,11}*D{1,2,3}*D{4,5,6}*D{7,8,9}", 20), 20);
    const Json j = standard_json(v);
    CHECK(j["forest"]["vertices"].size() == 4);
    CHECK(j["forest"]["edges"].size() == 3);
    CHECK(j["forest"]["roots"] == Json::array({0}));
    CHECK(j["forest"]["vertices"][0]["external"] == false);
    CHECK(j["forest"]["vertices"][1]["external"] == true);
    CHECK(j["sign"] == 1);
}

TEST_CASE("cache round trip")
{
    TempDir dir;
    std::ostringstream warn;
    Cache cache(dir.path, &warn);
    REQUIRE(cache.enabled());
    const ReductionTable table = table_for(6, 2);
    const CacheKey key = key_for(6, 2, OrderConvention::Ascending);
    REQUIRE(cache.store(key, reduction_table_json(6, 2, table).dump()));

    CacheLookup st;
    const auto payload = cache.load(key, &st);
    REQUIRE(payload);
    CHECK(st == CacheLookup::Hit);
    const ReductionTable back = reduction_table_from_json(Json::parse(*payload), 6, 2);
    CHECK(back == table);

    // identical normal forms from a reducer seeded by the cache
    Reducer seeded(6), fresh(6);
    for (const auto& [m, p] : back)
        seeded.seed(m, p);
    for (const auto& m : kernel_reduced_monomials(6, 2))
        REQUIRE(seeded.normal_form(m) == fresh.normal_form(m));
    CHECK(warn.str().empty());
}

TEST_CASE("cache key semantics")
{
    TempDir dir;
    Cache cache(dir.path);
    const CacheKey asc = key_for(6, 2, OrderConvention::Ascending);
    REQUIRE(cache.store(asc, "payload"));
    CacheLookup st;
    CHECK_FALSE(cache.load(key_for(6, 2, OrderConvention::Descending), &st));
    CHECK(st == CacheLookup::Miss);
    CacheKey other_hash = asc;
    other_hash.relations_hash = relation_set_hash(generate_relations(6, 2, RelationOptions{true}));
    CHECK(other_hash.relations_hash != asc.relations_hash);
    CHECK_FALSE(cache.load(other_hash, &st));
    CHECK(st == CacheLookup::Miss);
    CHECK(cache.load(asc, &st) == std::optional<std::string>("payload"));
}

TEST_CASE("cache corruption is detected")
{
    TempDir dir;
    Cache cache(dir.path);
    const CacheKey key = key_for(6, 2, OrderConvention::Ascending);
    const std::string payload = reduction_table_json(6, 2, table_for(6, 2)).dump();
    REQUIRE(cache.store(key, payload));
    const fs::path file = dir.path / key.file_name();
    CacheLookup st;

    // truncated payload
    fs::resize_file(file, fs::file_size(file) - 10);
    CHECK_FALSE(cache.load(key, &st));
    CHECK(st == CacheLookup::Corrupt);

    // same length, one byte flipped
    REQUIRE(cache.store(key, payload));
    std::string text = slurp(file);
    text[text.size() - 5] ^= 1;
    std::ofstream(file, std::ios::binary | std::ios::trunc) << text;
    CHECK_FALSE(cache.load(key, &st));
    CHECK(st == CacheLookup::Corrupt);

    // older format version
    REQUIRE(cache.store(key, payload));
    text = slurp(file);
    text.replace(0, text.find('\n'), "m0n-cache 0");
    std::ofstream(file, std::ios::binary | std::ios::trunc) << text;
    CHECK_FALSE(cache.load(key, &st));
    CHECK(st == CacheLookup::Stale);

    // the CLI recomputes and rewrites
    const Run r = run({"reduce", "--n", "6", "--expr", "D{2,3,4}^2", "--cache-dir", dir.path.string()});
    CHECK(r.code == 0);
    CHECK(r.err.find("recomputing") != std::string::npos);
    CHECK(cache.load(key, &st));
    CHECK(st == CacheLookup::Hit);
}

TEST_CASE("unwritable cache directory disables caching")
{
    TempDir dir;
    const fs::path blocker = dir.path / "file";
    std::ofstream(blocker) << "x";
    std::ostringstream warn;
    Cache cache(blocker / "sub", &warn);
    CHECK_FALSE(cache.enabled());
    CHECK(warn.str().find("caching disabled") != std::string::npos);
    CacheLookup st;
    CHECK_FALSE(cache.load(key_for(5, 1, OrderConvention::Ascending), &st));
    CHECK(st == CacheLookup::Disabled);
    CHECK_FALSE(cache.store(key_for(5, 1, OrderConvention::Ascending), "x"));

    const Run r = run({"pair", "--n", "5", "--degree", "1", "--cache-dir", (blocker / "sub").string()});
    CHECK(r.code == 0);
    CHECK(r.err.find("caching disabled") != std::string::npos);
    CHECK(r.out == run({"pair", "--n", "5", "--degree", "1"}).out);
}

TEST_CASE("cached and uncached runs agree")
{
    TempDir dir;
    const std::vector<std::string> base{"pair", "--n", "6", "--format", "json"};
    auto with_cache = base;
    with_cache.insert(with_cache.end(), {"--cache-dir", dir.path.string()});
    const Run cold = run(with_cache), warm = run(with_cache), plain = run(base);
    CHECK(cold.out == plain.out);
    CHECK(warm.out == plain.out);
    CHECK_FALSE(fs::is_empty(dir.path));
}
