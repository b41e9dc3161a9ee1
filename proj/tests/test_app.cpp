#include "magnetic/app/cache.hpp"
#include "magnetic/app/expr.hpp"
#include "magnetic/app/report.hpp"
#include "magnetic/app/table1.hpp"
#include "magnetic/app/tasks.hpp"
#include "magnetic/forms.hpp"
#include "magnetic/halfint.hpp"
#include "magnetic/series_json.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace magnetic;
using namespace magnetic::app;

TEST_CASE("expression evaluation") {
    QSeries a = evaluate(*parse_expr("Delta/E4^2"), 50);
    CHECK(a.prec() == 50);
    CHECK(a.coefficient(1) == 1);
    CHECK(a.coefficient(2) == -504);
    CHECK(agree_on_window(a, forms::named_form(forms::FormName::F4a, 50)));

    QSeries e4 = evaluate(*parse_expr("f(0,1,0)"), 3);
    CHECK(to_json(e4).dump() == R"({"lead":0,"prec":3,"coeffs":["1","240","2160","6720"]})");

    CHECK(to_json(evaluate(*parse_expr("q"), 1)).dump() == R"({"lead":1,"prec":1,"coeffs":["1"]})");

    QSeries th1 = evaluate(*parse_expr("antiderivative(F4a)"), 40);
    CHECK(th1 == antiderivative(forms::named_form(forms::FormName::F4a, 40)));
    QSeries sub = evaluate(*parse_expr("sub(E2, 4)"), 8);
    CHECK(sub.coefficient(4) == -24);
    QSeries g = evaluate(*parse_expr("7/8*g0 + 1/768*g1 - 1/768*g2"), 20);
    CHECK(agree_on_window(g, halfint::named_plus_form("f4a", 20).series()));
    CHECK(evaluate(*parse_expr("basis:k=2,m=3"), 20).coefficient(-3) == 1);
    CHECK(evaluate(*parse_expr("delta(E4,2) - delta(delta(E4))"), 30).is_zero());
    CHECK(evaluate(*parse_expr("-(q^-1)*q"), 5).coefficient(0) == -1);
}

TEST_CASE("expression errors and normalization") {
    CHECK(normalized(*parse_expr("E4 +  E6")) == normalized(*parse_expr("(E4)+(E6)")));
    CHECK(normalized(*parse_expr("2*q")) != normalized(*parse_expr("q*2")));
    try {
        parse_expr("E4 + * E6");
        FAIL("expected a parse error");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expr("E9"), UsageError);
    CHECK_THROWS_AS(parse_expr("(E4"), UsageError);
    CHECK_THROWS_AS(evaluate(*parse_expr("basis:k=2,m=2"), 5), UsageError);
    CHECK_THROWS_AS(evaluate(*parse_expr("1/(E4-E4)"), 5), DomainError);
}

TEST_CASE("disk cache round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("magnetic-cache-test-" + std::to_string(std::random_device{}()));
    DiskCache cache(dir);
    CHECK(cache.enabled());
    QSeries f = evaluate(*parse_expr("F4b"), 30);
    std::string key = series_key(normalized(*parse_expr("F4b")), 30);
    CHECK_FALSE(cache.load(key).has_value());
    cache.store(key, f);
    auto hit = cache.load(key);
    REQUIRE(hit.has_value());
    CHECK(*hit == f);
    CHECK_FALSE(cache.load(series_key("F4a", 30)).has_value());
    CHECK(DiskCache::file_name(key).size() == 21);
    CHECK_FALSE(resolve_cache(dir.string(), true).enabled());
    CHECK(resolve_cache(dir.string(), false).enabled());
    fs::remove_all(dir);
}

TEST_CASE("reports") {
    Report r;
    r.task = "demo";
    r.parameters["prec"] = 10;
    r.add("one", true);
    CHECK(r.passed());
    CHECK(r.exit_code() == 0);
    r.add("two", false, Json{{"exponent", 7}});
    CHECK_FALSE(r.passed());
    CHECK(r.exit_code() == 1);
    CHECK(r.counterexample()->name == "two");
    Json j = to_json(r, false);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["verdict"] == "fail");
    CHECK(j["counterexample"]["check"] == "two");
    CHECK_FALSE(j.contains("timing"));
    r.precision_error = "short";
    CHECK(r.exit_code() == 3);

    // Identical parameters give identical reports.
    CHECK(to_json(verify_expansions(), false).dump() == to_json(verify_expansions(), false).dump());
}

TEST_CASE("table data") {
    const auto& rows = table1_rows();
    CHECK(rows.size() == 13);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].id == static_cast<int>(i) + 1);
    CHECK(rows[0].scale == frac(1, 27));
    CHECK(rows[0].m == 7);
    CHECK(rows[3].scale == frac(1, 48 * 48));
    CHECK(rows[3].m == 3);
    CHECK(rows[12].expected.numerator.back() == 141826);
    int extended = 0;
    for (const auto& row : rows) extended += row.extended;
    CHECK(extended == 3);
}

TEST_CASE("quick tasks pass") {
    CHECK(verify_th1(300).passed());
    CHECK(verify_th2(300).passed());
    CHECK(verify_identities(200).passed());
    CHECK(verify_expansions().passed());
    CHECK(verify_ode(100).passed());
    CHECK_THROWS_AS(run_verify("nope", 10), UsageError);
}
