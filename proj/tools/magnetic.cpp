#include "magnetic/app/cache.hpp"
#include "magnetic/app/expr.hpp"
#include "magnetic/app/report.hpp"
#include "magnetic/app/tasks.hpp"
#include "magnetic/halfint.hpp"
#include "magnetic/lifts.hpp"
#include "magnetic/quasimod.hpp"
#include "magnetic/series_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace magnetic;

namespace {

enum Exit { kPass = 0, kCounterexample = 1, kUsage = 2, kPrecision = 3, kInternal = 4 };

struct Globals {
    bool json = false;
    bool no_cache = false;
    std::string cache_dir;
};

// Canonical compact encoding, as stored in the cache.
void write_json(const Json& j, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream out(out_file, std::ios::trunc);
    if (!out) throw UsageError("cannot write " + out_file);
    out << j.dump() << "\n";
}

int emit(const app::Report& r, const Globals& g) {
    if (g.json) std::cout << app::to_json(r).dump(2) << "\n";
    else std::cout << app::render_text(r);
    return r.exit_code();
}

QSeries evaluate_cached(const std::string& text, long prec, const Globals& g) {
    auto expr = app::parse_expr(text);
    std::string key = app::series_key(app::normalized(*expr), prec);
    app::DiskCache cache = app::resolve_cache(g.cache_dir, g.no_cache);
    if (auto hit = cache.load(key)) return *hit;
    QSeries f = app::evaluate(*expr, prec);
    cache.store(key, f);
    return f;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// A series from an expression or a JSON file; the file may wrap the series as {"k":..., "series":...}.
QSeries input_series(const std::string& expr, const std::string& file, long prec, const Globals& g,
                     std::optional<long>& k_hint) {
    if (!file.empty()) {
        Json j = read_json_file(file);
        if (j.contains("series")) {
            if (j.contains("k")) k_hint = j.at("k").get<long>();
            return series_from_json(j.at("series"));
        }
        return series_from_json(j);
    }
    if (expr.empty()) throw UsageError("give an expression or --input FILE");
    if (halfint::is_plus_form_name(expr)) k_hint = halfint::plus_form_weight(expr);
    return evaluate_cached(expr, prec, g);
}

std::vector<int> parse_rows(const std::string& text) {
    std::vector<int> rows;
    if (text.empty() || text == "all") return rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string item = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size() || v < 1 || v > 13) throw std::invalid_argument(item);
            rows.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad row '" + item + "' (rows are 1..13)");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Exact q-expansions, Hecke operators, lifts and magnetic checks"};
    cli.require_subcommand(1);
    Globals g;
    cli.add_flag("--json", g.json, "Print reports as JSON");
    cli.add_flag("--no-cache", g.no_cache, "Do not read or write the series cache");
    cli.add_option("--cache-dir", g.cache_dir, std::string("Series cache directory (default: $") + app::kCacheEnv + ")");

    // expand
    std::string expand_expr, expand_out;
    long expand_prec = 1;
    bool check_cache = false;
    auto* expand = cli.add_subcommand("expand", "Expand an expression to a JSON series");
    expand->add_option("expr", expand_expr, "Expression, e.g. \"Delta/E4^2\" or \"f(0,1,0)\"")->required();
    expand->add_option("--prec", expand_prec, "Last exponent to compute")->check(CLI::NonNegativeNumber);
    expand->add_option("--out", expand_out, "Write the JSON here instead of stdout");
    expand->add_flag("--check-cache", check_cache, "Recompute and compare against the cached value");

    // verify
    std::string verify_id;
    long verify_prec = 0;
    auto* verify = cli.add_subcommand("verify", "Run a verification task");
    verify->add_option("id", verify_id, "th1 th2 w4 w6 identities f4 expansions raising hecke plus-congruences congruences t4 family ode")
        ->required();
    verify->add_option("--prec", verify_prec, "Precision or coefficient count (task default if omitted)");

    // table1
    std::string rows_text;
    long table_coeffs = 60, table_prec = 500;
    bool extended = false;
    auto* table1 = cli.add_subcommand("table1", "Verify the lift table identities");
    table1->add_option("--rows", rows_text, "Comma separated row numbers (default: all)");
    table1->add_option("--coeffs", table_coeffs, "Lift coefficients compared")->check(CLI::PositiveNumber);
    table1->add_option("--prec", table_prec, "Precision of the magnetic checks")->check(CLI::PositiveNumber);
    table1->add_flag("--extended", extended, "Include the rows built from f43, f67 and f163");

    // congruence
    std::string cong_expr;
    long cong_prime = 0, cong_order = 1, cong_power = 1, cong_prec = 1000;
    bool cong_magnetic = false, cong_plus = false;
    auto* congruence = cli.add_subcommand("congruence", "Strong magnetic congruences and magnetic checks");
    congruence->add_option("expr", cong_expr, "Expression for the series");
    congruence->add_option("--prime", cong_prime, "Prime p");
    congruence->add_option("--order", cong_order, "n in p^n | m, or the antiderivative order with --magnetic")
        ->check(CLI::PositiveNumber);
    congruence->add_option("--power", cong_power, "Check p^(power*n) | A(m)")->check(CLI::PositiveNumber);
    congruence->add_option("--prec", cong_prec, "Precision")->check(CLI::PositiveNumber);
    congruence->add_flag("--magnetic", cong_magnetic, "Check delta^-order integrality (p-integrality with --prime)");
    congruence->add_flag("--plus-hecke", cong_plus, "Run the half-integral Hecke congruences");

    // misc
    long misc_prec = 1000;
    auto* misc = cli.add_subcommand("misc", "Raising relations, differential equations and closing examples");
    misc->add_option("--prec", misc_prec, "Precision of the integrality checks")->check(CLI::PositiveNumber);

    // basis
    long basis_k = 2, basis_prec = 20;
    std::vector<long> basis_m;
    std::string basis_out;
    auto* basis = cli.add_subcommand("basis", "Plus space elements q^-m + O(q)");
    basis->add_option("--k", basis_k, "Weight k + 1/2")->check(CLI::NonNegativeNumber);
    basis->add_option("--m", basis_m, "Pole orders")->required()->delimiter(',');
    basis->add_option("--prec", basis_prec, "Last exponent")->check(CLI::PositiveNumber);
    basis->add_option("--out", basis_out, "Write the JSON here instead of stdout");

    // lift / unlift
    std::string lift_expr, lift_input, lift_out;
    long lift_prec = 100;
    std::optional<long> lift_k;
    auto* lift = cli.add_subcommand("lift", "Shimura-Borcherds lift of a plus form");
    lift->add_option("expr", lift_expr, "Expression or plus form name");
    lift->add_option("--input", lift_input, "JSON series file");
    lift->add_option("--k", lift_k, "Weight k + 1/2 of the input")->check(CLI::NonNegativeNumber);
    lift->add_option("--prec", lift_prec, "Precision of the input")->check(CLI::PositiveNumber);
    lift->add_option("--out", lift_out, "Write the JSON here instead of stdout");
    auto* unlift = cli.add_subcommand("unlift", "The reverse map on integral weight series");
    unlift->add_option("expr", lift_expr, "Expression");
    unlift->add_option("--input", lift_input, "JSON series file");
    unlift->add_option("--k", lift_k, "Half of the integral weight")->check(CLI::PositiveNumber);
    unlift->add_option("--prec", lift_prec, "Precision of the input")->check(CLI::PositiveNumber);
    unlift->add_option("--out", lift_out, "Write the JSON here instead of stdout");

    // reduce
    std::string reduce_text;
    long reduce_verify = 0;
    auto* reduce = cli.add_subcommand("reduce", "Reduction certificate for a weight 4 or 6 element");
    reduce->add_option("element", reduce_text, "e.g. \"f(1,-1,1) - f(0,1,0)\"")->required();
    reduce->add_option("--verify", reduce_verify, "Expand both sides through this exponent")
        ->check(CLI::NonNegativeNumber);

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = cli.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*expand) {
            auto expr = app::parse_expr(expand_expr);
            if (check_cache) {
                std::string key = app::series_key(app::normalized(*expr), expand_prec);
                app::DiskCache cache = app::resolve_cache(g.cache_dir, false);
                if (!cache.enabled()) throw UsageError("--check-cache needs a cache directory");
                auto hit = cache.load(key);
                QSeries fresh = app::evaluate(*expr, expand_prec);
                if (!hit) {
                    cache.store(key, fresh);
                    std::cout << "cache: stored " << app::DiskCache::file_name(key) << "\n";
                    return kPass;
                }
                bool same = *hit == fresh;
                std::cout << "cache: " << (same ? "hit matches recomputation" : "hit DIFFERS from recomputation")
                          << "\n";
                return same ? kPass : kCounterexample;
            }
            write_json(to_json(evaluate_cached(expand_expr, expand_prec, g)), expand_out);
            return kPass;
        }
        if (*verify) return emit(app::run_verify(verify_id, verify_prec), g);
        if (*table1) return emit(app::run_table1(parse_rows(rows_text), table_coeffs, table_prec, extended), g);
        if (*misc) return emit(app::run_misc(misc_prec), g);
        if (*congruence) {
            if (cong_plus) return emit(app::verify_plus_congruences(200), g);
            if (cong_expr.empty()) throw UsageError("congruence needs an expression or --plus-hecke");
            QSeries f = evaluate_cached(cong_expr, cong_prec, g);
            app::Report r;
            r.task = "congruence";
            r.parameters = {{"expr", cong_expr}, {"prec", cong_prec}, {"prime", cong_prime},
                            {"order", cong_order}, {"power", cong_power}, {"magnetic", cong_magnetic}};
            if (cong_magnetic) {
                auto m = quasimod::magnetic_check(f, static_cast<unsigned>(cong_order),
                                                  static_cast<unsigned long>(cong_prime));
                Json d{{"through", m.checked_through}};
                if (m.exponent) {
                    d["witness_exponent"] = *m.exponent;
                    d["denominator"] = to_string(m.denominator);
                }
                r.add("delta^-" + std::to_string(cong_order) + " integral" +
                          (cong_prime ? " at " + std::to_string(cong_prime) : std::string()),
                      m.ok, d);
            } else {
                if (cong_prime < 2) throw UsageError("--prime is required");
                auto c = lifts::strong_magnetic_congruence_check(f, cong_prime, cong_order, cong_power);
                Json d{{"through", c.checked_through}};
                if (c.failing_exponent) d["exponent"] = *c.failing_exponent;
                if (c.precondition_failed) d["precondition_failed"] = true;
                r.add(std::to_string(cong_prime) + "^" + std::to_string(cong_order) + " | m => " +
                          std::to_string(cong_prime) + "^" + std::to_string(cong_power * cong_order) + " | A(m)",
                      c.ok, d);
            }
            return emit(r, g);
        }
        if (*basis) {
            auto b = halfint::plus_basis(basis_k, basis_m, basis_prec);
            Json out = Json::array();
            for (long m : basis_m) {
                Json e;
                e["k"] = basis_k;
                e["m"] = m;
                e["pool_s_max"] = b.pool_s_max;
                e["series"] = to_json(b.elements.at(m).series());
                out.push_back(std::move(e));
            }
            write_json(out.size() == 1 ? out.front() : out, basis_out);
            return kPass;
        }
        if (*lift || *unlift) {
            std::optional<long> hint;
            QSeries f = input_series(lift_expr, lift_input, lift_prec, g, hint);
            std::optional<long> k = lift_k ? lift_k : hint;
            if (!k) throw UsageError("--k is required for this input");
            if (*lift) {
                QSeries out = lifts::psi(halfint::PlusForm(*k, f));
                write_json(to_json(out), lift_out);
            } else {
                write_json(to_json(lifts::phi(f, *k)), lift_out);
            }
            return kPass;
        }
        if (*reduce) {
            auto v = quasimod::parse_element(reduce_text);
            if (v.weight() != 4 && v.weight() != 6) throw UsageError("reduce handles weights 4 and 6");
            auto cert = v.weight() == 4 ? quasimod::reduce_weight4(v) : quasimod::reduce_weight6(v);
            Json j;
            j["input"] = quasimod::to_string(cert.input);
            j["anchor"] = quasimod::to_string(quasimod::anchor_element(cert.anchor));
            j["mu"] = to_string(cert.mu);
            Json gens = Json::object();
            for (const auto& [name, c] : cert.gens) {
                gens[name] = {{"coefficient", to_string(c)},
                              {"element", quasimod::to_string(quasimod::generator_element(cert.anchor, name))}};
            }
            j["generators"] = gens;
            j["delta_part"] = quasimod::to_string(cert.delta_part);
            int code = kPass;
            if (reduce_verify > 0) {
                auto cc = quasimod::verify_certificate(cert, reduce_verify);
                j["verified_through"] = cc.checked_through;
                j["verified"] = cc.ok();
                if (cc.first_mismatch) j["first_mismatch"] = *cc.first_mismatch;
                if (!cc.ok()) code = kCounterexample;
            }
            std::cout << j.dump(2) << "\n";
            return code;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PrecisionError& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return kPrecision;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
