#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcdc/census.hpp"
#include "lcdc/errors.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitWorkBound = 3;

struct CliConfig {
    std::int64_t q = 2;
    int t = 2;
    std::int64_t n = 1;
    std::string form = "ordinary";
    std::string output = "text";
    std::int64_t n_min = 1;
    std::int64_t n_max = 1;
    std::string work_bound;
    std::uint64_t seed = 0;
};

lcdc::PrimePower parse_q(std::int64_t q) {
    if (q < 2) throw lcdc::ValidationError("q must be at least 2");
    std::int64_t p = q;
    for (std::int64_t c = 2; c * c <= q; ++c) {
        if (q % c == 0) {
            p = c;
            break;
        }
    }
    int e = 0;
    std::int64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw lcdc::ValidationError("q must be a prime power, got " + std::to_string(q));
    return lcdc::make_prime_power(p, e);
}

lcdc::CensusRequest parse_request(const CliConfig& cfg) {
    lcdc::CensusRequest req;
    req.q = parse_q(cfg.q);
    req.t = cfg.t;
    req.n = cfg.n;
    if (req.t < 1) throw lcdc::ValidationError("t must be positive");
    if (req.n < 1) throw lcdc::ValidationError("n must be positive");
    const auto form = lcdc::parse_form(cfg.form);
    if (!form) throw lcdc::ValidationError("unknown form: " + cfg.form);
    req.delta = *form;
    return req;
}

lcdc::BigInt resolve_work_bound(const CliConfig& cfg) {
    std::string text = cfg.work_bound;
    if (text.empty()) {
        if (const char* env = std::getenv("LCDCENSUS_WORK_BOUND")) text = env;
    }
    if (text.empty()) return lcdc::kDefaultWorkBound;
    try {
        lcdc::BigInt bound(text);
        if (bound < 1) throw lcdc::ValidationError("work bound must be positive");
        return bound;
    } catch (const lcdc::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw lcdc::ValidationError("invalid work bound: " + text);
    }
}

ordered_json report_to_json(const lcdc::CountReport& rep) {
    ordered_json j;
    j["q"] = rep.request.q.q.convert_to<std::int64_t>();
    j["t"] = rep.request.t;
    j["n"] = rep.request.n;
    j["form"] = lcdc::form_name(rep.request.delta);
    j["s"] = rep.table.reps.size();
    ordered_json cls;
    cls["I"] = rep.cls.special;
    cls["F"] = rep.cls.fixed;
    cls["M"] = rep.cls.paired;
    j["classification"] = cls;
    j["r_factor"] = lcdc::to_decimal(rep.r.total);
    ordered_json factors = ordered_json::array();
    for (const auto& f : rep.factors) {
        ordered_json entry;
        entry["index"] = f.index;
        entry["kind"] = f.is_pair ? "pair" : "unitary";
        entry["d"] = f.d;
        entry["value"] = lcdc::to_decimal(f.breakdown.total);
        factors.push_back(std::move(entry));
    }
    j["factors"] = std::move(factors);
    j["total"] = lcdc::to_decimal(rep.total);
    return j;
}

std::string index_set(const std::vector<int>& v) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "}";
    return out.str();
}

void print_report_text(const lcdc::CountReport& rep) {
    std::cout << "q=" << rep.request.q.q << " t=" << rep.request.t << " n=" << rep.request.n
              << " form=" << lcdc::form_name(rep.request.delta) << "\n";
    std::cout << "cosets: s=" << rep.table.reps.size() << " I=" << index_set(rep.cls.special)
              << " F=" << index_set(rep.cls.fixed) << " M=" << index_set(rep.cls.paired) << "\n";
    std::ostringstream composed;
    composed << lcdc::to_decimal(rep.r.total) << "^" << rep.r_exponent;
    for (const auto& f : rep.factors) {
        composed << " * " << lcdc::to_decimal(f.breakdown.total);
        std::cout << "factor index=" << f.index << " kind=" << (f.is_pair ? "pair" : "unitary")
                  << " d=" << f.d << " value=" << lcdc::to_decimal(f.breakdown.total) << "\n";
    }
    std::cout << "total = " << composed.str() << " = " << lcdc::to_decimal(rep.total) << "\n";
}

int cmd_count(const CliConfig& cfg) {
    const lcdc::CountReport rep = lcdc::census(parse_request(cfg));
    if (cfg.output == "json") {
        std::cout << report_to_json(rep).dump() << "\n";
    } else if (cfg.output == "text") {
        print_report_text(rep);
    } else {
        throw lcdc::ValidationError("count supports text or json output, got " + cfg.output);
    }
    return kExitOk;
}

// Basis-independence spot check driven by --seed: a random invertible change
// of pairing must leave the nondegenerate-pair counts alone.
void seeded_pairing_check(const lcdc::CensusRequest& req, std::uint64_t seed,
                          const lcdc::BigInt& bound) {
    const lcdc::FieldPtr K = lcdc::build_field(req.q.p, req.q.e);
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, K->size() - 1);
    lcdc::Mat pairing;
    do {
        pairing.assign(static_cast<std::size_t>(req.t), lcdc::Row(static_cast<std::size_t>(req.t), 0));
        for (auto& row : pairing)
            for (auto& x : row) x = static_cast<lcdc::Elem>(pick(gen));
    } while (lcdc::rank_of(*K, pairing) != req.t);
    const auto space = lcdc::make_paired(K, req.t, pairing);
    const auto expected = lcdc::n_pair(req.t, 1, req.q.q);
    for (int k = 0; k <= req.t; ++k) {
        if (lcdc::count_nondeg_module_pairs_in(space, k, bound) != expected.per_k[static_cast<std::size_t>(k)])
            throw lcdc::Error("seeded pairing check failed at k = " + std::to_string(k));
    }
}

int cmd_verify(const CliConfig& cfg) {
    const lcdc::CensusRequest req = parse_request(cfg);
    const lcdc::BigInt bound = resolve_work_bound(cfg);
    const lcdc::CountReport rep = lcdc::census(req);
    const lcdc::BigInt enumerated = lcdc::enumerate_lcd_count(req, bound);
    std::cout << "closed form: " << lcdc::to_decimal(rep.total) << "\n";
    std::cout << "enumeration: " << lcdc::to_decimal(enumerated) << "\n";
    if (cfg.seed != 0) seeded_pairing_check(req, cfg.seed, bound);
    if (rep.total != enumerated) {
        std::cerr << "error: closed form and enumeration disagree\n";
        return kExitInternal;
    }
    std::cout << "match\n";
    return kExitOk;
}

int cmd_table(const CliConfig& cfg) {
    CliConfig cell = cfg;
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw lcdc::ValidationError("table range must satisfy 1 <= n-min <= n-max");
    std::vector<lcdc::CountReport> rows;
    for (std::int64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
        if (std::gcd(n, cfg.q) != 1) {
            std::cerr << "skipping n=" << n << ": gcd(n, q) > 1\n";
            continue;
        }
        cell.n = n;
        rows.push_back(lcdc::census(parse_request(cell)));
    }
    if (rows.empty()) throw lcdc::ValidationError("no admissible n in the requested range");

    if (cfg.output == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& rep : rows) {
            ordered_json row;
            row["n"] = rep.request.n;
            row["s"] = rep.table.reps.size();
            row["f_count"] = rep.cls.fixed.size();
            row["m_count"] = rep.cls.paired.size();
            row["total"] = lcdc::to_decimal(rep.total);
            arr.push_back(std::move(row));
        }
        std::cout << arr.dump() << "\n";
    } else if (cfg.output == "csv" || cfg.output == "text") {
        std::cout << "n,s,f_count,m_count,total\n";
        for (const auto& rep : rows)
            std::cout << rep.request.n << "," << rep.table.reps.size() << ","
                      << rep.cls.fixed.size() << "," << rep.cls.paired.size() << ","
                      << lcdc::to_decimal(rep.total) << "\n";
    } else {
        throw lcdc::ValidationError("table supports csv, json or text output, got " + cfg.output);
    }
    return kExitOk;
}

int cmd_gram(const CliConfig& cfg) {
    const lcdc::CensusRequest req = parse_request(cfg);
    const lcdc::GramData gd = lcdc::trace_form_gram(req.q, req.t, req.n, req.delta);
    if (cfg.output == "json") {
        ordered_json j;
        j["q"] = req.q.q.convert_to<std::int64_t>();
        j["t"] = req.t;
        j["n"] = req.n;
        j["form"] = lcdc::form_name(req.delta);
        ordered_json rows = ordered_json::array();
        for (const auto& row : gd.gram) rows.push_back(row);
        j["gram"] = std::move(rows);
        std::cout << j.dump() << "\n";
    } else if (cfg.output == "text") {
        for (const auto& row : gd.gram) {
            for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? " " : "") << row[c];
            std::cout << "\n";
        }
    } else {
        throw lcdc::ValidationError("gram supports text or json output, got " + cfg.output);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census of complementary-dual cyclic additive codes"};
    app.require_subcommand(1);

    CliConfig cfg;
    const auto add_common = [&](CLI::App* sub, bool with_n) {
        sub->add_option("--q", cfg.q, "base field size (prime power)")->required();
        sub->add_option("--t", cfg.t, "extension degree")->required();
        if (with_n) sub->add_option("--n", cfg.n, "code length")->required();
        sub->add_option("--form", cfg.form, "star | ordinary | hermitian")->required();
        sub->add_option("--output", cfg.output, "output format");
        sub->add_option("--work-bound", cfg.work_bound,
                        "enumeration work limit (also LCDCENSUS_WORK_BOUND)");
    };

    CLI::App* count = app.add_subcommand("count", "closed-form census for one parameter set");
    add_common(count, true);
    CLI::App* verify = app.add_subcommand("verify", "closed form against exhaustive enumeration");
    add_common(verify, true);
    verify->add_option("--seed", cfg.seed, "seed for the randomized pairing check");
    CLI::App* table = app.add_subcommand("table", "census sweep over a range of lengths");
    add_common(table, false);
    table->add_option("--n-min", cfg.n_min, "first length")->required();
    table->add_option("--n-max", cfg.n_max, "last length")->required();
    CLI::App* gram = app.add_subcommand("gram", "Gram matrix of the trace form");
    add_common(gram, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return cmd_count(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (table->parsed()) return cmd_table(cfg);
        if (gram->parsed()) return cmd_gram(cfg);
        std::cerr << "error: no subcommand\n";
        return kExitValidation;
    } catch (const lcdc::WorkBoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitWorkBound;
    } catch (const lcdc::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
