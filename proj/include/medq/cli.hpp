#pragma once

// Command-line front end. `run` takes the argument vector (without the
// program name) and writes to the given streams so it can be driven from
// tests as well as from main().
//
// Exit codes: 0 success/agreement, 1 usage error, 2 verdict mismatch,
// 3 unknown prime-power count.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "medq/counting.hpp"
#include "medq/enumerator.hpp"
#include "medq/iso_oracle.hpp"
#include "medq/jsonl.hpp"
#include "medq/quasigroup.hpp"

namespace medq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitUnknownPrimePower = 3;

/// Largest p for which `count` and `interpolate` enumerate Z_p^2.
inline constexpr std::uint64_t kMaxEnumerableZp2Prime = 13;
/// Largest p^k for which cyclic groups are enumerated.
inline constexpr std::uint64_t kMaxEnumerableCyclicOrder = 1024;

class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

struct GroupArgs {
    std::string group;
    std::uint64_t p = 0;
    unsigned k = 0;
};

inline GroupSpec make_group(const GroupArgs& a) {
    if (a.p == 0) throw UsageError("--p is required");
    const Prime p(a.p);
    if (a.group == "zp2") return GroupSpec::zp2(p);
    if (a.group == "cyclic") {
        if (a.k == 0) throw UsageError("--k is required for the cyclic group");
        return GroupSpec::cyclic(p, a.k);
    }
    throw UsageError("unsupported group '" + a.group + "'");
}

inline bool enumerable(const GroupSpec& g) {
    if (g.is_cyclic()) return g.order() <= kMaxEnumerableCyclicOrder;
    return g.prime().value() <= kMaxEnumerableZp2Prime;
}

inline void print_verdict(std::ostream& out, const BigInt& closed, const std::optional<BigInt>& enumerated, int& status) {
    out << "closed form: " << closed << '\n';
    if (!enumerated) {
        out << "enumerated: skipped (beyond enumeration limits)\n";
        return;
    }
    out << "enumerated: " << *enumerated << '\n';
    if (*enumerated == closed) {
        out << "verdict: OK\n";
    } else {
        out << "verdict: MISMATCH\n";
        status = kExitMismatch;
    }
}

inline std::optional<BigInt> enumerated_prime_power(std::uint64_t p, unsigned e, unsigned jobs) {
    if (!is_prime_number(p) || p > kMaxPrime) return std::nullopt;
    const Prime prime(p);
    if (e == 1) {
        const auto g = GroupSpec::cyclic(prime, 1);
        if (!enumerable(g)) return std::nullopt;
        return BigInt(enumerate(g, jobs).total);
    }
    if (e == 2) {
        if (p > kMaxEnumerableZp2Prime) return std::nullopt;
        return BigInt(enumerated_order_p2(prime, jobs));
    }
    return std::nullopt;
}

inline int do_count(const GroupArgs& a, std::uint64_t n, unsigned jobs, std::ostream& out) {
    int status = kExitOk;
    if (a.group == "n") {
        if (n == 0) throw UsageError("--n must be a positive integer");
        const BigInt closed = count_composite(n);
        std::optional<BigInt> enumerated = BigInt(1);
        for (const auto& [p, e] : factorize(n)) {
            const auto part = enumerated_prime_power(p, e, jobs);
            if (!part) {
                enumerated.reset();
                break;
            }
            *enumerated *= *part;
        }
        out << "group: n=" << n << '\n';
        print_verdict(out, closed, enumerated, status);
        return status;
    }
    if (a.group == "order-p2") {
        if (a.p == 0) throw UsageError("--p is required");
        const Prime p(a.p);
        std::optional<BigInt> enumerated;
        if (p.value() <= kMaxEnumerableZp2Prime) enumerated = BigInt(enumerated_order_p2(p, jobs));
        out << "group: order-p2:p=" << p.value() << '\n';
        print_verdict(out, closed_form_order_p2(p), enumerated, status);
        return status;
    }
    const GroupSpec g = make_group(a);
    const BigInt closed = g.is_cyclic() ? closed_form_cyclic(g.prime(), g.exponent()) : closed_form_zp2(g.prime());
    std::optional<BigInt> enumerated;
    if (enumerable(g)) enumerated = BigInt(enumerate(g, jobs).total);
    out << "group: " << g.to_string() << '\n';
    print_verdict(out, closed, enumerated, status);
    return status;
}

inline void write_triple_text(std::ostream& out, std::size_t index, const GroupSpec& g, const RepresentativeTriple& t,
                              bool with_table) {
    out << index << ' ' << t.case_tag << " phi=" << t.phi.to_string() << " psi=" << t.psi.to_string() << " c=(";
    const auto comp = components(t.c);
    for (std::size_t i = 0; i < comp.size(); ++i) out << (i ? "," : "") << comp[i];
    out << ")\n";
    if (with_table) write_table(out, triple_table(g, t));
}

inline int do_enumerate(const GroupArgs& a, bool tables, const std::string& format, unsigned jobs, std::ostream& out) {
    const GroupSpec g = make_group(a);
    if (!enumerable(g)) throw UsageError("group " + g.to_string() + " is beyond enumeration limits");
    const auto report = enumerate(g, jobs);
    if (format == "jsonl") {
        for (const auto& t : report.triples) out << triple_json(g, t, tables).dump() << '\n';
        return kExitOk;
    }
    for (std::size_t i = 0; i < report.triples.size(); ++i) write_triple_text(out, i, g, report.triples[i], tables);
    out << "total: " << report.total << '\n';
    for (const auto& [tag, count] : report.tallies) out << "tally " << tag << ": " << count << '\n';
    return kExitOk;
}

inline std::string export_file_name(std::size_t index, const std::string& tag) {
    std::ostringstream name;
    name << std::setw(5) << std::setfill('0') << index << '_' << tag << ".txt";
    return name.str();
}

inline int do_export(const GroupArgs& a, const std::string& dir, unsigned jobs, std::ostream& out) {
    const GroupSpec g = make_group(a);
    if (!enumerable(g)) throw UsageError("group " + g.to_string() + " is beyond enumeration limits");
    const auto report = enumerate(g, jobs);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < report.triples.size(); ++i) {
        const auto path = std::filesystem::path(dir) / export_file_name(i, report.triples[i].case_tag);
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error("cannot write " + path.string());
        write_table(f, triple_table(g, report.triples[i]));
    }
    out << "wrote " << report.triples.size() << " tables to " << dir << '\n';
    return kExitOk;
}

inline int do_verify(const std::vector<std::string>& files, std::ostream& out) {
    int status = kExitOk;
    for (const auto& file : files) {
        std::ifstream f(file, std::ios::binary);
        if (!f) throw UsageError("cannot read " + file);
        std::vector<CayleyTable> tables;
        try {
            tables = read_tables(f);
        } catch (const Error& e) {
            throw UsageError(file + ": " + e.what());
        }
        for (std::size_t i = 0; i < tables.size(); ++i) {
            const auto& t = tables[i];
            const bool latin = is_latin(t);
            const bool medial = is_medial(t);
            out << file << '#' << i << ": order=" << t.order() << " latin=" << (latin ? "yes" : "no")
                << " medial=" << (medial ? "yes" : "no") << " idempotents=" << count_idempotents(t) << '\n';
            if (!latin || !medial) status = kExitMismatch;
        }
    }
    return status;
}

inline int do_crosscheck(const GroupArgs& a, const std::string& format, unsigned jobs, std::ostream& out) {
    const GroupSpec g = make_group(a);
    if (g.order() > kMaxClassifyOrder)
        throw UsageError("crosscheck is capped at order " + std::to_string(kMaxClassifyOrder));

    std::vector<CayleyTable> raw;
    for (const auto& f : all_affine_forms(g)) raw.push_back(build_table(f));
    const auto classes = classify(raw, jobs);

    const auto report = enumerate(g, jobs);
    std::vector<CayleyTable> reps;
    for (const auto& t : report.triples) reps.push_back(triple_table(g, t));
    const auto hits = match_to_classes(classes, reps);
    std::vector<int> hit_count(classes.size(), 0);
    bool bijection = reps.size() == classes.size();
    for (const auto& h : hits) {
        if (!h) {
            bijection = false;
            continue;
        }
        ++hit_count[*h];
    }
    for (int c : hit_count)
        if (c != 1) bijection = false;

    const bool ok = bijection && classes.size() == report.total;
    if (format == "jsonl") {
        out << oracle_summary_json(g, classes, report.total, bijection).dump() << '\n';
    } else {
        out << "group: " << g.to_string() << '\n';
        out << "affine forms: " << raw.size() << '\n';
        out << "oracle classes: " << classes.size() << '\n';
        out << "enumerated: " << report.total << '\n';
        out << "one-to-one: " << (bijection ? "yes" : "no") << '\n';
        out << classes.size() << (ok ? " = " : " != ") << report.total << (ok ? " OK" : " MISMATCH") << '\n';
    }
    return ok ? kExitOk : kExitMismatch;
}

inline int do_interpolate(const std::string& series, unsigned k, std::size_t nprimes, unsigned jobs, std::ostream& out) {
    if (nprimes == 0) throw UsageError("--primes must be at least 1");
    std::vector<std::pair<BigInt, BigInt>> points;
    for (auto p : first_primes(nprimes)) {
        const Prime prime(p);
        std::uint64_t value = 0;
        if (series == "zp2" || series == "order-p2") {
            if (p > kMaxEnumerableZp2Prime)
                throw UsageError("series needs Z_p^2 enumeration beyond p=" + std::to_string(kMaxEnumerableZp2Prime));
            value = series == "zp2" ? enumerate(GroupSpec::zp2(prime), jobs).total : enumerated_order_p2(prime, jobs);
        } else if (series == "cyclic-k") {
            if (k == 0) throw UsageError("--k is required for the cyclic-k series");
            const auto g = GroupSpec::cyclic(prime, k);
            if (!enumerable(g)) throw UsageError("series needs enumeration of " + g.to_string() + ", beyond limits");
            value = enumerate(g, jobs).total;
        } else {
            throw UsageError("unknown series '" + series + "'");
        }
        out << "p=" << p << ": " << value << '\n';
        points.emplace_back(BigInt(p), BigInt(value));
    }
    const auto poly = interpolate_count_polynomial(points);
    out << "polynomial: " << poly.to_string() << '\n';
    out << "integer coefficients: " << (poly.has_integer_coefficients() ? "yes" : "no") << '\n';
    return kExitOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate and verify medial quasigroups of prime-power order", "medq"};
    app.require_subcommand(1);

    detail::GroupArgs ga;
    std::uint64_t n = 0;
    unsigned jobs = 1;
    bool tables = false;
    std::string format = "jsonl";
    std::string cross_format = "text";
    std::string out_dir;
    std::vector<std::string> in_files;
    std::string series;
    std::size_t nprimes = 0;

    auto add_group = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--group", ga.group, "Ambient group")->required()->check(CLI::IsMember(allowed));
        sub->add_option("--p", ga.p, "Prime p");
        sub->add_option("--k", ga.k, "Exponent k (cyclic group)");
        sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    };

    auto* count = app.add_subcommand("count", "Closed-form count, cross-checked by enumeration where feasible");
    add_group(count, {"zp2", "cyclic", "order-p2", "n"});
    count->add_option("--n", n, "Order n (for --group n)");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream isomorphism-class representatives");
    add_group(enumerate_cmd, {"zp2", "cyclic"});
    enumerate_cmd->add_flag("--tables", tables, "Include Cayley tables");
    enumerate_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"jsonl", "text"}));

    auto* export_cmd = app.add_subcommand("export", "Write one Cayley table file per representative");
    add_group(export_cmd, {"zp2", "cyclic"});
    export_cmd->add_option("--out", out_dir, "Output directory")->required();

    auto* verify = app.add_subcommand("verify", "Check Latin, medial and idempotent status of tables");
    verify->add_option("--in", in_files, "Table file(s) in text format")->required();

    auto* crosscheck = app.add_subcommand("crosscheck", "Compare the enumerator with brute-force classification");
    add_group(crosscheck, {"zp2", "cyclic"});
    crosscheck->add_option("--format", cross_format, "Output format")->check(CLI::IsMember({"jsonl", "text"}));

    auto* interpolate = app.add_subcommand("interpolate", "Interpolate a count polynomial from the first primes");
    interpolate->add_option("--series", series, "Count series")->required()->check(
        CLI::IsMember({"zp2", "order-p2", "cyclic-k"}));
    interpolate->add_option("--k", ga.k, "Exponent for the cyclic-k series");
    interpolate->add_option("--primes", nprimes, "Number of primes")->required();
    interpolate->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count) return detail::do_count(ga, n, jobs, out);
        if (*enumerate_cmd) return detail::do_enumerate(ga, tables, format, jobs, out);
        if (*export_cmd) return detail::do_export(ga, out_dir, jobs, out);
        if (*verify) return detail::do_verify(in_files, out);
        if (*crosscheck) return detail::do_crosscheck(ga, cross_format, jobs, out);
        if (*interpolate) return detail::do_interpolate(series, ga.k, nprimes, jobs, out);
    } catch (const UnknownPrimePowerError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnknownPrimePower;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace medq::cli
