// Command line surface over the library. Every subcommand supports
// --format {table|json-records|csv}; json-records and csv output is
// byte-stable for fixed inputs. Exit codes: 0 success / all checks pass,
// 1 check failure, 2 usage error, 3 resource bound refusal.

#include "extq/cohomology.hpp"
#include "extq/ktheory.hpp"
#include "extq/labels.hpp"
#include "extq/quotient.hpp"
#include "extq/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

using namespace extq;
using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json jint(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi)
        return v.convert_to<std::int64_t>();
    return v.str(); // too wide for a JSON number, keep it exact as text
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    auto line = [](const std::vector<std::string>& fields) {
        std::string out;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i)
                out += ',';
            out += csv_field(fields[i]);
        }
        return out;
    };
    std::cout << line(header) << '\n';
    for (const auto& row : rows)
        std::cout << line(row) << '\n';
}

void emit_table(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i)
        width[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& fields) {
        std::string out;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i)
                out += "  ";
            out += fields[i];
            if (i + 1 < fields.size())
                out += std::string(width[i] - fields[i].size(), ' ');
        }
        return out;
    };
    std::cout << line(header) << '\n';
    for (const auto& row : rows)
        std::cout << line(row) << '\n';
}

int run_components(unsigned n, const std::string& format) {
    auto comps = enumerate_components(n);
    if (format == "json-records") {
        for (const Component& c : comps) {
            ordered_json rec;
            rec["n"] = c.n;
            rec["k"] = c.k;
            rec["omega"] = c.omega_label();
            rec["omega_num"] = jint(c.omega.num());
            rec["omega_den"] = jint(c.omega.den());
            rec["d"] = c.d();
            rec["g"] = c.g();
            rec["dim"] = c.dim();
            std::cout << rec.dump() << '\n';
        }
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (const Component& c : comps)
        rows.push_back({std::to_string(c.n), std::to_string(c.k), c.omega_label(),
                        c.omega.num().str(), c.omega.den().str(), std::to_string(c.d()),
                        std::to_string(c.g()), std::to_string(c.dim())});
    const std::vector<std::string> header = {"n", "k", "omega", "omega_num",
                                             "omega_den", "d", "g", "dim"};
    if (format == "csv")
        emit_csv(header, rows);
    else
        emit_table(header, rows);
    return 0;
}

int run_betti(unsigned n, bool oracle, unsigned oracle_bound, const std::string& format) {
    GradedDims a = graded_invariants(n);
    BettiTable b = betti_table(n);
    Int g = total_dim(n);
    Int g_half = g / 2;

    std::vector<Int> oracle_dims;
    bool match = true;
    if (oracle) {
        oracle_dims = graded_invariants_oracle(n, oracle_bound).dims;
        match = oracle_dims == a.dims;
    }
    const std::string verdict = match ? "match" : "mismatch";

    if (format == "json-records") {
        for (unsigned j = 0; j <= n; ++j) {
            ordered_json rec;
            rec["n"] = n;
            rec["j"] = j;
            rec["a"] = jint(a.dims[j]);
            rec["b"] = j < n ? jint(b.betti[j]) : ordered_json(nullptr);
            if (oracle)
                rec["oracle_a"] = jint(oracle_dims[j]);
            std::cout << rec.dump() << '\n';
        }
        ordered_json summary;
        summary["n"] = n;
        summary["g"] = jint(g);
        summary["g_half"] = jint(g_half);
        if (oracle)
            summary["verdict"] = verdict;
        std::cout << summary.dump() << '\n';
    } else if (format == "csv") {
        std::vector<std::string> header = {"n", "j", "a", "b", "g", "g_half"};
        if (oracle) {
            header.push_back("oracle_a");
            header.push_back("verdict");
        }
        std::vector<std::vector<std::string>> rows;
        for (unsigned j = 0; j <= n; ++j) {
            std::vector<std::string> row = {std::to_string(n), std::to_string(j),
                                            a.dims[j].str(),
                                            j < n ? b.betti[j].str() : std::string(),
                                            g.str(), g_half.str()};
            if (oracle) {
                row.push_back(oracle_dims[j].str());
                row.push_back(verdict);
            }
            rows.push_back(std::move(row));
        }
        emit_csv(header, rows);
    } else {
        auto print_row = [n](const char* label, const std::vector<Int>& xs) {
            std::cout << label;
            for (const Int& x : xs)
                std::cout << ' ' << x.str();
            std::cout << '\n';
        };
        print_row("a:", a.dims);
        print_row("b:", b.betti);
        if (oracle)
            print_row("oracle:", oracle_dims);
        std::cout << "g(" << n << ") = " << g.str() << '\n';
        std::cout << "g(" << n << ")/2 = " << g_half.str() << '\n';
        if (oracle)
            std::cout << "verdict: " << verdict << '\n';
    }
    return match ? 0 : 1;
}

int run_ktheory(unsigned n, const std::string& format) {
    KRanks r = ktheory_ranks(n);
    if (format == "json-records") {
        ordered_json summary;
        summary["n"] = n;
        summary["k0"] = jint(r.k0);
        summary["k1"] = jint(r.k1);
        std::cout << summary.dump() << '\n';
        for (const auto& row : r.breakdown) {
            ordered_json rec;
            rec["n"] = n;
            rec["k"] = row.component.k;
            rec["omega"] = row.component.omega_label();
            rec["omega_num"] = jint(row.component.omega.num());
            rec["omega_den"] = jint(row.component.omega.den());
            rec["d"] = row.component.d();
            rec["g"] = row.component.g();
            rec["dim"] = row.component.dim();
            rec["h_ev"] = jint(row.h_ev);
            rec["h_odd"] = jint(row.h_odd);
            std::cout << rec.dump() << '\n';
        }
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : r.breakdown)
        rows.push_back({std::to_string(n), r.k0.str(), r.k1.str(),
                        std::to_string(row.component.k), row.component.omega_label(),
                        std::to_string(row.component.d()), std::to_string(row.component.g()),
                        std::to_string(row.component.dim()), row.h_ev.str(), row.h_odd.str()});
    const std::vector<std::string> header = {"n", "k0", "k1", "k", "omega",
                                             "d", "g", "dim", "h_ev", "h_odd"};
    if (format == "csv") {
        emit_csv(header, rows);
    } else {
        std::cout << "K0 = " << r.k0.str() << "  K1 = " << r.k1.str() << '\n';
        emit_table(header, rows);
    }
    return 0;
}

int run_isotropy(const std::string& spec, const std::string& format) {
    ProjectivePoint p = parse_point(spec);
    const unsigned n = p.n();
    Isotropy iso = p.isotropy();
    unsigned fibre = fibre_cardinality(p);

    struct Membership {
        unsigned k;
        Component component;
    };
    std::vector<Membership> memberships;
    for (unsigned k = 1; k <= n; ++k)
        if (auto omega = p.membership(k % n))
            memberships.push_back({k, Component{n, k, *omega}});

    if (format == "json-records") {
        ordered_json summary;
        summary["n"] = n;
        summary["point"] = p.str();
        summary["order"] = iso.order;
        summary["generator"] = iso.generator;
        summary["fibre"] = fibre;
        std::cout << summary.dump() << '\n';
        for (const auto& m : memberships) {
            ordered_json rec;
            rec["k"] = m.k;
            rec["omega"] = m.component.omega_label();
            rec["omega_num"] = jint(m.component.omega.num());
            rec["omega_den"] = jint(m.component.omega.den());
            rec["d"] = m.component.d();
            rec["g"] = m.component.g();
            rec["dim"] = m.component.dim();
            std::cout << rec.dump() << '\n';
        }
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& m : memberships)
        rows.push_back({std::to_string(n), p.str(), std::to_string(iso.order),
                        std::to_string(iso.generator), std::to_string(fibre),
                        std::to_string(m.k), m.component.omega_label()});
    const std::vector<std::string> header = {"n",     "point", "order", "generator",
                                             "fibre", "k",     "omega"};
    if (format == "csv") {
        emit_csv(header, rows);
    } else {
        std::cout << "point: " << p.str() << '\n';
        std::cout << "order: " << iso.order << "  generator: gamma^" << iso.generator
                  << "  fibre: " << fibre << '\n';
        std::cout << "components:" << '\n';
        for (const auto& m : memberships)
            std::cout << "  k = " << m.k << "  omega = " << m.component.omega_label() << '\n';
    }
    return 0;
}

int run_sequence(unsigned limit, const std::string& format) {
    std::vector<Int> terms(limit);
    for (unsigned n = 1; n <= limit; ++n)
        terms[n - 1] = total_dim_half(n);
    if (format == "json-records") {
        for (unsigned n = 1; n <= limit; ++n) {
            ordered_json rec;
            rec["n"] = n;
            rec["g_half"] = jint(terms[n - 1]);
            std::cout << rec.dump() << '\n';
        }
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (unsigned n = 1; n <= limit; ++n)
        rows.push_back({std::to_string(n), terms[n - 1].str()});
    if (format == "csv")
        emit_csv({"n", "g_half"}, rows);
    else
        emit_table({"n", "g_half"}, rows);
    return 0;
}

int run_check(unsigned n, unsigned M, const std::string& format) {
    CheckReport r = check_square(n, M);
    if (format == "json-records") {
        ordered_json rec;
        rec["n"] = r.n;
        rec["M"] = r.M;
        rec["lattice_size"] = r.lattice_size;
        rec["orbit_count"] = r.orbit_count;
        rec["label_count"] = r.label_count;
        rec["pass"] = r.pass;
        rec["witness"] = r.witness;
        std::cout << rec.dump() << '\n';
    } else if (format == "csv") {
        emit_csv({"n", "M", "lattice_size", "orbit_count", "label_count", "pass", "witness"},
                 {{std::to_string(r.n), std::to_string(r.M), std::to_string(r.lattice_size),
                   std::to_string(r.orbit_count), std::to_string(r.label_count),
                   r.pass ? "true" : "false", r.witness}});
    } else {
        std::cout << "lattice: " << r.lattice_size << " points, " << r.orbit_count
                  << " orbits, " << r.label_count << " labels\n";
        if (r.pass)
            std::cout << "PASS\n";
        else
            std::cout << "FAIL: " << r.witness << '\n';
    }
    return r.pass ? 0 : 1;
}

int run_admissible(std::uint64_t N, std::uint64_t p, std::uint64_t q,
                   const std::string& format) {
    LocalFieldData field(p, q);
    auto ns = admissible_n(N, field);
    if (format == "json-records") {
        for (std::uint64_t n : ns) {
            ordered_json rec;
            rec["N"] = N;
            rec["p"] = p;
            rec["q"] = q;
            rec["n"] = n;
            std::cout << rec.dump() << '\n';
        }
        return 0;
    }
    if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (std::uint64_t n : ns)
            rows.push_back({std::to_string(N), std::to_string(p), std::to_string(q),
                            std::to_string(n)});
        emit_csv({"N", "p", "q", "n"}, rows);
    } else {
        std::cout << "admissible n:";
        for (std::uint64_t n : ns)
            std::cout << ' ' << n;
        std::cout << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of cyclic quotients of the projective torus"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "table";
    const auto format_check = CLI::IsMember({"table", "json-records", "csv"});
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(format_check);
    };

    unsigned n = 1, M = 1, limit = 18, oracle_bound = kDefaultOracleBound;
    bool oracle = false;
    std::string point_spec;
    std::uint64_t bigN = 1, p = 2, q = 2;

    CLI::App* components = app.add_subcommand("components", "list the components for a given n");
    components->add_option("n", n, "number of torus coordinates")->required()
        ->check(CLI::PositiveNumber);
    add_format(components);

    CLI::App* betti = app.add_subcommand(
        "betti", "graded invariants and Betti numbers of the ordinary quotient");
    betti->add_option("n", n, "number of torus coordinates")->required()
        ->check(CLI::PositiveNumber);
    betti->add_flag("--oracle", oracle, "also run the brute-force subset count");
    betti->add_option("--oracle-bound", oracle_bound, "largest n the brute force accepts");
    add_format(betti);

    CLI::App* ktheory = app.add_subcommand(
        "ktheory", "K-theory ranks via the even/odd cohomology correspondence");
    ktheory->add_option("n", n, "number of torus coordinates")->required()
        ->check(CLI::PositiveNumber);
    add_format(ktheory);

    CLI::App* isotropy = app.add_subcommand(
        "isotropy", "isotropy, fibre size and component memberships of a point");
    isotropy->add_option("point", point_spec, "comma-separated fractions, e.g. 0,1/3,2/3")
        ->required();
    add_format(isotropy);

    CLI::App* sequence = app.add_subcommand("sequence", "table of n, g(n)/2");
    sequence->add_option("--limit", limit, "largest n")->check(CLI::PositiveNumber);
    add_format(sequence);

    CLI::App* check = app.add_subcommand(
        "check", "exhaustive labelling/projection checks over a rational lattice");
    check->add_option("n", n, "number of torus coordinates")->required()
        ->check(CLI::PositiveNumber);
    check->add_option("M", M, "angle denominator of the lattice")->required()
        ->check(CLI::PositiveNumber);
    add_format(check);

    CLI::App* admissible = app.add_subcommand(
        "admissible", "divisors n of N for which the unit group has a character of order n");
    admissible->add_option("N", bigN, "matrix size")->required()->check(CLI::PositiveNumber);
    admissible->add_option("p", p, "residue characteristic")->required()
        ->check(CLI::PositiveNumber);
    admissible->add_option("q", q, "residue cardinality")->required()
        ->check(CLI::PositiveNumber);
    add_format(admissible);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2, --help/--version exit 0
    }

    try {
        if (components->parsed())
            return run_components(n, format);
        if (betti->parsed())
            return run_betti(n, oracle, oracle_bound, format);
        if (ktheory->parsed())
            return run_ktheory(n, format);
        if (isotropy->parsed())
            return run_isotropy(point_spec, format);
        if (sequence->parsed())
            return run_sequence(limit, format);
        if (check->parsed())
            return run_check(n, M, format);
        if (admissible->parsed())
            return run_admissible(bigN, p, q, format);
    } catch (const BoundExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
