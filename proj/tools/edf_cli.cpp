// edf command line: verify family files, emit constructions, classify
// parameter sets, run sweeps, search groups exhaustively, and dump the
// inequality region grids.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 usage or
// parse error, 3 search budget exhausted before completion.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edf/edf.hpp"

namespace {

using namespace edf;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        out.push_back(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty number");
    std::uint64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string(what) + ": bad number \"" + s + "\"");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > (std::uint64_t(1) << 40)) throw std::invalid_argument(std::string(what) + ": number too large");
    }
    return v;
}

// Field orders arrive as "13" or "GF(13)".
std::uint32_t parse_order_arg(const std::string& s) {
    if (!s.empty() && (s[0] == 'G' || s[0] == 'g')) return parse_field_spec(s);
    return static_cast<std::uint32_t>(parse_uint(s, "order"));
}

std::string defect_text(const FiniteAbelianGroup& g, const TallyDefect& d) {
    std::ostringstream ss;
    if (d.set_index == TallyDefect::npos)
        ss << "tally at " << format_element(g, d.element);
    else
        ss << "external tally from set " << d.set_index + 1 << " at " << format_element(g, d.element);
    ss << " is " << d.count << ", expected " << d.expected;
    return ss.str();
}

int cmd_verify(const std::string& path, const std::string& mode) {
    SetFamily fam = read_family_file(path);
    const auto& g = fam.group;
    if (mode == "sedf") {
        SedfVerdict v = verify_sedf(fam);
        if (!v.is_sedf) {
            std::cout << "not an SEDF: " << v.reason;
            if (v.defect) std::cout << " (" << defect_text(g, *v.defect) << ")";
            std::cout << "\n";
            return kExitPropertyFails;
        }
        std::cout << "SEDF(" << g.order() << "," << fam.sets.size() << "," << v.k << "," << v.lambda << ")\n";
        return kExitOk;
    }
    if (mode == "edf") {
        EdfVerdict v = verify_edf(fam);
        if (!v.is_edf) {
            std::cout << "not an EDF: " << v.reason;
            if (v.defect) std::cout << " (" << defect_text(g, *v.defect) << ")";
            std::cout << "\n";
            return kExitPropertyFails;
        }
        std::cout << "EDF(" << g.order() << "," << fam.sets.size() << "," << v.k << "," << v.lambda << ")\n";
        return kExitOk;
    }
    if (mode == "gsedf") {
        GsedfVerdict v = verify_gsedf(fam);
        if (!v.is_gsedf) {
            std::cout << "not a GSEDF: " << v.reason;
            if (v.defect) std::cout << " (" << defect_text(g, *v.defect) << ")";
            std::cout << "\n";
            return kExitPropertyFails;
        }
        std::cout << "GSEDF(" << g.order() << "," << fam.sets.size() << ";";
        for (std::size_t i = 0; i < fam.sets.size(); ++i) std::cout << (i ? "," : "") << fam.sets[i].size();
        std::cout << ";";
        for (std::size_t i = 0; i < v.lambdas.size(); ++i) std::cout << (i ? "," : "") << v.lambdas[i];
        std::cout << ")\n";
        return kExitOk;
    }
    if (mode == "pds") {
        if (fam.sets.size() != 1)
            throw std::invalid_argument("pds mode expects a family file with exactly one set");
        PdsVerdict v = verify_pds(fam.sets[0], g);
        if (!v.is_pds) {
            std::cout << "not a PDS: " << v.reason;
            if (v.defect) std::cout << " (" << defect_text(g, *v.defect) << ")";
            std::cout << "\n";
            return kExitPropertyFails;
        }
        std::cout << "PDS(" << v.params.v << "," << v.params.k << "," << v.params.lambda << ","
                  << v.params.mu << ")";
        if (v.regular) std::cout << " regular";
        if (v.paley_type) std::cout << " paley";
        std::cout << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown mode \"" + mode + "\"");
}

std::vector<std::uint32_t> parse_slopes(const std::string& list) {
    std::vector<std::uint32_t> slopes;
    for (const auto& tok : split_commas(list)) {
        if (tok == "inf")
            slopes.push_back(slope_infinity);
        else
            slopes.push_back(static_cast<std::uint32_t>(parse_uint(tok, "slope")));
    }
    return slopes;
}

GroupSubset read_single_set(const std::string& path) {
    SetFamily fam = read_family_file(path);
    if (fam.sets.size() != 1) throw std::invalid_argument("expected a family file with exactly one set");
    return GroupSubset{fam.group, fam.sets[0]};
}

void emit_subset(const GroupSubset& s) {
    write_family(std::cout, SetFamily{s.group, {s.elements}});
}

std::string verdict_text(const FeasibilityVerdict& v) {
    std::ostringstream ss;
    ss << to_string(v.status);
    if (v.status == Feasibility::infeasible)
        ss << " [" << format_rules(v.rules_fired) << "]";
    else if (v.witness)
        ss << " [" << to_string(*v.witness) << "]";
    if (!v.note.empty()) ss << " (" << v.note << ")";
    return ss.str();
}

int cmd_classify(const std::vector<std::string>& args, bool gsedf, const std::string& group_spec,
                 const std::string& catalog) {
    if (gsedf) {
        if (args.size() != 3)
            throw std::invalid_argument("gsedf form needs: classify --gsedf <n> <k1,..,km> <l1,..,lm>");
        GsedfParams p;
        p.n = parse_uint(args[0], "n");
        for (const auto& t : split_commas(args[1])) p.ks.push_back(parse_uint(t, "k_i"));
        for (const auto& t : split_commas(args[2])) p.lambdas.push_back(parse_uint(t, "lambda_i"));
        FeasibilityVerdict v = classify_gsedf(p);
        std::cout << verdict_text(v) << "\n";
        if (!catalog.empty()) append_catalog(catalog, make_catalog_record(p, v, group_spec));
        return kExitOk;
    }
    if (args.size() != 4) throw std::invalid_argument("classify needs: classify <n> <m> <k> <lambda>");
    SedfParams p{parse_uint(args[0], "n"), parse_uint(args[1], "m"), parse_uint(args[2], "k"),
                 parse_uint(args[3], "lambda")};
    FeasibilityVerdict v = classify(p);
    std::cout << verdict_text(v) << "\n";
    if (!catalog.empty()) append_catalog(catalog, make_catalog_record(p, v, group_spec));
    return kExitOk;
}

int cmd_sweep(std::uint64_t n_max, std::optional<std::uint64_t> lambda_filter,
              std::optional<std::uint64_t> m_filter, const std::string& status_filter,
              const std::string& format, const std::string& catalog) {
    std::vector<std::string> statuses = status_filter.empty() ? std::vector<std::string>{}
                                                              : split_commas(status_filter);
    auto keep_status = [&](Feasibility f) {
        if (statuses.empty()) return true;
        for (const auto& s : statuses)
            if (s == to_string(f)) return true;
        return false;
    };
    const bool csv = format == "csv";
    std::uint64_t shown = 0, n_exists = 0, n_infeasible = 0, n_open = 0;
    if (csv) std::cout << "n,m,k,lambda,status,rules,witness\n";
    for (const auto& [p, v] : enumerate_feasible(n_max)) {
        if (lambda_filter && p.lambda != *lambda_filter) continue;
        if (m_filter && p.m != *m_filter) continue;
        if (!keep_status(v.status)) continue;
        ++shown;
        if (v.status == Feasibility::exists) ++n_exists;
        if (v.status == Feasibility::infeasible) ++n_infeasible;
        if (v.status == Feasibility::open) ++n_open;
        const char sep = csv ? ',' : ' ';
        std::string rules = format_rules(v.rules_fired);
        if (csv)  // keep the column count stable when several rules fired
            for (auto& c : rules)
                if (c == ',') c = ';';
        std::cout << p.n << sep << p.m << sep << p.k << sep << p.lambda << sep << to_string(v.status)
                  << sep << rules << sep << (v.witness ? to_string(*v.witness) : "-") << "\n";
        if (!catalog.empty()) append_catalog(catalog, make_catalog_record(p, v));
    }
    if (!csv)
        std::cout << "# " << shown << " parameter sets: " << n_exists << " exist, " << n_infeasible
                  << " infeasible, " << n_open << " open\n";
    return kExitOk;
}

Symmetry parse_symmetry(const std::string& s) {
    if (s == "none") return Symmetry::none;
    if (s == "translation") return Symmetry::translation;
    if (s == "translation-negation" || s == "translation_negation") return Symmetry::translation_negation;
    if (s == "translation-negation-units" || s == "translation_negation_units")
        return Symmetry::translation_negation_units;
    throw std::invalid_argument("unknown symmetry \"" + s + "\"");
}

int cmd_search(const std::string& group_spec, std::uint64_t m, std::uint64_t k, std::uint64_t lambda,
               const std::string& symmetry, std::optional<std::uint64_t> limit,
               std::optional<std::uint64_t> budget, const std::string& out_dir) {
    FiniteAbelianGroup g = parse_group(group_spec);
    SearchOptions opts;
    opts.symmetry = parse_symmetry(symmetry);
    opts.result_limit = limit;
    opts.node_budget = budget;
    SearchReport rep = search_sedf(g, static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(k),
                                   static_cast<std::uint32_t>(lambda), opts);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < rep.families.size(); ++i) {
            std::ostringstream name;
            name << "sedf_" << format_group(g) << "_m" << m << "_k" << k << "_l" << lambda << "_";
            name.fill('0');
            name.width(4);
            name << i;
            std::filesystem::path p = std::filesystem::path(out_dir) / (name.str() + ".txt");
            write_family_file(p.string(), rep.families[i]);
            std::cout << "wrote " << p.string() << "\n";
        }
    } else {
        for (const auto& fam : rep.families) {
            write_family(std::cout, fam);
            std::cout << "\n";
        }
    }
    std::cout << "found=" << rep.families.size() << " nodes=" << rep.nodes_explored << " exhausted="
              << (rep.exhausted ? "yes" : "no") << "\n";
    return rep.exhausted ? kExitOk : kExitBudget;
}

int cmd_region(std::uint64_t lambda, std::uint64_t m_max, std::uint64_t k_max, const std::string& format) {
    auto cells = region_grid(lambda, m_max, k_max);
    if (format == "csv") {
        std::cout << "k,m,violated\n";
        for (const auto& c : cells) std::cout << c.k << ',' << c.m << ',' << (c.violated ? 1 : 0) << "\n";
        return kExitOk;
    }
    std::cout << "# lambda=" << lambda << ", rows m=3.." << m_max << ", cols k=3.." << k_max
              << ", '#' = inequality violated\n";
    std::size_t idx = 0;
    for (std::uint64_t m = 3; m <= m_max; ++m) {
        std::cout << "m=" << m << (m < 10 ? "  " : " ");
        for (std::uint64_t k = 3; k <= k_max; ++k) std::cout << (cells[idx++].violated ? '#' : '.');
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_crosscheck(const std::string& group_spec) {
    FiniteAbelianGroup g = parse_group(group_spec);
    CrosscheckReport rep = characterization_crosscheck(g);
    std::cout << "partitions=" << rep.partitions_checked << " sedf=" << rep.sedf_partitions
              << " agree=" << (rep.agree ? "yes" : "no") << "\n";
    if (!rep.agree) {
        std::cout << rep.counterexamples.size() << " counterexample(s); first D1:";
        for (GroupElement e : rep.counterexamples.front()) std::cout << ' ' << format_element(g, e);
        std::cout << "\n";
        return kExitPropertyFails;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"external difference family toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "verify a family file against a difference property");
    std::string verify_file, verify_mode = "sedf";
    verify->add_option("file", verify_file, "family file")->required();
    verify->add_option("--mode", verify_mode, "sedf|edf|gsedf|pds (default sedf)");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a known construction as a family file");
    construct->require_subcommand(1);
    std::uint64_t c_k = 0, c_n = 0;
    std::string c_q, c_file, c_slopes;
    auto* c_exp = construct->add_subcommand("exponential", "(k^2+1,2,k,1)-SEDF in Z_{k^2+1}");
    c_exp->add_option("k", c_k, "set size k >= 1")->required();
    auto* c_single = construct->add_subcommand("singleton", "(n,n,1,1)-SEDF of singletons in Z_n");
    c_single->add_option("n", c_n, "group order n >= 2")->required();
    auto* c_cyc = construct->add_subcommand("cyclotomic", "(q,2,(q-1)/2,(q-1)/4)-SEDF from squares of GF(q)");
    c_cyc->add_option("q", c_q, "prime power q = 1 mod 4 (or GF(q))")->required();
    auto* c_paley = construct->add_subcommand("paley-lines", "Paley PDS from lines of GF(q)^2");
    c_paley->add_option("q", c_q, "odd prime power (or GF(q))")->required();
    c_paley->add_option("--slopes", c_slopes, "comma list of (q+1)/2 distinct slopes from 0..q-1,inf");
    auto* c_comp = construct->add_subcommand("pds-complement", "complement of a Paley PDS");
    c_comp->add_option("file", c_file, "single-set family file holding the PDS")->required();
    auto* c_p2s = construct->add_subcommand("pds-to-sedf", "SEDF {D, G* \\ D} from a Paley PDS");
    c_p2s->add_option("file", c_file, "single-set family file holding the PDS")->required();
    auto* c_gpair = construct->add_subcommand("gsedf-pair", "(n,2;1,n-1;1,1)-GSEDF in Z_n");
    c_gpair->add_option("n", c_n, "group order n >= 2")->required();
    construct->add_subcommand("gsedf-z7", "(7,4;1,1,1,4;1,1,1,2)-GSEDF in Z_7");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a parameter set");
    std::vector<std::string> cl_args;
    bool cl_gsedf = false;
    std::string cl_group = "-", cl_catalog = "edf-catalog.txt";
    classify_cmd->add_option("params", cl_args, "n m k lambda (or, with --gsedf: n k1,..,km l1,..,lm)")
        ->expected(-1);
    classify_cmd->add_flag("--gsedf", cl_gsedf, "classify a generalized parameter vector");
    classify_cmd->add_option("--group", cl_group, "group spec to record with the verdict");
    classify_cmd->add_option("--catalog", cl_catalog, "catalog file to append (empty to skip)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "classify every parameter set up to n_max");
    std::uint64_t sw_nmax = 0;
    std::optional<std::uint64_t> sw_lambda, sw_m;
    std::string sw_status, sw_format = "text", sw_catalog;
    sweep->add_option("n_max", sw_nmax, "largest group order")->required();
    sweep->add_option("--lambda", sw_lambda, "keep only this multiplicity");
    sweep->add_option("--m", sw_m, "keep only this set count");
    sweep->add_option("--status", sw_status, "comma list of statuses to keep");
    sweep->add_option("--format", sw_format, "text|csv");
    sweep->add_option("--catalog", sw_catalog, "catalog file to append");

    // search
    auto* search = app.add_subcommand("search", "exhaustive SEDF search over one group");
    std::string se_group, se_symmetry = "translation", se_out;
    std::uint64_t se_m = 0, se_k = 0, se_lambda = 0;
    std::optional<std::uint64_t> se_limit, se_budget;
    search->add_option("group", se_group, "group spec, e.g. Z3xZ3")->required();
    search->add_option("m", se_m, "number of sets")->required();
    search->add_option("k", se_k, "set size")->required();
    search->add_option("lambda", se_lambda, "multiplicity")->required();
    search->add_option("--symmetry", se_symmetry, "none|translation|translation-negation|translation-negation-units");
    search->add_option("--limit", se_limit, "stop after this many families");
    search->add_option("--budget", se_budget, "node budget");
    search->add_option("--out", se_out, "write family files into this directory");

    // region
    auto* region = app.add_subcommand("region", "inequality violation grid for a fixed lambda");
    std::uint64_t rg_lambda = 0, rg_mmax = 50, rg_kmax = 50;
    std::string rg_format = "text";
    region->add_option("lambda", rg_lambda, "multiplicity >= 2")->required();
    region->add_option("--m-max", rg_mmax, "largest m (default 50)");
    region->add_option("--k-max", rg_kmax, "largest k (default 50)");
    region->add_option("--format", rg_format, "text|csv");

    // crosscheck
    auto* crosscheck = app.add_subcommand("crosscheck", "partition-type SEDF vs Paley PDS equivalence");
    std::string cc_group;
    crosscheck->add_option("group", cc_group, "group spec with |G| = 1 mod 4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(verify_file, verify_mode);
        if (app.got_subcommand(construct)) {
            if (construct->got_subcommand(c_exp))
                write_family(std::cout, exponential_sedf(static_cast<std::uint32_t>(c_k)));
            else if (construct->got_subcommand(c_single))
                write_family(std::cout, singleton_sedf(static_cast<std::uint32_t>(c_n)));
            else if (construct->got_subcommand(c_cyc))
                write_family(std::cout, cyclotomic_half_sedf(parse_order_arg(c_q)));
            else if (construct->got_subcommand(c_paley))
                emit_subset(paley_lines_pds(parse_order_arg(c_q),
                                            c_slopes.empty() ? std::vector<std::uint32_t>{}
                                                             : parse_slopes(c_slopes)));
            else if (construct->got_subcommand(c_comp))
                emit_subset(pds_complement(read_single_set(c_file)));
            else if (construct->got_subcommand(c_p2s))
                write_family(std::cout, paley_pds_to_sedf(read_single_set(c_file)));
            else if (construct->got_subcommand(c_gpair))
                write_family(std::cout, gsedf_two_set(static_cast<std::uint32_t>(c_n)));
            else
                write_family(std::cout, gsedf_z7());
            return kExitOk;
        }
        if (app.got_subcommand(classify_cmd)) return cmd_classify(cl_args, cl_gsedf, cl_group, cl_catalog);
        if (app.got_subcommand(sweep))
            return cmd_sweep(sw_nmax, sw_lambda, sw_m, sw_status, sw_format, sw_catalog);
        if (app.got_subcommand(search))
            return cmd_search(se_group, se_m, se_k, se_lambda, se_symmetry, se_limit, se_budget, se_out);
        if (app.got_subcommand(region)) return cmd_region(rg_lambda, rg_mmax, rg_kmax, rg_format);
        if (app.got_subcommand(crosscheck)) return cmd_crosscheck(cc_group);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
