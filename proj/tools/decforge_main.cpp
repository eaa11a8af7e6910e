#include "decforge/errors.hpp"
#include "decforge/json_io.hpp"
#include "decforge/verify.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace decforge;
using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// extension source shared by several subcommands: inline tokens or a file
struct ExtArgs {
    std::vector<std::string> tokens;
    std::string file;

    KummerExtension load() const {
        if (!file.empty()) return extension_from_json(read_json_file(file));
        if (tokens.empty())
            throw ParseError(
                "no extension given (inline base=... gens=... or a file)");
        return extension_from_inline(tokens);
    }
};

std::string group_str(const std::vector<std::int64_t>& factors) {
    if (factors.empty()) return "1";
    std::string out;
    for (std::int64_t f : factors) {
        if (!out.empty()) out += " x ";
        out += "Z" + std::to_string(f);
    }
    return out;
}

void print_class(const BrauerClass& c) {
    if (c.is_trivial()) {
        std::cout << "trivial (all invariants zero)\n";
        return;
    }
    std::cout << "exp = " << c.exponent() << "\n";
    for (const auto& [q, v] : c.invariants())
        std::cout << "  " << std::left << std::setw(8) << q.str() << " "
                  << v.str() << "\n";
}

void emit_class(const BrauerClass& c, bool json_out) {
    if (json_out)
        std::cout << class_to_json(c).dump() << "\n";
    else
        print_class(c);
}

int run_analyze(const KummerExtension& k, bool json_out) {
    std::vector<LocalData> rows;
    for (std::int64_t p : k.ramified_candidates())
        for (const Place& q : places_above(k.base(), p))
            rows.push_back(local_data(k, q));

    std::vector<std::int64_t> parts;
    std::vector<Place> bad;
    for (const LocalData& ld : rows)
        if (ld.is_bad) {
            bad.push_back(ld.place);
            parts.push_back(ld.d_q / ld.c_q);
        }
    FinAbGroup quotient =
        parts.empty() ? FinAbGroup() : FinAbGroup(parts);

    if (json_out) {
        json jr;
        jr["command"] = "analyze";
        jr["extension"] = extension_to_json(k);
        jr["g"] = group_to_json(k.galois_group());
        jr["order"] = k.galois_group().order();
        jr["t"] = k.exponent();
        json jp = json::array();
        for (const LocalData& ld : rows)
            jp.push_back({{"place", place_to_json(ld.place)},
                          {"gq", group_to_json(FinAbGroup(
                                     ld.g_q.invariant_factors()))},
                          {"c", ld.c_q},
                          {"d", ld.d_q},
                          {"bad", ld.is_bad}});
        jr["places"] = jp;
        json jb = json::array();
        for (const Place& q : bad) jb.push_back(place_to_json(q));
        jr["bad"] = jb;
        jr["quotient"] = group_to_json(quotient);
        std::cout << jr.dump() << "\n";
        return 0;
    }

    std::cout << "K = " << base_name(k.base()) << "(";
    bool first = true;
    for (const KummerGen& g : k.gens()) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << g.a.str() << "^(1/" << g.n << ")";
    }
    std::cout << ")\n";
    std::cout << "G = " << group_str(k.galois_group().factors())
              << ", |G| = " << k.galois_group().order()
              << ", t = " << k.exponent() << "\n\n";
    std::cout << std::left << std::setw(10) << "place" << std::right
              << std::setw(7) << "|G_q|" << std::setw(6) << "c_q"
              << std::setw(6) << "d_q" << std::setw(6) << "bad" << "\n";
    for (const LocalData& ld : rows)
        std::cout << std::left << std::setw(10) << ld.place.str()
                  << std::right << std::setw(7) << ld.g_q.order()
                  << std::setw(6) << ld.c_q << std::setw(6) << ld.d_q
                  << std::setw(6) << (ld.is_bad ? "yes" : "no") << "\n";
    std::cout << "\n";
    if (bad.empty()) {
        std::cout << "no bad primes; Dec = Br_t\n";
    } else {
        std::cout << "bad places:";
        for (const Place& q : bad) std::cout << " " << q.str();
        std::cout << "\nBr_t/Dec = " << group_str(quotient.factors()) << "\n";
    }
    return 0;
}

int run_chebotarev(const KummerExtension& k, std::int64_t bound,
                   bool json_out) {
    const FinAbGroup& g = k.galois_group();
    std::vector<Elem> chars;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        Elem u = g.zero();
        u[j] = 1;
        chars.push_back(u);
    }

    std::set<std::int64_t> ram = k.ramified_candidates();
    for (std::int64_t p = 2; p <= bound; ++p) {
        if (!is_prime(p) || ram.count(p)) continue;
        for (const Place& q : places_above(k.base(), p)) {
            bool ok = true;
            for (std::size_t j = 0; j < chars.size(); ++j)
                ok = ok && local_degree_cyclic(k, chars[j], q) ==
                               g.factors()[j];
            if (!ok) continue;

            if (json_out) {
                json jr;
                jr["command"] = "chebotarev";
                jr["p"] = p;
                jr["place"] = place_to_json(q);
                json jc = json::array();
                for (const Elem& chi : chars)
                    jc.push_back({{"a", k.kummer_element(chi).str()},
                                  {"n", k.char_order(chi)},
                                  {"degree", local_degree_cyclic(k, chi, q)}});
                jr["characters"] = jc;
                std::cout << jr.dump() << "\n";
            } else {
                std::cout << "place " << q.str() << " above " << p << "\n";
                for (const Elem& chi : chars)
                    std::cout << "  " << k.kummer_element(chi).str() << "^(1/"
                              << k.char_order(chi) << "): local degree "
                              << local_degree_cyclic(k, chi, q) << "\n";
            }
            return 0;
        }
    }
    fail(Err::SearchExhausted,
         "no place with all generators fully inert below bound " +
             std::to_string(bound));
}

int run_verify(bool json_out) {
    std::vector<CheckResult> results = run_verify_suite();
    int failed = 0;
    for (const CheckResult& r : results) failed += !r.pass;
    if (json_out) {
        json jr;
        jr["command"] = "verify";
        json jc = json::array();
        for (const CheckResult& r : results)
            jc.push_back(
                {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        jr["checks"] = jc;
        jr["failed"] = failed;
        std::cout << jr.dump() << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
            std::cout << "      " << r.detail << "\n";
        }
        std::cout << results.size() << " checks, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact relative Brauer group and Dec computations for "
                 "abelian Kummer extensions of Q and Q(i)"};
    app.require_subcommand(1);
    bool json_out = false;
    ExtArgs ext;
    std::int64_t bound = 1000000;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "local data, bad places and the Br_t/Dec quotient");
    analyze->add_option("spec", ext.tokens,
                        "inline extension: base=Qi gens=5^2,14^4");
    analyze->add_option("--input", ext.file, "extension as a JSON file");
    analyze->add_flag("--json", json_out, "machine-readable output");

    CLI::App* cls =
        app.add_subcommand("class", "Brauer class arithmetic and predicates");
    cls->require_subcommand(1);
    std::string in_file;
    std::vector<std::string> in_files;
    std::string sym_a, sym_b, sym_base;
    std::int64_t sym_n = 2;

    CLI::App* c_make =
        cls->add_subcommand("make", "validate a class and echo it");
    c_make->add_option("--input", in_file, "class JSON file")->required();
    c_make->add_flag("--json", json_out, "machine-readable output");

    CLI::App* c_add = cls->add_subcommand("add", "sum of classes");
    c_add->add_option("--input", in_files, "class JSON files")->required();
    c_add->add_flag("--json", json_out, "machine-readable output");

    CLI::App* c_exp = cls->add_subcommand("exp", "exponent = index");
    c_exp->add_option("--input", in_file, "class JSON file")->required();
    c_exp->add_flag("--json", json_out, "machine-readable output");

    CLI::App* c_split = cls->add_subcommand(
        "split-by", "is the class split by the extension?");
    c_split->add_option("--input", in_file, "class JSON file")->required();
    c_split->add_option("spec", ext.tokens,
                        "inline extension: base=Qi gens=5^2,13^2");
    c_split->add_option("--ext", ext.file, "extension as a JSON file");
    c_split->add_flag("--json", json_out, "machine-readable output");

    CLI::App* c_dec = cls->add_subcommand(
        "in-dec", "is the class decomposable for the extension?");
    c_dec->add_option("--input", in_file, "class JSON file")->required();
    c_dec->add_option("spec", ext.tokens,
                      "inline extension: base=Qi gens=5^2,13^2");
    c_dec->add_option("--ext", ext.file, "extension as a JSON file");
    c_dec->add_flag("--json", json_out, "machine-readable output");

    CLI::App* c_decomp = cls->add_subcommand(
        "decompose", "split a decomposable class into cyclic pieces");
    c_decomp->add_option("--input", in_file, "class JSON file")->required();
    c_decomp->add_option("spec", ext.tokens,
                         "inline extension: base=Qi gens=5^2,13^2");
    c_decomp->add_option("--ext", ext.file, "extension as a JSON file");
    c_decomp->add_option("--bound", bound, "prime scan bound")
        ->envname("DECFORGE_BOUND");
    c_decomp->add_flag("--json", json_out, "machine-readable output");

    CLI::App* c_sym =
        cls->add_subcommand("symbol", "invariants of a symbol algebra");
    c_sym->add_option("--a", sym_a, "first slot")->required();
    c_sym->add_option("--b", sym_b, "second slot")->required();
    c_sym->add_option("--n", sym_n, "degree (2, or 4 over Q(i))")->required();
    c_sym->add_option("--base", sym_base,
                      "base field (default: Qi when n = 4, else Q)");
    c_sym->add_flag("--json", json_out, "machine-readable output");

    CLI::App* cheb = app.add_subcommand(
        "chebotarev",
        "least place where every generator stays fully inert");
    cheb->add_option("spec", ext.tokens,
                     "inline extension: base=Qi gens=5^2,13^2");
    cheb->add_option("--input", ext.file, "extension as a JSON file");
    cheb->add_option("--bound", bound, "prime scan bound")
        ->envname("DECFORGE_BOUND");
    cheb->add_flag("--json", json_out, "machine-readable output");

    CLI::App* verify =
        app.add_subcommand("verify", "run the golden example suite");
    verify->add_flag("--json", json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(ext.load(), json_out);
        if (cheb->parsed()) return run_chebotarev(ext.load(), bound, json_out);
        if (verify->parsed()) return run_verify(json_out);

        if (c_make->parsed()) {
            emit_class(class_from_json(read_json_file(in_file)), json_out);
            return 0;
        }
        if (c_add->parsed()) {
            BrauerClass sum =
                class_from_json(read_json_file(in_files.front()));
            for (std::size_t i = 1; i < in_files.size(); ++i)
                sum = sum + class_from_json(read_json_file(in_files[i]));
            emit_class(sum, json_out);
            return 0;
        }
        if (c_exp->parsed()) {
            BrauerClass c = class_from_json(read_json_file(in_file));
            if (json_out)
                std::cout << json{{"command", "exp"}, {"exp", c.exponent()}}
                                 .dump()
                          << "\n";
            else
                std::cout << c.exponent() << "\n";
            return 0;
        }
        if (c_split->parsed() || c_dec->parsed()) {
            BrauerClass c = class_from_json(read_json_file(in_file));
            KummerExtension k = ext.load();
            bool res = c_split->parsed() ? is_split_by(c, k) : is_in_dec(c, k);
            const char* cmd = c_split->parsed() ? "split-by" : "in-dec";
            if (json_out)
                std::cout << json{{"command", cmd}, {"result", res}}.dump()
                          << "\n";
            else
                std::cout << (res ? "true" : "false") << "\n";
            return 0;
        }
        if (c_decomp->parsed()) {
            BrauerClass c = class_from_json(read_json_file(in_file));
            KummerExtension k = ext.load();
            std::vector<BrauerClass> parts = decompose_into_cyclic(c, k, bound);
            if (json_out) {
                json ja = json::array();
                for (const BrauerClass& x : parts)
                    ja.push_back(class_to_json(x));
                std::cout << ja.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    std::cout << "piece " << i + 1 << ":\n";
                    print_class(parts[i]);
                }
            }
            return 0;
        }
        if (c_sym->parsed()) {
            json js{{"a", sym_a}, {"b", sym_b}, {"n", sym_n}};
            if (!sym_base.empty()) js["base"] = sym_base;
            SymbolAlgebra s = symbol_from_json(js);
            BrauerClass c = symbol_to_class(s);
            if (!json_out)
                std::cout << "(" << s.a.str() << ", " << s.b.str() << ")_"
                          << s.n << " over " << base_name(s.a.base()) << "\n";
            emit_class(c, json_out);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error (" << err_name(e.kind()) << "): " << e.what()
                  << "\n";
        return 1;
    }
    return 2;
}
