// urodlab: command-line front end for the calculators and verifications.
// Exit status: 0 all checks pass, 1 a verified mismatch, 2 usage or domain error.

#include "urodlab/acceptance.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace urodlab;

namespace {

struct Options {
    std::string sys = "A1", grading = "principal";
    std::string t, k, ell, nu = "0", mu = "0", order = "10", cutoff = "4", n = "2", radius = "50";
    std::string variant = "eigen";
    std::string format = "text", out;
    bool manifest = false, perturb = false;
};

struct Outcome {
    Json body;
    bool pass = true;
};

Rational need(const std::string& value, const std::string& flag) {
    if (value.empty()) throw UsageError("missing " + flag);
    return parse_rational(value);
}

long need_long(const std::string& value, const std::string& flag) {
    Rational r = need(value, flag);
    if (!is_integer(r)) throw UsageError(flag + " must be an integer");
    return to_long(r.get_num());
}

/// "0", "w<i>" (fundamental weight, 1-based) or comma-separated Dynkin labels.
Weight parse_weight(const RootSystemPtr& sys, const std::string& text) {
    if (text == "0") return zero_weight(sys);
    if (text == "varpi" && sys->rank == 1) return fundamental_weight(sys, 0);
    if (text.size() > 1 && text[0] == 'w') {
        long i = std::stol(text.substr(1));
        if (i < 1 || i > sys->rank) throw UsageError("no fundamental weight " + text);
        return fundamental_weight(sys, static_cast<int>(i - 1));
    }
    std::vector<Rational> labels;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        labels.push_back(parse_rational(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return make_weight(sys, labels);
}

Json series_json(const QSeries& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({rational_json(e), rational_json(c)});
    return {{"order", rational_json(s.order())}, {"terms", terms}};
}

Outcome run_cc(const Options& o) {
    auto sys = parse_root_system(o.sys);
    auto g = parse_grading(sys, o.grading);
    Rational t = need(o.t, "--t");
    Json j{{"sys", sys->name()}, {"grading", g.label()}, {"t", rational_json(t)}, {"c", rational_json(w_cc(sys, g, t))}};
    if (!o.ell.empty()) {
        CcContext ctx(sys, g, t);
        Rational ell = parse_rational(o.ell);
        j["ell"] = rational_json(ell);
        j["urod_c"] = rational_json(urod_cc(ctx, ell));
        j["total_c"] = rational_json(total_cc(ctx, ell));
    }
    return {j, true};
}

Outcome run_char(const Options& o) {
    auto sys = parse_root_system(o.sys);
    Rational order = need(o.order, "--order");
    if (!o.k.empty()) {
        long k = need_long(o.k, "--k");
        auto lambda = parse_weight(sys, o.mu);
        return {{{"kind", "weyl-kac"}, {"sys", sys->name()}, {"k", k}, {"mu", weight_json(lambda)},
                 {"series", series_json(weyl_kac_character(lambda, k, order))}},
                true};
    }
    auto g = parse_grading(sys, o.grading);
    auto nu = parse_weight(sys, o.nu);
    return {{{"kind", "level1-urod"}, {"sys", sys->name()}, {"grading", g.label()}, {"nu", weight_json(coset_class(nu))},
             {"series", series_json(level1_urod_character(sys, nu, g.x0, order))}},
            true};
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        out.push_back(parse_rational(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Outcome run_verify(const std::string& what, const Options& o) {
    auto sys = parse_root_system(o.sys);
    Rational order = need(o.order, "--order");
    if (what == "cc-identity") {
        if (o.t.empty()) throw UsageError("missing --t");
        auto rep = cc_identity_suite(sys, parse_grading(sys, o.grading), parse_list(o.t));
        return {to_json(rep), rep.all_pass};
    }
    auto nu = parse_weight(sys, o.nu);
    DecompReport rep;
    if (what == "urod") {
        rep = verify_urod_decomposition(nu, order, {.perturb = o.perturb});
    } else if (what == "adm") {
        rep = verify_admissible_decomposition(nu, order, {.perturb = o.perturb});
    } else if (what == "verma") {
        rep = verify_verma_decomposition(need(o.t, "--t"), parse_rational(o.mu), nu, order, {.only_first_term = o.perturb});
    } else {
        rep = verify_freefield_decomposition(need(o.t, "--t"), parse_rational(o.mu), nu, order);
    }
    return {to_json(rep), rep.equal};
}

Outcome run_brst(const std::string& what, const Options& o) {
    Rational k = need(o.k, "--k");
    long n = need_long(o.cutoff, "--cutoff");
    if (what == "virasoro") {
        auto v = brst::urod_virasoro_check(k, n);
        return {to_json(v), v.brackets_ok && v.l0_matches_h_urod && v.c == -5};
    }
    auto sp = brst::build_state_space(k, n);
    Rational t = o.t.empty() ? Rational(1) : parse_rational(o.t);
    if (what == "dims") {
        Json blocks = Json::array();
        for (const auto& [key, b] : sp.blocks) blocks.push_back({{"w", key.first}, {"i", key.second}, {"dimC", b.size()}});
        auto fd = brst::factor_dims(n);
        return {{{"k", rational_json(k)}, {"N", n}, {"blocks", blocks},
                 {"factors", {{"vk", fd.vk}, {"l1", fd.l1}, {"ghost", fd.ghost}}}},
                true};
    }
    if (what == "cohomology") {
        auto s = brst::brst_summary(sp, t);
        bool ok = s.nilpotent && s.h_nonzero_degree_vanishes && s.euler_ok && s.intertwining && s.virasoro_ok;
        return {to_json(s), ok};
    }
    // intertwine
    auto q0 = brst::build_qt(sp, 0), qt = brst::build_qt(sp, t);
    brst::BlockOp phi;
    if (o.variant == "eigen") phi = brst::build_automorphism(sp, t).phi;
    else if (o.variant == "naive") phi = brst::closed_form_phi(sp, t, brst::F2Image::Naive);
    else if (o.variant == "corrected") phi = brst::closed_form_phi(sp, t, brst::F2Image::Corrected);
    else throw UsageError("unknown --variant " + o.variant);
    auto rep = brst::verify_intertwining(sp, phi, q0, qt);
    Json failures = Json::array();
    for (auto [w, i] : rep.failures) failures.push_back({{"w", w}, {"i", i}});
    return {{{"k", rational_json(k)}, {"t", rational_json(t)}, {"N", n}, {"variant", o.variant}, {"pass", rep.pass},
             {"blocks_checked", rep.blocks_checked}, {"failures", failures}},
            rep.pass};
}

Outcome run_fusion(const std::string& what, const Options& o) {
    auto sys = parse_root_system(o.sys);
    if (what == "integrality") {
        auto rep = integrality_scan(sys, need_long(o.n, "--n"), need(o.radius, "--radius"));
        return {to_json(rep), rep.pass()};
    }
    FusionRing R = what == "table" ? wzw_fusion(sys, need_long(o.k, "--k")) : transport(sys, need(o.t, "--t"));
    auto axioms = check_ring_axioms(R);
    Json j = to_json(R);
    j["axioms"] = to_json(axioms);
    return {j, axioms.ok()};
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

std::string render(const Json& j, const std::string& format, const std::string& csv) {
    if (format == "json") return dump(j);
    if (format == "csv" && !csv.empty()) return csv;
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::string sep = format == "text" ? " = " : format == "tsv" ? "\t" : ",";
    std::string s;
    for (const auto& [k, v] : rows) s += k + sep + v + "\n";
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"urodlab: exact checks for Urod algebras and W-algebra decompositions"};
    app.set_help_all_flag("--help-all");
    Options o;
    app.add_flag("--manifest", o.manifest, "run the full acceptance suite and print one JSON document");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "tsv", "csv"}));
    app.add_option("--out", o.out, "write output to this file instead of stdout");

    auto common = [&](CLI::App* c) {
        c->add_option("--sys", o.sys, "root system, e.g. A1, A2, D4");
        c->add_option("--grading", o.grading, "principal or partition=a,b,...");
        c->add_option("--t", o.t, "shifted level k + h^vee as p/q (comma list for cc-identity)");
        c->add_option("--k", o.k, "level (brst: sampled k; fusion table and char: integer level)");
        c->add_option("--ell", o.ell, "shifted level l + h^vee");
        c->add_option("--nu", o.nu, "weight: 0, w<i>, varpi, or Dynkin labels a,b,...");
        c->add_option("--mu", o.mu, "weight or A1 label");
        c->add_option("--order", o.order, "q-series order");
        c->add_option("--cutoff", o.cutoff, "BRST weight cutoff N");
        c->add_option("--n", o.n, "extension index n");
        c->add_option("--radius", o.radius, "scan radius for (lambda, lambda)");
        c->add_option("--variant", o.variant, "automorphism: eigen, naive, corrected");
        c->add_flag("--perturb", o.perturb, "negative control");
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "tsv", "csv"}));
        c->add_option("--out", o.out, "write output to this file instead of stdout");
    };

    auto* cc = app.add_subcommand("cc", "W-algebra and Urod central charges");
    common(cc);
    auto* chr = app.add_subcommand("char", "level-1 Urod or Weyl-Kac characters");
    common(chr);
    std::string which;
    auto* verify = app.add_subcommand("verify", "decomposition identities");
    verify->add_option("which", which)->required()->check(CLI::IsMember({"urod", "verma", "freefield", "adm", "cc-identity"}));
    common(verify);
    auto* brst = app.add_subcommand("brst", "the sl2 BRST complex");
    brst->add_option("which", which)->required()->check(CLI::IsMember({"dims", "cohomology", "intertwine", "virasoro"}));
    common(brst);
    auto* fus = app.add_subcommand("fusion", "fusion rings");
    fus->add_option("which", which)->required()->check(CLI::IsMember({"table", "transport", "integrality"}));
    common(fus);
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Outcome result;
    std::string csv;
    try {
        if (o.manifest) {
            auto j = acceptance::manifest(acceptance::run_all());
            result = {j, j["all_pass"].get<bool>()};
            if (o.format == "text") o.format = "json";
        } else if (cc->parsed()) {
            result = run_cc(o);
        } else if (chr->parsed()) {
            result = run_char(o);
        } else if (verify->parsed()) {
            result = run_verify(which, o);
        } else if (brst->parsed()) {
            result = run_brst(which, o);
        } else if (fus->parsed()) {
            result = run_fusion(which, o);
        } else {
            std::cerr << app.help();
            return 2;
        }
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (o.format == "csv" && result.body.contains("blocks") && result.body["blocks"].is_array()) {
        std::ostringstream s;
        s << "w,i,dimC,dimH\n";
        for (const auto& b : result.body["blocks"])
            s << b["w"].get<long>() << ',' << b["i"].get<long>() << ',' << b["dimC"].get<long>() << ','
              << (b.contains("dimH") ? std::to_string(b["dimH"].get<long>()) : "") << '\n';
        csv = s.str();
    }
    std::string text = render(result.body, o.format, csv);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << o.out << "\n";
            return 2;
        }
        f << text;
    }
    return result.pass ? 0 : 1;
}
