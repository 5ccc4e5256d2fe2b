#include "dlcoh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <sstream>

#include "dlcoh/characters.hpp"
#include "dlcoh/cohomology.hpp"
#include "dlcoh/errors.hpp"
#include "dlcoh/json_io.hpp"
#include "dlcoh/tilting.hpp"
#include "dlcoh/verify.hpp"

namespace dlcoh {

namespace {

struct Globals {
    std::string format = "table";
    int p = 2;
    long seed = 0;  // accepted, unused: every computation is deterministic
};

bool json(const Globals& g) { return g.format == "json"; }

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

void print_report(std::ostream& out, const Report& r) {
    if (!r.title.empty()) out << r.title << "\n";
    for (const auto& c : r.checks)
        out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")")
            << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

int report_exit(const Report& r) { return r.ok() ? 0 : 1; }

void print_table(std::ostream& out, const CohomologyTable& t) {
    const bool modular = t.ring.kind == RingTag::Kind::Modular;
    out << "X_{" << t.n << "," << t.d << "}";
    if (!t.mu.empty()) out << " with coefficients " << t.mu.pretty();
    out << "  ring " << t.ring.to_string() << "  normalization " << to_string(t.normalization);
    if (t.unverified_override) out << "  [torsion-freeness assumed, unverified]";
    out << "\n" << pad("degree", 7) << pad("eigen_exp", 11);
    if (modular) out << pad("mod m", 7);
    out << "  labels\n";
    for (const auto& [k, v] : t.table.entries()) {
        out << pad(std::to_string(k.first), 7) << pad(std::to_string(k.second), 11);
        if (modular) out << pad(std::to_string(((k.second % t.ring.m) + t.ring.m) % t.ring.m), 7);
        out << "  " << v.to_string() << "\n";
    }
    if (t.modular_structure) {
        const auto& ms = *t.modular_structure;
        out << "non-simple module in degree " << ms.degree << ": Omega^" << ms.omega_exponent << " k, socle S_"
            << ms.socle_edge << " = " << ms.socle_label.pretty() << ", other factor S_" << ms.other_edge << " = "
            << (ms.other_label ? ms.other_label->pretty() : std::string("unresolved")) << "\n";
    }
    print_report(out, t.cross_checks);
}

Json structure_json(const ModularStructure& ms) {
    Json j;
    j["degree"] = ms.degree;
    j["eigen_exp"] = ms.eigen_exp;
    j["omega_exponent"] = ms.omega_exponent;
    j["socle_edge"] = ms.socle_edge;
    j["other_edge"] = ms.other_edge;
    j["socle_label"] = ms.socle_label.to_string();
    j["other_label"] = ms.other_label ? Json(ms.other_label->to_string()) : Json(nullptr);
    return j;
}

std::string hom_table_text(const HomDimTable& t) {
    std::string s;
    for (const auto& [a, h] : t.dims) s += (s.empty() ? "" : "  ") + std::to_string(a) + ":" + std::to_string(h);
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohomology tables of X_{n,d} and Brauer-line tilting checks", "dlcoh"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--p", g.p, "prime field for module computations")->check(CLI::Range(2, 65521));
    app.add_option("--seed", g.seed, "accepted for harness compatibility; ignored");

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "cohomology table of X_{n,d}");
    int n = 0, d = 0, m = 0, r = 1, j = 0, max_n = 0, max_mu = 6, labels_n = 0, only = 0;
    std::string mu_text, norm_text;
    bool assume = false;
    coh->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    coh->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    coh->add_option("--mu", mu_text, "coefficient partition of n-d, e.g. 2+1");
    coh->add_option("--mod-m", m, "order of q modulo l")->check(CLI::PositiveNumber);
    coh->add_option("--normalization", norm_text)->check(CLI::IsMember({"X", "C"}));
    coh->add_flag("--assume-torsion-free", assume, "override the torsion-free gate (unverified)");

    auto* les = app.add_subcommand("check-les", "Euler oracle sweep for the restriction triangle");
    les->add_option("--max-n", max_n)->required()->check(CLI::Range(2, 20));
    les->add_option("--max-mu", max_mu)->check(CLI::Range(0, 10));

    auto* inv = app.add_subcommand("invariants", "structural checks on the trivial-coefficient table");
    inv->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    inv->add_option("--d", d)->required()->check(CLI::PositiveNumber);

    auto* blk = app.add_subcommand("blocks", "unipotent Phi_d-blocks of GL_n");
    blk->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    blk->add_option("--d", d)->required()->check(CLI::PositiveNumber);

    auto* br = app.add_subcommand("brauer", "Brauer line with m edges and multiplicity r");
    br->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    br->add_option("--r", r)->check(CLI::PositiveNumber);
    br->add_option("--labels", labels_n, "label edges by partitions of N");

    auto* til = app.add_subcommand("tilting", "partial-tilting check of the truncated resolution E");
    til->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    til->add_option("--r", r)->check(CLI::PositiveNumber);
    til->add_option("--j", j)->required()->check(CLI::PositiveNumber);

    auto* dlc = app.add_subcommand("dl-complex", "model of the mod-l cohomology complex");
    dlc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    dlc->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    dlc->add_option("--mod-m", m)->required()->check(CLI::PositiveNumber);
    dlc->add_option("--r", r)->check(CLI::PositiveNumber);
    dlc->add_flag("--assume-torsion-free", assume, "override the torsion-free gate (unverified)");

    auto* ver = app.add_subcommand("verify-all", "run the acceptance sweep");
    ver->add_option("--only", only, "run a single criterion")->check(CLI::Range(1, kCriteria));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (!is_prime(static_cast<std::uint32_t>(g.p))) {
        err << "error: --p must be prime\n";
        return 2;
    }
    const auto p = static_cast<Matrix::Scalar>(g.p);

    try {
        if (coh->parsed()) {
            CohomologyTable t;
            if (m > 0) {
                if (!mu_text.empty()) throw InvalidArgument("--mu is not supported together with --mod-m");
                t = cohomology_mod_ell(n, d, m, assume);
            } else if (!mu_text.empty()) {
                t = cohomology_with_coeffs(n, d, Partition::parse(mu_text));
            } else {
                t = cohomology_trivial_table(n, d);
            }
            if (!norm_text.empty()) {
                const Normalization want = normalization_from_string(norm_text);
                if (want != t.normalization)
                    t = want == Normalization::C ? to_C_normalization(t) : to_X_normalization(t);
            }
            if (json(g)) {
                Json jt = to_json(t);
                if (!t.mu.empty()) jt["mu"] = t.mu.to_string();
                if (t.modular_structure) jt["modular_structure"] = structure_json(*t.modular_structure);
                if (t.unverified_override) jt["unverified_override"] = true;
                jt["cross_checks"] = to_json(t.cross_checks);
                out << jt.dump(2) << "\n";
            } else {
                print_table(out, t);
            }
            return report_exit(t.cross_checks);
        }
        if (les->parsed()) {
            auto rep = les_sweep(max_n, max_mu);
            if (json(g)) {
                out << to_json(rep).dump(2) << "\n";
            } else {
                out << rep.title << ": " << rep.checks.size() - rep.failures() << "/" << rep.checks.size()
                    << " balanced\n";
                for (const auto& c : rep.checks)
                    if (!c.passed) out << "  [FAIL] " << c.name << "  " << c.detail << "\n";
            }
            return report_exit(rep);
        }
        if (inv->parsed()) {
            auto rep = table_invariants(n, d);
            if (json(g)) out << to_json(rep).dump(2) << "\n";
            else print_report(out, rep);
            return report_exit(rep);
        }
        if (blk->parsed()) {
            auto blocks = phi_d_blocks(n, d);
            if (json(g)) {
                Json jb = Json::array();
                for (const auto& b : blocks) {
                    Json members = Json::array();
                    for (const auto& l : b.members) members.push_back(l.to_string());
                    jb.push_back({{"core", b.core.to_string()}, {"defect_zero", b.defect_zero}, {"members", members}});
                }
                out << Json{{"n", n}, {"d", d}, {"blocks", jb}}.dump(2) << "\n";
            } else {
                for (const auto& b : blocks) {
                    out << "core " << b.core.pretty() << (b.defect_zero ? " (defect zero)" : "") << ":";
                    for (const auto& l : b.members) out << " " << l.pretty();
                    out << "\n";
                }
            }
            return 0;
        }
        if (br->parsed()) {
            auto line = build_line(m, r, p);
            auto table = projective_hom_table(line);
            auto rep = line_invariants(line);
            std::optional<EdgeLabels> labels;
            if (labels_n > 0) labels = edge_partition_labels(labels_n, m);
            if (json(g)) {
                Json jl;
                jl["m"] = m;
                jl["r"] = r;
                jl["p"] = g.p;
                jl["tree"] = line.picture();
                jl["hom_dims"] = table;
                if (labels) {
                    Json pinned = Json::object();
                    for (const auto& [e, l] : labels->pinned) pinned[std::to_string(e)] = l.to_string();
                    jl["labels"] = {{"n", labels_n}, {"pinned", pinned}, {"unresolved", labels->unresolved}};
                }
                jl["checks"] = to_json(rep);
                out << jl.dump(2) << "\n";
            } else {
                out << line.picture() << "\n" << "dim Hom(P_t, P_s):\n";
                for (std::size_t t = 0; t < table.size(); ++t) {
                    out << "  P" << t + 1 << ":";
                    for (int v : table[t]) out << " " << v;
                    out << "\n";
                }
                if (labels) {
                    for (const auto& [e, l] : labels->pinned) out << "  S_" << e << " <-> " << l.pretty() << "\n";
                    for (int e : labels->unresolved) out << "  S_" << e << " <-> unresolved\n";
                }
                print_report(out, rep);
            }
            return report_exit(rep);
        }
        if (til->parsed()) {
            auto line = build_line(m, r, p);
            auto E = truncated_E(line, j);
            auto v = is_partial_tilting(E);
            if (json(g)) {
                Json jv{{"m", m}, {"r", r}, {"j", j}, {"p", g.p}, {"complex", E.describe()},
                        {"partial_tilting", v.partial_tilting}, {"hom_dims", to_json(v.table)}};
                if (v.witness_shift) jv["witness"] = {{"shift", *v.witness_shift}, {"support", v.witness}};
                out << jv.dump(2) << "\n";
            } else {
                out << "E = " << E.describe() << "\n";
                out << "partial-tilting: " << (v.partial_tilting ? "true" : "false") << "\n";
                out << "dim Hom(E, E[a]): " << hom_table_text(v.table) << "\n";
                if (v.witness_shift) out << "witness: " << v.witness << "\n";
            }
            return v.partial_tilting ? 0 : 1;
        }
        if (dlc->parsed()) {
            auto rep = full_complex_model(n, d, m, r, p, assume);
            if (json(g)) out << to_json(rep).dump(2) << "\n";
            else print_report(out, rep);
            return report_exit(rep);
        }
        if (ver->parsed()) {
            std::vector<CriterionResult> res;
            if (only) res.push_back(run_criterion(only));
            else res = run_all_criteria();
            bool all = true;
            Json jr = Json::array();
            for (const auto& c : res) {
                all = all && c.passed();
                if (json(g))
                    jr.push_back({{"criterion", c.id}, {"title", c.title}, {"passed", c.passed()}, {"exact", c.exact},
                                  {"seconds", c.seconds}, {"limit_seconds", c.limit ? Json(*c.limit) : Json(nullptr)},
                                  {"cells", c.cells}, {"failed_cells", c.failed_cells}, {"detail", c.detail}});
                else
                    out << format_line(c) << "\n";
            }
            if (json(g)) out << jr.dump(2) << "\n";
            return all ? 0 : 1;
        }
    } catch (const UnsupportedRegime& e) {
        err << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionViolation& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 1;
    } catch (const Inconsistency& e) {
        err << "inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const ModelViolation& e) {
        err << "model violation: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace dlcoh
