// vclab: build, audit and certify (d+1)-uniform set systems of bounded
// VC-dimension.  Exit codes: 0 success/holds, 1 property violated or
// falsification found, 2 usage error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vclab/binom.hpp"
#include "vclab/extremal.hpp"
#include "vclab/polycert.hpp"
#include "vclab/search.hpp"
#include "vclab/shadow.hpp"
#include "vclab/structure.hpp"
#include "vclab/sunflower.hpp"
#include "vclab/vc.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Witnessed input when the file carries " | b1 b2 ..." witness columns,
// otherwise canonical selection at d = k-1.
vclab::WitnessedFamily load_witnessed(const std::string& path) {
    std::string text = slurp(path);
    if (text.find('|') != std::string::npos) return vclab::parse_witnessed_family(text);
    vclab::Family f = vclab::parse_family(text);
    if (!f.uniform_rank || *f.uniform_rank < 1)
        throw std::runtime_error("witnessed input needs a k-uniform family");
    return vclab::select_witnesses(f, *f.uniform_rank - 1);
}

vclab::SubsetMask parse_element_list(int n, const std::string& csv) {
    vclab::SubsetMask m(n);
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        m.add(std::stoi(tok));
    }
    return m;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("VCLAB_BUDGET_NODES")) return std::strtoull(env, nullptr, 10);
    return 0;  // unlimited
}

json family_json(const vclab::Family& f) {
    json out = json::array();
    for (const auto& m : f.members) out.push_back(m.elements());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and search toolkit for uniform set systems of bounded VC-dimension"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "generate a named construction");
    std::string c_kind, c_out, c_assignment = "all1";
    int c_n = 0, c_d = 2, c_k = 3, c_center = 1;
    std::uint64_t c_seed = 1;
    bool c_json = false, c_witnessed = false;
    construct->add_option("--kind", c_kind, "star|mz|stability|hamming|complete")->required();
    construct->add_option("--n", c_n)->required();
    construct->add_option("--d", c_d);
    construct->add_option("--k", c_k);
    construct->add_option("--center", c_center);
    construct->add_option("--assignment", c_assignment, "mz split: all1|all2|random");
    construct->add_option("--seed", c_seed);
    construct->add_option("--out", c_out)->required();
    construct->add_flag("--witnessed", c_witnessed, "emit witness columns (mz only)");
    construct->add_flag("--json", c_json);
    construct->callback([&]() {
        vclab::Family fam;
        if (c_kind == "star") {
            fam = vclab::star(c_n, c_k, c_center);
        } else if (c_kind == "mz") {
            vclab::MzAssignment a = c_assignment == "all1"   ? vclab::mz_assignment_constant(c_n, c_d, 1)
                                    : c_assignment == "all2" ? vclab::mz_assignment_constant(c_n, c_d, 2)
                                                             : vclab::mz_assignment_random(c_n, c_d, c_seed);
            vclab::WitnessedFamily w = vclab::mz_family(c_n, c_d, a);
            fam = w.family;
            if (c_witnessed || c_out.ends_with(".wfam")) {
                vclab::write_witnessed_family_file(c_out, w);
                if (c_json)
                    std::cout << json{{"kind", c_kind}, {"n", c_n}, {"d", c_d}, {"size", w.size()}, {"out", c_out}}.dump(2)
                              << "\n";
                else
                    std::cout << "wrote " << w.size() << " members (witnessed) to " << c_out << "\n";
                return;
            }
        } else if (c_kind == "stability") {
            fam = vclab::stability_example(c_n, c_d);
        } else if (c_kind == "hamming") {
            fam = vclab::hamming_ball(c_n, c_d);
        } else if (c_kind == "complete") {
            fam = vclab::complete_family(c_n, c_k);
        } else {
            throw CLI::ValidationError("--kind", "unknown construction: " + c_kind);
        }
        vclab::write_family_file(c_out, fam);
        if (c_json)
            std::cout << json{{"kind", c_kind}, {"n", fam.n}, {"size", fam.size()}, {"out", c_out}}.dump(2) << "\n";
        else
            std::cout << "wrote " << fam.size() << " members to " << c_out << "\n";
    });

    // ---- vcdim ----
    auto* vcdim = app.add_subcommand("vcdim", "exact VC-dimension of a family file");
    std::string v_file;
    bool v_json = false;
    vcdim->add_option("file", v_file)->required();
    vcdim->add_flag("--json", v_json);
    vcdim->callback([&]() {
        vclab::Family f = vclab::read_family_file(v_file);
        int dim = vclab::vc_dimension(f);
        if (v_json) {
            json j{{"n", f.n}, {"m", f.size()}, {"vc_dimension", dim}};
            if (f.uniform_rank) j["k"] = *f.uniform_rank;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << dim << "\n";
        }
    });

    // ---- witness ----
    auto* witness = app.add_subcommand("witness", "select maximal witnesses (certifies VC <= d)");
    std::string w_file, w_out;
    int w_d = -1;
    bool w_json = false;
    witness->add_option("file", w_file)->required();
    witness->add_option("--d", w_d, "defaults to k-1");
    witness->add_option("--out", w_out, "write witnessed family file");
    witness->add_flag("--json", w_json);
    witness->callback([&]() {
        vclab::Family f = vclab::read_family_file(w_file);
        int d = w_d >= 0 ? w_d : (f.uniform_rank ? *f.uniform_rank - 1 : -1);
        if (d < 0) throw CLI::ValidationError("--d", "d is required for non-uniform input");
        try {
            vclab::WitnessedFamily w = vclab::select_witnesses(f, d);
            if (!w_out.empty()) vclab::write_witnessed_family_file(w_out, w);
            if (w_json) {
                json wit = json::array();
                for (std::size_t i = 0; i < w.size(); ++i)
                    wit.push_back({{"member", w.family.members[i].elements()},
                                   {"witness", w.witnesses[i].elements()}});
                std::cout << json{{"n", f.n}, {"d", d}, {"m", f.size()}, {"witnesses", wit}}.dump(2) << "\n";
            } else {
                std::cout << vclab::serialize_witnessed_family(w);
            }
        } catch (const vclab::shattered_member_error& e) {
            std::cerr << e.what() << "\n";
            exit_code = kExitViolated;
        }
    });

    // ---- links ----
    auto* links_cmd = app.add_subcommand("links", "link decomposition X_v / Y_v and identities");
    std::string l_file;
    int l_v = 0;
    bool l_json = false;
    links_cmd->add_option("file", l_file)->required();
    links_cmd->add_option("--v", l_v, "report a single vertex");
    links_cmd->add_flag("--json", l_json);
    links_cmd->callback([&]() {
        vclab::WitnessedFamily w = load_witnessed(l_file);
        if (l_v > 0) {
            vclab::LinkPair lp = vclab::links(w, l_v);
            if (l_json)
                std::cout << json{{"v", l_v}, {"x_size", lp.X.size()}, {"y_size", lp.Y.size()}}.dump(2) << "\n";
            else
                std::cout << "|X_" << l_v << "| = " << lp.X.size() << ", |Y_" << l_v << "| = "
                          << lp.Y.size() << "\n";
            return;
        }
        vclab::LinkAuditReport r = vclab::link_audit(w);
        if (l_json)
            std::cout << vclab::to_json_string(r) << "\n";
        else
            std::cout << (r.holds ? "link identities hold" : "LINK IDENTITY VIOLATION") << "\n";
        if (!r.holds) exit_code = kExitViolated;
    });

    // ---- transversal ----
    auto* transversal = app.add_subcommand("transversal", "near-transversal J selection");
    std::string t_file;
    int t_s = 1;
    bool t_json = false;
    transversal->add_option("file", t_file)->required();
    transversal->add_option("--s", t_s)->required();
    transversal->add_flag("--json", t_json);
    transversal->callback([&]() {
        vclab::WitnessedFamily w = load_witnessed(t_file);
        vclab::SubsetMask J = vclab::select_transversal(w, t_s);
        if (t_json)
            std::cout << json{{"s", t_s}, {"J", J.elements()}}.dump(2) << "\n";
        else
            std::cout << "J = " << J.to_string() << "\n";
    });

    // ---- audit ----
    auto* audit = app.add_subcommand("audit", "six-part partition audit (or --s1 analysis)");
    std::string a_file, a_j;
    bool a_json = false, a_s1 = false;
    audit->add_option("file", a_file)->required();
    audit->add_option("--J", a_j, "comma separated, e.g. 1,2");
    audit->add_flag("--s1", a_s1, "run the good/bad element analysis instead");
    audit->add_flag("--json", a_json);
    audit->callback([&]() {
        vclab::WitnessedFamily w = load_witnessed(a_file);
        if (a_s1) {
            vclab::S1Report r = vclab::analyze_s1(w);
            if (a_json)
                std::cout << vclab::to_json_string(r) << "\n";
            else
                std::cout << "case: " << vclab::to_string(r.situation) << ", good elements: "
                          << r.good.size() << "\n";
            return;
        }
        if (a_j.empty()) throw CLI::ValidationError("--J", "partition audit needs --J");
        vclab::SubsetMask J = parse_element_list(w.family.n, a_j);
        vclab::PartitionAudit r = vclab::partition_TJ(w, J);
        if (a_json)
            std::cout << vclab::to_json_string(r) << "\n";
        else {
            std::cout << "parts:";
            for (const auto& p : r.parts) std::cout << " " << p.size();
            std::cout << ", deficiency " << r.deficiency << (r.holds ? ", claims hold" : ", CLAIM VIOLATION")
                      << "\n";
        }
        if (!r.holds) exit_code = kExitViolated;
    });

    // ---- shadow ----
    auto* shadow_cmd = app.add_subcommand("shadow", "s-shadow of a uniform family");
    std::string sh_file, sh_out;
    int sh_s = 1;
    bool sh_json = false;
    shadow_cmd->add_option("file", sh_file)->required();
    shadow_cmd->add_option("--s", sh_s)->required();
    shadow_cmd->add_option("--out", sh_out);
    shadow_cmd->add_flag("--json", sh_json);
    shadow_cmd->callback([&]() {
        vclab::Family f = vclab::read_family_file(sh_file);
        vclab::Family g = vclab::shadow_s(f, sh_s);
        if (!sh_out.empty()) vclab::write_family_file(sh_out, g);
        if (sh_json)
            std::cout << json{{"s", sh_s}, {"size", g.size()}}.dump(2) << "\n";
        else
            std::cout << g.size() << "\n";
    });

    // ---- kk ----
    auto* kk = app.add_subcommand("kk", "Kruskal-Katona checks (Lovasz, exact, partial)");
    std::string k_file, k_partial_g;
    bool k_json = false;
    int k_k = 0;
    std::vector<std::uint64_t> k_exact;
    kk->add_option("file", k_file, "family for the Lovasz-form check");
    kk->add_option("--exact-min", k_exact, "m k s: exact minimum s-shadow value")->expected(3);
    kk->add_option("--partial", k_partial_g, "d-uniform family g for the partial shadow check");
    kk->add_option("--k", k_k, "cover multiplicity for --partial");
    kk->add_flag("--json", k_json);
    kk->callback([&]() {
        if (!k_exact.empty()) {
            std::uint64_t v = vclab::exact_kk_min(k_exact[0], static_cast<int>(k_exact[1]),
                                                  static_cast<int>(k_exact[2]));
            if (k_json)
                std::cout << json{{"m", k_exact[0]}, {"k", k_exact[1]}, {"s", k_exact[2]}, {"min_shadow", v}}.dump(2)
                          << "\n";
            else
                std::cout << v << "\n";
            return;
        }
        if (k_file.empty()) throw CLI::ValidationError("file", "kk needs a family file or --exact-min");
        vclab::Family f = vclab::read_family_file(k_file);
        if (!k_partial_g.empty()) {
            if (k_k < 1) throw CLI::ValidationError("--k", "--partial requires --k >= 1");
            vclab::Family g = vclab::read_family_file(k_partial_g);
            vclab::PartialShadowReport r = vclab::check_partial_shadow(f, g, k_k);
            if (k_json)
                std::cout << json{{"precondition_ok", r.precondition_ok},
                                  {"x", r.x},
                                  {"bound", r.bound},
                                  {"g_size", r.g_size},
                                  {"holds", r.holds}}.dump(2)
                          << "\n";
            else
                std::cout << (r.precondition_ok ? (r.holds ? "holds" : "VIOLATED")
                                                : "precondition failed at " + r.offending->to_string())
                          << "\n";
            if (!r.precondition_ok) exit_code = kExitUsage;
            else if (!r.holds) exit_code = kExitViolated;
            return;
        }
        vclab::KkReport r = vclab::check_kk(f);
        if (k_json)
            std::cout << json{{"m", r.family_size},
                              {"alpha", r.alpha},
                              {"shadow_size", r.shadow_size},
                              {"lovasz_bound", r.lovasz_bound},
                              {"holds", r.holds}}.dump(2)
                      << "\n";
        else
            std::cout << (r.holds ? "holds" : "VIOLATED") << " (shadow " << r.shadow_size
                      << ", bound " << r.lovasz_bound << ")\n";
        if (!r.holds) exit_code = kExitViolated;
    });

    // ---- sunflower ----
    auto* sun = app.add_subcommand("sunflower", "sunflower search and witness-class audits");
    std::string s_file, s_audit, s_centered;
    int s_r = 3, s_d = 2;
    bool s_json = false;
    sun->add_option("file", s_file, "family to search for an r-sunflower");
    sun->add_option("--r", s_r);
    sun->add_option("--audit", s_audit, "witnessed family: audit witness classes");
    sun->add_option("--centered", s_centered, "intersecting d-uniform family");
    sun->add_option("--d", s_d);
    sun->add_flag("--json", s_json);
    sun->callback([&]() {
        if (!s_audit.empty()) {
            vclab::WitnessedFamily w = load_witnessed(s_audit);
            vclab::SunflowerAuditReport r = vclab::audit_witness_sunflowers(w);
            if (s_json) {
                json classes = json::array();
                for (const auto& c : r.classes)
                    classes.push_back({{"witness", c.witness.elements()},
                                       {"class_size", c.class_size},
                                       {"largest_sunflower", c.largest_sunflower},
                                       {"holds", c.holds}});
                std::cout << json{{"classes", classes}, {"holds", r.holds}}.dump(2) << "\n";
            } else {
                std::cout << (r.holds ? "all witness classes sunflower-free at d+3" : "AUDIT FAILED")
                          << "\n";
            }
            if (!r.holds) exit_code = kExitViolated;
            return;
        }
        if (!s_centered.empty()) {
            vclab::Family f = vclab::read_family_file(s_centered);
            auto cd = vclab::find_centered_disjoint(f, s_d);
            if (s_json) {
                json j{{"found", cd.has_value()}};
                if (cd) {
                    j["ell"] = cd->ell;
                    j["indices"] = cd->indices;
                }
                std::cout << j.dump(2) << "\n";
            } else if (cd) {
                std::cout << "ell = " << cd->ell << "\n";
            } else {
                std::cout << "none\n";
            }
            return;
        }
        if (s_file.empty()) throw CLI::ValidationError("file", "sunflower needs an input");
        vclab::Family f = vclab::read_family_file(s_file);
        auto sf = vclab::find_sunflower(f, s_r);
        if (s_json) {
            json j{{"found", sf.has_value()}};
            if (sf) {
                j["core"] = sf->core.elements();
                j["petal_indices"] = sf->petal_indices;
            }
            std::cout << j.dump(2) << "\n";
        } else if (sf) {
            std::cout << "core " << sf->core.to_string() << ", members";
            for (int i : sf->petal_indices) std::cout << " " << i;
            std::cout << "\n";
        } else {
            std::cout << "none\n";
        }
    });

    // ---- polycert ----
    auto* pc = app.add_subcommand("polycert", "polynomial-method rank certificates");
    std::string p_file, p_out, p_verify;
    int p_gamma = 0;
    bool p_json = false;
    pc->add_option("file", p_file, "family (or witnessed family) to certify");
    pc->add_option("--gamma", p_gamma, "D' multiplicity cutoff (default 4(d+1))");
    pc->add_option("--out", p_out, "write certificate JSON");
    pc->add_option("--verify", p_verify, "re-verify a certificate file");
    pc->add_flag("--json", p_json);
    pc->callback([&]() {
        if (!p_verify.empty()) {
            vclab::Certificate cert = vclab::certificate_from_json(slurp(p_verify));
            vclab::VerifyOutcome out = vclab::verify_certificate(cert);
            if (p_json)
                std::cout << json{{"ok", out.ok}, {"message", out.message}}.dump(2) << "\n";
            else
                std::cout << out.message << "\n";
            if (!out.ok) exit_code = kExitViolated;
            return;
        }
        if (p_file.empty()) throw CLI::ValidationError("file", "polycert needs a family or --verify");
        vclab::WitnessedFamily w = load_witnessed(p_file);
        int gamma = p_gamma > 0 ? p_gamma : vclab::default_gamma(w.d);
        vclab::Certificate cert = vclab::certify(w, gamma);
        std::string text = vclab::certificate_to_json(cert);
        if (!p_out.empty()) {
            std::ofstream out(p_out, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + p_out);
            out << text << "\n";
        }
        if (p_json || p_out.empty()) std::cout << text << "\n";
        else
            std::cout << "certificate: side " << cert.matrix_side << ", rank " << cert.rank
                      << ", bound " << cert.bound << (cert.valid ? " (valid)" : " (INVALID)") << "\n";
        if (!cert.valid) exit_code = kExitViolated;
    });

    // ---- search ----
    auto* search = app.add_subcommand("search", "exact maximum-family searches");
    std::string se_mode;
    int se_n = 0, se_d = 2, se_s = 0, se_k = 3, se_threads = 1;
    std::uint64_t se_budget = 0;
    bool se_nontrivial = false, se_json = false, se_at_most = false;
    search->add_option("--mode", se_mode, "vc|switness|intersecting")->required();
    search->add_option("--n", se_n)->required();
    search->add_option("--d", se_d);
    search->add_option("--s", se_s);
    search->add_option("--k", se_k);
    search->add_option("--budget", se_budget, "node budget (default VCLAB_BUDGET_NODES)");
    search->add_option("--threads", se_threads);
    search->add_flag("--nontrivial", se_nontrivial, "restrict to empty common intersection");
    search->add_flag("--at-most", se_at_most, "witness size <= s instead of exactly s");
    search->add_flag("--json", se_json);
    search->callback([&]() {
        vclab::SearchBudget budget;
        budget.max_nodes = se_budget ? se_budget : default_budget();
        budget.threads = se_threads;
        vclab::SearchResult r;
        if (se_mode == "vc")
            r = vclab::max_vc_family(se_n, se_d, budget);
        else if (se_mode == "switness")
            r = vclab::max_switness_family(se_n, se_d, se_s, budget, se_at_most);
        else if (se_mode == "intersecting")
            r = vclab::max_intersecting(se_n, se_k, se_nontrivial, budget);
        else
            throw CLI::ValidationError("--mode", "unknown mode " + se_mode);
        bool complete = r.status == vclab::SearchStatus::complete;
        if (se_json)
            std::cout << json{{"mode", se_mode},
                              {"size", r.best_size},
                              {"complete", complete},
                              {"nodes", r.nodes},
                              {"tripwire", r.tripwire},
                              {"family", family_json(r.best_family)}}.dump(2)
                      << "\n";
        else
            std::cout << (complete ? "maximum " : "lower bound (budget exceeded) ") << r.best_size
                      << " in " << r.nodes << " nodes\n";
        if (r.tripwire) {
            std::cerr << "FALSIFICATION: s-witness family of size " << r.best_size
                      << " exceeds binom(n-1,d) = " << vclab::binom(se_n - 1, se_d) << "\n";
            exit_code = kExitViolated;
        } else if (!complete) {
            exit_code = kExitBudget;
        }
    });

    // ---- hunt ----
    auto* hunt = app.add_subcommand("hunt", "hunt for a Conjecture-violating family");
    int h_n = 0, h_d = 2, h_s = 1;
    std::uint64_t h_budget = 1'000'000, h_seed = 1;
    bool h_json = false;
    hunt->add_option("--n", h_n)->required();
    hunt->add_option("--d", h_d);
    hunt->add_option("--s", h_s);
    hunt->add_option("--budget", h_budget);
    hunt->add_option("--seed", h_seed);
    hunt->add_flag("--json", h_json);
    hunt->callback([&]() {
        if (const char* env = std::getenv("VCLAB_BUDGET_NODES"))
            h_budget = std::strtoull(env, nullptr, 10);
        auto found = vclab::hunt_counterexample(h_n, h_d, h_s, h_budget, h_seed);
        if (h_json) {
            json j{{"found", found.has_value()}, {"bound", vclab::binom(h_n - 1, h_d)}};
            if (found) {
                j["size"] = found->size();
                j["family"] = family_json(*found);
            }
            std::cout << j.dump(2) << "\n";
        } else if (found) {
            std::cout << "COUNTEREXAMPLE FOUND: size " << found->size() << " > binom(n-1,d) = "
                      << vclab::binom(h_n - 1, h_d) << "\n"
                      << vclab::serialize_family(*found);
        } else {
            std::cout << "none found within budget\n";
        }
        if (found) exit_code = kExitViolated;  // headline result
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // falsification events and internal consistency violations
        std::cerr << e.what() << "\n";
        return kExitViolated;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
