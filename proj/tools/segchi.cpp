#include "segchi/construction.hpp"
#include "segchi/errors.hpp"
#include "segchi/family_io.hpp"
#include "segchi/graph.hpp"
#include "segchi/svg.hpp"
#include "segchi/verification.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitAssertion = 4;
constexpr int kExitBudget = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw segchi::Error("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw segchi::Error("cannot open '" + path + "' for writing");
    out << content;
}

segchi::Construction load_family(const std::string& path) {
    return segchi::parse_family(read_file(path));
}

int run_sizes(int k) {
    segchi::SizeTable t = segchi::sizes(k);
    std::cout << "k\ts_k\tp_k\ttilde_k\n";
    for (int i = 1; i <= k; ++i)
        std::cout << i << "\t" << t.s[static_cast<std::size_t>(i - 1)].get_str() << "\t"
                  << t.p[static_cast<std::size_t>(i - 1)].get_str() << "\t"
                  << t.tilde(i).get_str() << "\n";
    return 0;
}

int run_build(int k, const std::vector<std::string>& rect_strs, bool tilde,
              const std::string& out_path) {
    segchi::Rect rect(segchi::Rational::parse(rect_strs[0]), segchi::Rational::parse(rect_strs[1]),
                      segchi::Rational::parse(rect_strs[2]), segchi::Rational::parse(rect_strs[3]));
    segchi::Construction c = segchi::build(k, rect);
    if (tilde)
        c = segchi::augment_tilde(c);
    write_file(out_path, segchi::emit_family(c));
    std::cout << "wrote " << out_path << ": k=" << c.k << ", " << c.segments.size()
              << " segments, " << c.probes.size() << " probes" << (c.tilde ? " (tilde)" : "")
              << "\n";
    return 0;
}

int run_verify(const std::string& path, const std::string& level) {
    segchi::Construction c = load_family(path);
    segchi::VerificationReport rep;

    segchi::SizeTable t = segchi::sizes(c.k);
    mpz_class expect_segments = c.tilde ? t.tilde(c.k) : t.s.back();
    bool sizes_ok = expect_segments == static_cast<unsigned long>(c.segments.size()) &&
                    (c.tilde || t.p.back() == static_cast<unsigned long>(c.probes.size()));
    rep.add("family-counts-match-recurrence", sizes_ok,
            sizes_ok ? "" : "expected " + expect_segments.get_str() + " segments");

    rep.merge(segchi::verify_probe_axioms(c));
    rep.merge(segchi::verify_disjoint_probes(c));
    rep.merge(segchi::verify_general_position(c.segments));

    if (level == "full") {
        if (c.tilde)
            std::cout << "note: lemma-property skipped (tilde family has no probes)\n";
        else if (static_cast<int>(c.segments.size()) > segchi::kLemmaEnumerationBound)
            std::cout << "note: lemma-property skipped (" << c.segments.size() << " segments > "
                      << segchi::kLemmaEnumerationBound << " enumeration bound)\n";
        else
            rep.merge(segchi::verify_lemma_property(c));
    }

    std::cout << rep.text();
    std::cout << (rep.overall() ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return rep.overall() ? 0 : kExitVerification;
}

int run_graph(const std::string& path, const std::string& dimacs_out) {
    segchi::Construction c = load_family(path);
    segchi::IntersectionGraph g = segchi::intersection_graph(c.segments);
    write_file(dimacs_out, segchi::export_dimacs(g));
    std::cout << "wrote " << dimacs_out << ": " << g.n() << " vertices, " << g.edge_count()
              << " edges\n";
    return 0;
}

int run_chi(const std::string& path, std::optional<double> budget, std::optional<int> assert_eq) {
    segchi::Construction c = load_family(path);
    segchi::IntersectionGraph g = segchi::intersection_graph(c.segments);
    segchi::ChromaticResult res = segchi::chromatic_number(g, budget);
    if (!res.exact) {
        std::cout << "chi in [" << res.lower << ", " << res.upper << "] (budget exhausted)\n";
        return kExitBudget;
    }
    std::cout << "chi = " << *res.exact << "\n";
    if (assert_eq && *assert_eq != *res.exact) {
        std::cerr << "assertion failed: expected chi = " << *assert_eq << "\n";
        return kExitAssertion;
    }
    return 0;
}

int run_critical(const std::string& path, int k, std::optional<double> budget) {
    segchi::Construction c = load_family(path);
    segchi::IntersectionGraph g = segchi::intersection_graph(c.segments);

    auto start = std::chrono::steady_clock::now();
    segchi::ChromaticResult chrom = segchi::chromatic_number(g, budget);
    if (!chrom.exact) {
        std::cout << "chi in [" << chrom.lower << ", " << chrom.upper << "] (budget exhausted)\n";
        return kExitBudget;
    }
    if (*chrom.exact != k + 1) {
        std::cout << "chi = " << *chrom.exact << ", not " << k + 1 << ": family is not " << k + 1
                  << "-critical\n";
        return kExitVerification;
    }
    std::optional<double> remaining;
    if (budget) {
        double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        remaining = *budget - used;
        if (*remaining <= 0.0) {
            std::cout << "budget exhausted before deletion runs\n";
            return kExitBudget;
        }
    }
    segchi::CriticalityResult crit = segchi::is_critical(g, k, remaining);
    for (int v = 0; v < g.n(); ++v)
        if (crit.per_vertex[static_cast<std::size_t>(v)] != segchi::Feasibility::Yes)
            std::cout << "vertex " << v << " (segment "
                      << g.labels[static_cast<std::size_t>(v)].segment_id << "): deletion "
                      << (crit.per_vertex[static_cast<std::size_t>(v)] == segchi::Feasibility::No
                              ? "not "
                              : "not proven ")
                      << k << "-colorable\n";
    if (!crit.critical) {
        std::cout << "criticality undecided (budget exhausted)\n";
        return kExitBudget;
    }
    std::cout << "chi = " << k + 1 << "; all " << g.n() << " deletions are " << k
              << "-colorable: " << (*crit.critical ? "yes" : "no") << "\n";
    return *crit.critical ? 0 : kExitVerification;
}

int run_render(const std::string& path, const std::string& out, bool probes, bool roots,
               double stroke_scale) {
    segchi::Construction c = load_family(path);
    segchi::RenderOptions opt;
    opt.show_probes = probes;
    opt.show_roots = roots;
    opt.stroke_scale = stroke_scale;
    write_file(out, segchi::render_svg(c, opt));
    std::cout << "wrote " << out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, verification and coloring of triangle-free segment "
                 "families with large chromatic number"};
    app.require_subcommand(1);

    auto* cmd_sizes = app.add_subcommand("sizes", "print s_i, p_i and |tilde S_i| for i <= K");
    int sizes_k = 1;
    cmd_sizes->add_option("K", sizes_k, "table depth")->required();

    auto* cmd_build = app.add_subcommand("build", "construct a family and write it as JSON");
    int build_k = 1;
    std::vector<std::string> build_rect{"0", "0", "1", "1"};
    bool build_tilde = false;
    std::string build_out;
    cmd_build->add_option("-k,--level", build_k, "construction level")->required();
    cmd_build->add_option("--rect", build_rect, "rectangle X0 Y0 X1 Y1 (rationals)")
        ->expected(4);
    cmd_build->add_flag("--tilde", build_tilde, "augment with probe diagonals, drop probes");
    cmd_build->add_option("-o,--output", build_out, "output family file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "re-verify a family file from raw geometry");
    std::string verify_file, verify_level = "axioms";
    cmd_verify->add_option("FILE", verify_file)->required();
    cmd_verify->add_option("--level", verify_level, "axioms|full (full adds the coloring lemma)")
        ->check(CLI::IsMember({"axioms", "full"}));

    auto* cmd_graph = app.add_subcommand("graph", "export the intersection graph");
    std::string graph_file, graph_dimacs;
    cmd_graph->add_option("FILE", graph_file)->required();
    cmd_graph->add_option("--dimacs", graph_dimacs, "DIMACS output file")->required();

    auto* cmd_chi = app.add_subcommand("chi", "exact chromatic number");
    std::string chi_file;
    double chi_budget = 0;
    int chi_assert = -1;
    cmd_chi->add_option("FILE", chi_file)->required();
    auto* chi_budget_opt = cmd_chi->add_option("--budget", chi_budget, "wall-clock seconds");
    auto* chi_assert_opt = cmd_chi->add_option("--assert-eq", chi_assert, "fail unless chi == N");

    auto* cmd_critical = app.add_subcommand("critical", "check (k+1)-criticality");
    std::string critical_file;
    int critical_k = 1;
    double critical_budget = 0;
    cmd_critical->add_option("FILE", critical_file)->required();
    cmd_critical->add_option("-k", critical_k, "deletions must be k-colorable")->required();
    auto* critical_budget_opt =
        cmd_critical->add_option("--budget", critical_budget, "wall-clock seconds");

    auto* cmd_render = app.add_subcommand("render", "render a family as SVG");
    std::string render_file, render_out;
    bool render_probes = false, render_roots = false;
    double render_stroke = 1.0;
    cmd_render->add_option("FILE", render_file)->required();
    cmd_render->add_option("-o,--output", render_out, "SVG output file")->required();
    cmd_render->add_flag("--show-probes", render_probes);
    cmd_render->add_flag("--show-roots", render_roots);
    cmd_render->add_option("--stroke-scale", render_stroke, "line width multiplier");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*cmd_sizes)
            return run_sizes(sizes_k);
        if (*cmd_build)
            return run_build(build_k, build_rect, build_tilde, build_out);
        if (*cmd_verify)
            return run_verify(verify_file, verify_level);
        if (*cmd_graph)
            return run_graph(graph_file, graph_dimacs);
        if (*cmd_chi)
            return run_chi(chi_file,
                           *chi_budget_opt ? std::optional<double>(chi_budget) : std::nullopt,
                           *chi_assert_opt ? std::optional<int>(chi_assert) : std::nullopt);
        if (*cmd_critical)
            return run_critical(critical_file, critical_k,
                                *critical_budget_opt ? std::optional<double>(critical_budget)
                                                     : std::nullopt);
        if (*cmd_render)
            return run_render(render_file, render_out, render_probes, render_roots, render_stroke);
    } catch (const segchi::InvalidBudget& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const segchi::InvalidK& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const segchi::DegenerateRect& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const segchi::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const segchi::ValueError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const segchi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
