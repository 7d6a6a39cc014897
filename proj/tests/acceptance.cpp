// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 5's large instance honors SEGCHI_K4_BUDGET seconds (default 900)
// and downgrades to an honest bracket report when the budget runs out.

#include "segchi/construction.hpp"
#include "segchi/family_io.hpp"
#include "segchi/graph.hpp"
#include "segchi/verification.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace segchi;

namespace {

struct Harness {
    int failures = 0;
    int index = 0;

    void report(const std::string& name, bool pass, double secs, const std::string& note = "") {
        ++index;
        std::printf("[%2d/10] %s %s (%.3f s)%s%s\n", index, pass ? "PASS" : "FAIL", name.c_str(),
                    secs, note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        if (!pass)
            ++failures;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rect unit() {
    return Rect(Rational(0), Rational(0), Rational(1), Rational(1));
}

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(SEGCHI_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return in.good() || in.eof() ? os.str() : std::string();
}

} // namespace

int main() {
    Harness h;

    // 1. size recurrences, exact, < 1 ms
    {
        auto t0 = std::chrono::steady_clock::now();
        SizeTable t = sizes(5);
        double secs = seconds_since(t0);
        bool pass = t.s == std::vector<mpz_class>{1, 3, 13, 181, 39733} &&
                    t.p == std::vector<mpz_class>{1, 2, 8, 128, 32768} && secs < 0.001;
        h.report("size-recurrences-k5", pass, secs);
    }

    // 2. closed-form bounds up to k = 12, < 1 s
    {
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep = verify_size_bounds(12);
        double secs = seconds_since(t0);
        h.report("size-bounds-k12", rep.overall() && secs < 1.0, secs,
                 rep.overall() ? "" : rep.text());
    }

    // structural data reused below
    std::vector<Construction> plain, tilde;
    for (int k = 1; k <= 4; ++k) {
        plain.push_back(build(k, unit()));
        tilde.push_back(augment_tilde(plain.back()));
    }

    // 3. probe axioms + disjointness + general position for k = 1..4;
    //    the k=4 run under 30 s
    {
        bool pass = true;
        std::string note;
        double k4_secs = 0;
        for (int k = 1; k <= 4; ++k) {
            auto t0 = std::chrono::steady_clock::now();
            Construction c = build(k, unit());
            VerificationReport rep;
            rep.merge(verify_probe_axioms(c));
            rep.merge(verify_disjoint_probes(c));
            rep.merge(verify_general_position(c.segments));
            double secs = seconds_since(t0);
            if (k == 4)
                k4_secs = secs;
            if (!rep.overall()) {
                pass = false;
                note = "k=" + std::to_string(k) + ": " + rep.text();
            }
        }
        if (k4_secs >= 30.0) {
            pass = false;
            note += " k=4 run exceeded 30 s";
        }
        h.report("structural-verification-k1-4", pass, k4_secs, note);
    }

    // 4. triangle-freeness of S_k and tilde S_k for k <= 4 by exhaustive
    //    triples, < 60 s
    {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::string note;
        for (int k = 1; k <= 4 && pass; ++k) {
            for (const Construction* c : {&plain[static_cast<std::size_t>(k - 1)],
                                          &tilde[static_cast<std::size_t>(k - 1)]}) {
                auto tri = find_triangle(intersection_graph(c->segments));
                if (tri) {
                    pass = false;
                    note = "triangle at k=" + std::to_string(k) + ": " + std::to_string(tri->a) +
                           "," + std::to_string(tri->b) + "," + std::to_string(tri->c);
                }
            }
        }
        double secs = seconds_since(t0);
        if (secs >= 60.0)
            pass = false;
        h.report("triangle-freeness-k1-4", pass, secs, note);
    }

    // 5. chromatic numbers chi(tilde S_k) = k + 1 for k <= 3 (< 60 s), and
    //    best-effort non-4-colorability of tilde S_4 within the budget
    {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::string note;
        for (int k = 1; k <= 3; ++k) {
            ChromaticResult res =
                chromatic_number(intersection_graph(tilde[static_cast<std::size_t>(k - 1)].segments));
            if (!res.exact || *res.exact != k + 1) {
                pass = false;
                note = "chi(tilde S_" + std::to_string(k) + ") != " + std::to_string(k + 1);
            }
        }
        double small_secs = seconds_since(t0);
        if (small_secs >= 60.0) {
            pass = false;
            note += " small cases exceeded 60 s";
        }

        double budget = 900.0;
        if (const char* env = std::getenv("SEGCHI_K4_BUDGET"))
            budget = std::atof(env);
        auto t1 = std::chrono::steady_clock::now();
        ColorabilityResult k4 = is_k_colorable(intersection_graph(tilde[3].segments), 4, budget);
        double k4_secs = seconds_since(t1);
        if (k4.verdict == Feasibility::Yes) {
            pass = false;
            note += " tilde S_4 reported 4-colorable";
        } else if (k4.verdict == Feasibility::Unknown) {
            note += " tilde S_4: budget (" + std::to_string(budget) +
                    " s) exhausted, honest downgrade: 4-colorability undecided";
        } else {
            note += " tilde S_4 proven not 4-colorable (" +
                    std::to_string(k4.nodes) + " nodes, " + std::to_string(k4_secs) + " s)";
        }
        h.report("chromatic-numbers", pass, small_secs + k4_secs, note);
    }

    // 6. tilde S_2 is the 5-cycle: degree sequence, connectivity,
    //    triangle-freeness force C5
    {
        auto t0 = std::chrono::steady_clock::now();
        IntersectionGraph g = intersection_graph(tilde[1].segments);
        bool pass = g.n() == 5 && g.edge_count() == 5 && is_triangle_free(g);
        for (int v = 0; v < g.n(); ++v)
            pass = pass && g.degree(v) == 2;
        std::vector<bool> seen(5, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    ++reached;
                    stack.push_back(u);
                }
        }
        pass = pass && reached == 5;
        double secs = seconds_since(t0);
        h.report("tilde-s2-is-c5", pass && secs < 0.001, secs);
    }

    // 7. criticality of tilde S_2 (k=2) and tilde S_3 (k=3), < 2 min
    {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::string note;
        for (int k = 2; k <= 3; ++k) {
            IntersectionGraph g = intersection_graph(tilde[static_cast<std::size_t>(k - 1)].segments);
            ChromaticResult chi = chromatic_number(g);
            if (!chi.exact || *chi.exact != k + 1) {
                pass = false;
                note = "chi precondition failed at k=" + std::to_string(k);
                continue;
            }
            CriticalityResult crit = is_critical(g, k);
            if (!crit.critical || !*crit.critical) {
                pass = false;
                note = "tilde S_" + std::to_string(k) + " not " + std::to_string(k + 1) +
                       "-critical";
            }
        }
        double secs = seconds_since(t0);
        if (secs >= 120.0)
            pass = false;
        h.report("criticality-k2-k3", pass, secs, note);
    }

    // 8. lemma coloring property, exhaustive for k = 1, 2, 3; k=3 < 10 min
    {
        bool pass = true;
        std::string note;
        double k3_secs = 0;
        for (int k = 1; k <= 3; ++k) {
            auto t0 = std::chrono::steady_clock::now();
            VerificationReport rep = verify_lemma_property(plain[static_cast<std::size_t>(k - 1)]);
            double secs = seconds_since(t0);
            if (k == 3)
                k3_secs = secs;
            if (!rep.overall()) {
                pass = false;
                note = "k=" + std::to_string(k);
            }
        }
        if (k3_secs >= 600.0) {
            pass = false;
            note += " k=3 enumeration exceeded 10 min";
        }
        h.report("lemma-coloring-property-k1-3", pass, k3_secs, note);
    }

    // 9. oracle equivalence: chromatic numbers on 200 random graphs,
    //    intersection tests on 10^4 random pairs
    {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::string note;
        oracle::Rng rng(20240811);
        for (int i = 0; i < 200 && pass; ++i) {
            IntersectionGraph g = rng.graph(10);
            ChromaticResult res = chromatic_number(g);
            int want = oracle::brute_chromatic(g);
            if (!res.exact || *res.exact != want) {
                pass = false;
                note = "chromatic mismatch on random graph " + std::to_string(i);
            }
        }
        oracle::Rng seg_rng(424242);
        for (int i = 0; i < 10000 && pass; ++i) {
            Segment a = seg_rng.segment();
            Segment b = seg_rng.segment();
            if (segments_intersect(a, b) != oracle::parametric_intersect(a, b)) {
                pass = false;
                note = "intersection mismatch on random pair " + std::to_string(i);
            }
        }
        h.report("oracle-equivalence", pass, seconds_since(t0), note);
    }

    // 10. determinism and round-trip identities
    {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::string note;
        for (int k = 1; k <= 3; ++k) {
            Construction c1 = build(k, unit());
            Construction c2 = build(k, unit());
            if (emit_family(c1) != emit_family(c2) ||
                emit_family(augment_tilde(c1)) != emit_family(augment_tilde(c2))) {
                pass = false;
                note = "determinism broken at k=" + std::to_string(k);
            }
        }
        for (const char* name : {"build1.json", "build2.json", "build3.json", "tilde1.json",
                                 "tilde2.json", "tilde3.json"}) {
            std::string text = slurp(name);
            if (text.empty() || emit_family(parse_family(text)) != text) {
                pass = false;
                note = std::string("round-trip broken on ") + name;
            }
        }
        h.report("determinism-and-round-trip", pass, seconds_since(t0), note);
    }

    if (h.failures == 0)
        std::printf("ACCEPTANCE PASS (10/10)\n");
    else
        std::printf("ACCEPTANCE FAIL (%d criterion(s))\n", h.failures);
    return h.failures == 0 ? 0 : 1;
}
