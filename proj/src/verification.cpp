#include "segchi/verification.hpp"

#include "segchi/errors.hpp"
#include "segchi/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace segchi {

namespace {

std::string probe_tag(const Probe& p) {
    return "probe " + std::to_string(p.id);
}

std::string seg_tag(const Segment& s) {
    return "segment " + std::to_string(s.id);
}

// Minimum x over s's intersection with the closed rectangle, if any.
// Independent of the builder's bottom-crossing shortcut: works off the
// clipped parameter interval.
std::optional<Rational> min_x_in_rect(const Segment& s, const Rect& r) {
    auto t = clip_to_rect(s, r);
    if (!t)
        return std::nullopt;
    return s.p.x + t->first * (s.q.x - s.p.x);
}

} // namespace

std::string VerificationReport::text() const {
    std::ostringstream os;
    for (const Check& c : checks) {
        os << "CHECK " << c.name << (c.pass ? " PASS" : " FAIL");
        if (!c.witness.empty())
            os << " " << c.witness;
        os << "\n";
    }
    return os.str();
}

VerificationReport verify_probe_axioms(const Construction& c) {
    VerificationReport rep;
    if (c.probes.empty()) {
        rep.add("probe-axioms", true, "no probes (tilde family)");
        return rep;
    }

    bool cond1 = true, cond2 = true, cond3 = true, cond4 = true;
    bool pierced_ok = true, root_ok = true;
    std::string w1, w2, w3, w4, wp, wr;

    for (const Probe& p : c.probes) {
        if (!(c.rect.x0 < p.rect.x0 && p.rect.x0 < c.rect.x1 && p.rect.x1 == c.rect.x1 &&
              c.rect.y0 < p.rect.y0 && p.rect.y1 < c.rect.y1)) {
            cond1 = false;
            w1 = probe_tag(p) + " not a thin right-anchored rectangle inside R";
        }

        std::vector<int> pierced;
        for (const Segment& s : c.segments) {
            PierceResult r = segment_pierces_probe(s, p);
            if (r.pierces()) {
                pierced.push_back(s.id);
            } else if (!r.misses()) {
                if (r.why == PierceViolation::LeftBoundary) {
                    cond2 = false;
                    w2 = seg_tag(s) + " crosses left boundary of " + probe_tag(p);
                } else if (r.why == PierceViolation::EndpointInside) {
                    cond3 = false;
                    w3 = seg_tag(s) + " has an endpoint in " + probe_tag(p);
                } else {
                    cond2 = false;
                    w2 = seg_tag(s) + " meets " + probe_tag(p) + " without piercing it";
                }
            }
        }

        if (pierced != p.pierced) {
            pierced_ok = false;
            wp = probe_tag(p) + " stored pierced list disagrees with geometry";
        }

        // Condition 4 on the recomputed set.
        std::map<int, const Segment*> by_id;
        for (const Segment& s : c.segments)
            by_id[s.id] = &s;
        for (std::size_t i = 0; i < pierced.size(); ++i)
            for (std::size_t j = i + 1; j < pierced.size(); ++j)
                if (segments_intersect(*by_id.at(pierced[i]), *by_id.at(pierced[j]))) {
                    cond4 = false;
                    w4 = "segments " + std::to_string(pierced[i]) + "," +
                         std::to_string(pierced[j]) + " pierce " + probe_tag(p) +
                         " yet intersect";
                }

        // Root: left-anchored, internally disjoint, and maximal.
        std::optional<Rational> cprime;
        for (const Segment& s : c.segments) {
            auto mx = min_x_in_rect(s, p.rect);
            if (mx && (!cprime || *mx < *cprime))
                cprime = *mx;
        }
        Rational expect = cprime ? *cprime : p.rect.x1;
        bool anchored = p.root.x0 == p.rect.x0 && p.root.y0 == p.rect.y0 &&
                        p.root.y1 == p.rect.y1 && p.root.x1 <= p.rect.x1;
        bool disjoint = true;
        for (const Segment& s : c.segments)
            disjoint = disjoint && rect_interior_disjoint(s, p.root);
        if (!anchored || !disjoint || p.root.x1 != expect) {
            root_ok = false;
            wr = probe_tag(p) +
                 (!anchored ? " root not left-anchored"
                            : (!disjoint ? " root meets a segment interior"
                                         : " root not maximal (expected x1=" + expect.str() + ")"));
        }
    }

    rep.add("probe-condition-1", cond1, w1);
    rep.add("probe-condition-2-left-boundary", cond2, w2);
    rep.add("probe-condition-3-no-endpoints", cond3, w3);
    rep.add("probe-condition-4-independent", cond4, w4);
    rep.add("pierced-lists-match-geometry", pierced_ok, wp);
    rep.add("roots-maximal-and-disjoint", root_ok, wr);
    return rep;
}

VerificationReport verify_disjoint_probes(const Construction& c) {
    VerificationReport rep;
    bool rect_disjoint = true, band_disjoint = true;
    std::string wr, wb;
    for (std::size_t i = 0; i < c.probes.size(); ++i)
        for (std::size_t j = i + 1; j < c.probes.size(); ++j) {
            const Rect& a = c.probes[i].rect;
            const Rect& b = c.probes[j].rect;
            bool x_overlap = a.x0 <= b.x1 && b.x0 <= a.x1;
            bool y_overlap = a.y0 <= b.y1 && b.y0 <= a.y1;
            if (x_overlap && y_overlap) {
                rect_disjoint = false;
                wr = "probes " + std::to_string(c.probes[i].id) + "," +
                     std::to_string(c.probes[j].id) + " overlap";
            }
            if (y_overlap) {
                band_disjoint = false;
                wb = "probes " + std::to_string(c.probes[i].id) + "," +
                     std::to_string(c.probes[j].id) + " share y-range";
            }
        }
    rep.add("probes-pairwise-disjoint", rect_disjoint, wr);
    rep.add("probe-bands-pairwise-disjoint", band_disjoint, wb);
    return rep;
}

VerificationReport verify_general_position(std::span<const Segment> segments) {
    VerificationReport rep;
    bool no_endpoint = true, proper = true, no_concurrent = true;
    std::string we, wp, wc;

    std::map<Point, std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = 0; j < segments.size(); ++j) {
            if (i == j)
                continue;
            if (point_on_segment(segments[i].p, segments[j]) ||
                point_on_segment(segments[i].q, segments[j])) {
                no_endpoint = false;
                we = "endpoint of " + seg_tag(segments[i]) + " lies on " + seg_tag(segments[j]);
            }
            if (j < i)
                continue;
            if (!segments_intersect(segments[j], segments[i]))
                continue;
            auto pt = crossing_point(segments[j], segments[i]);
            if (!pt) {
                proper = false;
                wp = seg_tag(segments[j]) + "," + seg_tag(segments[i]) +
                     " intersect without a proper crossing";
                continue;
            }
            auto [it, fresh] = seen.try_emplace(*pt, j, i);
            if (!fresh) {
                no_concurrent = false;
                wc = "segments " + std::to_string(segments[it->second.first].id) + "," +
                     std::to_string(segments[it->second.second].id) + "," +
                     std::to_string(segments[j].id) + "," + std::to_string(segments[i].id) +
                     " concurrent at (" + pt->x.str() + "," + pt->y.str() + ")";
            }
        }

    rep.add("no-endpoint-on-another-segment", no_endpoint, we);
    rep.add("all-intersections-proper-crossings", proper, wp);
    rep.add("no-three-concurrent-segments", no_concurrent, wc);
    return rep;
}

std::uint64_t for_each_proper_partition(int n, const std::vector<std::uint32_t>& adj_masks,
                                        const std::function<bool(const std::vector<int>&)>& visit) {
    if (n < 0 || n > 32)
        throw TooLarge("partition enumeration supports at most 32 elements");
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::vector<std::uint32_t> parts; // vertex mask per part
    std::uint64_t count = 0;
    bool stop = false;

    auto rec = [&](auto&& self, int v) -> void {
        if (stop)
            return;
        if (v == n) {
            ++count;
            if (!visit(rgs))
                stop = true;
            return;
        }
        int usable = static_cast<int>(parts.size());
        for (int j = 0; j <= usable && !stop; ++j) {
            if (j < usable && (adj_masks[static_cast<std::size_t>(v)] &
                               parts[static_cast<std::size_t>(j)]))
                continue; // part holds a neighbour: not an independent set
            rgs[static_cast<std::size_t>(v)] = j;
            if (j == usable)
                parts.push_back(0);
            parts[static_cast<std::size_t>(j)] |= std::uint32_t(1) << v;
            self(self, v + 1);
            parts[static_cast<std::size_t>(j)] &= ~(std::uint32_t(1) << v);
            if (j == usable)
                parts.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

VerificationReport verify_lemma_property(const Construction& c) {
    if (c.tilde)
        throw ValueError("lemma property needs the probe family, not a tilde family");
    int n = static_cast<int>(c.segments.size());
    if (n > kLemmaEnumerationBound)
        throw TooLarge("lemma enumeration bound is " + std::to_string(kLemmaEnumerationBound) +
                       " segments, family has " + std::to_string(n));

    VerificationReport rep;

    // Pierced sets from raw geometry, as vertex indices.
    std::vector<std::vector<int>> pierced(c.probes.size());
    bool clean = true;
    for (std::size_t pi = 0; pi < c.probes.size(); ++pi)
        for (int v = 0; v < n; ++v) {
            PierceResult r = segment_pierces_probe(c.segments[static_cast<std::size_t>(v)],
                                                   c.probes[pi]);
            if (r.pierces())
                pierced[pi].push_back(v);
            else if (!r.misses())
                clean = false;
        }
    rep.add("pierce-classification-clean", clean);

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (segments_intersect(c.segments[static_cast<std::size_t>(u)],
                                   c.segments[static_cast<std::size_t>(v)])) {
                adj[static_cast<std::size_t>(u)] |= std::uint32_t(1) << v;
                adj[static_cast<std::size_t>(v)] |= std::uint32_t(1) << u;
            }

    bool all_good = true;
    std::string witness;
    std::uint64_t total = for_each_proper_partition(n, adj, [&](const std::vector<int>& rgs) {
        for (const auto& ids : pierced) {
            std::uint32_t parts_seen = 0;
            for (int v : ids)
                parts_seen |= std::uint32_t(1) << rgs[static_cast<std::size_t>(v)];
            if (std::popcount(parts_seen) >= c.k)
                return true; // this coloring is witnessed, next one
        }
        all_good = false;
        std::ostringstream os;
        os << "partition";
        for (int x : rgs)
            os << " " << x;
        os << " shows fewer than " << c.k << " parts on every probe";
        witness = os.str();
        return false;
    });

    rep.add("every-proper-coloring-meets-k-parts-on-some-probe", all_good,
            all_good ? std::to_string(total) + " partitions enumerated" : witness);
    return rep;
}

VerificationReport verify_size_bounds(int max_k) {
    if (max_k < 1)
        throw InvalidK("verify_size_bounds: max_k must be >= 1");
    if (max_k > 64)
        throw TooLarge("verify_size_bounds: max_k above 64 not supported");
    VerificationReport rep;
    SizeTable t = sizes(max_k);
    bool closed = true, lower = true, upper = true, tilde = true;
    std::string wc, wl, wu, wt;
    for (int k = 1; k <= max_k; ++k) {
        unsigned long exp = (1UL << (k - 1)) - 1;
        mpz_class pow_lower, pow_upper;
        mpz_ui_pow_ui(pow_lower.get_mpz_t(), 2, exp);
        mpz_ui_pow_ui(pow_upper.get_mpz_t(), 2, exp + 1);
        const mpz_class& s = t.s[static_cast<std::size_t>(k - 1)];
        const mpz_class& p = t.p[static_cast<std::size_t>(k - 1)];
        if (p != pow_lower) {
            closed = false;
            wc = "k=" + std::to_string(k) + ": p_k=" + p.get_str();
        }
        if (p > s) {
            lower = false;
            wl = "k=" + std::to_string(k);
        }
        if (s > pow_upper - 1) {
            upper = false;
            wu = "k=" + std::to_string(k) + ": s_k=" + s.get_str();
        }
        if (t.tilde(k) != s + p) {
            tilde = false;
            wt = "k=" + std::to_string(k);
        }
    }
    rep.add("p_k-closed-form", closed, wc);
    rep.add("p_k-below-s_k", lower, wl);
    rep.add("s_k-upper-bound", upper, wu);
    rep.add("tilde-size", tilde, wt);
    return rep;
}

} // namespace segchi
