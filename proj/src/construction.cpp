#include "segchi/construction.hpp"

#include "segchi/errors.hpp"

#include <algorithm>
#include <string>

namespace segchi {

namespace {

std::string seg_desc(const Segment& s) {
    return "segment " + std::to_string(s.id);
}

bool bbox_overlap(const Segment& a, const Segment& b) {
    return a.p.x <= b.q.x && b.p.x <= a.q.x && a.p.y <= b.q.y && b.p.y <= a.q.y;
}

} // namespace

SizeTable sizes(int k) {
    if (k < 1)
        throw InvalidK("sizes: k must be >= 1, got " + std::to_string(k));
    SizeTable t;
    t.k = k;
    t.s.emplace_back(1);
    t.p.emplace_back(1);
    for (int i = 1; i < k; ++i) {
        const mpz_class& s = t.s.back();
        const mpz_class& p = t.p.back();
        mpz_class s_next = (p + 1) * s + p * p;
        mpz_class p_next = 2 * p * p;
        t.s.push_back(std::move(s_next));
        t.p.push_back(std::move(p_next));
    }
    return t;
}

Rect root_of(const Rect& band, std::span<const Segment> segments) {
    std::optional<Rational> cprime;
    for (const Segment& s : segments) {
        PierceResult r = segment_pierces_rect(s, band);
        if (r.misses())
            continue;
        if (!r.pierces())
            throw ConstructionInvariantViolation("root_of: " + seg_desc(s) +
                                                 " meets the band without piercing it (" +
                                                 to_string(r.why) + ")");
        // Positive slope: the leftmost band point of a piercer is its
        // bottom-edge crossing.
        Rational xb = x_at_y(s, band.y0);
        if (!cprime || xb < *cprime)
            cprime = xb;
    }
    Rational right = cprime ? *cprime : band.x1;
    if (right <= band.x0)
        throw EmptyRoot("root_of: empty root at x0=" + band.x0.str());
    return Rect(band.x0, band.y0, right, band.y1);
}

std::pair<Probe, Probe> make_probe_pair(const Probe& q, const Segment& diag,
                                        std::span<const Segment> inner,
                                        std::span<const Segment> outer, const Rect& rect,
                                        int lower_id, int upper_id) {
    if (inner.empty())
        throw ConstructionInvariantViolation("make_probe_pair: child probe pierces no segment");

    const Rational& a_q = q.rect.x0;
    const Rational& c_q = q.rect.x1;
    const Rational& yb = q.rect.y0;
    const Rational& yt = q.rect.y1;
    Rational w_q = q.rect.width();
    Rational h_q = q.rect.height();

    // Lower probe: a band just above q's bottom edge, thin enough that the
    // diagonal stays left of it while the pierced segments stay right.
    Rational x_min = x_at_y(inner[0], yb);
    for (const Segment& s : inner.subspan(1))
        x_min = min(x_min, x_at_y(s, yb));
    Rational delta = min(h_q / Rational(8), (x_min - a_q) * h_q / (Rational(4) * w_q));
    Rational lo_top = yb + delta * Rational(2);
    Rational a_lo = midpoint(x_at_y(diag, lo_top), x_min);
    Rect lower_rect(a_lo, yb + delta, rect.x1, lo_top);

    // Upper probe, symmetric at q's top edge: the diagonal enters from the
    // right of the pierced segments' crossings.
    Rational x_max = x_at_y(inner[0], yt);
    for (const Segment& s : inner.subspan(1))
        x_max = max(x_max, x_at_y(s, yt));
    Rational delta_u = min(h_q / Rational(8), (c_q - x_max) * h_q / (Rational(4) * w_q));
    Rational up_bot = yt - delta_u * Rational(2);
    Rational a_up = midpoint(x_max, x_at_y(diag, up_bot));
    Rect upper_rect(a_up, up_bot, rect.x1, yt - delta_u);

    std::vector<int> lower_ids, upper_ids;
    std::vector<Segment> lower_segs, upper_segs;
    for (const Segment& s : inner) {
        lower_ids.push_back(s.id);
        lower_segs.push_back(s);
    }
    upper_ids.push_back(diag.id);
    upper_segs.push_back(diag);
    for (const Segment& s : outer) {
        lower_ids.push_back(s.id);
        lower_segs.push_back(s);
        upper_ids.push_back(s.id);
        upper_segs.push_back(s);
    }
    std::sort(lower_ids.begin(), lower_ids.end());
    std::sort(upper_ids.begin(), upper_ids.end());

    // Checked postconditions. Segments outside inner/outer/diag cannot reach
    // these bands: they lie in disjoint probes or miss the host probe.
    for (const Segment& s : lower_segs)
        if (!segment_pierces_rect(s, lower_rect).pierces())
            throw ConstructionInvariantViolation("lower probe fails to pierce " + seg_desc(s));
    if (!segment_pierces_rect(diag, lower_rect).misses())
        throw ConstructionInvariantViolation("lower probe touches diagonal " + seg_desc(diag));
    for (const Segment& s : upper_segs)
        if (!segment_pierces_rect(s, upper_rect).pierces())
            throw ConstructionInvariantViolation("upper probe fails to pierce " + seg_desc(s));
    for (const Segment& s : inner)
        if (!segment_pierces_rect(s, upper_rect).misses())
            throw ConstructionInvariantViolation("upper probe touches inner " + seg_desc(s));
    if (!(lo_top < up_bot))
        throw ConstructionInvariantViolation("lower/upper probe bands overlap");

    Probe lower(lower_rect, root_of(lower_rect, lower_segs), ProbeKind::Lower, lower_id,
                std::move(lower_ids));
    Probe upper(upper_rect, root_of(upper_rect, upper_segs), ProbeKind::Upper, upper_id,
                std::move(upper_ids));
    return {std::move(lower), std::move(upper)};
}

namespace {

// Recursive builder. Segment/probe ids are global and sequential in
// creation order, which makes outputs canonical.
struct Builder {
    std::vector<Segment> segments;
    std::map<int, std::vector<int>> probe_tree;
    int next_probe_id = 0;

    struct Level {
        std::vector<int> segment_ids;
        std::vector<Probe> probes;
    };

    std::vector<Segment> gather(const std::vector<int>& ids) const {
        std::vector<Segment> out;
        out.reserve(ids.size());
        for (int id : ids)
            out.push_back(segments.at(static_cast<std::size_t>(id)));
        return out;
    }

    Level base(const Rect& rect, const std::vector<int>& path) {
        Rect box = rect.scaled_centered(1, 4);
        int sid = static_cast<int>(segments.size());
        segments.emplace_back(Point{box.x0, box.y0}, Point{box.x1, box.y1}, sid,
                              SegmentRole::Base, path);

        Rational cy = midpoint(rect.y0, rect.y1);
        Rational h16 = rect.height() / Rational(16);
        Rect band(rect.x0 + rect.width() / Rational(3), cy - h16, rect.x1, cy + h16);
        if (!segment_pierces_rect(segments.back(), band).pierces())
            throw ConstructionInvariantViolation("base probe fails to pierce the base segment");

        Rect root = root_of(band, std::span<const Segment>(&segments.back(), 1));
        Probe probe(band, root, ProbeKind::Base, next_probe_id++, {sid});
        probe_tree[probe.id] = path;

        Level lvl;
        lvl.segment_ids = {sid};
        lvl.probes.push_back(std::move(probe));
        return lvl;
    }

    Level run(int k, const Rect& rect, const std::vector<int>& path) {
        if (k == 1)
            return base(rect, path);

        Level outer = run(k - 1, rect, path);
        Level result;
        result.segment_ids = outer.segment_ids;

        for (const Probe& host : outer.probes) {
            // Child copy goes into the centered half of the host's root,
            // which keeps it clear of the root boundary.
            Rect child_rect = host.root.scaled_centered(1, 2);
            std::vector<int> child_path = path;
            child_path.push_back(host.id);
            Level child = run(k - 1, child_rect, child_path);
            result.segment_ids.insert(result.segment_ids.end(), child.segment_ids.begin(),
                                      child.segment_ids.end());

            for (const Probe& q : child.probes) {
                std::vector<int> q_path = child_path;
                q_path.push_back(q.id);
                int did = static_cast<int>(segments.size());
                segments.emplace_back(Point{q.rect.x0, q.rect.y0}, Point{q.rect.x1, q.rect.y1},
                                      did, SegmentRole::Diagonal, q_path);
                result.segment_ids.push_back(did);
                const Segment& diag = segments.back();

                std::vector<Segment> inner = gather(q.pierced);
                std::vector<Segment> host_pierced = gather(host.pierced);
                auto [lower, upper] = make_probe_pair(q, diag, inner, host_pierced, rect,
                                                      next_probe_id, next_probe_id + 1);
                next_probe_id += 2;
                probe_tree[lower.id] = q_path;
                probe_tree[upper.id] = q_path;
                result.probes.push_back(std::move(lower));
                result.probes.push_back(std::move(upper));
            }
        }
        return result;
    }
};

void check_built(const Construction& c) {
    SizeTable t = sizes(c.k);
    if (t.s.back() != static_cast<unsigned long>(c.segments.size()) ||
        t.p.back() != static_cast<unsigned long>(c.probes.size()))
        throw ConstructionInvariantViolation(
            "built family has " + std::to_string(c.segments.size()) + " segments / " +
            std::to_string(c.probes.size()) + " probes, recurrence wants " + t.s.back().get_str() +
            " / " + t.p.back().get_str());
    for (const Segment& s : c.segments)
        if (!c.rect.contains_open(s.p) || !c.rect.contains_open(s.q))
            throw ConstructionInvariantViolation(seg_desc(s) + " not strictly inside rect");
    std::vector<std::pair<Rational, Rational>> bands;
    for (const Probe& p : c.probes) {
        if (p.rect.x1 != c.rect.x1)
            throw ConstructionInvariantViolation("probe " + std::to_string(p.id) +
                                                 " does not reach the right boundary");
        bands.emplace_back(p.rect.y0, p.rect.y1);
    }
    std::sort(bands.begin(), bands.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < bands.size(); ++i)
        if (!(bands[i - 1].second < bands[i].first))
            throw ConstructionInvariantViolation("probe bands overlap");
}

} // namespace

Construction build(int k, const Rect& rect) {
    if (k < 1)
        throw InvalidK("build: k must be >= 1, got " + std::to_string(k));
    Builder b;
    Builder::Level top = b.run(k, rect, {});
    Construction c{k, rect, std::move(b.segments), std::move(top.probes), false,
                   std::move(b.probe_tree)};
    check_built(c);
    return c;
}

Construction augment_tilde(const Construction& c) {
    if (c.tilde)
        throw ValueError("augment_tilde: family is already probe-free");

    Construction out{c.k, c.rect, c.segments, {}, true, c.probe_tree};
    int next_id = 0;
    std::map<int, std::size_t> by_id;
    for (std::size_t i = 0; i < c.segments.size(); ++i) {
        next_id = std::max(next_id, c.segments[i].id + 1);
        by_id[c.segments[i].id] = i;
    }

    std::vector<Segment> added;
    for (const Probe& p : c.probes) {
        if (p.pierced.empty())
            throw ConstructionInvariantViolation("probe " + std::to_string(p.id) +
                                                 " pierces nothing");
        // Shrink the probe diagonal in x: it must clear every pierced
        // segment's top-edge crossing yet stop short of the rectangle
        // boundary.
        Rational x_max = x_at_y(c.segments[by_id.at(p.pierced[0])], p.rect.y1);
        for (std::size_t i = 1; i < p.pierced.size(); ++i)
            x_max = max(x_max, x_at_y(c.segments[by_id.at(p.pierced[i])], p.rect.y1));
        Rational top_x = midpoint(x_max, p.rect.x1);

        std::vector<int> path;
        if (auto it = c.probe_tree.find(p.id); it != c.probe_tree.end())
            path = it->second;
        path.push_back(p.id);
        Segment diag(Point{p.rect.x0, p.rect.y0}, Point{top_x, p.rect.y1}, next_id++,
                     SegmentRole::Diagonal, std::move(path));

        if (!c.rect.contains_open(diag.p) || !c.rect.contains_open(diag.q))
            throw ConstructionInvariantViolation("probe diagonal leaves the rectangle");
        for (const Segment& s : c.segments) {
            bool expect = std::binary_search(p.pierced.begin(), p.pierced.end(), s.id);
            if (!bbox_overlap(diag, s)) {
                if (expect)
                    throw ConstructionInvariantViolation("probe diagonal misses pierced " +
                                                         seg_desc(s));
                continue;
            }
            if (segments_intersect(diag, s) != expect)
                throw ConstructionInvariantViolation(
                    "probe diagonal for probe " + std::to_string(p.id) +
                    (expect ? " misses pierced " : " crosses non-pierced ") + seg_desc(s));
        }
        for (const Segment& d : added)
            if (bbox_overlap(diag, d) && segments_intersect(diag, d))
                throw ConstructionInvariantViolation("probe diagonals cross");
        added.push_back(std::move(diag));
    }
    out.segments.insert(out.segments.end(), added.begin(), added.end());
    return out;
}

} // namespace segchi
