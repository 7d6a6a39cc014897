#include "segchi/family_io.hpp"

#include "segchi/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace segchi {

namespace {

using json = nlohmann::ordered_json;

std::string role_name(SegmentRole r) {
    return r == SegmentRole::Base ? "base" : "diagonal";
}

std::string kind_name(ProbeKind k) {
    switch (k) {
    case ProbeKind::Base: return "base";
    case ProbeKind::Lower: return "lower";
    case ProbeKind::Upper: return "upper";
    }
    return "?";
}

json rect_json(const Rect& r) {
    json j;
    j["x0"] = r.x0.str();
    j["y0"] = r.y0.str();
    j["x1"] = r.x1.str();
    j["y1"] = r.y1.str();
    return j;
}

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : allowed)
            ok = ok || item.key() == k;
        if (!ok)
            throw ParseError(where + ": unexpected field '" + item.key() + "'");
    }
}

int get_int(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer())
        throw ParseError(where + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

bool get_bool(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_boolean())
        throw ParseError(where + ": field '" + key + "' must be a boolean");
    return v.get<bool>();
}

Rational get_rational(const json& v, const std::string& where) {
    if (!v.is_string())
        throw ParseError(where + ": rationals are \"num/den\" strings");
    return Rational::parse_canonical(v.get<std::string>());
}

Rect get_rect(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    std::string ctx = where + "." + key;
    check_keys(v, {"x0", "y0", "x1", "y1"}, ctx);
    try {
        return Rect(get_rational(field(v, "x0", ctx), ctx + ".x0"),
                    get_rational(field(v, "y0", ctx), ctx + ".y0"),
                    get_rational(field(v, "x1", ctx), ctx + ".x1"),
                    get_rational(field(v, "y1", ctx), ctx + ".y1"));
    } catch (const DegenerateRect& e) {
        throw ValueError(ctx + ": " + e.what());
    }
}

std::vector<int> get_int_array(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_array())
        throw ParseError(where + ": field '" + key + "' must be an array");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw ParseError(where + "." + key + ": expected integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Point get_point(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_array() || v.size() != 2)
        throw ParseError(where + ": field '" + key + "' must be [x, y]");
    return Point{get_rational(v[0], where + "." + key + "[0]"),
                 get_rational(v[1], where + "." + key + "[1]")};
}

} // namespace

std::string emit_family(const Construction& c) {
    json j;
    j["schema"] = 1;
    j["k"] = c.k;
    j["tilde"] = c.tilde;
    j["rect"] = rect_json(c.rect);
    j["segments"] = json::array();
    for (const Segment& s : c.segments) {
        json js;
        js["id"] = s.id;
        js["role"] = role_name(s.role);
        js["path"] = s.path;
        js["p"] = json::array({s.p.x.str(), s.p.y.str()});
        js["q"] = json::array({s.q.x.str(), s.q.y.str()});
        j["segments"].push_back(std::move(js));
    }
    j["probes"] = json::array();
    for (const Probe& p : c.probes) {
        json jp;
        jp["id"] = p.id;
        jp["kind"] = kind_name(p.kind);
        jp["rect"] = rect_json(p.rect);
        jp["root"] = rect_json(p.root);
        jp["pierced"] = p.pierced;
        j["probes"].push_back(std::move(jp));
    }
    return j.dump(2) + "\n";
}

Construction parse_family(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("family file: ") + e.what());
    }

    check_keys(j, {"schema", "k", "tilde", "rect", "segments", "probes"}, "family");
    if (get_int(j, "schema", "family") != 1)
        throw ParseError("family: unsupported schema version");
    int k = get_int(j, "k", "family");
    if (k < 1)
        throw ValueError("family: k must be >= 1");
    bool tilde = get_bool(j, "tilde", "family");
    Rect rect = get_rect(j, "rect", "family");

    const json& jsegs = field(j, "segments", "family");
    if (!jsegs.is_array())
        throw ParseError("family: 'segments' must be an array");
    std::vector<Segment> segments;
    std::set<int> seg_ids;
    std::size_t idx = 0;
    for (const auto& js : jsegs) {
        std::string where = "segments[" + std::to_string(idx++) + "]";
        check_keys(js, {"id", "role", "path", "p", "q"}, where);
        int id = get_int(js, "id", where);
        if (id < 0 || !seg_ids.insert(id).second)
            throw ValueError(where + ": duplicate or negative segment id");
        const json& jrole = field(js, "role", where);
        SegmentRole role;
        if (jrole == "base")
            role = SegmentRole::Base;
        else if (jrole == "diagonal")
            role = SegmentRole::Diagonal;
        else
            throw ParseError(where + ": role must be \"base\" or \"diagonal\"");
        try {
            segments.emplace_back(get_point(js, "p", where), get_point(js, "q", where), id, role,
                                  get_int_array(js, "path", where));
        } catch (const ValueError& e) {
            throw ValueError(where + ": " + e.what());
        }
    }

    const json& jprobes = field(j, "probes", "family");
    if (!jprobes.is_array())
        throw ParseError("family: 'probes' must be an array");
    if (tilde && !jprobes.empty())
        throw ValueError("family: tilde families carry no probes");
    std::vector<Probe> probes;
    std::set<int> probe_ids;
    idx = 0;
    for (const auto& jp : jprobes) {
        std::string where = "probes[" + std::to_string(idx++) + "]";
        check_keys(jp, {"id", "kind", "rect", "root", "pierced"}, where);
        int id = get_int(jp, "id", where);
        if (id < 0 || !probe_ids.insert(id).second)
            throw ValueError(where + ": duplicate or negative probe id");
        const json& jkind = field(jp, "kind", where);
        ProbeKind kind;
        if (jkind == "base")
            kind = ProbeKind::Base;
        else if (jkind == "lower")
            kind = ProbeKind::Lower;
        else if (jkind == "upper")
            kind = ProbeKind::Upper;
        else
            throw ParseError(where + ": kind must be \"base\", \"lower\" or \"upper\"");
        std::vector<int> pierced = get_int_array(jp, "pierced", where);
        for (std::size_t i = 0; i < pierced.size(); ++i) {
            if (!seg_ids.count(pierced[i]))
                throw ValueError(where + ": pierced id " + std::to_string(pierced[i]) +
                                 " is not a segment");
            if (i > 0 && pierced[i - 1] >= pierced[i])
                throw ValueError(where + ": pierced ids must be strictly ascending");
        }
        try {
            probes.emplace_back(get_rect(jp, "rect", where), get_rect(jp, "root", where), kind, id,
                                std::move(pierced));
        } catch (const ValueError& e) {
            throw ValueError(where + ": " + e.what());
        }
    }

    return Construction{k, rect, std::move(segments), std::move(probes), tilde, {}};
}

} // namespace segchi
