#include "segchi/construction.hpp"
#include "segchi/errors.hpp"
#include "segchi/family_io.hpp"
#include "segchi/graph.hpp"
#include "segchi/svg.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace segchi;

namespace {

Rect unit() {
    return Rect(Rational(0), Rational(0), Rational(1), Rational(1));
}

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(SEGCHI_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// minimal well-formedness scan: declaration, balanced tags, quoted
// attributes
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    if (text.rfind("<?xml", 0) != 0)
        return false;
    i = text.find("?>");
    if (i == std::string::npos)
        return false;
    i += 2;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        std::size_t close = text.find('>', i);
        if (close == std::string::npos)
            return false;
        std::string tag = text.substr(i + 1, close - i - 1);
        if (tag.empty())
            return false;
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1))
                return false;
            stack.pop_back();
        } else if (tag.back() != '/') {
            std::size_t sp = tag.find_first_of(" \t\n");
            stack.push_back(sp == std::string::npos ? tag : tag.substr(0, sp));
        }
        // attribute quotes must be balanced
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0)
            return false;
        i = close + 1;
    }
    return stack.empty();
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("emitted families match the frozen goldens") {
    CHECK(emit_family(build(1, unit())) == slurp("build1.json"));
    CHECK(emit_family(build(2, unit())) == slurp("build2.json"));
    CHECK(emit_family(build(3, unit())) == slurp("build3.json"));
    CHECK(emit_family(augment_tilde(build(1, unit()))) == slurp("tilde1.json"));
    CHECK(emit_family(augment_tilde(build(2, unit()))) == slurp("tilde2.json"));
    CHECK(emit_family(augment_tilde(build(3, unit()))) == slurp("tilde3.json"));
}

TEST_CASE("dimacs export matches the frozen golden") {
    Construction t3 = augment_tilde(build(3, unit()));
    std::string dimacs = export_dimacs(intersection_graph(t3.segments));
    CHECK(dimacs == slurp("tilde3.dimacs"));
    CHECK(dimacs.rfind("p edge 21 ", 0) == 0);
}

TEST_CASE("round-trips are identities") {
    for (const char* name :
         {"build1.json", "build2.json", "build3.json", "tilde1.json", "tilde2.json",
          "tilde3.json"}) {
        std::string text = slurp(name);
        CHECK(emit_family(parse_family(text)) == text);
    }
    Construction c = build(3, unit());
    Construction back = parse_family(emit_family(c));
    CHECK(back.k == c.k);
    CHECK(back.tilde == c.tilde);
    CHECK(back.segments.size() == c.segments.size());
    CHECK(back.probes.size() == c.probes.size());
    CHECK(emit_family(back) == emit_family(c));
}

TEST_CASE("parse rejects malformed and non-canonical input") {
    std::string good = emit_family(build(1, unit()));

    CHECK_THROWS_AS(parse_family(""), ParseError);
    CHECK_THROWS_AS(parse_family(good.substr(0, good.size() / 2)), ParseError);
    CHECK_THROWS_AS(parse_family("{}"), ParseError);
    CHECK_THROWS_AS(parse_family("[1,2]"), ParseError);

    SUBCASE("non-canonical rational") {
        std::string bad = good;
        bad.replace(bad.find("\"3/8\""), 5, "\"6/16\"");
        CHECK_THROWS_AS(parse_family(bad), ValueError);
    }
    SUBCASE("negative denominator") {
        std::string bad = good;
        bad.replace(bad.find("\"3/8\""), 5, "\"-3/-8\"");
        CHECK_THROWS_AS(parse_family(bad), ValueError);
    }
    SUBCASE("unknown field") {
        std::string bad = good;
        bad.replace(bad.find("\"schema\""), 8, "\"schemaz\"");
        CHECK_THROWS_AS(parse_family(bad), ParseError);
    }
    SUBCASE("tilde families must not carry probes") {
        std::string bad = good;
        bad.replace(bad.find("\"tilde\": false"), 14, "\"tilde\": true");
        CHECK_THROWS_AS(parse_family(bad), ValueError);
    }
    SUBCASE("pierced ids must resolve") {
        std::string bad = good;
        std::size_t pos = bad.find("\"pierced\"");
        REQUIRE(pos != std::string::npos);
        pos = bad.find('0', pos);
        REQUIRE(pos != std::string::npos);
        bad[pos] = '7';
        CHECK_THROWS_AS(parse_family(bad), ValueError);
    }
}

TEST_CASE("svg rendering") {
    Construction b2 = build(2, unit());
    RenderOptions opt;
    opt.show_probes = true;
    std::string svg = render_svg(b2, opt);
    CHECK(xml_well_formed(svg));
    CHECK(count_of(svg, "<line") == 3);
    CHECK(count_of(svg, "class=\"probe\"") == 2);
    CHECK(count_of(svg, "class=\"root\"") == 0);

    Construction b1 = build(1, unit());
    opt.show_roots = true;
    std::string svg1 = render_svg(b1, opt);
    CHECK(xml_well_formed(svg1));
    CHECK(count_of(svg1, "<line") == 1);
    CHECK(count_of(svg1, "class=\"probe\"") == 1);
    CHECK(count_of(svg1, "class=\"root\"") == 1);

    Construction t2 = augment_tilde(b2);
    std::string svg2 = render_svg(t2, opt);
    CHECK(xml_well_formed(svg2));
    CHECK(count_of(svg2, "<line") == 5);
    CHECK(count_of(svg2, "class=\"probe\"") == 0);
    CHECK(count_of(svg2, "<rect") == 1); // frame only
}
