#include <doctest.h>

#include "partlog/dot.hpp"
#include "partlog/text.hpp"
#include "test_support.hpp"

using namespace partlog;
using testsupport::part;

namespace {

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0, at = 0;
    while ((at = haystack.find(needle, at)) != std::string::npos) {
        ++count;
        at += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("dot for the worked implication example") {
    UniversePtr u = make_universe({"a", "b", "c", "d"});
    Assignment a(u);
    a.bind("s", part(u, "{a|b,c,d}"));
    a.bind("p", part(u, "{a,b|c,d}"));
    std::string dot = render_eval_dot(parse_formula("s -> p"), a);

    CHECK(count_occurrences(dot, " -- ") == 6);  // K4
    CHECK(count_occurrences(dot, "style=bold") == 1);
    CHECK(dot.find("\"a\" -- \"b\" [label=\"T_s,F_p\", style=bold]") != std::string::npos);
    CHECK(dot.find("\"c\" -- \"d\" [label=\"F_s,F_p\"]") != std::string::npos);

    // Vertex order follows the universe; edge order is lexicographic.
    CHECK(dot.find("\"a\";") < dot.find("\"b\";"));
    CHECK(dot.find("\"a\" -- \"b\"") < dot.find("\"a\" -- \"c\""));
    CHECK(dot.find("\"a\" -- \"d\"") < dot.find("\"b\" -- \"c\""));

    // Deterministic output.
    CHECK(dot == render_eval_dot(parse_formula("s -> p"), a));
}

TEST_CASE("dot for a leaf formula keeps the indit links") {
    UniversePtr u = make_universe({"a", "b", "c"});
    Assignment a(u);
    a.bind("s", part(u, "{a,b|c}"));
    std::string dot = render_eval_dot(parse_formula("s"), a);
    CHECK(count_occurrences(dot, "style=bold") == 1);  // only a--b is an indit
    CHECK(dot.find("\"a\" -- \"b\" [label=\"F_s\", style=bold]") != std::string::npos);

    // Positional subscripts when an argument is not a bare variable.
    std::string compound = render_eval_dot(parse_formula("(s -> s) -> s"), a);
    CHECK(compound.find("_1,") != std::string::npos);
    bool labels_second_arg = compound.find(",T_s") != std::string::npos ||
                             compound.find(",F_s") != std::string::npos;
    CHECK(labels_second_arg);
}
