#include <doctest.h>

#include "skewtab/json_io.hpp"

using namespace skewtab;

TEST_CASE("count report round trip") {
    CountReport rep;
    rep.shape = "2,2,2,1/1,1";
    rep.method = "oof";
    rep.value = Int("123456789012345678901234567890");
    rep.term_count = Int(6);
    CountReport back = count_report_from_json(count_report_to_json(rep, 17));
    CHECK(back.shape == rep.shape);
    CHECK(back.method == rep.method);
    CHECK(back.value == rep.value);
    REQUIRE(back.term_count.has_value());
    CHECK(*back.term_count == *rep.term_count);

    CountReport no_terms;
    no_terms.shape = "2/0";
    no_terms.method = "detrows";
    no_terms.value = 1;
    CountReport back2 = count_report_from_json(count_report_to_json(no_terms, 0));
    CHECK_FALSE(back2.term_count.has_value());
    CHECK(back2.value == 1);
}

TEST_CASE("Laurent polynomial round trip") {
    QLaurent p = QLaurent::monomial(-3, -2) + QLaurent::one() + QLaurent::monomial(7, 4);
    CHECK(qlaurent_from_json(qlaurent_to_json(p)) == p);
    CHECK(qlaurent_from_json(qlaurent_to_json(QLaurent::zero())) == QLaurent::zero());
}
