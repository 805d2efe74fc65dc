#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <variant>

#include "mtzeta/format.hpp"
#include "mtzeta/literal.hpp"
#include "mtzeta/reduce.hpp"

using namespace mtzeta;

TEST_CASE("parses the three literal shapes") {
  CHECK(std::get<mt_index>(parse_literal("T(2,1;2)")) == mt_index({2, 1}, 2));
  CHECK(std::get<mzv_index>(parse_literal("Z(2,1)")) == mzv_index({2, 1}));
  CHECK(std::get<zeta_product_expr>(parse_literal("P(2,3)")) ==
        zeta_product_expr{{2, 3}});
  CHECK(std::get<mt_index>(parse_literal("T(4;1)")) == mt_index({4}, 1));
}

TEST_CASE("whitespace is insignificant") {
  CHECK(std::get<mt_index>(parse_literal("  T ( 2 , 1 ; 2 )  ")) ==
        mt_index({2, 1}, 2));
  CHECK(std::get<mzv_index>(parse_literal("Z( 10 ,1 )")) == mzv_index({10, 1}));
}

TEST_CASE("parse errors carry 1-based columns") {
  auto column_of = [](const char* text) {
    try {
      parse_literal(text);
    } catch (const parse_error& e) {
      return e.column();
    }
    return std::size_t{0};
  };
  CHECK(column_of("Q(2)") == 1);        // unknown head
  CHECK(column_of("T2,1;2)") == 2);     // missing parenthesis
  CHECK(column_of("T(;2)") == 3);       // empty argument list
  CHECK(column_of("T(2,1)") == 6);      // missing trailing exponent
  CHECK(column_of("Z(2,1;3)") == 6);    // stray semicolon
  CHECK(column_of("Z(2,)") == 5);       // trailing comma
  CHECK(column_of("Z(2,0)") == 5);      // zero argument
  CHECK(column_of("Z(2,-1)") == 5);     // negative argument
  CHECK(column_of("Z(2) extra") == 6);  // trailing junk
  CHECK(column_of("Z(2") == 4);         // unterminated
  CHECK(column_of("") == 1);            // empty input
}

TEST_CASE("render produces canonical text") {
  CHECK(render(mt_index({2, 1}, 2)) == "T(2,1;2)");
  CHECK(render(mzv_index({3, 1, 1})) == "Z(3,1,1)");
  CHECK(render(zeta_product_expr{{2, 2}}) == "P(2,2)");
  CHECK(render(parse_literal(" T( 1 ,1; 1) ")) == "T(1,1;1)");
}

TEST_CASE("parse inverts render on random literals") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> depth_dist(1, 5);
  std::uniform_int_distribution<int> arg_dist(1, 40);
  for (int i = 0; i < 100; ++i) {
    std::vector<int> args(depth_dist(rng));
    for (int& a : args) a = arg_dist(rng);
    const mt_index t(args, arg_dist(rng));
    CHECK(std::get<mt_index>(parse_literal(render(t))) == t);
    const mzv_index z(args);
    CHECK(std::get<mzv_index>(parse_literal(render(z))) == z);
    const zeta_product_expr p{args};
    CHECK(std::get<zeta_product_expr>(parse_literal(render(p))) == p);
  }
}

TEST_CASE("plain rendering spells out every coefficient") {
  CHECK(render_plain(mzv_combination{}) == "0");
  CHECK(render_plain(reduce(mt_index({1, 1}, 1))) == "2 * Z(2,1)");
  CHECK(render_plain(reduce(mt_index({1}, 4))) == "1 * Z(5)");
  CHECK(render_plain(reduce(mt_index({2, 1}, 2))) == "1 * Z(3,2) + 2 * Z(4,1)");
  CHECK(render_plain(mzv_combination{{mzv_index({2}), rational(1, 2)}}) ==
        "1/2 * Z(2)");
}

TEST_CASE("latex rendering drops unit coefficients") {
  CHECK(render_latex(mzv_combination{}) == "0");
  CHECK(render_latex(reduce(mt_index({1, 1, 1}, 2))) == "6\\zeta(3,1,1)");
  CHECK(render_latex(reduce(mt_index({2, 1}, 2))) ==
        "\\zeta(3,2) + 2\\zeta(4,1)");
  CHECK(render_latex(mzv_combination{{mzv_index({2, 1}), rational(3, 2)}}) ==
        "\\tfrac{3}{2}\\zeta(2,1)");
}
