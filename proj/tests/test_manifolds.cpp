#include "qgenus/manifolds.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qgenus;

TEST_CASE("catalog entries") {
    ManifoldClass hp2 = catalog("HP2");
    CHECK(hp2.dim == 8);
    CHECK(hp2.spin);
    CHECK(hp2.number({1, 1}) == Rational(4)); // p1 = 2u, p1^2 = 4u^2
    CHECK(hp2.number({2}) == Rational(7));    // p2 = 7u^2

    ManifoldClass hp3 = catalog("HP3");
    CHECK(hp3.dim == 12);
    CHECK(hp3.number({1, 1, 1}) == Rational(64)); // p1 = 4u
    CHECK(hp3.number({2, 1}) == Rational(48));    // p2 = 12u^2
    CHECK(hp3.number({3}) == Rational(8));        // p3 = 8u^3

    ManifoldClass k3 = catalog("K3");
    CHECK(k3.dim == 4);
    CHECK(k3.number({1}) == Rational(-48));

    ManifoldClass b8 = catalog("Bott8");
    CHECK(b8.number({1, 1}) == Rational(896));
    CHECK(b8.number({2}) == Rational(128));

    CHECK_THROWS_AS(catalog("CP2"), std::invalid_argument);
    CHECK_THROWS_AS(catalog("HPx"), std::invalid_argument);
    CHECK_THROWS_AS(hp_space(0), std::invalid_argument);
}

TEST_CASE("basic characteristic numbers") {
    ManifoldClass k3 = catalog("K3"), hp2 = catalog("HP2"), b8 = catalog("Bott8");
    CHECK(char_number(hp2, CharFunctional::signature).value == Rational(1));
    CHECK(char_number(hp2, CharFunctional::a_hat_genus).value == Rational(0));
    CHECK(char_number(k3, CharFunctional::signature).value == Rational(-16));
    CHECK(char_number(k3, CharFunctional::a_hat_genus).value == Rational(2));
    CHECK(char_number(k3, CharFunctional::signature_t).value == Rational(-256));
    CHECK(char_number(k3, CharFunctional::signature_tt).value == Rational(-1792));
    // Bott8's numbers were fixed by A-hat = 1 and signature 0; confirm both
    CHECK(char_number(b8, CharFunctional::a_hat_genus).value == Rational(1));
    CHECK(char_number(b8, CharFunctional::signature).value == Rational(0));
    CHECK(char_number(b8, CharFunctional::signature_t).value == Rational(2048));
    CHECK(char_number(b8, CharFunctional::signature_tt).value == Rational(47104));
    // dim-12 quaternionic space: zero signature, zero A-hat
    ManifoldClass hp3 = catalog("HP3");
    CHECK(char_number(hp3, CharFunctional::signature).value == Rational(0));
    CHECK(char_number(hp3, CharFunctional::a_hat_genus).value == Rational(0));
}

TEST_CASE("products") {
    ManifoldClass k3 = catalog("K3"), hp2 = catalog("HP2"), b8 = catalog("Bott8");
    ManifoldClass kk = product(k3, k3);
    CHECK(kk.dim == 8);
    CHECK(kk.number({1, 1}) == Rational(4608)); // 2·(-48)^2
    CHECK(kk.number({2}) == Rational(2304));

    // signature is multiplicative
    for (const ManifoldClass& a : {k3, hp2, b8})
        for (const ManifoldClass& b : {k3, hp2, b8}) {
            Rational direct = char_number(product(a, b), CharFunctional::signature).value;
            Rational split = char_number(a, CharFunctional::signature).value *
                             char_number(b, CharFunctional::signature).value;
            CHECK(direct == split);
        }

    // A-hat is multiplicative on these products
    CHECK(char_number(product(k3, b8), CharFunctional::a_hat_genus).value == Rational(2));

    // commutative and associative at the level of Pontryagin numbers
    CHECK(product(k3, hp2).pontryagin == product(hp2, k3).pontryagin);
    CHECK(product(product(k3, hp2), b8).pontryagin ==
          product(k3, product(hp2, b8)).pontryagin);
}

TEST_CASE("tangent-twisted signatures on products") {
    ManifoldClass k3 = catalog("K3"), hp2 = catalog("HP2"), b8 = catalog("Bott8");
    CHECK(char_number(product(hp2, hp2), CharFunctional::signature_t).value == Rational(0));
    CHECK(char_number(product(k3, b8), CharFunctional::signature_tt).value ==
          Rational(-1802240)); // -55 * 2^15
    ManifoldClass hp2_3 = product(product(hp2, hp2), hp2);
    CHECK(char_number(hp2_3, CharFunctional::signature_t).value == Rational(0));
    CHECK(char_number(hp2_3, CharFunctional::signature_tt).value == Rational(0));
}

TEST_CASE("product formulas for twisted signatures") {
    ManifoldClass k3 = catalog("K3"), hp2 = catalog("HP2"), b8 = catalog("Bott8");
    ProductFormulaCheck pf = verify_product_formulas(k3, b8);
    CHECK(pf.pass);
    CHECK(pf.direct_t == Rational(-32768)); // -16·2048 + 0·(-256)
    CHECK(pf.direct_tt == Rational(-1802240));
    CHECK(verify_product_formulas(hp2, hp2).pass);
    CHECK(verify_product_formulas(k3, hp2).pass);
    CHECK(verify_product_formulas(b8, catalog("HP3")).pass);
}

TEST_CASE("divisibility reports") {
    ManifoldClass k3 = catalog("K3"), hp2 = catalog("HP2"), b8 = catalog("Bott8");

    DivisibilityReport r = divisibility_report(product(k3, hp2)); // dim 12
    CHECK(r.all_hold);
    bool found = false;
    for (const auto& c : r.checks)
        if (c.rule == "256 | Sig(M,T)") {
            found = true;
            CHECK(c.value == Rational(-256));
            CHECK(c.quotient == Rational(-1));
            CHECK(c.witness); // odd quotient: tight
        }
    CHECK(found);

    r = divisibility_report(product(b8, hp2)); // dim 16
    CHECK(r.all_hold);
    for (const auto& c : r.checks)
        if (c.rule == "2048 | Sig(M,T)") {
            CHECK(c.quotient == Rational(1));
            CHECK(c.witness);
        }

    r = divisibility_report(k3);
    CHECK(r.all_hold);
    for (const auto& c : r.checks)
        if (c.rule == "256*7 | Sig(M,TxT)")
            CHECK(c.quotient == Rational(-1));

    ManifoldClass fake;
    fake.name = "nonspin";
    fake.dim = 4;
    fake.spin = false;
    fake.pontryagin[{1}] = Rational(1);
    CHECK_THROWS_AS(divisibility_report(fake), std::invalid_argument);
}

TEST_CASE("pairing preconditions") {
    ManifoldClass k3 = catalog("K3");
    RingSignature sig = signature_for_dim(4, true);
    GradedClass u = GradedClass::u(sig);
    CHECK_THROWS_AS(pair_with_fundamental_class(u * u, k3), std::invalid_argument);
    RingSignature plain = signature_for_dim(8, false);
    GradedClass wrong_degree = GradedClass::p(plain, 2); // internal degree 4 vs dim/2 = 2
    CHECK_THROWS_AS(pair_with_fundamental_class(wrong_degree, k3), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(7).size() == 15);
    CHECK(partition_str({2, 1}) == "p[2,1]");
}

TEST_CASE("catalog numbers and spin functionals are integers") {
    std::vector<ManifoldClass> ms = {catalog("K3"), catalog("HP2"), catalog("HP3"),
                                     catalog("Bott8")};
    ms.push_back(product(ms[0], ms[3]));
    ms.push_back(product(ms[1], ms[1]));
    for (const ManifoldClass& m : ms) {
        for (const auto& [lam, v] : m.pontryagin)
            CHECK(v.is_integer());
        for (CharFunctional f : {CharFunctional::signature, CharFunctional::a_hat_genus,
                                 CharFunctional::signature_t, CharFunctional::signature_tt})
            CHECK(char_number(m, f).value.is_integer());
    }
}
