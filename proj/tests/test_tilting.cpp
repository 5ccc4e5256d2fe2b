#include <doctest.h>

#include "dlcoh/errors.hpp"
#include "dlcoh/cohomology.hpp"
#include "dlcoh/tilting.hpp"

using namespace dlcoh;

namespace {

bool has_note(const Report& r, const std::string& needle) {
    for (const auto& n : r.notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

bool has_check(const Report& r, const std::string& needle) {
    for (const auto& c : r.checks)
        if (c.name.find(needle) != std::string::npos) return c.passed;
    return false;
}

}  // namespace

TEST_CASE("truncated E") {
    auto L = build_line(5, 1, 2);
    auto E = truncated_E(L, 5);
    CHECK(E.length() == 6);
    const std::vector<std::vector<int>> terms{{5}, {5}, {4}, {3}, {2}, {1}};
    for (int k = 0; k < 6; ++k) CHECK(E.summands(E.lo() + k) == terms[static_cast<std::size_t>(k)]);
    CHECK(truncated_E(L, 2).length() == 9);
    CHECK_THROWS_AS(truncated_E(L, 0), InvalidArgument);
    CHECK_THROWS_AS(truncated_E(L, 6), InvalidArgument);
    for (int j = 1; j <= 5; ++j) CHECK(truncated_E_report(L, j).ok());
}

TEST_CASE("Hom in the homotopy category") {
    auto L = build_line(5, 1, 2);
    auto E = truncated_E(L, 5);
    auto t = hom_k_dims(E, E);
    for (const auto& [a, h] : t.dims)
        if (a != 0) CHECK(h == 0);
    CHECK(t.at(40) == 0);

    ProjComplex P1(L, 0, {{1}}, {});
    CHECK(hom_k_dims(P1, P1).at(0) == 2);
    CHECK(is_partial_tilting(P1).partial_tilting);

    // P_1 with the zero differential to P_1: the identity between the two copies survives
    ProjComplex Z(L, 0, {{1}, {1}}, {zero_map(L.projective(1), L.projective(1))});
    auto v = is_partial_tilting(Z);
    CHECK_FALSE(v.partial_tilting);
    REQUIRE(v.witness_shift);
    CHECK(std::abs(*v.witness_shift) == 1);
    CHECK_FALSE(v.witness.empty());

    // complexes over different lines do not mix
    auto other = truncated_E(build_line(5, 2, 2), 5);
    CHECK_THROWS_AS(hom_k_dims(E, other), InvalidArgument);
}

TEST_CASE("p-independence of Hom dimensions") {
    for (int m = 2; m <= 5; ++m)
        for (int r = 1; r <= 2; ++r)
            for (int j = 1; j <= m; ++j) {
                auto a = hom_k_dims(truncated_E(build_line(m, r, 2), j), truncated_E(build_line(m, r, 2), j));
                auto b = hom_k_dims(truncated_E(build_line(m, r, 3), j), truncated_E(build_line(m, r, 3), j));
                auto c = hom_k_dims(truncated_E(build_line(m, r, 5), j), truncated_E(build_line(m, r, 5), j));
                CHECK(a.dims == b.dims);
                CHECK(a.dims == c.dims);
            }
}

TEST_CASE("chain-map shapes") {
    auto E = truncated_E(build_line(5, 1, 2), 5);
    CHECK(chain_map_shapes(E, 3).ok());
    auto E6 = truncated_E(build_line(6, 2, 3), 4);
    auto r = chain_map_shapes(E6, -2);
    CHECK(r.ok());
    CHECK(has_check(r, "pattern (i) or (ii)"));
    auto far = chain_map_shapes(E, 20);
    CHECK(far.ok());
    CHECK(has_note(far, "cycle space dimension 0"));
    CHECK_THROWS_AS(chain_map_shapes(E, 0), InvalidArgument);
}

TEST_CASE("D model") {
    auto D = build_D_model(5, 4, 5, 1);
    CHECK(D.j == 5);
    CHECK(D.printed_j == 4);
    CHECK(D.alpha == 10);
    CHECK(D.beta == 5);
    CHECK(D.complex.lo() == 5);
    CHECK(D.complex.hi() == 10);
    CHECK(D.report.ok());
    CHECK(has_note(D.report, "j = m-n+d"));
    auto two = verify_two_term(D.complex);
    CHECK(two.ok());
    CHECK(has_check(two, "Omega^6"));

    CHECK_THROWS_AS(build_D_model(4, 3, 4, 1), PreconditionViolation);
    auto G = build_D_model(4, 3, 4, 1, 2, true);
    CHECK(G.alpha == 8);
    CHECK(G.beta == 4);
    CHECK(G.j == 4);
    CHECK(G.complex.length() == 5);
    CHECK(G.report.ok());
    CHECK(composition_factors(G.complex.cohomology(4)) == std::vector<int>{0, 0, 1, 1});
    CHECK(has_check(verify_two_term(G.complex), "Omega^5"));
    CHECK(verify_two_term(G.complex).ok());

    for (int m = 2; m <= 5; ++m)
        for (int j = 1; j <= m; ++j) {
            auto v = verify_two_term(truncated_E(build_line(m, 1, 2), j));
            CHECK(v.ok());
            CHECK(has_check(v, "Omega^" + std::to_string(2 * m - j + 1)));
        }
    CHECK_THROWS_AS(verify_two_term(ProjComplex(build_line(3, 1, 2), 0, {{1}}, {})), InvalidArgument);
}

TEST_CASE("full complex model") {
    auto r = full_complex_model(5, 4, 5, 1);
    CHECK(r.ok());
    CHECK(has_note(r, "C_2 = S(2,2,1)[-6]"));
    CHECK(has_note(r, "C_3 = S(3,2)[-7]"));
    CHECK(has_note(r, "degrees 5..10"));
    auto big = full_complex_model(5, 4, 11, 1);
    CHECK(big.ok());
    CHECK(has_note(big, "m > n"));
    CHECK_THROWS_AS(full_complex_model(6, 2, 3, 1), PreconditionViolation);
    for (int n = 7; n <= 10; ++n)
        for (int d = 1; d <= n; ++d)
            for (int m = 7; m <= n; ++m)
                if (torsion_free_gate(n, d, m) == Gate::Guaranteed) CHECK(full_complex_model(n, d, m, 2).ok());
}
