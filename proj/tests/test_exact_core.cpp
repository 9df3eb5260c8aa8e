#include <catch2/catch_amalgamated.hpp>

#include <gencluster/gradient.hpp>
#include <gencluster/matrix.hpp>
#include <gencluster/poly.hpp>
#include <gencluster/rational.hpp>

#include <random>

using namespace gencluster;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, int n, int lo = -9, int hi = 9) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rat(static_cast<long>(rng() % (hi - lo + 1)) + lo);
    return m;
}

Rat det_cofactor(const RatMatrix& a) {
    const int n = a.rows();
    if (n == 1) return a(0, 0);
    Rat s(0);
    std::vector<int> rows, all;
    for (int i = 2; i <= n; ++i) rows.push_back(i);
    for (int j = 1; j <= n; ++j) all.push_back(j);
    for (int j = 1; j <= n; ++j) {
        if (a.e(1, j) == 0) continue;
        std::vector<int> cols;
        for (int k : all)
            if (k != j) cols.push_back(k);
        Rat minor_det = det_cofactor(a.submatrix(rows, cols));
        s += ((j % 2 == 1) ? a.e(1, j) : -a.e(1, j)) * minor_det;
    }
    return s;
}

// Leverrier-Faddeev recurrence, used as an independent characteristic
// polynomial oracle: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A (M_k + c_k I).
std::vector<Rat> charpoly_leverrier(const RatMatrix& a) {
    const int n = a.rows();
    std::vector<Rat> c(n);
    RatMatrix m = a;
    for (int k = 1; k <= n; ++k) {
        c[k - 1] = -trace(m) / Rat(k);
        if (k < n) m = a * (m + RatMatrix::identity(n) * c[k - 1]);
    }
    return c;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    Rat q = make_rational(2, -4);
    CHECK(q.get_num() == -1);
    CHECK(q.get_den() == 2);
    CHECK(make_rational(-6, -3) == 2);
    CHECK(is_integer(make_rational(-6, -3)));
    CHECK(!is_integer(q));
    CHECK(to_string(q) == "-1/2");
    CHECK(parse_rational("-4/6") == make_rational(-2, 3));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("dual scalars satisfy eps^2 = 0") {
    DualScalar a(Rat(3), Rat(2)), b(Rat(5), Rat(7));
    DualScalar p = a * b;
    CHECK(p.val == 15);
    CHECK(p.der == 2 * 5 + 3 * 7);
    DualScalar q = a / b;
    CHECK(q.val == make_rational(3, 5));
    CHECK(q.der == (Rat(2) * 5 - Rat(3) * 7) / 25);
    CHECK((q * b).val == a.val);
    CHECK((q * b).der == a.der);
    DualScalar eps(Rat(0), Rat(1));
    CHECK(is_zero(eps * eps));
    CHECK_THROWS_AS(a / eps, genericity_error);
}

TEST_CASE("determinant matches pinned examples") {
    CHECK(det(RatMatrix::identity(5)) == 1);

    RatMatrix m(2, 2);
    m.e(1, 1) = 3;
    m.e(1, 2) = 2;
    m.e(2, 1) = 4;
    m.e(2, 2) = 2;
    CHECK(det(m) == -2);

    // Cyclic-with-weight fixture, n = 4, t = 5: determinant is t up to sign.
    RatMatrix s(4, 4);
    s.e(1, 4) = 1;
    s.e(2, 1) = 1;
    s.e(3, 2) = 5;
    s.e(4, 3) = 1;
    CHECK(abs(det(s)) == 5);

    std::mt19937_64 rng(20260817);
    for (int n = 1; n <= 4; ++n)
        for (int rep = 0; rep < 4; ++rep) {
            RatMatrix a = random_matrix(rng, n);
            CHECK(det(a) == det_cofactor(a));
        }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 5; ++rep) {
        RatMatrix a = random_matrix(rng, 4), b = random_matrix(rng, 4);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("adjugate identity") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 4; ++n) {
        RatMatrix a = random_matrix(rng, n);
        CHECK(a * adjugate(a) == RatMatrix::identity(n) * det(a));
    }
}

TEST_CASE("rank on pinned examples") {
    CHECK(rank(RatMatrix::zero(2, 3)) == 0);
    CHECK(rank(RatMatrix::identity(6)) == 6);

    // Extended exchange matrix of the n = 2 structure (rows g22, h22, phi11;
    // columns g22, h22, phi11, g11, g21, h11, h12, c1).
    long rows[3][8] = {
        {0, -1, 1, -1, 1, 0, 0, 0},
        {1, 0, -1, 0, 0, 0, 1, 0},
        {-2, 2, 0, 1, 0, -1, 0, 0},
    };
    RatMatrix b(3, 8);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 8; ++j) b(i, j) = rows[i][j];
    CHECK(rank(b) == 3);
}

TEST_CASE("inverse and solve") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 5; ++rep) {
        RatMatrix a = random_matrix(rng, 4);
        if (det(a) == 0) continue;
        CHECK(a * inverse(a) == RatMatrix::identity(4));
        RatMatrix b = random_matrix(rng, 4);
        CHECK(a * solve(a, b) == b);
    }
    CHECK_THROWS_AS(inverse(RatMatrix::zero(2, 2)), genericity_error);
}

TEST_CASE("gradient layout is transposed") {
    std::mt19937_64 rng(17);
    RatMatrix x = random_matrix(rng, 3);
    while (det(x) == 0) x = random_matrix(rng, 3);

    RatMatrix g_tr = gradient([](const DualMatrix& m) { return trace(m); }, x);
    CHECK(g_tr == RatMatrix::identity(3));

    RatMatrix g_det = gradient([](const DualMatrix& m) { return det(m); }, x);
    CHECK(x * g_det == RatMatrix::identity(3) * det(x));
    CHECK(g_det == adjugate(x));

    RatMatrix g_entry = gradient([](const DualMatrix& m) { return m.e(1, 2); }, x);
    RatMatrix expect(3, 3);
    expect.e(2, 1) = 1;
    CHECK(g_entry == expect);
}

TEST_CASE("dual determinant handles degenerate value part") {
    // A = [[eps, 0], [0, 1]]: det = eps exactly.
    DualMatrix a(2, 2);
    a(0, 0) = DualScalar(Rat(0), Rat(1));
    a(1, 1) = DualScalar(Rat(1), Rat(0));
    DualScalar d = det(a);
    CHECK(d.val == 0);
    CHECK(d.der == 1);
}

TEST_CASE("polynomial division: pinned examples") {
    // Variables x, y.
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly num = x * x - y * y, den = x - y;
    auto r = poly_divide(num, den);
    REQUIRE(r.exact);
    CHECK(r.quotient == x + y);

    auto bad = poly_divide(x * x, y);
    CHECK(!bad.exact);
    CHECK(bad.remainder == x * x);
    CHECK_THROWS_AS(x * x / y, std::domain_error);
}

TEST_CASE("polynomial division: 2x2 exchange relation") {
    // Variables x11,x12,x21,x22,y11,y12,y21,y22.
    const int NV = 8;
    auto X = [&](int i, int j) { return MultiPoly::variable(NV, 2 * (i - 1) + (j - 1)); };
    auto Y = [&](int i, int j) { return MultiPoly::variable(NV, 4 + 2 * (i - 1) + (j - 1)); };

    Matrix<MultiPoly> a(2, 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) a.e(i, j) = X(2, 2) * Y(i, j) - Y(2, 2) * X(i, j);
    MultiPoly lhs = det(a);

    MultiPoly phi11 = X(1, 2) * Y(2, 2) - X(2, 2) * Y(1, 2);
    auto r = poly_divide(lhs, phi11);
    REQUIRE(r.exact);
    CHECK(r.quotient == Y(2, 1) * X(2, 2) - Y(2, 2) * X(2, 1));
}

TEST_CASE("polynomial multiply/divide round trip") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        MultiPoly a = MultiPoly::zero(3), b = MultiPoly::zero(3);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> ea = {int(rng() % 3), int(rng() % 3), int(rng() % 3)};
            std::vector<int> eb = {int(rng() % 3), int(rng() % 3), int(rng() % 3)};
            MultiPoly ta = MultiPoly::zero(3), tb = MultiPoly::zero(3);
            ta += MultiPoly::variable(3, 0, ea[0]) * MultiPoly::variable(3, 1, ea[1]) *
                  MultiPoly::variable(3, 2, ea[2]) * MultiPoly(long(rng() % 7) - 3);
            tb += MultiPoly::variable(3, 0, eb[0]) * MultiPoly::variable(3, 1, eb[1]) *
                  MultiPoly::variable(3, 2, eb[2]) * MultiPoly(long(rng() % 7) - 3);
            a += ta;
            b += tb;
        }
        if (is_zero(b)) continue;
        auto r = poly_divide(a * b, b);
        REQUIRE(r.exact);
        CHECK(r.quotient == a);
    }
}

TEST_CASE("characteristic polynomial coefficients") {
    RatMatrix d(2, 2);
    d.e(1, 1) = 1;
    d.e(2, 2) = 2;
    auto c = charpoly_coeffs(d);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == -3);
    CHECK(c[1] == 2);

    RatMatrix nil(2, 2);
    nil.e(1, 2) = 1;
    auto cn = charpoly_coeffs(nil);
    CHECK(cn[0] == 0);
    CHECK(cn[1] == 0);

    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 3; ++rep) {
        RatMatrix a = random_matrix(rng, 4);
        CHECK(charpoly_coeffs(a) == charpoly_leverrier(a));
    }
}

TEST_CASE("determinant over a polynomial ring") {
    // det is exercised through Bareiss over MultiPoly entries, whose divisions
    // must all be exact.
    const int NV = 4;
    Matrix<MultiPoly> m(2, 2);
    m.e(1, 1) = MultiPoly::variable(NV, 0);
    m.e(1, 2) = MultiPoly::variable(NV, 1);
    m.e(2, 1) = MultiPoly::variable(NV, 2);
    m.e(2, 2) = MultiPoly::variable(NV, 3);
    MultiPoly d = det(m);
    CHECK(d == MultiPoly::variable(NV, 0) * MultiPoly::variable(NV, 3) -
                   MultiPoly::variable(NV, 1) * MultiPoly::variable(NV, 2));

    Matrix<MultiPoly> big(3, 3);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            big(i, j) = MultiPoly::variable(9, 3 * i + j) + MultiPoly(long(rng() % 5) - 2);
    // Compare Bareiss against cofactor expansion over the same ring.
    MultiPoly by_cofactor = MultiPoly::zero(9);
    for (int j = 1; j <= 3; ++j) {
        std::vector<int> rows = {2, 3}, cols;
        for (int k = 1; k <= 3; ++k)
            if (k != j) cols.push_back(k);
        MultiPoly minor_det = big.submatrix(rows, cols).e(1, 1) * big.submatrix(rows, cols).e(2, 2) -
                              big.submatrix(rows, cols).e(1, 2) * big.submatrix(rows, cols).e(2, 1);
        MultiPoly term = big.e(1, j) * minor_det;
        by_cofactor += (j % 2 == 1) ? term : -term;
    }
    CHECK(det(big) == by_cofactor);
}
