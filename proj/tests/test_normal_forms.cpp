#include <catch2/catch_amalgamated.hpp>

#include <gencluster/normal_forms.hpp>
#include <gencluster/sample.hpp>

#include <random>

using namespace gencluster;

namespace {

RatMatrix random_invertible(int n, std::mt19937_64& rng) {
    for (;;) {
        RatMatrix u = random_matrix(n, n, rng);
        if (det(u) != 0) return u;
    }
}

RatMatrix random_unipotent_lower(int n, std::mt19937_64& rng) {
    RatMatrix m = RatMatrix::identity(n);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) m(i, j) = Rat(random_small_int(rng));
    return m;
}

RatMatrix random_upper_invertible(int n, std::mt19937_64& rng) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = Rat(random_small_int(rng));
    for (int i = 0; i < n; ++i)
        while (m(i, i) == 0) m(i, i) = Rat(random_small_int(rng));
    return m;
}

bool is_unipotent_lower(const RatMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            if (m(i, j) != ((i == j) ? Rat(1) : Rat(0))) return false;
    return true;
}

bool is_unipotent_upper(const RatMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j <= i; ++j)
            if (m(i, j) != ((i == j) ? Rat(1) : Rat(0))) return false;
    return true;
}

bool is_upper_triangular(const RatMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (m(i, j) != 0) return false;
    return true;
}

// Trailing-block minor cluster functions of a single matrix, with the
// boundary conventions used by the recovery formulas: indices at or past the
// top row collapse to 1, and the (0, n) corner is the full determinant.
Rat psi(int n, int k, int l, const RatMatrix& u) {
    if (k >= n) return Rat(1);
    if (k == 0 && l == n) return det(u);
    return eval_phi(n, k, l, RatMatrix::identity(n), u);
}

Rat h_or_one(int n, int i, int j, const RatMatrix& y) {
    if (j == n + 1) return Rat(1);
    return eval_h(n, i, j, y);
}

Rat rat_power(const Rat& base, long e) { return scale_by_power(Rat(1), base, e); }

// Checks that lhs/rhs is the same value in {+1, -1} at every point.
void check_up_to_sign(const std::vector<Rat>& lhs, const std::vector<Rat>& rhs) {
    REQUIRE(lhs.size() == rhs.size());
    REQUIRE(!lhs.empty());
    std::vector<Rat> ratios;
    for (size_t p = 0; p < lhs.size(); ++p) {
        REQUIRE(rhs[p] != 0);
        ratios.push_back(lhs[p] / rhs[p]);
    }
    CHECK((ratios[0] == Rat(1) || ratios[0] == Rat(-1)));
    for (size_t p = 1; p < ratios.size(); ++p) CHECK(ratios[p] == ratios[0]);
}

}  // namespace

TEST_CASE("triangular factorization round trips", "[normal_forms]") {
    SECTION("pinned two by two example") {
        RatMatrix x(2, 2);
        x(0, 0) = 3;
        x(0, 1) = 2;
        x(1, 0) = 4;
        x(1, 1) = 2;
        GaussFactors<Rat> f = gauss_factor(x);
        CHECK(f.upper(0, 1) == Rat(1));
        CHECK(f.diag(0, 0) == Rat(-1));
        CHECK(f.diag(1, 1) == Rat(2));
        CHECK(f.lower(1, 0) == Rat(2));
        CHECK(f.upper * f.diag * f.lower == x);
    }

    SECTION("identity factors trivially") {
        GaussFactors<Rat> f = gauss_factor(RatMatrix::identity(3));
        CHECK(f.upper == RatMatrix::identity(3));
        CHECK(f.diag == RatMatrix::identity(3));
        CHECK(f.lower == RatMatrix::identity(3));
    }

    SECTION("random round trips and idempotence") {
        std::mt19937_64 rng(401);
        for (int n = 2; n <= 5; ++n) {
            int done = 0;
            while (done < 100) {
                RatMatrix x = random_matrix(n, n, rng);
                GaussFactors<Rat> f;
                try {
                    f = gauss_factor(x);
                } catch (const genericity_error&) {
                    continue;
                }
                REQUIRE(f.upper * f.diag * f.lower == x);
                REQUIRE(f.nonneg() == f.upper * f.diag);
                REQUIRE(f.nonpos() == f.diag * f.lower);
                Rat dprod(1);
                for (int i = 0; i < n; ++i) dprod *= f.diag(i, i);
                REQUIRE(det(x) == dprod);
                GaussFactors<Rat> g = gauss_factor(f.upper * f.diag * f.lower);
                REQUIRE(g.upper == f.upper);
                REQUIRE(g.diag == f.diag);
                REQUIRE(g.lower == f.lower);
                ++done;
            }
        }
    }
}

TEST_CASE("cyclic conjugation form", "[normal_forms]") {
    SECTION("round trips and factor shapes") {
        std::mt19937_64 rng(402);
        for (int n = 2; n <= 5; ++n) {
            RatMatrix c = cyclic_shift<Rat>(n);
            int done = 0;
            while (done < 100) {
                RatMatrix u = random_invertible(n, rng);
                ConjugationFactors<Rat> f;
                try {
                    f = bc_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                REQUIRE(is_unipotent_lower(f.nminus));
                REQUIRE(is_upper_triangular(f.bplus));
                REQUIRE(f.nminus * (f.bplus * c) * inverse(f.nminus) == u);
                ++done;
            }
        }
    }

    SECTION("factors of a built product are recovered exactly") {
        std::mt19937_64 rng(403);
        for (int n = 2; n <= 5; ++n) {
            RatMatrix c = cyclic_shift<Rat>(n);
            for (int rep = 0; rep < 20; ++rep) {
                RatMatrix nm = random_unipotent_lower(n, rng);
                RatMatrix bp = random_upper_invertible(n, rng);
                RatMatrix u = nm * (bp * c) * inverse(nm);
                ConjugationFactors<Rat> f = bc_factor(u);
                REQUIRE(f.nminus == nm);
                REQUIRE(f.bplus == bp);
            }
        }
    }

    SECTION("a matrix already in normal form needs no conjugation") {
        std::mt19937_64 rng(404);
        for (int n = 2; n <= 4; ++n) {
            RatMatrix bp = random_upper_invertible(n, rng);
            ConjugationFactors<Rat> f = bc_factor(bp * cyclic_shift<Rat>(n));
            CHECK(f.nminus == RatMatrix::identity(n));
            CHECK(f.bplus == bp);
        }
    }
}

TEST_CASE("cyclic form reads off the column span minors", "[normal_forms]") {
    std::mt19937_64 rng(405);
    for (int n = 3; n <= 4; ++n) {
        for (int pt = 0; pt < 3; ++pt) {
            RatMatrix u;
            ConjugationFactors<Rat> f;
            for (;;) {
                u = random_invertible(n, rng);
                try {
                    f = bc_factor(u);
                    break;
                } catch (const genericity_error&) {
                }
            }
            for (int k = 1; k + 1 <= n; ++k)
                for (int l = 1; k + l <= n; ++l) {
                    // The sign below is exact for the normalized minor
                    // functions that eval_phi computes; the raw column-span
                    // determinant differs from it by the normalization sign.
                    Rat lhs = eval_phi(n, k, l, RatMatrix::identity(n), u);

                    Rat prod(1);
                    for (int s = 1; s <= n - k - l + 1; ++s)
                        prod *= rat_power(f.bplus(s - 1, s - 1), n - k - l - s + 2);
                    Rat minor = det(f.bplus.block(n - k - l + 2, n - k, n - l + 2, n));
                    long e = static_cast<long>(k) * (n - k) +
                             static_cast<long>(l - 1) * (n - k - l + 1);
                    int sgn = (e % 2 == 0 ? 1 : -1) * sign_skl(n, k, l);
                    REQUIRE(lhs == Rat(sgn) * prod * minor);

                    // Same minor as a ratio of trailing minors of the upper
                    // factor, stated only up to sign.
                    Rat den(1);
                    for (int s = 2; s <= n - k - l + 2; ++s) den *= eval_h(n, s, s, f.bplus);
                    REQUIRE(den != 0);
                    Rat rhs2 = rat_power(det(u), n - k - l + 1) *
                               h_or_one(n, n - k - l + 2, n - l + 2, f.bplus) / den;
                    if (lhs != 0 || rhs2 != 0) {
                        REQUIRE(rhs2 != 0);
                        Rat ratio = lhs / rhs2;
                        CHECK((ratio == Rat(1) || ratio == Rat(-1)));
                    }
                }
        }
    }
}

TEST_CASE("order reversing conjugation form", "[normal_forms]") {
    SECTION("round trips") {
        std::mt19937_64 rng(406);
        for (int n = 2; n <= 5; ++n) {
            RatMatrix w0 = antidiagonal<Rat>(n);
            int done = 0;
            while (done < 100) {
                RatMatrix u = random_invertible(n, rng);
                ConjugationFactors<Rat> f;
                try {
                    f = bw_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                REQUIRE(is_unipotent_lower(f.nminus));
                REQUIRE(is_upper_triangular(f.bplus));
                REQUIRE(f.nminus * (f.bplus * w0) * inverse(f.nminus) == u);
                ++done;
            }
        }
    }

    SECTION("factors of a built product are recovered exactly") {
        std::mt19937_64 rng(407);
        for (int n = 2; n <= 5; ++n) {
            RatMatrix w0 = antidiagonal<Rat>(n);
            int done = 0;
            while (done < 20) {
                RatMatrix nm = random_unipotent_lower(n, rng);
                RatMatrix bp = random_upper_invertible(n, rng);
                RatMatrix u = nm * (bp * w0) * inverse(nm);
                ConjugationFactors<Rat> f;
                try {
                    f = bw_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                REQUIRE(f.nminus == nm);
                REQUIRE(f.bplus == bp);
                ++done;
            }
        }
    }

    SECTION("a matrix already in normal form needs no conjugation") {
        std::mt19937_64 rng(408);
        for (int n = 2; n <= 4; ++n) {
            RatMatrix bp = random_upper_invertible(n, rng);
            ConjugationFactors<Rat> f = bw_factor(bp * antidiagonal<Rat>(n));
            CHECK(f.nminus == RatMatrix::identity(n));
            CHECK(f.bplus == bp);
        }
    }

    SECTION("diagonal entries are trailing minor ratios up to sign") {
        std::mt19937_64 rng(409);
        for (int n = 3; n <= 4; ++n) {
            std::vector<std::vector<Rat>> lhs(n + 1), rhs(n + 1);
            int pts = 0;
            while (pts < 4) {
                RatMatrix u = random_invertible(n, rng);
                ConjugationFactors<Rat> f;
                try {
                    f = bw_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                bool ok = true;
                for (int i = 1; i <= n && ok; ++i)
                    if (psi(n, n - i, i, u) == 0 || psi(n, n - i + 1, i - 1, u) == 0) ok = false;
                if (!ok) continue;
                for (int i = 1; i <= n; ++i) {
                    lhs[i].push_back(f.bplus(i - 1, i - 1));
                    rhs[i].push_back(psi(n, n - i, i, u) / psi(n, n - i + 1, i - 1, u));
                }
                ++pts;
            }
            for (int i = 1; i <= n; ++i) check_up_to_sign(lhs[i], rhs[i]);
        }
    }

    SECTION("last column entries are cluster ratios up to sign") {
        std::mt19937_64 rng(410);
        for (int n = 4; n <= 5; ++n) {
            std::vector<std::vector<Rat>> lhs(n), rhs(n);
            int pts = 0;
            while (pts < 4) {
                RatMatrix u = random_invertible(n, rng);
                ConjugationFactors<Rat> f;
                try {
                    f = bw_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                bool ok = psi(n, n - 1, 1, u) != 0;
                for (int l = 2; l <= n - 1 && ok; ++l)
                    if (psi(n, n - l, l - 1, u) == 0 || psi(n, n - l + 1, l - 1, u) == 0 ||
                        f.bplus(l - 1, n - 1) == 0)
                        ok = false;
                if (!ok) continue;
                for (int l = 2; l <= n - 1; ++l) {
                    lhs[l].push_back(f.bplus(l - 1, n - 1));
                    rhs[l].push_back(psi(n, n - l, l - 1, u) /
                                     (psi(n, n - 1, 1, u) * psi(n, n - l + 1, l - 1, u)));
                }
                ++pts;
            }
            for (int l = 2; l <= n - 1; ++l) check_up_to_sign(lhs[l], rhs[l]);
        }
    }

    SECTION("power column minors are cluster ratios up to sign") {
        std::mt19937_64 rng(411);
        for (int n = 4; n <= 5; ++n) {
            RatMatrix w0 = antidiagonal<Rat>(n);
            std::vector<std::vector<Rat>> lhs, rhs;
            std::vector<std::pair<int, int>> cases;
            for (int l = 2; l <= n - 2; ++l)
                for (int t = 2; t <= n - l + 1; ++t) cases.push_back({l, t});
            lhs.resize(cases.size());
            rhs.resize(cases.size());
            int pts = 0;
            while (pts < 3) {
                RatMatrix u = random_invertible(n, rng);
                ConjugationFactors<Rat> f;
                try {
                    f = bw_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                RatMatrix mcheck = f.bplus * w0;
                RatMatrix psi_mat(n, n);
                RatMatrix col(n, 1);
                col(0, 0) = Rat(1);
                for (int j = 0; j < n; ++j) {
                    for (int i = 0; i < n; ++i) psi_mat(i, j) = col(i, 0);
                    col = mcheck * col;
                }
                bool ok = psi(n, n - 1, 1, u) != 0;
                std::vector<Rat> lv(cases.size()), rv(cases.size());
                for (size_t ci = 0; ci < cases.size() && ok; ++ci) {
                    auto [l, t] = cases[ci];
                    Rat num = psi(n, n - t - l + 2, l - 1, u);
                    Rat d1 = psi(n, n - l + 1, l - 1, u);
                    if (num == 0 || d1 == 0) {
                        ok = false;
                        break;
                    }
                    lv[ci] = det(psi_mat.block(l, t + l - 2, 2, t));
                    rv[ci] = num / (d1 * rat_power(psi(n, n - 1, 1, u), t - 1));
                }
                if (!ok) continue;
                for (size_t ci = 0; ci < cases.size(); ++ci) {
                    lhs[ci].push_back(lv[ci]);
                    rhs[ci].push_back(rv[ci]);
                }
                ++pts;
            }
            for (size_t ci = 0; ci < cases.size(); ++ci) check_up_to_sign(lhs[ci], rhs[ci]);
        }
    }
}

TEST_CASE("column pivot conjugation form", "[normal_forms]") {
    SECTION("round trips and zero patterns") {
        std::mt19937_64 rng(412);
        for (int n = 3; n <= 5; ++n) {
            int done = 0;
            while (done < 100) {
                RatMatrix u = random_invertible(n, rng);
                NmnFactors<Rat> f;
                try {
                    f = nmn_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                REQUIRE(f.nu == u(0, n - 1) / u(1, n - 1));
                REQUIRE(f.m(1, n - 1) == u(1, n - 1));
                REQUIRE(is_unipotent_lower(f.nminus));
                for (int j = 2; j <= n; ++j) REQUIRE(f.nminus.e(j, 1) == 0);
                REQUIRE(f.m.e(1, n) == 0);
                for (int j = 2; j <= n; ++j)
                    for (int i = j + 1; i <= n; ++i) REQUIRE(f.m.e(i, n + 2 - j) == 0);
                RatMatrix in = RatMatrix::identity(n);
                in(0, 1) = f.nu;
                RatMatrix out = RatMatrix::identity(n);
                out(0, 1) = -f.nu;
                REQUIRE(in * f.nminus * f.m * inverse(f.nminus) * out == u);
                ++done;
            }
        }
    }

    SECTION("factors of a built product are recovered exactly") {
        std::mt19937_64 rng(413);
        for (int n = 3; n <= 5; ++n) {
            RatMatrix w0 = antidiagonal<Rat>(n - 1);
            int done = 0;
            while (done < 20) {
                Rat nu = Rat(random_small_int(rng));
                RatMatrix nm = RatMatrix::identity(n);
                for (int i = 2; i < n; ++i)
                    for (int j = 1; j < i; ++j) nm(i, j) = Rat(random_small_int(rng));
                RatMatrix m(n, n);
                RatMatrix inner = random_upper_invertible(n - 1, rng) * w0;
                for (int i = 1; i < n; ++i)
                    for (int j = 1; j < n; ++j) m(i, j) = inner(i - 1, j - 1);
                for (int j = 0; j + 1 < n; ++j) m(0, j) = Rat(random_small_int(rng));
                for (int i = 1; i < n; ++i) m(i, 0) = Rat(random_small_int(rng));
                if (m(1, n - 1) == 0) continue;
                RatMatrix in = RatMatrix::identity(n);
                in(0, 1) = nu;
                RatMatrix out = RatMatrix::identity(n);
                out(0, 1) = -nu;
                RatMatrix u = in * nm * m * inverse(nm) * out;
                NmnFactors<Rat> f;
                try {
                    f = nmn_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                REQUIRE(f.nu == nu);
                REQUIRE(f.nminus == nm);
                REQUIRE(f.m == m);
                ++done;
            }
        }
    }

    SECTION("vanishing corner entry gives a zero shear") {
        std::mt19937_64 rng(414);
        int n = 4;
        int done = 0;
        while (done < 5) {
            RatMatrix u = random_invertible(n, rng);
            u(0, n - 1) = 0;
            if (u(1, n - 1) == 0 || det(u) == 0) continue;
            try {
                NmnFactors<Rat> f = nmn_factor(u);
                REQUIRE(f.nu == 0);
                ++done;
            } catch (const genericity_error&) {
            }
        }
    }

    SECTION("vanishing pivot entry is rejected") {
        std::mt19937_64 rng(415);
        RatMatrix u = random_invertible(4, rng);
        u(1, 3) = 0;
        CHECK_THROWS_AS(nmn_factor(u), genericity_error);
    }
}

TEST_CASE("companion reduction", "[normal_forms]") {
    SECTION("reduction of the cyclic normal form recovers the spectrum") {
        std::mt19937_64 rng(416);
        for (int n = 2; n <= 4; ++n) {
            RatMatrix c = cyclic_shift<Rat>(n);
            int done = 0;
            while (done < 10) {
                RatMatrix u = random_invertible(n, rng);
                ConjugationFactors<Rat> f;
                RatMatrix delta;
                CompanionReduction<Rat> red;
                try {
                    f = bc_factor(u);
                    RatMatrix mbar = f.bplus * c;
                    delta = hessenberg_normalizer(mbar, Rat(Rat(1) / det(u)));
                    red = companion_reduce(mbar, delta);
                } catch (const genericity_error&) {
                    continue;
                }
                RatMatrix mbar = f.bplus * c;
                REQUIRE(is_unipotent_upper(red.nplus));
                for (int i = 2; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        REQUIRE(red.mstar.e(i, j) == ((j == i - 1) ? Rat(1) : Rat(0)));
                REQUIRE(inverse(delta) * inverse(red.nplus) * red.mstar * red.nplus * delta ==
                        mbar);
                std::vector<Rat> cp = charpoly_coeffs(u);
                for (int i = 1; i <= n; ++i) REQUIRE(red.gamma[i - 1] == -cp[i - 1]);
                REQUIRE(charpoly_coeffs(red.mstar) == cp);
                ++done;
            }
        }
    }

    SECTION("a companion matrix is its own reduction") {
        std::mt19937_64 rng(417);
        int n = 4;
        RatMatrix comp(n, n);
        for (int j = 0; j < n; ++j) comp(0, j) = Rat(random_small_int(rng));
        for (int i = 1; i < n; ++i) comp(i, i - 1) = Rat(1);
        CompanionReduction<Rat> red = companion_reduce(comp, RatMatrix::identity(n));
        CHECK(red.nplus == RatMatrix::identity(n));
        CHECK(red.mstar == comp);
        for (int j = 0; j < n; ++j) CHECK(red.gamma[j] == comp(0, j));
    }

    SECTION("normalizer entries are cluster ratios up to sign") {
        std::mt19937_64 rng(418);
        for (int n = 3; n <= 4; ++n) {
            RatMatrix c = cyclic_shift<Rat>(n);
            std::vector<std::vector<Rat>> lhs(n), rhs(n);
            int pts = 0;
            while (pts < 4) {
                RatMatrix u = random_invertible(n, rng);
                RatMatrix delta;
                try {
                    ConjugationFactors<Rat> f = bc_factor(u);
                    delta = hessenberg_normalizer(f.bplus * c, Rat(Rat(1) / det(u)));
                } catch (const genericity_error&) {
                    continue;
                }
                bool ok = true;
                for (int i = 1; i <= n - 1 && ok; ++i)
                    if (psi(n, n - i + 1, 1, u) == 0 || psi(n, n - i, 1, u) == 0) ok = false;
                if (!ok) continue;
                REQUIRE(delta(n - 1, n - 1) == Rat(1) / det(u));
                for (int i = 1; i <= n - 1; ++i) {
                    lhs[i].push_back(delta(i - 1, i - 1));
                    rhs[i].push_back(psi(n, n - i + 1, 1, u) / psi(n, n - i, 1, u));
                }
                ++pts;
            }
            for (int i = 1; i <= n - 1; ++i) check_up_to_sign(lhs[i], rhs[i]);
        }
    }
}

TEST_CASE("gluing the one sided and conjugation factorizations", "[normal_forms]") {
    SECTION("recovered conjugator matches the direct factorization") {
        std::mt19937_64 rng(419);
        for (int n = 3; n <= 4; ++n) {
            RatMatrix c = cyclic_shift<Rat>(n);
            int done = 0;
            while (done < 10) {
                RatMatrix u = random_invertible(n, rng);
                try {
                    RatMatrix bplus = gauss_factor(u).nonneg();
                    ConjugationFactors<Rat> f = bc_factor(u);
                    RatMatrix glued = glue_cyclic_conjugator(bplus, f.bplus * c);
                    REQUIRE(glued == f.nminus);
                } catch (const genericity_error&) {
                    continue;
                }
                ++done;
            }
        }
    }

    SECTION("one sided diagonal entries are trailing minor ratios up to sign") {
        std::mt19937_64 rng(420);
        for (int n = 3; n <= 4; ++n) {
            std::vector<std::vector<Rat>> lhs(n + 1), rhs(n + 1);
            int pts = 0;
            while (pts < 4) {
                RatMatrix u = random_invertible(n, rng);
                RatMatrix bplus;
                try {
                    bplus = gauss_factor(u).nonneg();
                } catch (const genericity_error&) {
                    continue;
                }
                for (int i = 1; i <= n; ++i) {
                    Rat hnum = eval_h(n, i, i, u);
                    Rat hden = (i + 1 <= n) ? eval_h(n, i + 1, i + 1, u) : Rat(1);
                    REQUIRE(hden != 0);
                    lhs[i].push_back(bplus(i - 1, i - 1));
                    rhs[i].push_back(hnum / hden);
                }
                ++pts;
            }
            for (int i = 1; i <= n; ++i) check_up_to_sign(lhs[i], rhs[i]);
        }
    }

    SECTION("cyclic form diagonal entries from cluster variables") {
        std::mt19937_64 rng(421);
        for (int n = 3; n <= 4; ++n) {
            RatMatrix c = cyclic_shift<Rat>(n);
            std::vector<std::vector<Rat>> lhs(n + 1), rhs(n + 1);
            std::vector<std::vector<Rat>> plhs(n), prhs(n);
            int pts = 0;
            while (pts < 4) {
                RatMatrix u = random_invertible(n, rng);
                ConjugationFactors<Rat> f;
                try {
                    f = bc_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                bool ok = psi(n, 1, 1, u) != 0 && psi(n, 2, 1, u) != 0 && psi(n, 1, 2, u) != 0;
                for (int i = 1; i <= n - 1 && ok; ++i)
                    if (psi(n, n - i, 1, u) == 0) ok = false;
                if (!ok) continue;

                // Exact relations first.
                Rat prod_all(1);
                for (int i = 0; i < n; ++i) prod_all *= f.bplus(i, i);
                REQUIRE(prod_all == ((n % 2 == 0) ? -det(u) : det(u)));
                REQUIRE(f.bplus(n - 2, n - 1) ==
                        ((n % 2 == 0) ? Rat(1) : Rat(-1)) * psi(n, 1, 2, u) / psi(n, 2, 1, u));

                for (int i = 1; i <= n - 1; ++i) {
                    lhs[i].push_back(f.bplus(i - 1, i - 1));
                    rhs[i].push_back(psi(n, n - i, 1, u) * psi(n, n - i + 2, 1, u) /
                                     (psi(n, n - i + 1, 1, u) * psi(n, n - i + 1, 1, u)));
                }
                lhs[n].push_back(f.bplus(n - 1, n - 1));
                rhs[n].push_back(det(u) * psi(n, 2, 1, u) / psi(n, 1, 1, u));

                for (int k = 1; k <= n - 1; ++k) {
                    Rat prod(1);
                    for (int i = 1; i <= k; ++i)
                        prod *= rat_power(f.bplus(i - 1, i - 1), k - i + 1);
                    plhs[k].push_back(psi(n, n - k, 1, u));
                    prhs[k].push_back(prod);
                }
                ++pts;
            }
            for (int i = 1; i <= n; ++i) check_up_to_sign(lhs[i], rhs[i]);
            for (int k = 1; k <= n - 1; ++k) check_up_to_sign(plhs[k], prhs[k]);
        }
    }

    SECTION("interior minors of the cyclic form from cluster variables") {
        std::mt19937_64 rng(422);
        for (int n = 3; n <= 4; ++n) {
            RatMatrix c = cyclic_shift<Rat>(n);
            std::vector<std::vector<Rat>> lhs, rhs;
            std::vector<std::pair<int, int>> cases;
            for (int k = 1; k + 1 <= n; ++k)
                for (int l = 2; k + l <= n; ++l) cases.push_back({k, l});
            lhs.resize(cases.size());
            rhs.resize(cases.size());
            int pts = 0;
            while (pts < 4) {
                RatMatrix u = random_invertible(n, rng);
                ConjugationFactors<Rat> f;
                try {
                    f = bc_factor(u);
                } catch (const genericity_error&) {
                    continue;
                }
                RatMatrix mbar = f.bplus * c;
                bool ok = true;
                std::vector<Rat> lv(cases.size()), rv(cases.size());
                for (size_t ci = 0; ci < cases.size() && ok; ++ci) {
                    auto [k, l] = cases[ci];
                    Rat pkl = psi(n, k, l, u);
                    Rat pk0 = psi(n, k + l - 1, 1, u);
                    if (pkl == 0 || pk0 == 0) {
                        ok = false;
                        break;
                    }
                    Rat minor = det(mbar.block(n - k - l + 2, n - k, n - l + 1, n - 1));
                    // The same minor as the cluster variable divided by a
                    // weighted product of the diagonal entries.
                    Rat prod(1);
                    for (int i = 1; i <= n - k - l + 1; ++i)
                        prod *= rat_power(f.bplus(i - 1, i - 1), k + l + i - n - 2);
                    REQUIRE(prod != 0);
                    Rat r = minor / (pkl * prod);
                    REQUIRE((r == Rat(1) || r == Rat(-1)));
                    lv[ci] = minor;
                    rv[ci] = pkl / pk0;
                }
                if (!ok) continue;
                for (size_t ci = 0; ci < cases.size(); ++ci) {
                    lhs[ci].push_back(lv[ci]);
                    rhs[ci].push_back(rv[ci]);
                }
                ++pts;
            }
            for (size_t ci = 0; ci < cases.size(); ++ci) check_up_to_sign(lhs[ci], rhs[ci]);
        }
    }
}

TEST_CASE("first row from spectrum", "[normal_forms]") {
    SECTION("random matrices are recovered") {
        std::mt19937_64 rng(423);
        for (int n = 3; n <= 5; ++n) {
            int done = 0;
            while (done < 10) {
                RatMatrix a = random_matrix(n, n, rng);
                RatMatrix last = a.block(2, n, 1, n);
                std::vector<Rat> c = charpoly_coeffs(a);
                RatMatrix row;
                try {
                    row = first_row_from_spectrum(last, c);
                } catch (const genericity_error&) {
                    continue;
                }
                REQUIRE(row == a.block(1, 1, 1, n));
                ++done;
            }
        }
    }

    SECTION("a companion matrix is consistent") {
        std::mt19937_64 rng(424);
        int n = 4;
        std::vector<Rat> c(n);
        for (int i = 0; i < n; ++i) c[i] = Rat(random_small_int(rng));
        RatMatrix comp(n, n);
        for (int i = 0; i + 1 < n; ++i) comp(i + 1, i) = Rat(1);
        for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[n - 1 - i];
        std::vector<Rat> cp = charpoly_coeffs(comp);
        for (int i = 0; i < n; ++i) REQUIRE(cp[i] == c[i]);
        RatMatrix row = first_row_from_spectrum(comp.block(2, n, 1, n), c);
        CHECK(row == comp.block(1, 1, 1, n));
    }

    SECTION("a degenerate Krylov matrix is rejected") {
        std::mt19937_64 rng(425);
        int n = 4;
        RatMatrix a = random_matrix(n, n, rng);
        for (int i = 1; i < n; ++i) a(i, 0) = 0;  // e_1 is an eigenvector
        CHECK_THROWS_AS(first_row_from_spectrum(a.block(2, n, 1, n), charpoly_coeffs(a)),
                        genericity_error);
    }
}

TEST_CASE("first row of a Hessenberg conjugator", "[normal_forms]") {
    SECTION("matches the companion form of the trailing block") {
        std::mt19937_64 rng(426);
        for (int n = 2; n <= 5; ++n) {
            for (int rep = 0; rep < 10; ++rep) {
                RatMatrix h = random_upper_invertible(n, rng);
                for (int i = 0; i + 1 < n; ++i) h(i + 1, i) = Rat(1);
                RatMatrix row = hessenberg_first_row(h);
                CompanionReduction<Rat> tail =
                    companion_reduce(h.block(2, n, 2, n), RatMatrix::identity(n - 1));
                for (int j = 0; j < n - 1; ++j) REQUIRE(row(0, j) == tail.gamma[j]);
            }
        }
    }

    SECTION("two by two case reads off the corner entry") {
        RatMatrix h(2, 2);
        h(0, 0) = 5;
        h(0, 1) = 7;
        h(1, 0) = 1;
        h(1, 1) = -3;
        RatMatrix row = hessenberg_first_row(h);
        CHECK(row(0, 0) == Rat(-3));
    }
}
