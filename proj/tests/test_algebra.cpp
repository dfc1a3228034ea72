#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "pmskit/algebra.hpp"

using namespace pmskit;

namespace {

LinComb W(std::vector<int> p) { return LinComb(Composition(std::move(p))); }
Composition C(std::vector<int> p) { return Composition(std::move(p)); }

std::vector<Composition> slice(int w) { return enumerate_words(w, WordSpace::yH); }

// test-side oracle: shuffle by explicit enumeration of interleavings
void interleavings(const std::vector<Letter>& a, size_t i, const std::vector<Letter>& b, size_t j,
                   std::vector<Letter>& cur, XYComb& out) {
    if (i == a.size() && j == b.size()) {
        out.add(XYWord(cur), make_rational(1));
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        interleavings(a, i + 1, b, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        interleavings(a, i, b, j + 1, cur, out);
        cur.pop_back();
    }
}

XYComb shuffle_oracle(const XYWord& a, const XYWord& b) {
    XYComb out;
    std::vector<Letter> cur;
    interleavings(a.letters(), 0, b.letters(), 0, cur, out);
    return out;
}

long long binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// sign-free closed form of sigma_m, independently of the recursion
LinComb sigma_closed_form(int m, const Composition& w) {
    LinComb out;
    int r = w.depth();
    std::vector<int> e((size_t)r, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == r) {
            if (left != 0)
                return;
            Rational coef = make_rational(1);
            std::vector<int> parts = w.parts();
            for (int i = 0; i < r; ++i) {
                coef *= make_rational(binom(parts[(size_t)i] + e[(size_t)i] - 1, e[(size_t)i]));
                parts[(size_t)i] += e[(size_t)i];
            }
            out.add(Composition(parts), coef);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[(size_t)idx] = v;
            rec(idx + 1, left - v);
        }
    };
    if (r == 0) {
        if (m == 0)
            out.add(w, make_rational(1));
        return out;
    }
    rec(0, m);
    return out;
}

// closed form of psi_bar with the k_i z_{k_i+1} factor
LinComb psi_bar_closed_form(const Composition& w) {
    LinComb out;
    int r = w.depth();
    for (int i = 1; i <= r; ++i) {
        LinComb sh = tshuffle(LinComb(w.prefix(i - 1)), LinComb(w.suffix_reversed(i)));
        int ki = w.parts()[(size_t)i - 1];
        Rational coef = make_rational(ki);
        if ((r - i + 1) % 2 != 0)
            coef = -coef;
        for (const auto& [p, cp] : sh.terms())
            out.add(p.append(ki + 1), coef * cp);
    }
    return out;
}

int max_depth_of(const LinComb& u) { return max_depth(u); }

} // namespace

TEST_CASE("stuffle examples") {
    CHECK(stuffle(LinComb::unit(), W({2, 1})) == W({2, 1}));
    CHECK(stuffle(W({1}), W({1})) == 2 * W({1, 1}) + W({2}));
    CHECK(stuffle(W({2}), W({3})) == W({2, 3}) + W({3, 2}) + W({5}));
}

TEST_CASE("tshuffle examples") {
    CHECK(tshuffle(W({1}), W({1})) == 2 * W({1, 1}));
    CHECK(tshuffle(W({1}), W({2})) == W({1, 2}) + W({2, 1}));
    CHECK(tshuffle(LinComb::unit(), W({2, 1})) == W({2, 1}));
}

TEST_CASE("xy shuffle examples and oracle") {
    XYWord x({Letter::x}), y({Letter::y}), yx({Letter::y, Letter::x});
    CHECK(shuffle_xy(x, y) == shuffle_oracle(x, y));
    CHECK(shuffle_xy(XYComb(x), XYComb(x)).coefficient(XYWord({Letter::x, Letter::x})) == 2);
    XYComb got = shuffle_xy(yx, x);
    CHECK(got.coefficient(XYWord({Letter::y, Letter::x, Letter::x})) == 2);
    CHECK(got.coefficient(XYWord({Letter::x, Letter::y, Letter::x})) == 1);
    // oracle agreement on every pair of words with length sum <= 7
    for (int la = 1; la <= 3; ++la)
        for (int lb = la; lb + la <= 7; ++lb)
            for (const XYWord& a : enumerate_xy_words(la, false))
                for (const XYWord& b : enumerate_xy_words(lb, false))
                    CHECK(shuffle_xy(a, b) == shuffle_oracle(a, b));
}

TEST_CASE("products are commutative and associative on slices of weight <= 6") {
    using Prod = LinComb (*)(const LinComb&, const LinComb&);
    for (Prod prod : {static_cast<Prod>(stuffle), static_cast<Prod>(tshuffle)}) {
        for (int a = 1; a <= 3; ++a)
            for (int b = a; a + b <= 6; ++b)
                for (const Composition& u : slice(a))
                    for (const Composition& v : slice(b))
                        CHECK(prod(LinComb(u), LinComb(v)) == prod(LinComb(v), LinComb(u)));
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (int c = 1; a + b + c <= 6; ++c)
                    for (const Composition& u : slice(a))
                        for (const Composition& v : slice(b))
                            for (const Composition& w : slice(c))
                                CHECK(prod(prod(LinComb(u), LinComb(v)), LinComb(w)) ==
                                      prod(LinComb(u), prod(LinComb(v), LinComb(w))));
    }
}

TEST_CASE("weight is additive and the depth filtration controls the merge terms") {
    for (int a = 1; a <= 3; ++a)
        for (int b = a; a + b <= 7; ++b)
            for (const Composition& u : slice(a))
                for (const Composition& v : slice(b)) {
                    LinComb st = stuffle(LinComb(u), LinComb(v));
                    for (const auto& [w, c] : st.terms())
                        CHECK(w.weight() == a + b);
                    // u*v - u sh~ v lies in H_{r+s-1}
                    LinComb diff = st - tshuffle(LinComb(u), LinComb(v));
                    CHECK(max_depth_of(diff) < u.depth() + v.depth());
                }
}

TEST_CASE("ring maps phi and d") {
    XYComb yx{XYWord({Letter::y, Letter::x})};
    XYComb img = ring_map(RingMapName::phi, yx);
    CHECK(img.coefficient(XYWord({Letter::x, Letter::x})) == 1);
    CHECK(img.coefficient(XYWord({Letter::y, Letter::x})) == 1);
    CHECK(ring_map(RingMapName::d, xy_form(W({1, 2}))) == xy_form(W({1, 2})));
    CHECK(ring_map(RingMapName::d, yx) == -1 * yx);
}

TEST_CASE("head-fixed maps") {
    CHECK(head_fixed_map(HeadMapName::S, W({1, 2})) == W({1, 2}) + W({3}));
    CHECK(head_fixed_map(HeadMapName::beta, W({2})) == W({1, 1}));
    CHECK(head_fixed_map(HeadMapName::Stilde, W({2})) == -1 * W({2}));
    CHECK(head_fixed_map(HeadMapName::S, LinComb::unit()) == LinComb::unit());
}

TEST_CASE("S tilde is a stuffle homomorphism up to weight 6") {
    for (int a = 1; a <= 3; ++a)
        for (int b = a; a + b <= 6; ++b)
            for (const Composition& u : slice(a))
                for (const Composition& v : slice(b)) {
                    LinComb lhs = head_fixed_map(HeadMapName::Stilde, stuffle(LinComb(u), LinComb(v)));
                    LinComb rhs = stuffle(head_fixed_map(HeadMapName::Stilde, LinComb(u)),
                                          head_fixed_map(HeadMapName::Stilde, LinComb(v)));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("sigma examples and closed form") {
    CHECK(sigma_map(1, W({2})) == 2 * W({3}));
    CHECK(sigma_map(1, W({1, 1})) == W({1, 2}) + W({2, 1}));
    CHECK(sigma_map(2, W({1})) == W({3}));
    CHECK(sigma_map(0, W({2, 1})) == W({2, 1}));
    CHECK_THROWS_AS(sigma_map(-1, W({1})), std::domain_error);
    for (int w = 1; w <= 7; ++w)
        for (const Composition& c : slice(w))
            for (int m = 0; m <= 4; ++m)
                CHECK(sigma_map(m, LinComb(c)) == sigma_closed_form(m, c));
}

TEST_CASE("coproduct reverses the suffix") {
    TensorComb d = coproduct(W({1, 2}));
    CHECK(d.coefficient({C({}), C({2, 1})}) == 1);
    CHECK(d.coefficient({C({1}), C({2})}) == 1);
    CHECK(d.coefficient({C({1, 2}), C({})}) == 1);
    CHECK(d.coefficient({C({}), C({1, 2})}) == 0);
    CHECK(coproduct(LinComb::unit()).coefficient({C({}), C({})}) == 1);
}

TEST_CASE("coproduct and S tilde are stuffle homomorphisms on tensors") {
    for (int a = 1; a <= 3; ++a)
        for (int b = a; a + b <= 6; ++b)
            for (const Composition& u : slice(a))
                for (const Composition& v : slice(b)) {
                    CHECK(coproduct(stuffle(LinComb(u), LinComb(v))) ==
                          tensor_stuffle(coproduct(LinComb(u)), coproduct(LinComb(v))));
                }
    // Delta o S~ = (S~ (x) S~) o Delta on weight <= 6 words
    auto stild = [](const LinComb& u) { return head_fixed_map(HeadMapName::Stilde, u); };
    for (int w = 1; w <= 6; ++w)
        for (const Composition& c : slice(w)) {
            TensorComb lhs = coproduct(stild(LinComb(c)));
            TensorComb rhs;
            TensorComb dc = coproduct(LinComb(c));
            for (const auto& [p, coef] : dc.terms()) {
                LinComb l = stild(LinComb(p.left));
                LinComb r = stild(LinComb(p.right));
                for (const auto& [lw, lc] : l.terms())
                    for (const auto& [rw, rc] : r.terms())
                        rhs.add({lw, rw}, coef * lc * rc);
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("psi examples") {
    CHECK(psi_map(W({1})) == -1 * W({2}));
    CHECK(psi_map(W({2})) == -2 * W({3}));
    CHECK(psi_map(W({1, 1})) == W({3}));
    CHECK(psi_map(2 * W({1, 1}) + W({2})).is_zero());
    CHECK_THROWS_AS(psi_map(LinComb::unit()), std::domain_error);
}

TEST_CASE("psi equals the coproduct route") {
    auto psi_via_delta = [](const LinComb& u) {
        LinComb out;
        TensorComb du = coproduct(u);
        for (const auto& [p, coef] : du.terms()) {
            LinComb tail =
                head_fixed_map(HeadMapName::Stilde, sigma_map(1, LinComb(p.right)));
            if (tail.is_zero())
                continue;
            LinComb term = stuffle(LinComb(p.left), tail);
            term *= coef;
            out += term;
        }
        return out;
    };
    for (int w = 1; w <= 6; ++w)
        for (const Composition& c : slice(w))
            CHECK(psi_map(LinComb(c)) == psi_via_delta(LinComb(c)));
}

TEST_CASE("psi lands in yHx and kills stuffle products") {
    for (int w = 1; w <= 8; ++w)
        for (const Composition& c : slice(w))
            CHECK(is_admissible_supported(psi_map(LinComb(c))));
    for (int a = 1; a <= 3; ++a)
        for (int b = a; a + b <= 7; ++b)
            for (const Composition& u : slice(a))
                for (const Composition& v : slice(b))
                    CHECK(psi_map(stuffle(LinComb(u), LinComb(v))).is_zero());
}

TEST_CASE("psi_bar examples, closed form and top-depth relation to psi") {
    CHECK(psi_bar_map(W({1})) == -1 * W({2}));
    CHECK(psi_bar_map(W({1, 1})).is_zero());
    CHECK(psi_bar_map(W({1, 2})) == W({2, 2}) - 2 * W({1, 3}));
    for (int w = 1; w <= 7; ++w)
        for (const Composition& c : slice(w)) {
            LinComb pb = psi_bar_map(LinComb(c));
            CHECK(pb == psi_bar_closed_form(c));
            // psi(w) - psi_bar(w) in H_{dep(w)-1}
            CHECK(max_depth_of(psi_map(LinComb(c)) - pb) < c.depth());
        }
}

TEST_CASE("rho examples") {
    CHECK(rho_map(W({2})) == W({2}));
    CHECK(rho_map(W({1, 1})).is_zero());
    CHECK(rho_map(W({1, 2})) == W({1, 2}) - W({2, 1}));
    CHECK_THROWS_AS(rho_map(LinComb::unit()), std::domain_error);
}

TEST_CASE("iota variants and the composite identities") {
    CHECK(iota_map(IotaVariant::paper, W({1, 2})) == 2 * W({1, 3}));
    CHECK(iota_map(IotaVariant::prime, W({1, 3})) == make_rational(-1, 2) * W({1, 2}));
    CHECK_THROWS_AS(iota_map(IotaVariant::prime, W({1, 1})), std::domain_error);
    for (int w = 1; w <= 7; ++w)
        for (const Composition& c : slice(w)) {
            LinComb pb = psi_bar_map(LinComb(c));
            CHECK(iota_map(IotaVariant::prime, pb) == rho_map(LinComb(c)));
            CHECK(iota_map(IotaVariant::paper, rho_map(LinComb(c))) == -1 * pb);
        }
}

TEST_CASE("lambda examples and homomorphism") {
    AlphaSeries lam = lambda_truncated(W({1}), 1);
    CHECK(lam.at(0).is_zero());
    CHECK(lam.at(1) == -1 * W({2}));
    AlphaSeries unit = lambda_truncated(LinComb::unit(), 2);
    CHECK(unit.at(0) == LinComb::unit());
    CHECK(unit.at(1).is_zero());
    CHECK(unit.at(2).is_zero());
    AlphaSeries yy = lambda_truncated(stuffle(W({1}), W({1})), 1);
    CHECK(yy.at(1).is_zero());

    // lambda(u*v) = lambda(u)*lambda(v), truncated at order 2, weight <= 5
    for (int a = 1; a <= 2; ++a)
        for (int b = a; a + b <= 5; ++b)
            for (const Composition& u : slice(a))
                for (const Composition& v : slice(b)) {
                    AlphaSeries lhs = lambda_truncated(stuffle(LinComb(u), LinComb(v)), 2);
                    AlphaSeries rhs =
                        series_stuffle(lambda_truncated(LinComb(u), 2), lambda_truncated(LinComb(v), 2));
                    for (int m = 0; m <= 2; ++m)
                        CHECK(lhs.at(m) == rhs.at(m));
                }
    // coefficient of alpha^1 is psi on yH, weight <= 6
    for (int w = 1; w <= 6; ++w)
        for (const Composition& c : slice(w))
            CHECK(lambda_truncated(LinComb(c), 1).at(1) == psi_map(LinComb(c)));
}

TEST_CASE("sigma series is a homomorphism after truncation") {
    CHECK(sigma_series(W({1}), 2).at(2) == W({3}));
    CHECK(sigma_series(W({2}), 1).at(1) == 2 * W({3}));
    for (int a = 1; a <= 2; ++a)
        for (int b = a; a + b <= 5; ++b)
            for (const Composition& u : slice(a))
                for (const Composition& v : slice(b)) {
                    AlphaSeries lhs = sigma_series(stuffle(LinComb(u), LinComb(v)), 3);
                    AlphaSeries rhs =
                        series_stuffle(sigma_series(LinComb(u), 3), sigma_series(LinComb(v), 3));
                    for (int m = 0; m <= 3; ++m)
                        CHECK(lhs.at(m) == rhs.at(m));
                }
}

TEST_CASE("f = (*) o (S~ (x) sigma_1) o Delta intertwines with S~") {
    auto stild = [](const LinComb& u) { return head_fixed_map(HeadMapName::Stilde, u); };
    auto f = [&](const LinComb& u) {
        LinComb out;
        TensorComb du = coproduct(u);
        for (const auto& [p, coef] : du.terms()) {
            LinComb term = stuffle(stild(LinComb(p.left)), sigma_map(1, LinComb(p.right)));
            term *= coef;
            out += term;
        }
        return out;
    };
    auto rhs_op = [&](const LinComb& u) {
        LinComb out;
        TensorComb du = coproduct(u);
        for (const auto& [p, coef] : du.terms()) {
            LinComb term = stuffle(LinComb(p.left), stild(sigma_map(1, LinComb(p.right))));
            term *= coef;
            out += term;
        }
        return out;
    };
    for (int w = 1; w <= 6; ++w)
        for (const Composition& c : slice(w))
            CHECK(f(stild(LinComb(c))) == rhs_op(LinComb(c)));
}

TEST_CASE("harmonic regularization examples") {
    RegDecomposition reg = harmonic_regularize(W({1}));
    REQUIRE(reg.parts.size() == 1);
    CHECK(reg.parts[0].first == 1);
    CHECK(reg.parts[0].second == LinComb::unit());

    reg = harmonic_regularize(W({1, 1}));
    REQUIRE(reg.parts.size() == 2);
    CHECK(reg.parts[0].first == 0);
    CHECK(reg.parts[0].second == make_rational(-1, 2) * W({2}));
    CHECK(reg.parts[1].first == 2);
    CHECK(reg.parts[1].second == make_rational(1, 2) * LinComb::unit());

    reg = harmonic_regularize(W({2, 1}));
    REQUIRE(reg.parts.size() == 2);
    CHECK(reg.parts[0].second == -1 * (W({1, 2}) + W({3})));
    CHECK(reg.parts[1].second == W({2}));
}

TEST_CASE("regularization reconstructs every word of weight <= 7") {
    for (int w = 0; w <= 7; ++w)
        for (const Composition& c : enumerate_words(w, WordSpace::H1)) {
            RegDecomposition reg = harmonic_regularize(LinComb(c));
            for (const auto& [j, part] : reg.parts)
                CHECK(is_admissible_supported(part));
            CHECK(reg_expand(reg) == LinComb(c));
        }
}
