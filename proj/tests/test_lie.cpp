#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "pmskit/algebra.hpp"
#include "pmskit/lie.hpp"
#include "pmskit/linalg.hpp"

using namespace pmskit;

namespace {

LinComb W(std::vector<int> p) { return LinComb(Composition(std::move(p))); }
XPoly X(std::vector<int> p) { return XPoly(Composition(std::move(p))); }

// compositions with bounded length and part size
std::vector<Composition> bounded_compositions(int max_len, int max_part) {
    std::vector<Composition> out;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& cur) {
        if (!cur.empty())
            out.emplace_back(cur);
        if ((int)cur.size() == max_len)
            return;
        for (int k = 1; k <= max_part; ++k) {
            cur.push_back(k);
            rec(cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(cur);
    return out;
}

} // namespace

TEST_CASE("nested bracket examples") {
    CHECK(nested_bracket(Composition({2})) == X({2}));
    CHECK(nested_bracket(Composition({1, 2})) == X({1, 2}) - X({2, 1}));
    CHECK(nested_bracket(Composition({1, 1, 2})) == X({1, 1, 2}) - 2 * X({1, 2, 1}) + X({2, 1, 1}));
    CHECK(nested_bracket(Composition({1, 1})).is_zero());
    CHECK_THROWS_AS(nested_bracket(Composition()), std::domain_error);
}

TEST_CASE("descent expansion equals the nested bracket") {
    CHECK(descent_expansion(Composition({2})) == X({2}));
    CHECK(descent_expansion(Composition({1, 2})) == X({1, 2}) - X({2, 1}));
    for (const Composition& k : bounded_compositions(5, 3))
        CHECK(descent_expansion(k) == nested_bracket(k));
}

TEST_CASE("pairing examples") {
    CHECK(lie_pairing(X({1, 2}), W({1, 2})) == 1);
    CHECK(lie_pairing(X({1, 2}), W({2, 1})) == 0);
    CHECK(lie_pairing(nested_bracket(Composition({1, 2})), W({1, 2}) + W({2, 1})) == 0);
}

TEST_CASE("adjointness of the bracket with rho") {
    for (const Composition& k : bounded_compositions(5, 3)) {
        XPoly nb = nested_bracket(k);
        std::vector<int> deg = k.parts();
        std::sort(deg.begin(), deg.end());
        do {
            Composition w{deg};
            CHECK(lie_pairing(nb, LinComb(w)) == lie_pairing(X(k.parts()), rho_map(LinComb(w))));
        } while (std::next_permutation(deg.begin(), deg.end()));
    }
}

TEST_CASE("spanning set over a multiset") {
    std::vector<XPoly> s = lie_spanning_set({1, 2});
    REQUIRE(s.size() == 2);
    CHECK(s[0] == X({1, 2}) - X({2, 1}));
    CHECK(s[1] == X({2, 1}) - X({1, 2}));
    CHECK(lie_spanning_set({2}).size() == 1);
    CHECK(lie_spanning_set({1, 1})[0].is_zero());
    CHECK_THROWS_AS(lie_spanning_set({}), std::domain_error);
}

TEST_CASE("tilde-shuffle span is the Lie orthocomplement on small slices") {
    // every multidegree of total weight <= 6
    std::vector<std::vector<int>> degrees;
    std::function<void(int, int, std::vector<int>&)> gen = [&](int total, int min_part,
                                                               std::vector<int>& cur) {
        if (total == 0 && !cur.empty()) {
            degrees.push_back(cur);
            return;
        }
        for (int k = min_part; k <= total; ++k) {
            cur.push_back(k);
            gen(total - k, k, cur);
            cur.pop_back();
        }
    };
    for (int total = 2; total <= 6; ++total) {
        std::vector<int> cur;
        gen(total, 1, cur);
    }

    for (const std::vector<int>& degree : degrees) {
        std::vector<Composition> slice;
        std::vector<int> p = degree;
        std::sort(p.begin(), p.end());
        do {
            slice.emplace_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        std::sort(slice.begin(), slice.end());

        int n = (int)degree.size();
        std::vector<LinComb> gens;
        std::vector<int> sorted = degree;
        std::sort(sorted.begin(), sorted.end());
        for (std::uint32_t mask = 1; n >= 2 && mask + 1 < (1u << n); ++mask) {
            std::vector<int> a, b;
            for (int i = 0; i < n; ++i)
                ((mask >> i) & 1 ? a : b).push_back(sorted[(size_t)i]);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::vector<int> pa = a;
            do {
                std::vector<int> pb = b;
                do {
                    gens.push_back(tshuffle(LinComb(Composition(pa)), LinComb(Composition(pb))));
                } while (std::next_permutation(pb.begin(), pb.end()));
            } while (std::next_permutation(pa.begin(), pa.end()));
        }
        Subspace<Composition> span = Subspace<Composition>::span(slice, gens);

        std::vector<XPoly> brackets = lie_spanning_set(degree);
        for (const LinComb& g : gens)
            for (const XPoly& br : brackets)
                CHECK(lie_pairing(br, g) == 0);

        RatMatrix rows(0, slice.size());
        for (const XPoly& br : brackets) {
            std::vector<Rational> row;
            for (const Composition& w : slice)
                row.push_back(br.coefficient(w));
            rows.append_row(row);
        }
        rref(rows);
        CHECK(span.dim() + rows.rows() == slice.size());
    }
}
