#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "th2/relations.hpp"
#include "th2/theta.hpp"

using namespace th2;

namespace {

// brute-force linking number: try all alternating interval decompositions
// directly from the definition
int lk_oracle(const DeltaMap& tau, const DeltaMap& pi)
{
    auto image_of = [](const DeltaMap& f) {
        std::set<int> s(f.vals.begin(), f.vals.end());
        return std::vector<int>(s.begin(), s.end());
    };
    std::vector<int> a = image_of(tau), b = image_of(pi);

    // all ways to cut a sorted set into consecutive chunks
    auto all_cuts = [](const std::vector<int>& v) {
        std::vector<std::vector<std::pair<int, int>>> out;  // list of [lo,hi] blocks
        int n = static_cast<int>(v.size());
        for (int mask = 0; mask < (1 << std::max(0, n - 1)); ++mask) {
            std::vector<std::pair<int, int>> blocks;
            int lo = 0;
            for (int i = 0; i < n; ++i) {
                bool cut = (i == n - 1) || (mask >> i) & 1;
                if (cut) {
                    blocks.push_back({v[lo], v[i]});
                    lo = i + 1;
                }
            }
            out.push_back(blocks);
        }
        return out;
    };

    int best = 1 << 20;
    for (const auto& ba : all_cuts(a))
        for (const auto& bb : all_cuts(b)) {
            int s = static_cast<int>(ba.size()), t = static_cast<int>(bb.size());
            if (std::abs(s - t) > 1)
                continue;
            // try A first and B first
            for (int first = 0; first < 2; ++first) {
                const auto& x = first == 0 ? ba : bb;
                const auto& y = first == 0 ? bb : ba;
                if (!(static_cast<int>(x.size()) == static_cast<int>(y.size()) ||
                      static_cast<int>(x.size()) == static_cast<int>(y.size()) + 1))
                    continue;
                bool ok = true;
                int frontier = -1;
                std::size_t ix = 0, iy = 0;
                bool xs_turn = true;
                while (ix < x.size() || iy < y.size()) {
                    const auto* blk = xs_turn ? (ix < x.size() ? &x[ix] : nullptr)
                                              : (iy < y.size() ? &y[iy] : nullptr);
                    if (!blk) {
                        ok = false;
                        break;
                    }
                    if (blk->first < frontier) {
                        ok = false;
                        break;
                    }
                    frontier = blk->second;
                    (xs_turn ? ix : iy) += 1;
                    xs_turn = !xs_turn;
                }
                if (ok)
                    best = std::min(best, s + t - 1);
            }
        }
    return best;
}

DeltaMap random_delta(std::mt19937& rng, int src, int tgt)
{
    std::vector<int> v(src + 1);
    std::uniform_int_distribution<int> d(0, tgt);
    for (auto& x : v)
        x = d(rng);
    std::sort(v.begin(), v.end());
    return DeltaMap(src, tgt, v);
}

Theta2Map random_map(std::mt19937& rng, const TwoTree& src, int max_h)
{
    // random target, random phi, random column maps
    std::uniform_int_distribution<int> cols_d(std::max(0, src.cols() - 1), src.cols() + 2);
    int tcols = cols_d(rng);
    TwoTree tgt;
    std::uniform_int_distribution<int> h_d(0, max_h);
    for (int i = 0; i < tcols; ++i)
        tgt.heights.push_back(h_d(rng));
    Theta2Map m;
    m.src = src;
    m.tgt = tgt;
    m.phi = random_delta(rng, src.cols(), tcols);
    m.cols.resize(src.cols());
    for (int i = 0; i < src.cols(); ++i)
        for (int j = m.phi(i); j < m.phi(i + 1); ++j)
            m.cols[i].push_back(random_delta(rng, src.heights[i], tgt.heights[j]));
    m.check();
    return m;
}

}  // namespace

TEST_CASE("dimension")
{
    CHECK(TwoTree{}.dim() == 0);
    CHECK(TwoTree{{1, 0}}.dim() == 3);
    CHECK(TwoTree{{0, 0, 0}}.dim() == 3);
}

TEST_CASE("enumerate_trees fixed order and counts")
{
    auto d0 = enumerate_trees(0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0] == TwoTree{});

    auto d2 = enumerate_trees(2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == TwoTree{{1}});
    CHECK(d2[1] == TwoTree{{0, 0}});

    auto d3 = enumerate_trees(3);
    REQUIRE(d3.size() == 4);
    CHECK(d3[0] == TwoTree{{2}});
    CHECK(d3[1] == TwoTree{{1, 0}});
    CHECK(d3[2] == TwoTree{{0, 1}});
    CHECK(d3[3] == TwoTree{{0, 0, 0}});

    // independent count: compositions of d into (k; parts) <=> 2^{d-1}
    for (int d = 1; d <= 8; ++d)
        CHECK(enumerate_trees(d).size() == (1u << (d - 1)));
}

TEST_CASE("composition is unital and associative")
{
    std::mt19937 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        TwoTree s;
        std::uniform_int_distribution<int> cd(0, 3), hd(0, 3);
        int c = cd(rng);
        for (int i = 0; i < c; ++i)
            s.heights.push_back(hd(rng));
        Theta2Map f = random_map(rng, s, 3);
        Theta2Map g = random_map(rng, f.tgt, 3);
        Theta2Map h = random_map(rng, g.tgt, 3);
        CHECK(compose(f, Theta2Map::id(s)) == f);
        CHECK(compose(Theta2Map::id(f.tgt), f) == f);
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    }
}

TEST_CASE("generator examples")
{
    // d_min on the empty tree
    Theta2Map dm = d_min(TwoTree{});
    CHECK(dm.tgt == TwoTree{{0}});
    CHECK(dm.phi.vals == std::vector<int>{1});

    // shuffle LR from ([1];[2]) -> ([2];[1,1]): p* = (0,1,1), q* = (0,0,1)
    Shuffle lr{1, 1, {false, true}};
    Theta2Map sh = shuffle_coface(TwoTree{{2}}, 1, lr);
    CHECK(sh.tgt == TwoTree{{1, 1}});
    CHECK(sh.cols[0][0].vals == std::vector<int>{0, 1, 1});
    CHECK(sh.cols[0][1].vals == std::vector<int>{0, 0, 1});

    // vertical codegeneracy example
    Theta2Map e = vertical_codegeneracy(TwoTree{{1}}, 1, 0);
    CHECK(e.tgt == TwoTree{{0}});
    CHECK(e.cols[0][0].vals == std::vector<int>{0, 0});

    // compose(e_p^j, d_p^j) = id
    TwoTree t{{2, 1}};
    for (int p = 1; p <= 2; ++p)
        for (int j = 0; j <= t.heights[p - 1]; ++j) {
            Theta2Map d = vertical_coface(t, p, j);
            CHECK(compose(vertical_codegeneracy(d.tgt, p, j), d) == Theta2Map::id(t));
        }
}

TEST_CASE("boundary_terms of ([1];[0]) is +D_min  -D_max")
{
    auto bt = boundary_terms(TwoTree{{0}});
    REQUIRE(bt.size() == 2);
    CHECK(bt[0].map == d_min(TwoTree{}));
    CHECK(bt[0].sign == 1);
    CHECK(bt[1].map == d_max(TwoTree{}));
    CHECK(bt[1].sign == -1);
}

TEST_CASE("boundary_terms enumerates exactly the codim-1 cofaces (exhaustive oracle)")
{
    // oracle: run every generator constructor from every tree of dimension
    // d-1 and keep those whose target matches
    for (int d = 1; d <= 5; ++d) {
        for (const TwoTree& u : enumerate_trees(d)) {
            std::set<Theta2Map> expected;
            for (const TwoTree& s : enumerate_trees(d - 1)) {
                for (int p = 1; p <= s.cols(); ++p) {
                    for (int j = 0; j <= s.heights[p - 1] + 1; ++j) {
                        Theta2Map m = vertical_coface(s, p, j);
                        if (m.tgt == u)
                            expected.insert(m);
                    }
                    for (int a = 0; a <= s.heights[p - 1]; ++a)
                        for (const Shuffle& sh : all_shuffles(a, s.heights[p - 1] - a)) {
                            Theta2Map m = shuffle_coface(s, p, sh);
                            if (m.tgt == u)
                                expected.insert(m);
                        }
                }
                if (d_min(s).tgt == u)
                    expected.insert(d_min(s));
                if (d_max(s).tgt == u)
                    expected.insert(d_max(s));
            }
            auto bt = boundary_terms(u);
            std::set<Theta2Map> got;
            for (const auto& sc : bt)
                got.insert(sc.map);
            CHECK(got == expected);
            CHECK(got.size() == bt.size());  // no duplicates
        }
    }
}

TEST_CASE("d^2 = 0 at the free signed level up to dimension 6")
{
    DSquaredReport rep = d_squared_free(6);
    for (const auto& f : rep.failures)
        MESSAGE(f);
    CHECK(rep.ok());
    CHECK(rep.composites > 0);
}

TEST_CASE("Appendix-A relations hold for cols <= 4, heights <= 3")
{
    for (const RelationReport& rep : all_relation_reports(4, 3)) {
        INFO(rep.name);
        for (const auto& f : rep.failures)
            MESSAGE(rep.name, ": ", f);
        CHECK(rep.ok());
        CHECK(rep.instances > 0);
    }
}

TEST_CASE("linking number examples and oracle")
{
    // tau_{m,n}(i)=i, pi_{m,n}(j)=n+j -> 1
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            std::vector<int> tv(n + 1), pv(m + 1);
            for (int i = 0; i <= n; ++i)
                tv[i] = i;
            for (int j = 0; j <= m; ++j)
                pv[j] = n + j;
            DeltaMap tau(n, m + n, tv), pi(m, m + n, pv);
            CHECK(linking_number(tau, pi) == 1);
        }

    CHECK(linking_number(DeltaMap::id(1), DeltaMap::id(1)) == 2);

    DeltaMap t0(0, 2, {0}), p0(0, 2, {2});
    CHECK(linking_number(t0, p0) == 1);

    std::mt19937 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        int m = static_cast<int>(rng() % 5);
        DeltaMap tau = random_delta(rng, static_cast<int>(rng() % 4), m);
        DeltaMap pi = random_delta(rng, static_cast<int>(rng() % 4), m);
        CHECK(linking_number(tau, pi) == lk_oracle(tau, pi));
    }
}

TEST_CASE("linking number is invariant under epi-mono factorization")
{
    std::mt19937 rng(13);
    for (int iter = 0; iter < 300; ++iter) {
        int m = 1 + static_cast<int>(rng() % 4);
        DeltaMap tau = random_delta(rng, static_cast<int>(rng() % 5), m);
        DeltaMap pi = random_delta(rng, static_cast<int>(rng() % 5), m);
        auto mono_part = [](const DeltaMap& f) {
            std::set<int> s(f.vals.begin(), f.vals.end());
            std::vector<int> v(s.begin(), s.end());
            return DeltaMap(static_cast<int>(v.size()) - 1, f.tgt, v);
        };
        CHECK(linking_number(tau, pi) == linking_number(mono_part(tau), mono_part(pi)));
    }
}

TEST_CASE("reedy factorization: identity, cofaces, round trips, uniqueness")
{
    TwoTree t{{2, 0, 1}};
    auto [p_id, m_id] = reedy_factor(Theta2Map::id(t));
    CHECK(p_id == Theta2Map::id(t));
    CHECK(m_id == Theta2Map::id(t));

    Theta2Map dv = vertical_coface(t, 1, 1);
    auto [pp, mm] = reedy_factor(dv);
    CHECK(pp == dv);
    CHECK(mm == Theta2Map::id(t));

    std::mt19937 rng(17);
    for (int iter = 0; iter < 400; ++iter) {
        TwoTree s;
        int c = static_cast<int>(rng() % 4);
        for (int i = 0; i < c; ++i)
            s.heights.push_back(static_cast<int>(rng() % 4));
        Theta2Map f = random_map(rng, s, 3);
        auto [plus, minus] = reedy_factor(f);
        CHECK(in_theta_minus(minus));
        CHECK(in_theta_plus(plus));
        CHECK(compose(plus, minus) == f);
        CHECK(minus.tgt.dim() <= f.src.dim());
        CHECK(plus.src.dim() <= f.tgt.dim());
    }

    // uniqueness by exhaustive search at small size: any factorization
    // f = p . m with m in Theta2^-, p in Theta2^+ equals the computed one.
    TwoTree s{{1, 0}};
    std::mt19937 rng2(23);
    for (int iter = 0; iter < 30; ++iter) {
        Theta2Map f = random_map(rng2, s, 1);
        auto [plus, minus] = reedy_factor(f);
        // enumerate all middle trees of dim <= f.src.dim and all maps
        int found = 0;
        for (int d = 0; d <= f.src.dim(); ++d)
            for (const TwoTree& mid : enumerate_trees(d)) {
                // all maps s -> mid and mid -> tgt: enumerate via recursion on
                // phi and column maps (small sizes keep this cheap)
                std::vector<Theta2Map> firsts, seconds;
                std::function<void(Theta2Map&, int)> gen_cols;
                auto enumerate_maps = [&](const TwoTree& a, const TwoTree& b,
                                          std::vector<Theta2Map>& out) {
                    std::vector<DeltaMap> phis;
                    std::function<void(std::vector<int>&)> rec_phi = [&](std::vector<int>& acc) {
                        if (static_cast<int>(acc.size()) == a.cols() + 1) {
                            phis.emplace_back(a.cols(), b.cols(), acc);
                            return;
                        }
                        int lo = acc.empty() ? 0 : acc.back();
                        for (int v = lo; v <= b.cols(); ++v) {
                            acc.push_back(v);
                            rec_phi(acc);
                            acc.pop_back();
                        }
                    };
                    std::vector<int> acc0;
                    rec_phi(acc0);
                    for (const DeltaMap& phi : phis) {
                        Theta2Map m;
                        m.src = a;
                        m.tgt = b;
                        m.phi = phi;
                        m.cols.assign(a.cols(), {});
                        std::function<void(int, int)> rec_col = [&](int i, int j) {
                            if (i == a.cols()) {
                                out.push_back(m);
                                return;
                            }
                            if (j == phi(i + 1)) {
                                rec_col(i + 1, i + 1 == a.cols() ? 0 : phi(i + 1));
                                return;
                            }
                            // all Delta maps [h_a(i)] -> [h_b(j)]
                            std::vector<DeltaMap> dms;
                            std::function<void(std::vector<int>&)> rec_dm =
                                [&](std::vector<int>& acc) {
                                    if (static_cast<int>(acc.size()) == a.heights[i] + 1) {
                                        dms.emplace_back(a.heights[i], b.heights[j], acc);
                                        return;
                                    }
                                    int lo = acc.empty() ? 0 : acc.back();
                                    for (int v = lo; v <= b.heights[j]; ++v) {
                                        acc.push_back(v);
                                        rec_dm(acc);
                                        acc.pop_back();
                                    }
                                };
                            std::vector<int> acc1;
                            rec_dm(acc1);
                            for (const DeltaMap& dm : dms) {
                                m.cols[i].push_back(dm);
                                rec_col(i, j + 1);
                                m.cols[i].pop_back();
                            }
                        };
                        rec_col(0, a.cols() == 0 ? 0 : phi(0));
                        (void)gen_cols;
                    }
                };
                enumerate_maps(f.src, mid, firsts);
                enumerate_maps(mid, f.tgt, seconds);
                for (const Theta2Map& m1 : firsts) {
                    if (!in_theta_minus(m1))
                        continue;
                    for (const Theta2Map& m2 : seconds) {
                        if (!in_theta_plus(m2))
                            continue;
                        if (compose(m2, m1) == f) {
                            ++found;
                            CHECK(m1 == minus);
                            CHECK(m2 == plus);
                        }
                    }
                }
            }
        CHECK(found == 1);
    }
}
