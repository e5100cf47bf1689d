#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "th2/linalg.hpp"

namespace th2 {

template <class K>
struct is_dual : std::false_type {};
template <class K>
struct is_dual<Dual<K>> : std::true_type {};

// A morphism value: coordinates in the hom space C(s, t) w.r.t. the chosen
// basis. All category operations extend the structure constants bilinearly.
template <class K>
struct Mor {
    int s = -1;
    int t = -1;
    std::vector<K> c;

    friend bool operator==(const Mor& a, const Mor& b) { return a.s == b.s && a.t == b.t && a.c == b.c; }
    friend bool operator!=(const Mor& a, const Mor& b) { return !(a == b); }
};

// Finite k-linear monoidal category by structure constants, skeletal: the
// tensor table is a function on object indices and is required to be
// strictly associative and unital on indices (validated). The structural
// isomorphisms alpha, lambda, rho are then automorphism-valued.
template <class K>
struct FinMonCat {
    int nobj = 0;
    int unit = 0;
    K zero{};
    K one{};
    std::vector<int> tens_;     // nobj x nobj
    std::vector<int> homdim_;   // nobj x nobj
    // comp_[(x,y,z)][g*dim(x,y)+f] = coordinates of g.f in C(x,z)
    std::vector<std::vector<std::vector<K>>> comp_;
    // wl_[(x,y,y')][g] = coordinates of id_x (x) g in C(x.y, x.y')
    std::vector<std::vector<std::vector<K>>> wl_;
    // wr_[(x,x',y)][f] = coordinates of f (x) id_y in C(x.y, x'.y)
    std::vector<std::vector<std::vector<K>>> wr_;
    std::vector<std::vector<K>> alpha_;  // per (x,y,z): element of End-hom C(xyz, xyz)
    std::vector<std::vector<K>> lam_;    // per x: C(e.x, x)
    std::vector<std::vector<K>> rho_;    // per x: C(x.e, x)
    std::vector<std::vector<K>> idm_;    // per x: id_x in C(x,x)

    int tens(int x, int y) const { return tens_[x * nobj + y]; }
    int homdim(int x, int y) const { return homdim_[x * nobj + y]; }
    int idx3(int x, int y, int z) const { return (x * nobj + y) * nobj + z; }

    Mor<K> mor_zero(int s, int t) const { return {s, t, std::vector<K>(homdim(s, t), zero)}; }
    Mor<K> mor_basis(int s, int t, int i) const
    {
        Mor<K> m = mor_zero(s, t);
        m.c[i] = one;
        return m;
    }
    Mor<K> mor_id(int x) const { return {x, x, idm_[x]}; }

    Mor<K> add(const Mor<K>& a, const Mor<K>& b) const
    {
        Mor<K> r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i)
            r.c[i] = r.c[i] + b.c[i];
        return r;
    }
    Mor<K> scale(const K& k, const Mor<K>& a) const
    {
        Mor<K> r = a;
        for (auto& v : r.c)
            v = k * v;
        return r;
    }
    Mor<K> neg(const Mor<K>& a) const
    {
        Mor<K> r = a;
        for (auto& v : r.c)
            v = zero - v;
        return r;
    }
    bool mor_is_zero(const Mor<K>& a) const
    {
        for (const auto& v : a.c)
            if (!is_zero(v))
                return false;
        return true;
    }

    // vertical composition g . f, f: x->y, g: y->z
    Mor<K> vcomp(const Mor<K>& g, const Mor<K>& f) const
    {
        if (f.t != g.s)
            throw std::invalid_argument("vcomp: type mismatch");
        Mor<K> r = mor_zero(f.s, g.t);
        const auto& table = comp_[idx3(f.s, f.t, g.t)];
        int df = homdim(f.s, f.t);
        for (int gi = 0; gi < homdim(g.s, g.t); ++gi) {
            if (is_zero(g.c[gi]))
                continue;
            for (int fi = 0; fi < df; ++fi) {
                if (is_zero(f.c[fi]))
                    continue;
                const auto& vec = table[gi * df + fi];
                K coef = g.c[gi] * f.c[fi];
                for (std::size_t i = 0; i < vec.size(); ++i)
                    r.c[i] = r.c[i] + coef * vec[i];
            }
        }
        return r;
    }

    // id_x (x) g for g: y -> y'
    Mor<K> whisk_left(int x, const Mor<K>& g) const
    {
        Mor<K> r = mor_zero(tens(x, g.s), tens(x, g.t));
        const auto& table = wl_[idx3(x, g.s, g.t)];
        for (int gi = 0; gi < homdim(g.s, g.t); ++gi) {
            if (is_zero(g.c[gi]))
                continue;
            for (std::size_t i = 0; i < table[gi].size(); ++i)
                r.c[i] = r.c[i] + g.c[gi] * table[gi][i];
        }
        return r;
    }

    // f (x) id_y for f: x -> x'
    Mor<K> whisk_right(const Mor<K>& f, int y) const
    {
        Mor<K> r = mor_zero(tens(f.s, y), tens(f.t, y));
        const auto& table = wr_[idx3(f.s, f.t, y)];
        for (int fi = 0; fi < homdim(f.s, f.t); ++fi) {
            if (is_zero(f.c[fi]))
                continue;
            for (std::size_t i = 0; i < table[fi].size(); ++i)
                r.c[i] = r.c[i] + f.c[fi] * table[fi][i];
        }
        return r;
    }

    // f (x) g = (f (x) id) . (id (x) g); equal to the other order by (R2)
    Mor<K> tensor(const Mor<K>& f, const Mor<K>& g) const
    {
        return vcomp(whisk_right(f, g.t), whisk_left(f.s, g));
    }

    Mor<K> alpha(int x, int y, int z) const
    {
        int o = tens(tens(x, y), z);
        return {o, o, alpha_[idx3(x, y, z)]};
    }
    Mor<K> lam(int x) const { return {tens(unit, x), x, lam_[x]}; }
    Mor<K> rho(int x) const { return {tens(x, unit), x, rho_[x]}; }

    // inverse of a 2-morphism; for dual numbers the base part is inverted
    // over k and corrected, elsewhere a linear solve does it.
    Mor<K> invert(const Mor<K>& m) const
    {
        if constexpr (is_dual<K>::value) {
            using B = decltype(m.c[0].a);
            FinMonCat<B> base = base_category<B>();
            Mor<B> m0{m.s, m.t, {}}, m1{m.s, m.t, {}};
            for (const auto& v : m.c) {
                m0.c.push_back(v.a);
                m1.c.push_back(v.b);
            }
            Mor<B> n0 = base.invert(m0);
            Mor<B> n1 = base.neg(base.vcomp(base.vcomp(n0, m1), n0));
            Mor<K> r{m.t, m.s, {}};
            for (std::size_t i = 0; i < n0.c.size(); ++i)
                r.c.push_back(K(n0.c[i], n1.c[i]));
            return r;
        } else {
            // find n with n.m = id_s via the right-multiplication matrix
            int ds = homdim(m.t, m.s);
            Matrix<K> a(homdim(m.s, m.s), ds, zero);
            for (int i = 0; i < ds; ++i) {
                Mor<K> col = vcomp(mor_basis(m.t, m.s, i), m);
                for (std::size_t r = 0; r < col.c.size(); ++r)
                    a.set(static_cast<int>(r), i, col.c[r]);
            }
            auto sol = solve(a, idm_[m.s]);
            if (!sol)
                throw std::domain_error("invert: morphism is not invertible");
            Mor<K> n{m.t, m.s, *sol};
            Mor<K> check = vcomp(m, n);
            if (!(check == mor_id(m.t)))
                throw std::domain_error("invert: one-sided inverse only");
            return n;
        }
    }

    // strip dual-number structure (only instantiated when K = Dual<B>)
    template <class B>
    FinMonCat<B> base_category() const
    {
        FinMonCat<B> c;
        c.nobj = nobj;
        c.unit = unit;
        c.zero = zero.a;
        c.one = one.a;
        c.tens_ = tens_;
        c.homdim_ = homdim_;
        auto strip_vec = [](const std::vector<K>& v) {
            std::vector<B> r;
            r.reserve(v.size());
            for (const auto& x : v)
                r.push_back(x.a);
            return r;
        };
        auto strip2 = [&](const std::vector<std::vector<K>>& v) {
            std::vector<std::vector<B>> r;
            r.reserve(v.size());
            for (const auto& x : v)
                r.push_back(strip_vec(x));
            return r;
        };
        auto strip3 = [&](const std::vector<std::vector<std::vector<K>>>& v) {
            std::vector<std::vector<std::vector<B>>> r;
            r.reserve(v.size());
            for (const auto& x : v)
                r.push_back(strip2(x));
            return r;
        };
        c.comp_ = strip3(comp_);
        c.wl_ = strip3(wl_);
        c.wr_ = strip3(wr_);
        c.alpha_ = strip2(alpha_);
        c.lam_ = strip2(lam_);
        c.rho_ = strip2(rho_);
        c.idm_ = strip2(idm_);
        return c;
    }
};

// base change K -> Dual<K> (or any L constructible from K)
template <class K>
FinMonCat<Dual<K>> dual_category(const FinMonCat<K>& c)
{
    FinMonCat<Dual<K>> d;
    d.nobj = c.nobj;
    d.unit = c.unit;
    d.zero = Dual<K>(c.zero, c.zero);
    d.one = Dual<K>(c.one, c.zero);
    d.tens_ = c.tens_;
    d.homdim_ = c.homdim_;
    auto lift_vec = [&](const std::vector<K>& v) {
        std::vector<Dual<K>> r;
        r.reserve(v.size());
        for (const auto& x : v)
            r.emplace_back(x, c.zero);
        return r;
    };
    auto lift2 = [&](const std::vector<std::vector<K>>& v) {
        std::vector<std::vector<Dual<K>>> r;
        r.reserve(v.size());
        for (const auto& x : v)
            r.push_back(lift_vec(x));
        return r;
    };
    auto lift3 = [&](const std::vector<std::vector<std::vector<K>>>& v) {
        std::vector<std::vector<std::vector<Dual<K>>>> r;
        r.reserve(v.size());
        for (const auto& x : v)
            r.push_back(lift2(x));
        return r;
    };
    d.comp_ = lift3(c.comp_);
    d.wl_ = lift3(c.wl_);
    d.wr_ = lift3(c.wr_);
    d.alpha_ = lift2(c.alpha_);
    d.lam_ = lift2(c.lam_);
    d.rho_ = lift2(c.rho_);
    d.idm_ = lift2(c.idm_);
    return d;
}

// ---------------------------------------------------------------------------
// Validation report
// ---------------------------------------------------------------------------
struct CheckReport {
    struct Item {
        std::string name;
        bool ok = true;
        std::string witness;
    };
    std::vector<Item> items;

    bool ok() const
    {
        for (const auto& it : items)
            if (!it.ok)
                return false;
        return true;
    }
    const Item* first_failure() const
    {
        for (const auto& it : items)
            if (!it.ok)
                return &it;
        return nullptr;
    }
};

namespace detail {
inline std::string tup(std::initializer_list<int> xs)
{
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first)
            s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}
}  // namespace detail

template <class K>
CheckReport validate(const FinMonCat<K>& c)
{
    CheckReport rep;
    auto check = [&](const std::string& name, std::function<std::string()> body) {
        CheckReport::Item it;
        it.name = name;
        try {
            it.witness = body();
            it.ok = it.witness.empty();
        } catch (const std::exception& e) {
            it.ok = false;
            it.witness = e.what();
        }
        rep.items.push_back(std::move(it));
    };
    int n = c.nobj;

    check("objects: tensor associative and unital on indices", [&]() -> std::string {
        for (int x = 0; x < n; ++x) {
            if (c.tens(c.unit, x) != x || c.tens(x, c.unit) != x)
                return "unit at " + std::to_string(x);
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (c.tens(c.tens(x, y), z) != c.tens(x, c.tens(y, z)))
                        return detail::tup({x, y, z});
        }
        return "";
    });

    check("identities are units for composition", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int i = 0; i < c.homdim(x, y); ++i) {
                    Mor<K> f = c.mor_basis(x, y, i);
                    if (!(c.vcomp(c.mor_id(y), f) == f) || !(c.vcomp(f, c.mor_id(x)) == f))
                        return detail::tup({x, y, i});
                }
        return "";
    });

    check("(R1) composition associative", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int w = 0; w < n; ++w)
                        for (int i = 0; i < c.homdim(x, y); ++i)
                            for (int j = 0; j < c.homdim(y, z); ++j)
                                for (int k = 0; k < c.homdim(z, w); ++k) {
                                    Mor<K> f = c.mor_basis(x, y, i), g = c.mor_basis(y, z, j),
                                           h = c.mor_basis(z, w, k);
                                    if (!(c.vcomp(c.vcomp(h, g), f) == c.vcomp(h, c.vcomp(g, f))))
                                        return detail::tup({x, y, z, w, i, j, k});
                                }
        return "";
    });

    check("(R2) interchange of whiskerings", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y = 0; y < n; ++y)
                    for (int y2 = 0; y2 < n; ++y2)
                        for (int i = 0; i < c.homdim(x, x2); ++i)
                            for (int j = 0; j < c.homdim(y, y2); ++j) {
                                Mor<K> f = c.mor_basis(x, x2, i), g = c.mor_basis(y, y2, j);
                                Mor<K> lhs = c.vcomp(c.whisk_right(f, y2), c.whisk_left(x, g));
                                Mor<K> rhs = c.vcomp(c.whisk_left(x2, g), c.whisk_right(f, y));
                                if (!(lhs == rhs))
                                    return detail::tup({x, x2, y, y2, i, j});
                            }
        return "";
    });

    check("(R3) whiskering functoriality", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int y2 = 0; y2 < n; ++y2)
                    for (int y3 = 0; y3 < n; ++y3)
                        for (int i = 0; i < c.homdim(y, y2); ++i)
                            for (int j = 0; j < c.homdim(y2, y3); ++j) {
                                Mor<K> g = c.mor_basis(y, y2, i), g2 = c.mor_basis(y2, y3, j);
                                if (!(c.vcomp(c.whisk_left(x, g2), c.whisk_left(x, g)) ==
                                      c.whisk_left(x, c.vcomp(g2, g))))
                                    return "left " + detail::tup({x, y, y2, y3, i, j});
                                if (!(c.vcomp(c.whisk_right(g2, x), c.whisk_right(g, x)) ==
                                      c.whisk_right(c.vcomp(g2, g), x)))
                                    return "right " + detail::tup({x, y, y2, y3, i, j});
                            }
        return "";
    });

    check("whiskering with identities is the identity", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!(c.whisk_left(x, c.mor_id(y)) == c.mor_id(c.tens(x, y))))
                    return "left " + detail::tup({x, y});
                if (!(c.whisk_right(c.mor_id(x), y) == c.mor_id(c.tens(x, y))))
                    return "right " + detail::tup({x, y});
            }
        return "";
    });

    check("(R4) associator natural in the outer left argument", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        for (int i = 0; i < c.homdim(x, x2); ++i) {
                            Mor<K> f = c.mor_basis(x, x2, i);
                            Mor<K> lhs = c.vcomp(c.whisk_right(c.whisk_right(f, y), z), c.alpha(x, y, z));
                            Mor<K> rhs = c.vcomp(c.alpha(x2, y, z), c.whisk_right(f, c.tens(y, z)));
                            if (!(lhs == rhs))
                                return detail::tup({x, x2, y, z, i});
                        }
        return "";
    });

    check("(R5) associator natural in the middle argument", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int y2 = 0; y2 < n; ++y2)
                    for (int z = 0; z < n; ++z)
                        for (int i = 0; i < c.homdim(y, y2); ++i) {
                            Mor<K> g = c.mor_basis(y, y2, i);
                            Mor<K> lhs =
                                c.vcomp(c.whisk_right(c.whisk_left(x, g), z), c.alpha(x, y, z));
                            Mor<K> rhs =
                                c.vcomp(c.alpha(x, y2, z), c.whisk_left(x, c.whisk_right(g, z)));
                            if (!(lhs == rhs))
                                return detail::tup({x, y, y2, z, i});
                        }
        return "";
    });

    check("(R6) associator natural in the outer right argument", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int z2 = 0; z2 < n; ++z2)
                        for (int i = 0; i < c.homdim(z, z2); ++i) {
                            Mor<K> h = c.mor_basis(z, z2, i);
                            Mor<K> lhs = c.vcomp(c.whisk_left(c.tens(x, y), h), c.alpha(x, y, z));
                            Mor<K> rhs = c.vcomp(c.alpha(x, y, z2), c.whisk_left(x, c.whisk_left(y, h)));
                            if (!(lhs == rhs))
                                return detail::tup({x, y, z, z2, i});
                        }
        return "";
    });

    check("(R7) pentagon", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int w = 0; w < n; ++w) {
                        Mor<K> lhs = c.vcomp(c.alpha(c.tens(x, y), z, w), c.alpha(x, y, c.tens(z, w)));
                        Mor<K> rhs = c.vcomp(
                            c.whisk_right(c.alpha(x, y, z), w),
                            c.vcomp(c.alpha(x, c.tens(y, z), w), c.whisk_left(x, c.alpha(y, z, w))));
                        if (!(lhs == rhs))
                            return detail::tup({x, y, z, w});
                    }
        return "";
    });

    check("(R8) rho natural", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int x2 = 0; x2 < n; ++x2)
                for (int i = 0; i < c.homdim(x, x2); ++i) {
                    Mor<K> f = c.mor_basis(x, x2, i);
                    if (!(c.vcomp(c.rho(x2), c.whisk_right(f, c.unit)) == c.vcomp(f, c.rho(x))))
                        return detail::tup({x, x2, i});
                }
        return "";
    });

    check("(R9) lambda natural", [&]() -> std::string {
        for (int y = 0; y < n; ++y)
            for (int y2 = 0; y2 < n; ++y2)
                for (int i = 0; i < c.homdim(y, y2); ++i) {
                    Mor<K> g = c.mor_basis(y, y2, i);
                    if (!(c.vcomp(c.lam(y2), c.whisk_left(c.unit, g)) == c.vcomp(g, c.lam(y))))
                        return detail::tup({y, y2, i});
                }
        return "";
    });

    check("(R10) lambda_e = rho_e", [&]() -> std::string {
        return c.lam(c.unit) == c.rho(c.unit) ? "" : "differ";
    });

    check("triangle", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                Mor<K> lhs = c.vcomp(c.whisk_right(c.rho(x), y), c.alpha(x, c.unit, y));
                Mor<K> rhs = c.whisk_left(x, c.lam(y));
                if (!(lhs == rhs))
                    return detail::tup({x, y});
            }
        return "";
    });

    check("unit whiskering is the identity map", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int i = 0; i < c.homdim(x, y); ++i) {
                    Mor<K> f = c.mor_basis(x, y, i);
                    Mor<K> wr = c.whisk_right(f, c.unit);
                    Mor<K> wl = c.whisk_left(c.unit, f);
                    if (!(wr.c == f.c) || !(wl.c == f.c))
                        return detail::tup({x, y, i});
                }
        return "";
    });

    check("alpha, lambda, rho invertible", [&]() -> std::string {
        for (int x = 0; x < n; ++x) {
            (void)c.invert(c.lam(x));
            (void)c.invert(c.rho(x));
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    (void)c.invert(c.alpha(x, y, z));
        }
        return "";
    });

    return rep;
}

// ---------------------------------------------------------------------------
// Built-in generators
// ---------------------------------------------------------------------------

// G-graded lines with associator twisted by omega: objects = group elements,
// hom(g,h) = delta_{g,h} k, tensor = group law, alpha_{g,h,k} = omega(g,h,k).
// omega must be normalized (value 1 whenever an argument is the identity);
// validate() passes iff omega is a 3-cocycle.
template <class K>
FinMonCat<K> vec_g_omega(const std::vector<std::vector<int>>& table,
                         const std::function<K(int, int, int)>& omega, K zero, K one)
{
    int n = static_cast<int>(table.size());
    // group sanity: find identity, check Latin-square and associativity
    int e = -1;
    for (int g = 0; g < n; ++g) {
        bool ident = true;
        for (int h = 0; h < n; ++h)
            if (table[g][h] != h || table[h][g] != h)
                ident = false;
        if (ident)
            e = g;
    }
    if (e < 0)
        throw std::invalid_argument("vec_g_omega: table has no identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cgi = 0; cgi < n; ++cgi)
                if (table[table[a][b]][cgi] != table[a][table[b][cgi]])
                    throw std::invalid_argument("vec_g_omega: table not associative");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cgi = 0; cgi < n; ++cgi)
                if ((a == e || b == e || cgi == e) && !(omega(a, b, cgi) == one))
                    throw std::invalid_argument("vec_g_omega: omega not normalized");

    FinMonCat<K> c;
    c.nobj = n;
    c.unit = e;
    c.zero = zero;
    c.one = one;
    c.tens_.assign(n * n, 0);
    c.homdim_.assign(n * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            c.tens_[x * n + y] = table[x][y];
            c.homdim_[x * n + y] = x == y ? 1 : 0;
        }
    c.comp_.assign(static_cast<std::size_t>(n) * n * n, {});
    c.wl_.assign(static_cast<std::size_t>(n) * n * n, {});
    c.wr_.assign(static_cast<std::size_t>(n) * n * n, {});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int i = c.idx3(x, y, z);
                if (x == y && y == z)
                    c.comp_[i] = {{one}};
                if (y == z)
                    c.wl_[i] = {{one}};  // id_x (x) id_y
                if (x == y)
                    c.wr_[i] = {{one}};
            }
    c.alpha_.assign(static_cast<std::size_t>(n) * n * n, {});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                c.alpha_[c.idx3(x, y, z)] = {omega(x, y, z)};
    c.lam_.assign(n, {one});
    c.rho_.assign(n, {one});
    c.idm_.assign(n, {one});
    return c;
}

// One object, hom space a commutative unital algebra A; both compositions
// are the multiplication. Rejects non-commutative input (interchange).
template <class K>
FinMonCat<K> deloop_algebra(int dim, const std::vector<std::vector<std::vector<K>>>& mult,
                            const std::vector<K>& one_coords, K zero, K one)
{
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (mult[i][j] != mult[j][i])
                throw std::invalid_argument("deloop_algebra: algebra is not commutative");
    FinMonCat<K> c;
    c.nobj = 1;
    c.unit = 0;
    c.zero = zero;
    c.one = one;
    c.tens_ = {0};
    c.homdim_ = {dim};
    std::vector<std::vector<K>> table(static_cast<std::size_t>(dim) * dim);
    for (int g = 0; g < dim; ++g)
        for (int f = 0; f < dim; ++f)
            table[g * dim + f] = mult[g][f];
    c.comp_ = {table};
    // whiskering by the only object multiplies with 1_A, so it fixes each basis element
    std::vector<std::vector<K>> w(dim);
    for (int g = 0; g < dim; ++g) {
        std::vector<K> v(dim, zero);
        v[g] = one;
        w[g] = v;
    }
    c.wl_ = {w};
    c.wr_ = {w};
    c.alpha_ = {one_coords};
    c.lam_ = {one_coords};
    c.rho_ = {one_coords};
    c.idm_ = {one_coords};
    return c;
}

// ---------------------------------------------------------------------------
// Tensor words and coherence normalization
// ---------------------------------------------------------------------------
struct Word;
using WordPtr = std::shared_ptr<const Word>;

struct Word {
    // leaf: obj >= 0; unit marker: obj == -1; pair: l && r
    int obj = -1;
    WordPtr l, r;

    bool is_pair() const { return static_cast<bool>(l); }
    bool is_unit() const { return !l && obj < 0; }
};

inline WordPtr word_leaf(int obj) { return std::make_shared<Word>(Word{obj, nullptr, nullptr}); }
inline WordPtr word_unit() { return std::make_shared<Word>(Word{-1, nullptr, nullptr}); }
inline WordPtr word_pair(WordPtr a, WordPtr b)
{
    return std::make_shared<Word>(Word{-2, std::move(a), std::move(b)});
}

inline void word_leaves(const WordPtr& w, std::vector<int>& out)
{
    if (w->is_pair()) {
        word_leaves(w->l, out);
        word_leaves(w->r, out);
    } else if (!w->is_unit()) {
        out.push_back(w->obj);
    }
}

// right-nested word over a leaf list; empty list = unit marker
inline WordPtr word_right_nested(const std::vector<int>& leaves)
{
    if (leaves.empty())
        return word_unit();
    WordPtr w = word_leaf(leaves.back());
    for (int i = static_cast<int>(leaves.size()) - 2; i >= 0; --i)
        w = word_pair(word_leaf(leaves[i]), w);
    return w;
}

template <class K>
int word_eval(const FinMonCat<K>& c, const WordPtr& w)
{
    if (w->is_pair())
        return c.tens(word_eval(c, w->l), word_eval(c, w->r));
    return w->is_unit() ? c.unit : w->obj;
}

namespace detail {

// canonical iso rn(A) (x) rn(B) -> rn(A ++ B) built from alpha/lambda/rho
template <class K>
Mor<K> combine_nested(const FinMonCat<K>& c, const std::vector<int>& a, const std::vector<int>& b)
{
    auto eval_list = [&](const std::vector<int>& xs) {
        if (xs.empty())
            return c.unit;
        int o = xs.back();
        for (int i = static_cast<int>(xs.size()) - 2; i >= 0; --i)
            o = c.tens(xs[i], o);
        return o;
    };
    if (a.empty())
        return c.lam(eval_list(b));
    if (b.empty())
        return c.rho(eval_list(a));
    if (a.size() == 1)
        return c.mor_id(c.tens(a[0], eval_list(b)));
    // a = x :: a', both nonempty: ((x . rn(a')) . rn(b)) -> x . (rn(a') . rn(b)) -> x . rn(a'++b)
    std::vector<int> atail(a.begin() + 1, a.end());
    Mor<K> rec = combine_nested(c, atail, b);
    Mor<K> step = c.invert(c.alpha(a[0], eval_list(atail), eval_list(b)));
    return c.vcomp(c.whisk_left(a[0], rec), step);
}

}  // namespace detail

// canonical iso eval(w) -> eval(right-nested unit-free normal form of w)
template <class K>
Mor<K> word_normalize(const FinMonCat<K>& c, const WordPtr& w)
{
    if (!w->is_pair()) {
        if (w->is_unit())
            return c.mor_id(c.unit);
        return c.mor_id(w->obj);
    }
    Mor<K> ul = word_normalize(c, w->l);
    Mor<K> ur = word_normalize(c, w->r);
    std::vector<int> la, lb;
    word_leaves(w->l, la);
    word_leaves(w->r, lb);
    Mor<K> both = c.tensor(ul, ur);
    return c.vcomp(detail::combine_nested(c, la, lb), both);
}

// the canonical structural isomorphism eval(w1) -> eval(w2); the two words
// must carry the same ordered sequence of non-unit leaves
template <class K>
Mor<K> coherence_iso(const FinMonCat<K>& c, const WordPtr& w1, const WordPtr& w2)
{
    std::vector<int> l1, l2;
    word_leaves(w1, l1);
    word_leaves(w2, l2);
    if (l1 != l2)
        throw std::invalid_argument("coherence_iso: leaf sequences differ");
    return c.vcomp(c.invert(word_normalize(c, w2)), word_normalize(c, w1));
}

}  // namespace th2
