#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace th2 {

// ---------------------------------------------------------------------------
// Objects of Theta_2 in the wreath model: ([k]; [n_1],...,[n_k]).
// heights[i] is the height of column i+1 (columns are 1-based in comments,
// 0-based in code). The empty tree ([0]; -) is allowed and final.
// ---------------------------------------------------------------------------
struct TwoTree {
    std::vector<int> heights;

    int cols() const { return static_cast<int>(heights.size()); }
    int dim() const { return cols() + std::accumulate(heights.begin(), heights.end(), 0); }

    // sum of heights of columns strictly left of 0-based column c
    int height_prefix(int c) const { return std::accumulate(heights.begin(), heights.begin() + c, 0); }

    friend bool operator==(const TwoTree& a, const TwoTree& b) { return a.heights == b.heights; }
    friend bool operator!=(const TwoTree& a, const TwoTree& b) { return !(a == b); }
    friend bool operator<(const TwoTree& a, const TwoTree& b)
    {
        if (a.cols() != b.cols())
            return a.cols() < b.cols();
        return a.heights < b.heights;
    }

    std::string str() const
    {
        std::string s = "([" + std::to_string(cols()) + "];[";
        for (int i = 0; i < cols(); ++i)
            s += (i ? "," : "") + std::to_string(heights[i]);
        return s + "])";
    }
};

// All trees of dimension exactly d. Order: column count ascending, then
// first height descending recursively (pinned by the reference examples:
// d=3 lists ([2];[1,0]) before ([2];[0,1])).
inline void enumerate_heights(int k, int total, std::vector<int>& acc, std::vector<TwoTree>& out)
{
    if (k == 0) {
        if (total == 0)
            out.push_back(TwoTree{acc});
        return;
    }
    for (int first = total; first >= 0; --first) {
        acc.push_back(first);
        enumerate_heights(k - 1, total - first, acc, out);
        acc.pop_back();
    }
}

inline std::vector<TwoTree> enumerate_trees(int d)
{
    std::vector<TwoTree> out;
    if (d == 0) {
        out.push_back(TwoTree{});
        return out;
    }
    for (int k = 1; k <= d; ++k) {
        std::vector<int> acc;
        enumerate_heights(k, d - k, acc, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Morphisms of Delta: weakly monotone maps [src] -> [tgt] on vertices.
// ---------------------------------------------------------------------------
struct DeltaMap {
    int src = 0;  // domain is [src] = {0..src}
    int tgt = 0;
    std::vector<int> vals;  // size src+1

    DeltaMap() = default;
    DeltaMap(int s, int t, std::vector<int> v) : src(s), tgt(t), vals(std::move(v)) { check(); }

    void check() const
    {
        if (static_cast<int>(vals.size()) != src + 1)
            throw std::invalid_argument("DeltaMap: wrong length");
        for (int i = 0; i <= src; ++i) {
            if (vals[i] < 0 || vals[i] > tgt)
                throw std::invalid_argument("DeltaMap: value out of range");
            if (i && vals[i] < vals[i - 1])
                throw std::invalid_argument("DeltaMap: not monotone");
        }
    }

    int operator()(int i) const { return vals[i]; }

    bool is_identity() const
    {
        if (src != tgt)
            return false;
        for (int i = 0; i <= src; ++i)
            if (vals[i] != i)
                return false;
        return true;
    }

    bool surjective() const
    {
        std::vector<bool> hit(tgt + 1, false);
        for (int v : vals)
            hit[v] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    bool injective() const
    {
        for (int i = 1; i <= src; ++i)
            if (vals[i] == vals[i - 1])
                return false;
        return true;
    }

    static DeltaMap id(int n)
    {
        std::vector<int> v(n + 1);
        std::iota(v.begin(), v.end(), 0);
        return DeltaMap(n, n, std::move(v));
    }

    // coface d^j: [n] -> [n+1], skipping vertex j (0 <= j <= n+1)
    static DeltaMap coface(int n, int j)
    {
        std::vector<int> v(n + 1);
        for (int i = 0; i <= n; ++i)
            v[i] = i < j ? i : i + 1;
        return DeltaMap(n, n + 1, std::move(v));
    }

    // codegeneracy e^j: [n] -> [n-1], hitting j twice (0 <= j <= n-1)
    static DeltaMap codegeneracy(int n, int j)
    {
        std::vector<int> v(n + 1);
        for (int i = 0; i <= n; ++i)
            v[i] = i <= j ? i : i - 1;
        return DeltaMap(n, n - 1, std::move(v));
    }

    friend DeltaMap compose(const DeltaMap& g, const DeltaMap& f)
    {
        if (f.tgt != g.src)
            throw std::invalid_argument("DeltaMap compose: mismatch");
        std::vector<int> v(f.src + 1);
        for (int i = 0; i <= f.src; ++i)
            v[i] = g.vals[f.vals[i]];
        return DeltaMap(f.src, g.tgt, std::move(v));
    }

    friend bool operator==(const DeltaMap& a, const DeltaMap& b)
    {
        return a.src == b.src && a.tgt == b.tgt && a.vals == b.vals;
    }
    friend bool operator<(const DeltaMap& a, const DeltaMap& b)
    {
        if (a.src != b.src)
            return a.src < b.src;
        if (a.tgt != b.tgt)
            return a.tgt < b.tgt;
        return a.vals < b.vals;
    }
};

// ---------------------------------------------------------------------------
// (a,b)-shuffles stored as L/R words; sign exponent = number of (R,L)
// inversions. The Joyal-dual pair (p*, q*) is read off the word.
// ---------------------------------------------------------------------------
struct Shuffle {
    int a = 0;
    int b = 0;
    std::vector<bool> word;  // false = L (first block), true = R; length a+b

    int inversions() const
    {
        int inv = 0, rs = 0;
        for (bool w : word) {
            if (w)
                ++rs;
            else
                inv += rs;
        }
        return inv;
    }

    // p*: [a+b] -> [a], q*: [a+b] -> [b], both preserving endpoints
    DeltaMap pstar() const
    {
        std::vector<int> v(a + b + 1, 0);
        for (int i = 1; i <= a + b; ++i)
            v[i] = v[i - 1] + (word[i - 1] ? 0 : 1);
        return DeltaMap(a + b, a, std::move(v));
    }
    DeltaMap qstar() const
    {
        std::vector<int> v(a + b + 1, 0);
        for (int i = 1; i <= a + b; ++i)
            v[i] = v[i - 1] + (word[i - 1] ? 1 : 0);
        return DeltaMap(a + b, b, std::move(v));
    }

    friend bool operator==(const Shuffle& x, const Shuffle& y)
    {
        return x.a == y.a && x.b == y.b && x.word == y.word;
    }
};

inline std::vector<Shuffle> all_shuffles(int a, int b)
{
    std::vector<Shuffle> out;
    // enumerate L/R words with a L's and b R's, lexicographic (L < R)
    std::vector<bool> word(a + b, false);
    std::fill(word.begin() + a, word.end(), true);
    std::sort(word.begin(), word.end());
    do {
        out.push_back(Shuffle{a, b, word});
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Morphisms of Theta_2 = Delta wr Delta. cols[i] holds the tuple of column
// maps of source column i (0-based), one per target column in
// [phi(i), phi(i+1)).  Equality is componentwise; the model is canonical.
// ---------------------------------------------------------------------------
struct Theta2Map {
    TwoTree src, tgt;
    DeltaMap phi;  // [src.cols()] -> [tgt.cols()]
    std::vector<std::vector<DeltaMap>> cols;

    void check() const
    {
        if (phi.src != src.cols() || phi.tgt != tgt.cols())
            throw std::invalid_argument("Theta2Map: phi shape");
        if (static_cast<int>(cols.size()) != src.cols())
            throw std::invalid_argument("Theta2Map: wrong column count");
        for (int i = 0; i < src.cols(); ++i) {
            int lo = phi(i), hi = phi(i + 1);
            if (static_cast<int>(cols[i].size()) != hi - lo)
                throw std::invalid_argument("Theta2Map: column tuple size");
            for (int t = 0; t < hi - lo; ++t) {
                if (cols[i][t].src != src.heights[i] || cols[i][t].tgt != tgt.heights[lo + t])
                    throw std::invalid_argument("Theta2Map: column map shape");
            }
        }
    }

    // column map of source column i into target column j (phi(i) <= j < phi(i+1))
    const DeltaMap& col_map(int i, int j) const { return cols[i][j - phi(i)]; }

    static Theta2Map id(const TwoTree& t)
    {
        Theta2Map m;
        m.src = m.tgt = t;
        m.phi = DeltaMap::id(t.cols());
        m.cols.resize(t.cols());
        for (int i = 0; i < t.cols(); ++i)
            m.cols[i] = {DeltaMap::id(t.heights[i])};
        return m;
    }

    friend bool operator==(const Theta2Map& a, const Theta2Map& b)
    {
        return a.src == b.src && a.tgt == b.tgt && a.phi == b.phi && a.cols == b.cols;
    }
    friend bool operator<(const Theta2Map& a, const Theta2Map& b)
    {
        if (!(a.src == b.src))
            return a.src < b.src;
        if (!(a.tgt == b.tgt))
            return a.tgt < b.tgt;
        if (!(a.phi == b.phi))
            return a.phi < b.phi;
        return a.cols < b.cols;
    }
};

inline Theta2Map compose(const Theta2Map& g, const Theta2Map& f)
{
    if (!(f.tgt == g.src))
        throw std::invalid_argument("Theta2Map compose: source/target mismatch");
    Theta2Map h;
    h.src = f.src;
    h.tgt = g.tgt;
    h.phi = compose(g.phi, f.phi);
    h.cols.resize(f.src.cols());
    for (int c = 0; c < f.src.cols(); ++c) {
        for (int d = h.phi(c); d < h.phi(c + 1); ++d) {
            // the middle column e with g.phi(e) <= d < g.phi(e+1) lies in
            // [f.phi(c), f.phi(c+1)) automatically
            int e = static_cast<int>(std::upper_bound(g.phi.vals.begin(), g.phi.vals.end(), d) -
                                     g.phi.vals.begin()) -
                    1;
            h.cols[c].push_back(compose(g.col_map(e, d), f.col_map(c, e)));
        }
    }
    h.check();
    return h;
}

// --- elementary generators -------------------------------------------------

// (F1)/(F3): vertical coface at 1-based column p, Delta-coface index j.
inline Theta2Map vertical_coface(const TwoTree& t, int p, int j)
{
    int c = p - 1;
    if (c < 0 || c >= t.cols() || j < 0 || j > t.heights[c] + 1)
        throw std::out_of_range("vertical_coface: index");
    Theta2Map m = Theta2Map::id(t);
    m.tgt.heights[c] += 1;
    m.cols[c] = {DeltaMap::coface(t.heights[c], j)};
    m.check();
    return m;
}

// (D1): vertical codegeneracy at column p, index j.
inline Theta2Map vertical_codegeneracy(const TwoTree& t, int p, int j)
{
    int c = p - 1;
    if (c < 0 || c >= t.cols() || t.heights[c] == 0 || j < 0 || j > t.heights[c] - 1)
        throw std::out_of_range("vertical_codegeneracy: index");
    Theta2Map m = Theta2Map::id(t);
    m.tgt.heights[c] -= 1;
    m.cols[c] = {DeltaMap::codegeneracy(t.heights[c], j)};
    m.check();
    return m;
}

// (F2): shuffle coface splitting 1-based column p of the source into two
// target columns of heights (sh.a, sh.b); requires sh.a + sh.b == height.
inline Theta2Map shuffle_coface(const TwoTree& t, int p, const Shuffle& sh)
{
    int c = p - 1;
    if (c < 0 || c >= t.cols())
        throw std::out_of_range("shuffle_coface: column");
    if (sh.a + sh.b != t.heights[c])
        throw std::invalid_argument("shuffle_coface: wrong shuffle type");
    Theta2Map m;
    m.src = t;
    m.tgt.heights = t.heights;
    m.tgt.heights[c] = sh.a;
    m.tgt.heights.insert(m.tgt.heights.begin() + c + 1, sh.b);
    // phi = coface d^{p} on columns: source column c -> target columns c, c+1
    m.phi = DeltaMap::coface(t.cols(), p);
    m.cols.resize(t.cols());
    for (int i = 0; i < t.cols(); ++i) {
        if (i == c)
            m.cols[i] = {sh.pstar(), sh.qstar()};
        else
            m.cols[i] = {DeltaMap::id(t.heights[i])};
    }
    m.check();
    return m;
}

// (F4): D_min / D_max append an empty column on the left / right.
inline Theta2Map d_min(const TwoTree& t)
{
    Theta2Map m;
    m.src = t;
    m.tgt.heights = t.heights;
    m.tgt.heights.insert(m.tgt.heights.begin(), 0);
    m.phi = DeltaMap::coface(t.cols(), 0);
    m.cols.resize(t.cols());
    for (int i = 0; i < t.cols(); ++i)
        m.cols[i] = {DeltaMap::id(t.heights[i])};
    m.check();
    return m;
}

inline Theta2Map d_max(const TwoTree& t)
{
    Theta2Map m;
    m.src = t;
    m.tgt.heights = t.heights;
    m.tgt.heights.push_back(0);
    m.phi = DeltaMap::coface(t.cols(), t.cols() + 1);
    m.cols.resize(t.cols());
    for (int i = 0; i < t.cols(); ++i)
        m.cols[i] = {DeltaMap::id(t.heights[i])};
    m.check();
    return m;
}

// (D2): horizontal codegeneracy Upsilon^p_0 deleting 1-based column p+1,
// which must have height 0 (the codimension-1 case). p ranges 0..cols-1.
inline Theta2Map horizontal_codegeneracy(const TwoTree& t, int p)
{
    if (p < 0 || p >= t.cols())
        throw std::out_of_range("horizontal_codegeneracy: index");
    if (t.heights[p] != 0)
        throw std::invalid_argument("horizontal_codegeneracy: deleted column must have height 0");
    Theta2Map m;
    m.src = t;
    m.tgt.heights = t.heights;
    m.tgt.heights.erase(m.tgt.heights.begin() + p);
    m.phi = DeltaMap::codegeneracy(t.cols(), p);
    m.cols.resize(t.cols());
    for (int i = 0; i < t.cols(); ++i) {
        if (i == p)
            m.cols[i] = {};  // collapsed column, empty tuple
        else
            m.cols[i] = {DeltaMap::id(t.heights[i])};
    }
    m.check();
    return m;
}

// ---------------------------------------------------------------------------
// The signed codimension-1 coface maps into a target tree T, with the signs
// of the totalization differential. All exponents are computed from the
// source tree S = ([n]; h_1..h_n) of each coface:
//   vertical  d_p^j : (-1)^{h_1+...+h_{p-1} + n + j}
//   shuffle D_{p,s} : (-1)^{p + inv(s)}
//   D_min           : +1
//   D_max           : (-1)^{n+1}
// This is the unique consistent completion of the paper's sign data (the
// printed table fails d^2 = 0); the d^2 sweep and the degree-0 boundary
// formula pin it down.
// ---------------------------------------------------------------------------
struct SignedCoface {
    int sign = 1;  // +1 or -1
    Theta2Map map;
};

inline std::vector<SignedCoface> boundary_terms(const TwoTree& t)
{
    std::vector<SignedCoface> out;
    int n_t = t.cols();
    // vertical cofaces from S = T with column p lowered by one
    for (int p = 1; p <= n_t; ++p) {
        if (t.heights[p - 1] == 0)
            continue;
        TwoTree s = t;
        s.heights[p - 1] -= 1;
        int base = s.height_prefix(p - 1) + s.cols();
        for (int j = 0; j <= t.heights[p - 1]; ++j) {
            int sign = ((base + j) % 2 == 0) ? 1 : -1;
            out.push_back({sign, vertical_coface(s, p, j)});
        }
    }
    // shuffle cofaces from S with columns p, p+1 of T merged
    for (int p = 1; p + 1 <= n_t; ++p) {
        int a = t.heights[p - 1], b = t.heights[p];
        TwoTree s;
        s.heights = t.heights;
        s.heights[p - 1] = a + b;
        s.heights.erase(s.heights.begin() + p);
        for (const Shuffle& sh : all_shuffles(a, b)) {
            int sign = ((p + sh.inversions()) % 2 == 0) ? 1 : -1;
            out.push_back({sign, shuffle_coface(s, p, sh)});
        }
    }
    // D_min / D_max
    if (n_t >= 1 && t.heights.front() == 0) {
        TwoTree s;
        s.heights.assign(t.heights.begin() + 1, t.heights.end());
        out.push_back({1, d_min(s)});
    }
    if (n_t >= 1 && t.heights.back() == 0) {
        TwoTree s;
        s.heights.assign(t.heights.begin(), t.heights.end() - 1);
        int sign = (s.cols() % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
        out.push_back({sign, d_max(s)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reedy factorization f = plus . minus with minus in Theta2^- (phi and the
// retained column maps surjective) and plus in Theta2^+ (phi injective,
// column families jointly injective). Unique in the wreath model.
// ---------------------------------------------------------------------------
inline std::pair<Theta2Map, Theta2Map> reedy_factor(const Theta2Map& f)
{
    const TwoTree& s = f.src;
    // epi-mono factorization of phi
    std::vector<int> image;
    for (int v : f.phi.vals)
        if (image.empty() || image.back() != v)
            image.push_back(v);
    int r = static_cast<int>(image.size()) - 1;
    std::vector<int> minus_vals(s.cols() + 1), plus_vals(r + 1);
    for (int i = 0; i <= s.cols(); ++i)
        minus_vals[i] =
            static_cast<int>(std::lower_bound(image.begin(), image.end(), f.phi(i)) - image.begin());
    for (int i = 0; i <= r; ++i)
        plus_vals[i] = image[i];

    // middle tree: one column per non-collapsed source column; its height is
    // the jointly-collapsed height of that source column
    TwoTree mid;
    Theta2Map minus, plus;
    minus.src = s;
    minus.phi = DeltaMap(s.cols(), r, minus_vals);
    minus.cols.resize(s.cols());
    plus.phi = DeltaMap(r, f.tgt.cols(), plus_vals);

    for (int i = 0; i < s.cols(); ++i) {
        if (minus_vals[i] == minus_vals[i + 1]) {
            minus.cols[i] = {};  // collapsed by phi already
            continue;
        }
        int lo = f.phi(i), hi = f.phi(i + 1);
        // collapse vertices a ~ a+1 of [h_i] whenever every column map agrees
        int h = s.heights[i];
        std::vector<int> cls(h + 1);
        int cur = 0;
        cls[0] = 0;
        for (int a = 1; a <= h; ++a) {
            bool all_equal = true;
            for (int j = lo; j < hi; ++j)
                if (f.col_map(i, j)(a) != f.col_map(i, j)(a - 1)) {
                    all_equal = false;
                    break;
                }
            if (!all_equal)
                ++cur;
            cls[a] = cur;
        }
        mid.heights.push_back(cur);
        minus.cols[i] = {DeltaMap(h, cur, cls)};
        // induced jointly injective maps [cur] -> [tgt heights]
        std::vector<DeltaMap> induced;
        std::vector<int> rep(cur + 1);
        for (int a = h; a >= 0; --a)
            rep[cls[a]] = a;
        for (int j = lo; j < hi; ++j) {
            std::vector<int> v(cur + 1);
            for (int q = 0; q <= cur; ++q)
                v[q] = f.col_map(i, j)(rep[q]);
            induced.emplace_back(cur, f.tgt.heights[j], std::move(v));
        }
        plus.cols.push_back(std::move(induced));
    }
    minus.tgt = mid;
    plus.src = mid;
    plus.tgt = f.tgt;
    minus.check();
    plus.check();
    return {plus, minus};
}

inline bool in_theta_minus(const Theta2Map& f)
{
    if (!f.phi.surjective())
        return false;
    for (int i = 0; i < f.src.cols(); ++i)
        if (f.phi(i) < f.phi(i + 1)) {
            // exactly one target column; its map must be surjective
            for (const auto& cm : f.cols[i])
                if (!cm.surjective())
                    return false;
        }
    return true;
}

inline bool in_theta_plus(const Theta2Map& f)
{
    if (!f.phi.injective())
        return false;
    for (int i = 0; i < f.src.cols(); ++i) {
        int h = f.src.heights[i];
        for (int a = 1; a <= h; ++a) {
            bool separated = false;
            for (const auto& cm : f.cols[i])
                if (cm(a) != cm(a - 1)) {
                    separated = true;
                    break;
                }
            if (!separated)
                return false;
        }
        if (f.phi(i) == f.phi(i + 1) && h > 0)
            return false;  // a positive-height column cannot be jointly injective into nothing
    }
    return true;
}

// ---------------------------------------------------------------------------
// Linking number of two Delta maps with a common target [m]: the minimal n
// such that Im(tau) and Im(pi) decompose into disjoint unions of intervals
// A_1<...<A_s, B_1<...<B_t, s+t=n+1, alternating with endpoint overlaps
// allowed. Intervals are intervals of the image in the induced order (so the
// number is defined for every pair; the lk <= 1 predicate is insensitive to
// this choice since it only involves one block per side).
// ---------------------------------------------------------------------------
namespace detail {

inline int lk_scan(const std::vector<int>& first, const std::vector<int>& second)
{
    // count the minimal number of interval blocks when `first`'s block comes
    // first at each tie; greedy: walk both sorted image sets, extending the
    // current block while elements stay consecutive and >= the frontier.
    // We do a small DP instead: state = (ia, ib, last_side, frontier).
    const std::vector<int>* imgs[2] = {&first, &second};
    // memo on (ia, ib, side): the frontier is determined as the last element
    // consumed overall, tracked explicitly in the recursion below.
    struct Rec {
        const std::vector<int>** imgs;
        std::vector<std::vector<std::vector<int>>> memo;  // [ia][ib][side] -> best blocks remaining
        int na, nb;

        int solve(int ia, int ib, int side, int frontier)
        {
            // side = who must place the NEXT block (alternation is strict)
            const std::vector<int>& mine = *imgs[side];
            int n = side == 0 ? na : nb;
            int i = side == 0 ? ia : ib;
            if (i == n) {
                // nothing left on my side; other side must also be done
                int j = side == 0 ? ib : ia;
                int m = side == 0 ? nb : na;
                return j == m ? 0 : 1000000;
            }
            if (mine[i] < frontier)
                return 1000000;
            int best = 1000000;
            // place a block = any consecutive chunk of the sorted image
            for (int j = i; j < n; ++j) {
                int after = mine[j];
                int ni = side == 0 ? j + 1 : ia;
                int nj = side == 0 ? ib : j + 1;
                int sub = solve(ni, nj, 1 - side, after);
                if (sub < best)
                    best = sub;
            }
            return best == 1000000 ? best : best + 1;
        }
    };
    Rec rec{imgs, {}, static_cast<int>(first.size()), static_cast<int>(second.size())};
    return rec.solve(0, 0, 0, -1);
}

}  // namespace detail

inline int linking_number(const DeltaMap& tau, const DeltaMap& pi)
{
    if (tau.tgt != pi.tgt)
        throw std::invalid_argument("linking_number: different targets");
    auto image_of = [](const DeltaMap& f) {
        std::vector<int> im(f.vals);
        std::sort(im.begin(), im.end());
        im.erase(std::unique(im.begin(), im.end()), im.end());
        return im;
    };
    std::vector<int> a = image_of(tau), b = image_of(pi);
    int s1 = detail::lk_scan(a, b);  // A-block first
    int s2 = detail::lk_scan(b, a);  // B-block first
    int blocks = std::min(s1, s2);
    if (blocks >= 1000000)
        throw std::logic_error("linking_number: no decomposition found");
    return blocks - 1;
}

}  // namespace th2
