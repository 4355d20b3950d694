#include "hypinvol/halfplane.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace hypinvol::halfplane {

namespace {

constexpr Real kInf = std::numeric_limits<Real>::infinity();

struct Mat {
    Real a, b, c, d;

    Mat mul(const Mat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat inv() const { return {d, -b, -c, a}; }
    Real tr() const { return a + d; }
};

// Conjugation of the matrix part by the mirror z -> -conj(z).
Mat mirror_conj(const Mat& m) { return {m.a, -m.b, -m.c, m.d}; }

Mat mat_of(const Isometry& g) { return {g.a, g.b, g.c, g.d}; }

Isometry iso_of(const Mat& m, Parity p = Parity::preserving) {
    return Isometry(m.a, m.b, m.c, m.d, p);
}

// max-entry distance between g and +-h.
Real mat_dist_up_to_sign(const Mat& g, const Mat& h) {
    const Real dp = std::max(std::max(std::fabs(g.a - h.a), std::fabs(g.b - h.b)),
                             std::max(std::fabs(g.c - h.c), std::fabs(g.d - h.d)));
    const Real dm = std::max(std::max(std::fabs(g.a + h.a), std::fabs(g.b + h.b)),
                             std::max(std::fabs(g.c + h.c), std::fabs(g.d + h.d)));
    return std::min(dp, dm);
}

Mat commutator(const Mat& g, const Mat& h) {
    return g.mul(h).mul(g.inv()).mul(h.inv());
}

// Generator pair with prescribed traces (x, y, z), the first generator
// diagonal. Any choice of the off-diagonal pair (q, r) with qr = ps - 1
// gives the same traces; the symmetric one is used.
std::pair<Mat, Mat> pair_from_traces(Real x, Real y, Real z) {
    const Real av = (x + std::sqrt(x * x - 4.0)) / 2.0;
    const Real den = av * av - 1.0;
    const Real p = (av * z - y) / den;
    const Real s = y - p;
    const Real t = p * s - 1.0;
    if (std::fabs(t) < 1e-12)
        throw GluingError("pair_from_traces: generators share a fixed point");
    const Real q = std::sqrt(std::fabs(t));
    const Real r = t / q;
    return {Mat{av, 0.0, 0.0, 1.0 / av}, Mat{p, q, r, s}};
}

}  // namespace

Isometry::Isometry(Real a_, Real b_, Real c_, Real d_, Parity p)
    : a(a_), b(b_), c(c_), d(d_), parity(p) {
    const Real det = a_ * d_ - b_ * c_;
    if (!std::isfinite(det) || det <= 0.0)
        throw DomainError("Isometry: determinant must be positive and finite");
    if (std::fabs(det - 1.0) > 1e-15) {
        const Real s = std::sqrt(det);
        a /= s;
        b /= s;
        c /= s;
        d /= s;
    }
}

Isometry Isometry::axis_translation(Real len) {
    const Real e = std::exp(len / 2.0);
    return {e, 0.0, 0.0, 1.0 / e};
}

Isometry Isometry::axis_glide(Real len) {
    const Real e = std::exp(len / 2.0);
    return {e, 0.0, 0.0, 1.0 / e, Parity::reversing};
}

Isometry Isometry::rotation_about_i(Real angle) {
    const Real ch = std::cos(angle / 2.0);
    const Real sh = std::sin(angle / 2.0);
    return {ch, sh, -sh, ch};
}

bool Isometry::is_near_identity(Real eps) const {
    return mat_dist_up_to_sign(mat_of(*this), Mat{1, 0, 0, 1}) < eps &&
           parity == Parity::preserving;
}

Real dist(const HPoint& p, const HPoint& q) {
    const Real dx = p.x - q.x;
    const Real dy = p.y - q.y;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

HPoint apply(const Isometry& g, const HPoint& p) {
    std::complex<Real> z(p.x, p.y);
    if (g.parity == Parity::reversing) z = std::complex<Real>(-p.x, p.y);
    const std::complex<Real> w = (g.a * z + g.b) / (g.c * z + g.d);
    return HPoint(w.real(), w.imag());
}

Isometry compose(const Isometry& g, const Isometry& h) {
    const Mat mh = (g.parity == Parity::reversing) ? mirror_conj(mat_of(h)) : mat_of(h);
    const Mat m = mat_of(g).mul(mh);
    const Parity p = (g.parity == h.parity) ? Parity::preserving : Parity::reversing;
    return iso_of(m, p);
}

Isometry invert(const Isometry& g) {
    Mat m = mat_of(g).inv();
    if (g.parity == Parity::reversing) m = mirror_conj(m);
    return iso_of(m, g.parity);
}

Real translation_length(const Isometry& g, const Tol& tol) {
    if (g.parity == Parity::reversing)
        return translation_length(compose(g, g), tol) / 2.0;
    const Real t = std::fabs(g.trace());
    if (t <= 2.0 + tol.domain_eps)
        throw NotHyperbolic("translation_length: |trace| <= 2");
    return 2.0 * std::acosh(t / 2.0);
}

AxisEndpoints axis_endpoints(const Isometry& g) {
    if (g.parity == Parity::reversing)
        throw DomainError("axis_endpoints: preserving isometry required");
    const Real t = g.trace();
    if (std::fabs(t) <= 2.0)
        throw NotHyperbolic("axis_endpoints: |trace| <= 2");
    const Real scale = std::fabs(g.a) + std::fabs(g.b) + std::fabs(g.d);
    if (std::fabs(g.c) <= 1e-15 * std::max(1.0, scale)) {
        const Real finite = g.b / (g.d - g.a);
        if (std::fabs(g.a) > std::fabs(g.d)) return {finite, kInf};
        return {kInf, finite};
    }
    const Real sq = std::sqrt(t * t - 4.0);
    const Real z1 = ((g.a - g.d) + sq) / (2.0 * g.c);
    const Real z2 = ((g.a - g.d) - sq) / (2.0 * g.c);
    // The derivative 1/(cz+d)^2 has modulus below 1 at the attracting end.
    const Real m1 = std::fabs(g.c * z1 + g.d);
    if (m1 > 1.0) return {z2, z1};
    return {z1, z2};
}

Isometry conjugate_axis_to_standard(const Isometry& g) {
    const AxisEndpoints e = axis_endpoints(g);
    if (std::isinf(e.attracting)) {
        return {1.0, -e.repelling, 0.0, 1.0};
    }
    if (std::isinf(e.repelling)) {
        return {0.0, -1.0, 1.0, -e.attracting};
    }
    if (e.repelling > e.attracting) {
        return {1.0, -e.repelling, 1.0, -e.attracting};
    }
    return {-1.0, e.repelling, 1.0, -e.attracting};
}

HPoint point_on_axis(const Isometry& g, Real s) {
    const Isometry c = conjugate_axis_to_standard(g);
    return apply(invert(c), HPoint(0.0, std::exp(s)));
}

Real axis_crossing_height(const Isometry& g) {
    const AxisEndpoints e = axis_endpoints(g);
    if (std::isinf(e.attracting) || std::isinf(e.repelling) ||
        e.attracting * e.repelling >= 0.0)
        throw DomainError("axis_crossing_height: axis does not cross the imaginary axis");
    return 0.5 * std::log(-e.attracting * e.repelling);
}

std::array<Isometry, 4> genus2_generators(const fricke::TorusPiece& left,
                                          const fricke::TorusPiece& right, Real beta,
                                          Real twist, const Tol& tol) {
    tol.validate();
    const Real beta_tol = std::max(tol.abs_res, 1e-9 * beta);
    if (std::fabs(left.beta - beta) > beta_tol || std::fabs(right.beta - beta) > beta_tol)
        throw GluingError("genus2_generators: piece boundary lengths disagree with beta");
    const auto& lt = left.traces;
    const auto& rt = right.traces;
    const bool same = std::fabs(rt.x - lt.x) < 1e-6 && std::fabs(rt.y - lt.y) < 1e-6 &&
                      std::fabs(rt.z - lt.z) < 1e-6;
    const bool swapped = std::fabs(rt.x - lt.y) < 1e-6 && std::fabs(rt.y - lt.x) < 1e-6 &&
                         std::fabs(rt.z - lt.z) < 1e-6;
    if (!same && !swapped)
        throw GluingError("genus2_generators: right piece is not the mirror of the left");

    auto [ma, mb] = pair_from_traces(lt.x, lt.y, lt.z);
    const Mat k = commutator(ma, mb);
    const Real expected = -2.0 * std::cosh(beta / 2.0);
    if (std::fabs(k.tr() - expected) > 1e-6 * std::max(1.0, std::fabs(expected)))
        throw GluingError("genus2_generators: commutator trace mismatch");

    // Move the commutator axis onto the imaginary axis, attracting end up.
    const Isometry conj = conjugate_axis_to_standard(iso_of(k));
    const Mat mc = mat_of(conj);
    const Mat mci = mc.inv();
    const Mat a1 = mc.mul(ma).mul(mci);
    const Mat b1 = mc.mul(mb).mul(mci);

    const Isometry tau = Isometry::axis_glide(beta / 2.0);
    const Isometry A1 = iso_of(a1);
    const Isometry B1 = iso_of(b1);
    Isometry A2 = compose(compose(tau, B1), invert(tau));
    Isometry B2 = compose(compose(tau, A1), invert(tau));
    if (twist != 0.0) {
        const Isometry tw = Isometry::axis_translation(twist);
        const Isometry twi = invert(tw);
        A2 = compose(compose(tw, A2), twi);
        B2 = compose(compose(tw, B2), twi);
    }

    const Mat rel = commutator(mat_of(A1), mat_of(B1))
                        .mul(commutator(mat_of(A2), mat_of(B2)));
    if (mat_dist_up_to_sign(rel, Mat{1, 0, 0, 1}) > 1e-8)
        throw GluingError("genus2_generators: surface relation residual too large");

    return {A1, B1, A2, B2};
}

Isometry lift_involution(const std::array<Isometry, 4>& gens, Real beta, const Tol& tol) {
    tol.validate();
    const Isometry tau = Isometry::axis_glide(beta / 2.0);
    const Isometry taui = invert(tau);
    const Mat k = commutator(mat_of(gens[0]), mat_of(gens[1]));
    const Mat tau2 = mat_of(compose(tau, tau));
    const Real scale = std::max(1.0, std::fabs(k.tr()));
    if (mat_dist_up_to_sign(tau2, k.inv()) > 1e-8 * scale &&
        mat_dist_up_to_sign(tau2, k) > 1e-8 * scale)
        throw GluingError("lift_involution: glide square is not the gluing translation");
    const Mat conj_a1 = mat_of(compose(compose(tau, gens[0]), taui));
    const Mat conj_b1 = mat_of(compose(compose(tau, gens[1]), taui));
    const Real scale2 = std::max({1.0, std::fabs(gens[2].trace()), std::fabs(gens[3].trace())});
    if (mat_dist_up_to_sign(conj_a1, mat_of(gens[3])) > 1e-8 * scale2 ||
        mat_dist_up_to_sign(conj_b1, mat_of(gens[2])) > 1e-8 * scale2)
        throw GluingError("lift_involution: glide does not exchange the two pieces");
    return tau;
}

namespace {

// Letters 0..2n-1: letter 2i is gens[i], letter 2i+1 its inverse.
struct LetterTable {
    std::vector<Mat> mats;
    int n_letters;

    explicit LetterTable(const std::vector<Isometry>& gens) {
        for (const auto& g : gens) {
            if (g.parity != Parity::preserving)
                throw DomainError("word enumeration: preserving generators required");
            mats.push_back(mat_of(g));
            mats.push_back(mat_of(g).inv());
        }
        n_letters = static_cast<int>(mats.size());
    }
};

int inverse_letter(int l) { return l ^ 1; }

template <typename Visit>
void dfs_words(const LetterTable& tab, int max_len, Visit&& visit) {
    std::vector<int> word;
    std::vector<Mat> prod;
    word.reserve(max_len);
    prod.reserve(max_len);

    // Iterative DFS over freely reduced words.
    struct Frame {
        int next_letter;
    };
    std::vector<Frame> stack;
    stack.push_back({0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_letter >= tab.n_letters) {
            stack.pop_back();
            if (!word.empty()) {
                word.pop_back();
                prod.pop_back();
            }
            continue;
        }
        const int l = f.next_letter++;
        if (!word.empty() && l == inverse_letter(word.back())) continue;
        const Mat m = word.empty() ? tab.mats[l] : prod.back().mul(tab.mats[l]);
        word.push_back(l);
        prod.push_back(m);
        visit(word, m);
        if (static_cast<int>(word.size()) < max_len) {
            stack.push_back({0});
        } else {
            word.pop_back();
            prod.pop_back();
        }
    }
}

bool cyclically_reduced(const std::vector<int>& w) {
    return w.size() <= 1 || w.front() != inverse_letter(w.back());
}

std::vector<int> inverse_word(const std::vector<int>& w) {
    std::vector<int> r(w.rbegin(), w.rend());
    for (int& l : r) l = inverse_letter(l);
    return r;
}

bool rotation_less(const std::vector<int>& w, const std::vector<int>& v, size_t shift) {
    const size_t n = w.size();
    for (size_t i = 0; i < n; ++i) {
        const int a = v[(i + shift) % n];
        if (a != w[i]) return a < w[i];
    }
    return false;
}

// True when w is the lexicographically minimal rotation among rotations of
// w and of its inverse; each unoriented cyclic class is visited once.
bool is_canonical_cyclic(const std::vector<int>& w) {
    const size_t n = w.size();
    for (size_t s = 1; s < n; ++s)
        if (rotation_less(w, w, s)) return false;
    const std::vector<int> wi = inverse_word(w);
    for (size_t s = 0; s < n; ++s)
        if (rotation_less(w, wi, s)) return false;
    return true;
}

bool is_proper_power(const std::vector<int>& w) {
    const size_t n = w.size();
    for (size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (size_t i = p; i < n && periodic; ++i) periodic = (w[i] == w[i - p]);
        if (periodic) return true;
    }
    return false;
}

Real boundary_angle(Real endpoint) {
    return std::isinf(endpoint) ? std::atan(kInf) : std::atan(endpoint);
}

struct ClassCand {
    Real length;
    Real e1, e2;  // sorted atan-coordinates of the axis endpoints
    std::vector<int> word;
};

bool word_better(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Quantized sign-normalized matrix key: two words are recognized as the
// same group element when their keys coincide exactly.
struct MatKey {
    std::array<int64_t, 4> k;
    bool operator==(const MatKey&) const = default;
};

struct MatKeyHash {
    size_t operator()(const MatKey& m) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (int64_t v : m.k) {
            h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

MatKey quantize(const Mat& m) {
    Mat n = m;
    // Largest-magnitude entry positive.
    Real big = n.a;
    for (Real v : {n.b, n.c, n.d})
        if (std::fabs(v) > std::fabs(big)) big = v;
    if (big < 0.0) n = Mat{-n.a, -n.b, -n.c, -n.d};
    const Real q = 1e-5;
    return MatKey{{static_cast<int64_t>(std::llround(n.a / q)),
                   static_cast<int64_t>(std::llround(n.b / q)),
                   static_cast<int64_t>(std::llround(n.c / q)),
                   static_cast<int64_t>(std::llround(n.d / q))}};
}

// All conjugates of m (and of its inverse: classes are unoriented) by
// words of length <= radius, as quantized keys. Two spellings that are
// conjugate in the group through short conjugators share a key.
template <typename Sink>
void conjugate_keys(const Mat& m, const LetterTable& tab, int radius, Sink&& sink) {
    sink(quantize(m));
    sink(quantize(m.inv()));
    dfs_words(tab, radius, [&](const std::vector<int>&, const Mat& g) {
        const Mat gi = g.inv();
        sink(quantize(g.mul(m).mul(gi)));
        sink(quantize(g.mul(m.inv()).mul(gi)));
    });
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Real orbit_min_dist(const HPoint& p, const HPoint& q, const std::vector<Isometry>& gens,
                    int word_cutoff) {
    if (word_cutoff < 1) throw DomainError("orbit_min_dist: word_cutoff must be >= 1");
    const LetterTable tab(gens);
    const std::complex<Real> zq(q.x, q.y);
    Real best = dist(p, q);
    dfs_words(tab, word_cutoff, [&](const std::vector<int>&, const Mat& m) {
        const std::complex<Real> w = (m.a * zq + m.b) / (m.c * zq + m.d);
        if (w.imag() <= 0.0) return;
        const Real dx = p.x - w.real();
        const Real dy = p.y - w.imag();
        const Real d = std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * w.imag()));
        if (d < best) best = d;
    });
    return best;
}

Real orbit_min_dist_odd_coset(const HPoint& p, const std::vector<Isometry>& gens,
                              int odd_index, int word_cutoff) {
    if (word_cutoff < 1) throw DomainError("orbit_min_dist_odd_coset: word_cutoff must be >= 1");
    if (odd_index < 0 || odd_index >= static_cast<int>(gens.size()))
        throw DomainError("orbit_min_dist_odd_coset: bad generator index");
    const LetterTable tab(gens);
    const std::complex<Real> zp(p.x, p.y);
    Real best = kInf;
    dfs_words(tab, word_cutoff, [&](const std::vector<int>& word, const Mat& m) {
        int count = 0;
        for (int l : word)
            if ((l >> 1) == odd_index) ++count;
        if ((count & 1) == 0) return;
        const std::complex<Real> w = (m.a * zp + m.b) / (m.c * zp + m.d);
        if (w.imag() <= 0.0) return;
        const Real dx = p.x - w.real();
        const Real dy = p.y - w.imag();
        const Real d = std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * w.imag()));
        if (d < best) best = d;
    });
    return best;
}

std::vector<GeodesicClass> geodesic_classes(const std::vector<Isometry>& gens,
                                            Real length_cutoff, int word_cutoff) {
    if (word_cutoff < 1) throw DomainError("length_spectrum: word_cutoff must be >= 1");
    if (!(length_cutoff > 0.0)) throw DomainError("length_spectrum: bad length cutoff");
    const LetterTable tab(gens);
    const Real trace_cutoff = 2.0 * std::cosh(length_cutoff / 2.0) + 1e-9;

    std::vector<ClassCand> cands;
    dfs_words(tab, word_cutoff, [&](const std::vector<int>& word, const Mat& m) {
        if (!cyclically_reduced(word)) return;
        const Real t = std::fabs(m.tr());
        if (t > trace_cutoff) return;
        if (mat_dist_up_to_sign(m, Mat{1, 0, 0, 1}) < 1e-6) return;  // relator ball
        if (t <= 2.0 + 1e-9)
            throw NotHyperbolic("length_spectrum: non-hyperbolic word, bad gluing data");
        if (!is_canonical_cyclic(word)) return;
        if (is_proper_power(word)) return;
        const Real len = 2.0 * std::acosh(t / 2.0);
        if (len > length_cutoff) return;
        const AxisEndpoints ax = axis_endpoints(iso_of(m));
        Real e1 = boundary_angle(ax.repelling);
        Real e2 = boundary_angle(ax.attracting);
        if (e1 > e2) std::swap(e1, e2);
        cands.push_back({len, e1, e2, word});
    });

    std::sort(cands.begin(), cands.end(), [](const ClassCand& a, const ClassCand& b) {
        if (a.length != b.length) return a.length < b.length;
        if (a.e1 != b.e1) return a.e1 < b.e1;
        if (a.e2 != b.e2) return a.e2 < b.e2;
        return word_better(a.word, b.word);
    });

    // Stage 1: merge words presenting the same axis (spellings equal as
    // group elements, e.g. through the surface relation).
    std::vector<ClassCand> axis_classes;
    const Real etol = 3e-6;
    for (const auto& c : cands) {
        bool merged = false;
        for (auto it = axis_classes.rbegin(); it != axis_classes.rend(); ++it) {
            if (c.length - it->length > 1e-7 * (1.0 + c.length)) break;
            if (std::fabs(c.e1 - it->e1) < etol && std::fabs(c.e2 - it->e2) < etol) {
                if (word_better(c.word, it->word)) it->word = c.word;
                merged = true;
                break;
            }
        }
        if (!merged) axis_classes.push_back(c);
    }

    // Stage 2: merge spellings that are conjugate in the group but not
    // freely (relation rewrites composed with conjugation). Candidates
    // sharing any quantized conjugate-matrix key are the same class.
    const int n = static_cast<int>(axis_classes.size());
    const int conj_radius = 3;
    std::vector<Mat> mats(n, Mat{1, 0, 0, 1});
    for (int i = 0; i < n; ++i)
        for (int l : axis_classes[i].word) mats[i] = mats[i].mul(tab.mats[l]);
    UnionFind uf(n);
    std::unordered_map<MatKey, int, MatKeyHash> seen;
    for (int i = 0; i < n; ++i) {
        conjugate_keys(mats[i], tab, conj_radius, [&](const MatKey& key) {
            auto [it, inserted] = seen.try_emplace(key, i);
            if (!inserted && uf.find(it->second) != uf.find(i)) uf.unite(it->second, i);
        });
    }
    std::vector<ClassCand> classes;
    std::vector<int> root_to_class(n, -1);
    for (int i = 0; i < n; ++i) {
        const int r = uf.find(i);
        if (root_to_class[r] < 0) {
            root_to_class[r] = static_cast<int>(classes.size());
            classes.push_back(axis_classes[i]);
        } else if (word_better(axis_classes[i].word, classes[root_to_class[r]].word)) {
            classes[root_to_class[r]].word = axis_classes[i].word;
        }
    }

    // Drop classes that retrace a shorter class's geodesic (powers hidden
    // by the surface relation): C is a k-th power when C's key set meets
    // the key set of D^k for some class D at length C/k.
    std::vector<GeodesicClass> primitive;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        const auto& c = classes[ci];
        Mat mc{1, 0, 0, 1};
        for (int l : c.word) mc = mc.mul(tab.mats[l]);
        std::unordered_map<MatKey, char, MatKeyHash> ckeys;
        conjugate_keys(mc, tab, conj_radius, [&](const MatKey& k) { ckeys.emplace(k, 1); });

        bool power = false;
        for (int k = 2; k <= 3 && !power; ++k) {
            const Real base = c.length / k;
            for (const auto& s : classes) {
                if (std::fabs(s.length - base) > 1e-6 * (1.0 + base)) continue;
                Mat ms{1, 0, 0, 1};
                for (int l : s.word) ms = ms.mul(tab.mats[l]);
                Mat pow = ms;
                for (int j = 1; j < k; ++j) pow = pow.mul(ms);
                bool hit = false;
                conjugate_keys(pow, tab, conj_radius, [&](const MatKey& key) {
                    if (!hit && ckeys.count(key)) hit = true;
                });
                if (hit) {
                    power = true;
                    break;
                }
            }
        }
        if (power) continue;
        GeodesicClass out;
        out.length = c.length;
        out.e1 = c.e1;
        out.e2 = c.e2;
        for (int l : c.word) {
            const int idx = (l >> 1) + 1;
            out.word.push_back((l & 1) ? -idx : idx);
        }
        primitive.push_back(std::move(out));
    }
    return primitive;
}

SpectrumResult length_spectrum(const std::vector<Isometry>& gens, Real length_cutoff,
                               int word_cutoff) {
    const std::vector<GeodesicClass> primitive =
        geodesic_classes(gens, length_cutoff, word_cutoff);

    SpectrumResult out;
    for (size_t i = 0; i < primitive.size();) {
        size_t j = i;
        std::vector<int> best_word = primitive[i].word;
        while (j + 1 < primitive.size() &&
               primitive[j + 1].length - primitive[i].length <
                   1e-7 * (1.0 + primitive[i].length)) {
            ++j;
            if (word_better(primitive[j].word, best_word)) best_word = primitive[j].word;
        }
        SpectrumEntry entry;
        entry.length = primitive[i].length;
        entry.multiplicity = static_cast<int>(j - i + 1);
        entry.representative_word = best_word;
        out.entries.push_back(std::move(entry));
        i = j + 1;
    }

    Real min_gen_len = kInf;
    for (const auto& g : gens) min_gen_len = std::min(min_gen_len, translation_length(g));
    out.cutoff_warning = min_gen_len * word_cutoff < 2.0 * length_cutoff;
    return out;
}

bool same_geodesic_class(const std::vector<Isometry>& gens, const Isometry& g,
                         const Isometry& h, int radius) {
    const LetterTable tab(gens);
    std::unordered_map<MatKey, char, MatKeyHash> gkeys;
    conjugate_keys(mat_of(g), tab, radius, [&](const MatKey& k) { gkeys.emplace(k, 1); });
    bool hit = false;
    conjugate_keys(mat_of(h), tab, radius, [&](const MatKey& k) {
        if (!hit && gkeys.count(k)) hit = true;
    });
    return hit;
}

namespace {

bool intervals_interleave(Real a1, Real a2, Real b1, Real b2) {
    const bool in1 = (a1 < b1 && b1 < a2);
    const bool in2 = (a1 < b2 && b2 < a2);
    return in1 != in2;
}

// Mobius image of a boundary point (infinity encoded as +-HUGE_VAL).
Real mobius_boundary(const Mat& m, Real x) {
    if (std::isinf(x)) return (m.c == 0.0) ? kInf : m.a / m.c;
    const Real den = m.c * x + m.d;
    if (den == 0.0) return kInf;
    return (m.a * x + m.b) / den;
}

}  // namespace

bool classes_intersect(const std::vector<Isometry>& gens, const Isometry& g,
                       const Isometry& h, int radius) {
    const LetterTable tab(gens);
    const AxisEndpoints ag = axis_endpoints(g);
    Real g1 = boundary_angle(ag.repelling);
    Real g2 = boundary_angle(ag.attracting);
    if (g1 > g2) std::swap(g1, g2);
    const AxisEndpoints ah = axis_endpoints(h);
    bool crossing = false;
    // Translate h's axis around by the group through its boundary action;
    // translating endpoints stays stable where conjugated matrices would
    // lose the determinant to cancellation.
    auto check = [&](const Mat& w) {
        if (crossing) return;
        Real h1 = boundary_angle(mobius_boundary(w, ah.repelling));
        Real h2 = boundary_angle(mobius_boundary(w, ah.attracting));
        if (h1 > h2) std::swap(h1, h2);
        if (intervals_interleave(g1, g2, h1, h2)) crossing = true;
    };
    check(Mat{1, 0, 0, 1});
    dfs_words(tab, radius, [&](const std::vector<int>&, const Mat& w) {
        if (crossing) return;
        check(w);
    });
    return crossing;
}

Isometry word_isometry(const std::vector<Isometry>& gens, const std::vector<int>& word) {
    Isometry out = Isometry::identity();
    for (int s : word) {
        const size_t idx = static_cast<size_t>(std::abs(s)) - 1;
        if (idx >= gens.size()) throw DomainError("word_isometry: index out of range");
        out = compose(out, s > 0 ? gens[idx] : invert(gens[idx]));
    }
    return out;
}

std::string spectrum_to_csv(const SpectrumResult& spec) {
    std::string out;
    char buf[64];
    for (const auto& e : spec.entries) {
        std::snprintf(buf, sizeof(buf), "%.12g,%d,", e.length, e.multiplicity);
        out += buf;
        for (size_t i = 0; i < e.representative_word.size(); ++i) {
            if (i) out += '.';
            out += std::to_string(e.representative_word[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace hypinvol::halfplane
