#include "blockcheck/permgroup.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "blockcheck/errors.hpp"

namespace blockcheck {

namespace config {
namespace {
std::atomic<unsigned long> g_max_order{20000};
}
unsigned long max_group_order() { return g_max_order.load(); }
void set_max_group_order(unsigned long cap) { g_max_order.store(cap); }
}  // namespace config

// ---------------------------------------------------------------------------
// Stabilizer chain

namespace {
// Explicit transversal tables are kept while orbit*degree stays small.
constexpr long kTransversalTableLimit = 4'000'000;
}  // namespace

void PermGroup::Level::recompute_orbit(int degree) {
    orbit.clear();
    sv_gen.assign(degree, -1);
    sv_prev.assign(degree, -2);
    orbit.push_back(base_point);
    sv_prev[base_point] = -1;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
        int pt = orbit[h];
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int img = gens[gi][pt];
            if (sv_prev[img] == -2) {
                sv_prev[img] = pt;
                sv_gen[img] = static_cast<int>(gi);
                orbit.push_back(img);
            }
        }
    }
}

Permutation PermGroup::Level::transversal(int pt, int degree) const {
    // walk the Schreier vector back to the base point
    std::vector<int> path;  // generator indices, from pt back to base
    int cur = pt;
    while (sv_prev[cur] != -1) {
        path.push_back(sv_gen[cur]);
        cur = sv_prev[cur];
    }
    Permutation u(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * gens[*it];
    return u;
}

PermGroup::PermGroup() : degree_(1), order_(1) {}

PermGroup PermGroup::trivial(int degree) {
    PermGroup g;
    g.degree_ = degree;
    return g;
}

PermGroup::PermGroup(std::vector<Permutation> generators) {
    if (generators.empty()) throw input_error("schreier_sims: empty generator list");
    degree_ = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != degree_) throw input_error("schreier_sims: inconsistent degrees");
    generators_ = std::move(generators);
    build();
}

void PermGroup::build() {
    levels_.clear();
    std::vector<Permutation> work;
    for (const auto& g : generators_)
        if (!g.is_identity()) work.push_back(g);
    if (work.empty()) {
        order_ = 1;
        return;
    }

    // Generators installed at level j fix the base prefix b_0..b_{j-1}, so
    // they are strong generators for every level <= j as well: each level's
    // working generator list is the union of the installed lists from that
    // level downward.
    std::vector<std::vector<Permutation>> installed;
    auto rebuild_levels = [&] {
        std::vector<Permutation> acc;
        for (std::size_t k = levels_.size(); k-- > 0;) {
            for (const auto& g : installed[k]) acc.push_back(g);
            levels_[k].gens = acc;
            levels_[k].recompute_orbit(degree_);
        }
    };

    int b0 = degree_;
    for (const auto& g : work) b0 = std::min(b0, g.first_moved_point());
    levels_.emplace_back();
    levels_[0].base_point = b0;
    installed.push_back(work);
    rebuild_levels();

    // Verify the stabilizer condition at every level; whenever a Schreier
    // generator fails to sift, install the remainder and start over.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < levels_.size() && !changed; ++k) {
            Level& L = levels_[k];
            // incremental transversal table in BFS order
            bool table_ok =
                static_cast<long>(L.orbit.size()) * degree_ <= kTransversalTableLimit;
            std::vector<Permutation> trans;
            std::vector<int> pos(degree_, -1);
            if (table_ok) {
                trans.reserve(L.orbit.size());
                for (std::size_t h = 0; h < L.orbit.size(); ++h) {
                    int pt = L.orbit[h];
                    pos[pt] = static_cast<int>(h);
                    if (L.sv_prev[pt] == -1)
                        trans.push_back(Permutation(degree_));
                    else
                        trans.push_back(trans[pos[L.sv_prev[pt]]] * L.gens[L.sv_gen[pt]]);
                }
            }
            auto transversal_of = [&](int pt) {
                return table_ok ? trans[pos[pt]] : L.transversal(pt, degree_);
            };
            for (int pt : L.orbit) {
                Permutation u = transversal_of(pt);
                for (const auto& s : L.gens) {
                    Permutation u2 = transversal_of(s[pt]);
                    Permutation schreier = u * s * u2.inverse();
                    if (schreier.is_identity()) continue;
                    auto [rem, lvl] = strip(schreier, k + 1);
                    if (rem.is_identity()) continue;
                    if (lvl == levels_.size()) {
                        levels_.emplace_back();
                        levels_.back().base_point = rem.first_moved_point();
                        installed.emplace_back();
                    }
                    installed[lvl].push_back(rem);
                    rebuild_levels();
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        }
    }

    base_.clear();
    strong_generators_.clear();
    order_ = 1;
    std::set<Permutation> sg;
    for (const auto& L : levels_) {
        base_.push_back(L.base_point);
        order_ *= static_cast<unsigned long>(L.orbit.size());
        for (const auto& g : L.gens) sg.insert(g);
    }
    strong_generators_.assign(sg.begin(), sg.end());
}

std::pair<Permutation, std::size_t> PermGroup::strip(const Permutation& g,
                                                     std::size_t from) const {
    Permutation h = g;
    for (std::size_t k = from; k < levels_.size(); ++k) {
        const Level& L = levels_[k];
        int img = h[L.base_point];
        if (img == L.base_point) continue;
        if (!L.in_orbit(img)) return {h, k};
        h = h * L.transversal(img, degree_).inverse();
    }
    return {h, levels_.size()};
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [rem, lvl] = strip(g, 0);
    return rem.is_identity();
}

unsigned long PermGroup::order_ulong() const {
    if (!order_.fits_ulong_p())
        throw capacity_error("group order exceeds machine range");
    return order_.get_ui();
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
                return false;
    return true;
}

bool PermGroup::is_p_group(long p) const {
    mpz_class n = order_;
    while (n % p == 0) n /= p;
    return n == 1;
}

struct PermGroup::ElementCache {
    std::once_flag flag;
    std::vector<Permutation> elements;
};

const std::vector<Permutation>& PermGroup::elements() const {
    if (!cache_) const_cast<PermGroup*>(this)->cache_ = std::make_shared<ElementCache>();
    std::call_once(cache_->flag, [this] {
        if (order_ > config::max_group_order())
            throw capacity_error("element enumeration: group order " + order_.get_str() +
                                 " exceeds BLOCKCHECK_MAX_ORDER");
        std::unordered_set<Permutation, PermHash> seen;
        std::vector<Permutation> frontier;
        Permutation id(degree_);
        seen.insert(id);
        frontier.push_back(id);
        while (!frontier.empty()) {
            Permutation x = std::move(frontier.back());
            frontier.pop_back();
            for (const auto& g : generators_) {
                Permutation y = x * g;
                if (seen.insert(y).second) frontier.push_back(y);
            }
        }
        cache_->elements.assign(seen.begin(), seen.end());
        std::sort(cache_->elements.begin(), cache_->elements.end());
    });
    return cache_->elements;
}

// ---------------------------------------------------------------------------
// Conjugacy classes

int ConjugacyClasses::class_of(const Permutation& g) const {
    auto it = element_class_.find(g);
    if (it == element_class_.end()) throw input_error("class_of: element not in group");
    return it->second;
}

ConjugacyClasses conjugacy_classes(const PermGroup& G) {
    const auto& els = G.elements();
    const auto& gens = G.generators();
    ConjugacyClasses cc;
    cc.element_class_.reserve(els.size() * 2);

    std::vector<std::vector<Permutation>> members;
    std::vector<Permutation> reps;
    for (const auto& x : els) {
        if (cc.element_class_.count(x)) continue;
        // x is the lex-least member of its class (els is sorted)
        int id = static_cast<int>(reps.size());
        std::vector<Permutation> orb{x};
        cc.element_class_.emplace(x, id);
        for (std::size_t h = 0; h < orb.size(); ++h) {
            Permutation y = orb[h];
            for (const auto& g : gens) {
                Permutation z = y.conjugated_by(g);
                if (cc.element_class_.emplace(z, id).second) orb.push_back(z);
            }
        }
        reps.push_back(x);
        members.push_back(std::move(orb));
    }

    // sort classes by (element order, class size, representative)
    int k = static_cast<int>(reps.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long> ords(k);
    for (int i = 0; i < k; ++i) ords[i] = reps[i].order();
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (ords[a] != ords[b]) return ords[a] < ords[b];
        if (members[a].size() != members[b].size()) return members[a].size() < members[b].size();
        return reps[a] < reps[b];
    });

    cc.representatives_.resize(k);
    cc.sizes_.resize(k);
    cc.rep_orders_.resize(k);
    cc.members_.resize(k);
    std::vector<int> old_to_new(k);
    for (int i = 0; i < k; ++i) old_to_new[perm[i]] = i;
    for (int i = 0; i < k; ++i) {
        cc.representatives_[i] = reps[perm[i]];
        cc.sizes_[i] = members[perm[i]].size();
        cc.rep_orders_[i] = ords[perm[i]];
        cc.members_[i] = std::move(members[perm[i]]);
        std::sort(cc.members_[i].begin(), cc.members_[i].end());
    }
    for (auto& kv : cc.element_class_) kv.second = old_to_new[kv.second];

    unsigned long total = 0;
    for (auto s : cc.sizes_) total += s;
    if (total != G.order_ulong())
        throw internal_error("conjugacy classes: sizes do not sum to group order");

    cc.exponent_ = 1;
    for (long o : cc.rep_orders_) cc.exponent_ = std::lcm(cc.exponent_, o);
    cc.inverse_map_.resize(k);
    for (int i = 0; i < k; ++i)
        cc.inverse_map_[i] = cc.class_of(cc.representatives_[i].inverse());
    for (int i = 0; i < k; ++i)
        if (cc.inverse_map_[cc.inverse_map_[i]] != i)
            throw internal_error("conjugacy classes: inverse map is not an involution");
    for (long p : prime_divisors(mpz_class(cc.exponent_))) {
        std::vector<int> pm(k);
        for (int i = 0; i < k; ++i) pm[i] = cc.class_of(cc.representatives_[i].power(p));
        cc.power_maps_[p] = std::move(pm);
    }
    return cc;
}

// ---------------------------------------------------------------------------
// Subgroup machinery

PermGroup subgroup_from_elements(int degree, const std::vector<Permutation>& elems) {
    std::vector<Permutation> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Permutation> gens;
    PermGroup H = PermGroup::trivial(degree);
    for (const auto& e : sorted) {
        if (e.is_identity() || H.contains(e)) continue;
        gens.push_back(e);
        H = PermGroup(gens);
    }
    return H;
}

PermGroup centralizer(const PermGroup& G, const Permutation& x) {
    if (!G.contains(x)) throw input_error("centralizer: element not in group");
    std::vector<Permutation> kept;
    for (const auto& g : G.elements())
        if (g * x == x * g) kept.push_back(g);
    return subgroup_from_elements(G.degree(), kept);
}

bool is_subgroup(const PermGroup& G, const PermGroup& H) {
    if (G.degree() != H.degree()) return false;
    for (const auto& h : H.generators())
        if (!G.contains(h)) return false;
    return true;
}

bool is_normal(const PermGroup& G, const PermGroup& N) {
    for (const auto& g : G.generators())
        for (const auto& n : N.generators())
            if (!N.contains(n.conjugated_by(g))) return false;
    return true;
}

bool subgroups_equal(const PermGroup& A, const PermGroup& B) {
    return A.order() == B.order() && is_subgroup(A, B);
}

bool subgroups_conjugate(const PermGroup& G, const PermGroup& A, const PermGroup& B) {
    if (A.order() != B.order()) return false;
    if (subgroups_equal(A, B)) return true;
    for (const auto& g : G.elements()) {
        bool ok = true;
        for (const auto& a : A.generators())
            if (!B.contains(a.conjugated_by(g))) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
    if (!is_subgroup(G, H)) throw input_error("normalizer: H is not a subgroup of G");
    std::vector<Permutation> kept;
    for (const auto& g : G.elements()) {
        bool ok = true;
        for (const auto& h : H.generators())
            if (!H.contains(h.conjugated_by(g))) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(g);
    }
    return subgroup_from_elements(G.degree(), kept);
}

long p_valuation(const mpz_class& n, long p) {
    mpz_class m = n;
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

std::vector<long> prime_divisors(const mpz_class& n) {
    if (!n.fits_ulong_p()) throw capacity_error("prime_divisors: value out of range");
    unsigned long m = n.get_ui();
    std::vector<long> ps;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ps.push_back(static_cast<long>(p));
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(static_cast<long>(m));
    return ps;
}

namespace {
bool is_prime_power(long n, long p) {
    while (n % p == 0) n /= p;
    return n == 1;
}
}  // namespace

PermGroup sylow_subgroup(const PermGroup& G, long p) {
    long v = p_valuation(G.order(), p);
    PermGroup P = PermGroup::trivial(G.degree());
    if (v == 0) return P;
    mpz_class target = 1;
    for (long i = 0; i < v; ++i) target *= p;
    std::vector<Permutation> gens;
    while (P.order() < target) {
        PermGroup N = P.is_trivial() ? G : normalizer(G, P);
        bool grew = false;
        for (const auto& x : N.elements()) {
            long o = x.order();
            if (o == 1 || !is_prime_power(o, p)) continue;
            if (P.contains(x)) continue;
            gens.push_back(x);
            P = PermGroup(gens);
            grew = true;
            break;
        }
        if (!grew) throw internal_error("sylow_subgroup: no extending p-element found");
    }
    return P;
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seeds) {
    std::vector<Permutation> gens;
    for (const auto& s : seeds)
        if (!s.is_identity()) gens.push_back(s);
    if (gens.empty()) return PermGroup::trivial(G.degree());
    PermGroup H(gens);
    std::vector<Permutation> work = gens;
    while (!work.empty()) {
        Permutation s = std::move(work.back());
        work.pop_back();
        for (const auto& g : G.generators()) {
            Permutation c = s.conjugated_by(g);
            if (!H.contains(c)) {
                gens.push_back(c);
                H = PermGroup(gens);
                work.push_back(c);
            }
        }
    }
    return H;
}

PermGroup derived_subgroup(const PermGroup& G) {
    std::vector<Permutation> seeds;
    const auto& gs = G.generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            seeds.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
    return normal_closure(G, seeds);
}

std::vector<SubgroupChainEntry> derived_subgroup_chain(const PermGroup& H, int n_max) {
    std::vector<SubgroupChainEntry> chain;
    chain.push_back({H, "derived(0)"});
    for (int n = 1; n <= n_max; ++n) {
        PermGroup next = derived_subgroup(chain.back().subgroup);
        if (subgroups_equal(next, chain.back().subgroup)) break;
        chain.push_back({next, "derived(" + std::to_string(n) + ")"});
        if (next.is_trivial()) break;
    }
    return chain;
}

bool is_solvable(const PermGroup& G) {
    PermGroup cur = G;
    while (!cur.is_trivial()) {
        PermGroup next = derived_subgroup(cur);
        if (next.order() == cur.order()) return false;
        cur = next;
    }
    return true;
}

bool is_nilpotent(const PermGroup& G) {
    for (long p : prime_divisors(G.order()))
        if (!is_normal(G, sylow_subgroup(G, p))) return false;
    return true;
}

std::vector<unsigned long> abelian_invariants(const PermGroup& G) {
    if (!G.is_abelian()) throw input_error("abelian_invariants: group is not abelian");
    std::vector<unsigned long> inv;
    const auto& els = G.elements();
    for (long p : prime_divisors(G.order())) {
        long vp = p_valuation(G.order(), p);
        // s[i] = log_p #{x : x^{p^i} = 1} = sum_j min(lambda_j, i)
        std::vector<long> s{0};
        for (long i = 1; i <= vp; ++i) {
            long long pi = 1;
            for (long t = 0; t < i; ++t) pi *= p;
            long cnt = 0;
            for (const auto& x : els)
                if (x.power(pi).is_identity()) ++cnt;
            long si = 0;
            long c = cnt;
            while (c % p == 0) {
                c /= p;
                ++si;
            }
            if (c != 1) throw internal_error("abelian_invariants: count not a p-power");
            s.push_back(si);
            if (si == vp) {
                // remaining counts stay maximal
                while (static_cast<long>(s.size()) <= vp) s.push_back(vp);
                break;
            }
        }
        // m[i] = #parts >= i
        std::vector<long> m;
        for (std::size_t i = 1; i < s.size(); ++i) m.push_back(s[i] - s[i - 1]);
        for (long j = 1; j <= (m.empty() ? 0 : m[0]); ++j) {
            long lambda = 0;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] >= j) lambda = static_cast<long>(i + 1);
            unsigned long q = 1;
            for (long t = 0; t < lambda; ++t) q *= p;
            inv.push_back(q);
        }
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

bool are_conjugate_in(const PermGroup& H, const Permutation& x, const Permutation& y) {
    if (x.degree() != y.degree() || x.degree() != H.degree())
        throw input_error("are_conjugate_in: degree mismatch");
    if (x == y) return true;
    std::unordered_set<Permutation, PermHash> orb{x};
    std::vector<Permutation> frontier{x};
    while (!frontier.empty()) {
        Permutation z = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : H.generators()) {
            Permutation w = z.conjugated_by(g);
            if (w == y) return true;
            if (orb.insert(w).second) frontier.push_back(w);
        }
    }
    return false;
}

RealElements real_elements_under(const PermGroup& H, const PermGroup& X) {
    RealElements out;
    for (const auto& x : X.elements()) {
        if (are_conjugate_in(H, x, x.inverse())) {
            ++out.count;
            out.elements.push_back(x);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quotients

Quotient quotient_group(const PermGroup& G, const PermGroup& N) {
    if (!is_subgroup(G, N)) throw input_error("quotient_group: N is not a subgroup of G");
    if (!is_normal(G, N)) throw input_error("quotient_group: N is not normal in G");
    mpz_class index_z = G.order() / N.order();
    if (index_z > 10000) throw capacity_error("quotient_group: index exceeds 10^4");
    int index = static_cast<int>(index_z.get_ui());

    Quotient q;
    q.kernel_ = N;
    const auto& gels = G.elements();
    const auto& nels = N.elements();
    q.element_coset_.reserve(gels.size() * 2);
    for (const auto& g : gels) {
        if (q.element_coset_.count(g)) continue;
        int id = static_cast<int>(q.coset_keys_.size());
        q.coset_keys_.push_back(g);  // lex-least member: gels is sorted
        for (const auto& n : nels) q.element_coset_.emplace(n * g, id);
    }
    if (static_cast<int>(q.coset_keys_.size()) != index)
        throw internal_error("quotient_group: coset count mismatch");

    std::vector<Permutation> qgens;
    for (const auto& g : G.generators()) qgens.push_back(q.image(g));
    q.group_ = PermGroup(qgens);
    if (q.group_.order() != index_z)
        throw internal_error("quotient_group: quotient order mismatch");
    for (const auto& n : N.generators())
        if (!q.image(n).is_identity())
            throw internal_error("quotient_group: kernel not mapped to identity");
    return q;
}

Permutation Quotient::image(const Permutation& g) const {
    std::vector<int> img(coset_keys_.size());
    for (std::size_t i = 0; i < coset_keys_.size(); ++i)
        img[i] = element_coset_.at(coset_keys_[i] * g);
    return Permutation(std::move(img));
}

PermGroup Quotient::image_subgroup(const PermGroup& H) const {
    std::vector<Permutation> gens;
    for (const auto& h : H.generators()) gens.push_back(image(h));
    if (gens.empty()) return PermGroup::trivial(index());
    return PermGroup(gens);
}

PermGroup Quotient::preimage(const PermGroup& S) const {
    if (!is_subgroup(group_, S)) throw input_error("preimage: not a subgroup of the quotient");
    std::vector<Permutation> gens = kernel_.generators();
    for (const auto& s : S.elements()) gens.push_back(coset_keys_[s[0]]);
    return subgroup_from_elements(kernel_.degree(), gens);
}

// ---------------------------------------------------------------------------
// Cores

namespace {
template <typename ElemPred, typename GroupPred>
PermGroup pi_core(const PermGroup& G, ElemPred elem_ok, GroupPred group_ok) {
    ConjugacyClasses cls = conjugacy_classes(G);
    std::vector<Permutation> gens;
    for (int i = 0; i < cls.count(); ++i) {
        if (!elem_ok(cls.rep_orders()[i])) continue;
        if (cls.rep_orders()[i] == 1) continue;
        PermGroup closure = normal_closure(G, {cls.representatives()[i]});
        if (group_ok(closure.order()))
            for (const auto& m : cls.class_elements(i)) gens.push_back(m);
    }
    return subgroup_from_elements(G.degree(), gens);
}
}  // namespace

StructuralCores structural_cores(const PermGroup& G, long p) {
    auto p_prime_elem = [p](long o) { return o % p != 0; };
    auto p_prime_group = [p](const mpz_class& o) { return o % p != 0; };
    auto p_elem = [p](long o) { return is_prime_power(o, p); };
    auto p_group = [p](const mpz_class& o) {
        mpz_class m = o;
        while (m % p == 0) m /= p;
        return m == 1;
    };

    StructuralCores out;
    out.o_p_prime = pi_core(G, p_prime_elem, p_prime_group);
    {
        Quotient q1 = quotient_group(G, out.o_p_prime);
        PermGroup opq = pi_core(q1.group(), p_elem, p_group);
        out.o_p_prime_p = q1.preimage(opq);
    }
    {
        Quotient q2 = quotient_group(G, out.o_p_prime_p);
        PermGroup oppq = pi_core(q2.group(), p_prime_elem, p_prime_group);
        out.o_p_prime_p_prime = q2.preimage(oppq);
    }
    if (!is_normal(G, out.o_p_prime) || !is_normal(G, out.o_p_prime_p) ||
        !is_normal(G, out.o_p_prime_p_prime))
        throw internal_error("structural_cores: computed core not normal");
    return out;
}

PermGroup real_core(const PermGroup& G) {
    ConjugacyClasses cls = conjugacy_classes(G);
    std::vector<Permutation> gens;
    for (int i = 0; i < cls.count(); ++i) {
        if (cls.rep_orders()[i] % 2 == 0) continue;
        if (cls.inverse_map()[i] != i) continue;
        if (cls.rep_orders()[i] == 1) continue;
        for (const auto& m : cls.class_elements(i)) gens.push_back(m);
    }
    return subgroup_from_elements(G.degree(), gens);
}

}  // namespace blockcheck
