#include "krecon/hardness.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "krecon/errors.hpp"

namespace krecon {

void CnfFormula::validate() const {
    if (num_vars < 0) throw InvalidParameter("negative variable count");
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        const auto& cl = clauses[c];
        for (int i = 0; i < 3; ++i) {
            const int var = std::abs(cl[i]);
            if (var < 1 || var > num_vars)
                throw InvalidParameter("clause " + std::to_string(c + 1) + ": literal out of range");
            for (int j = 0; j < i; ++j)
                if (std::abs(cl[j]) == var)
                    throw InvalidParameter("clause " + std::to_string(c + 1) + ": repeated variable");
        }
    }
}

bool CnfFormula::satisfied_by(std::uint64_t assignment) const {
    for (const auto& cl : clauses) {
        bool sat = false;
        for (Literal l : cl) {
            const bool value = (assignment >> (std::abs(l) - 1)) & 1;
            if (value == (l > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::optional<std::uint64_t> CnfFormula::brute_force_sat() const {
    if (num_vars > 30) throw InvalidParameter("brute_force_sat: too many variables");
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << num_vars); ++a)
        if (satisfied_by(a)) return a;
    return std::nullopt;
}

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula phi;
    bool header = false;
    long declared = 0;
    std::vector<Literal> pending;
    int line_no = 0, pending_line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        std::istringstream in(line);
        std::string tok;
        if (!(in >> tok) || tok == "c" || tok[0] == 'c') continue;
        if (tok == "%") break;
        if (tok == "p") {
            std::string fmt;
            long v = -1, c = -1;
            if (header) throw ParseError(line_no, "duplicate header");
            if (!(in >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0 || (in >> tok))
                throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
            header = true;
            phi.num_vars = static_cast<int>(v);
            declared = c;
            continue;
        }
        if (!header) throw ParseError(line_no, "clause before header");
        do {
            long lit = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError(line_no, "bad literal '" + tok + "'");
            if (lit == 0) {
                if (pending.size() != 3)
                    throw ParseError(line_no, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
                const std::array<Literal, 3> cl{pending[0], pending[1], pending[2]};
                if (std::abs(cl[0]) == std::abs(cl[1]) || std::abs(cl[0]) == std::abs(cl[2]) ||
                    std::abs(cl[1]) == std::abs(cl[2]))
                    throw ParseError(line_no, "clause repeats a variable");
                phi.clauses.push_back(cl);
                pending.clear();
                continue;
            }
            if (std::labs(lit) > phi.num_vars) throw ParseError(line_no, "literal exceeds declared variable count");
            if (pending.empty()) pending_line = line_no;
            pending.push_back(static_cast<Literal>(lit));
        } while (in >> tok);
    }
    if (!header) throw ParseError(line_no, "missing header");
    if (!pending.empty()) throw ParseError(pending_line, "unterminated clause");
    if (static_cast<long>(phi.clauses.size()) != declared)
        throw ParseError(line_no, "header declares " + std::to_string(declared) + " clauses, found " +
                                      std::to_string(phi.clauses.size()));
    return phi;
}

std::string serialize_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& cl : phi.clauses) out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
    return out.str();
}

namespace {

struct Layout {
    int k = 0;
    int n_vars = 0;
    Vertex v(int j = 0) const { return j; }
    Vertex u(int i, int j = 0) const { return k + (i - 1) * k + j; }
    Vertex w(int i, int j = 0) const { return k + (k - 3) * k + (i - 1) * k + j; }
    Vertex x(int i, int j = 0) const { return k + 2 * (k - 3) * k + (i - 1) * 2 * k + j; }
    Vertex y(int i, int j = 0) const { return x(i) + k + j; }
    int size() const { return 2 * n_vars * k + k + 2 * (k - 3) * k; }
};

std::string sup(const std::string& base, int i, int j) {
    std::string s = base;
    if (i > 0) s += "_" + std::to_string(i);
    if (j > 0) s += "^" + std::to_string(j);
    return s;
}

// Every k-subset of `pool`, classified by the known edges of h (all pairs inside are known).
void classify_all(const PartialGraph& h, VertexSet pool, int k, std::vector<VertexSet>& conn,
                  std::vector<VertexSet>& disc) {
    std::sort(pool.begin(), pool.end());
    for_each_subset(std::span<const Vertex>(pool), k, [&](std::span<const Vertex> s) {
        (is_connected_subset(h, s) ? conn : disc).emplace_back(s.begin(), s.end());
    });
}

}  // namespace

Vertex GadgetInstance::role(const std::string& name) const {
    for (const auto& [r, id] : roles)
        if (r == name) return id;
    throw InvalidParameter("unknown role " + name);
}

GadgetInstance reduce_3sat(const CnfFormula& phi, int k) {
    if (k < 4) throw UnsupportedInstance("reduce_3sat requires k >= 4");
    phi.validate();
    const Layout L{k, phi.num_vars};
    const int n = L.size();
    const int m = k - 3;

    GadgetInstance out;
    out.roles.reserve(n);
    for (int j = 0; j < k; ++j) out.roles.emplace_back(sup("v", 0, j), L.v(j));
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j < k; ++j) out.roles.emplace_back(sup("u", i, j), L.u(i, j));
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j < k; ++j) out.roles.emplace_back(sup("w", i, j), L.w(i, j));
    for (int i = 1; i <= phi.num_vars; ++i) {
        for (int j = 0; j < k; ++j) out.roles.emplace_back(sup("x", i, j), L.x(i, j));
        for (int j = 0; j < k; ++j) out.roles.emplace_back(sup("y", i, j), L.y(i, j));
    }

    PartialGraph h(n, PairState::NonEdge);
    auto edge = [&](Vertex a, Vertex b) { h.set(a, b, PairState::Edge); };
    for (int j = 1; j < k; ++j) edge(L.v(), L.v(j));
    for (int i = 1; i <= m; ++i) {
        edge(L.u(i), L.v());
        for (int j = 1; j < k; ++j) {
            edge(L.u(i), L.u(i, j));
            edge(L.w(i), L.w(i, j));
        }
        for (int a = 1; a <= phi.num_vars; ++a) {
            edge(L.w(i), L.x(a));
            edge(L.w(i), L.y(a));
        }
    }
    for (int a = 1; a <= phi.num_vars; ++a) {
        for (int j = 1; j < k; ++j) {
            edge(L.x(a), L.x(a, j));
            edge(L.y(a), L.y(a, j));
        }
        for (int b = a + 1; b <= phi.num_vars; ++b) {
            edge(L.x(a), L.x(b));
            edge(L.y(a), L.y(b));
            edge(L.x(a), L.y(b));
            edge(L.y(a), L.x(b));
        }
        h.set(L.x(a), L.v(), PairState::Unknown);
        h.set(L.y(a), L.v(), PairState::Unknown);
    }

    std::vector<VertexSet> conn, disc;
    VertexSet g1, g2;
    for (int j = 0; j < k; ++j) {
        g1.push_back(L.v(j));
        g2.push_back(L.v(j));
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j < k; ++j) {
            g1.push_back(L.u(i, j));
            g2.push_back(L.w(i, j));
        }
    classify_all(h, g1, k, conn, disc);
    classify_all(h, g2, k, conn, disc);
    for (int a = 1; a <= phi.num_vars; ++a) {
        VertexSet gi;
        for (int j = 0; j < k; ++j) {
            gi.push_back(L.x(a, j));
            gi.push_back(L.y(a, j));
        }
        for (int i = 1; i <= m; ++i)
            for (int j = 0; j < k; ++j) gi.push_back(L.u(i, j));
        classify_all(h, gi, k, conn, disc);
    }
    for (int a = 1; a <= phi.num_vars; ++a) {
        VertexSet s{L.x(a), L.y(a), L.v()};
        for (int i = 1; i <= m; ++i) s.push_back(L.u(i));
        disc.push_back(sorted_set(s));
    }
    for (const auto& cl : phi.clauses) {
        VertexSet s{L.v()};
        for (Literal l : cl) s.push_back(l > 0 ? L.x(l) : L.y(-l));
        for (int i = 1; i <= k - 4; ++i) s.push_back(L.u(i));
        conn.push_back(sorted_set(s));
    }
    // G_1, G_2 and G^i share the u blocks; identical sets carry identical classes.
    auto dedup = [](std::vector<VertexSet>& f) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    };
    dedup(conn);
    dedup(disc);
    out.inst = KSetInstance::partial(n, k, conn, disc);
    out.h = std::move(h);
    return out;
}

std::string serialize_roles(const GadgetInstance& gadget) {
    std::string out;
    for (const auto& [name, id] : gadget.roles) out += "role " + name + " " + std::to_string(id) + "\n";
    return out;
}

bool gadget_claims_hold(const GadgetInstance& gadget, const Graph& g, int num_vars, int k) {
    const Layout L{k, num_vars};
    if (g.n() != L.size() || gadget.inst.n() != L.size()) throw InvalidParameter("gadget size mismatch");
    for (int i = 1; i <= k - 3; ++i) {
        if (!g.has_edge(L.u(i), L.v())) return false;
        if (g.has_edge(L.w(i), L.v())) return false;
        for (int a = 1; a <= num_vars; ++a)
            if (g.has_edge(L.x(a), L.u(i)) || g.has_edge(L.y(a), L.u(i))) return false;
    }
    for (int a = 1; a <= num_vars; ++a)
        if (g.has_edge(L.x(a), L.v()) && g.has_edge(L.y(a), L.v())) return false;
    return true;
}

std::uint64_t assignment_from_witness(const GadgetInstance& gadget, const Graph& g, int num_vars) {
    if (num_vars > 64) throw InvalidParameter("too many variables");
    std::uint64_t a = 0;
    for (int i = 1; i <= num_vars; ++i)
        if (g.has_edge(gadget.role(sup("x", i, 0)), gadget.role("v"))) a |= std::uint64_t{1} << (i - 1);
    return a;
}

namespace {

// Decision-level sets, one bit per level.
class LevelSet {
public:
    explicit LevelSet(std::size_t words = 0) : w_(words, 0) {}
    void add(int level) { w_[level >> 6] |= std::uint64_t{1} << (level & 63); }
    void remove(int level) { w_[level >> 6] &= ~(std::uint64_t{1} << (level & 63)); }
    void merge(const LevelSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }
    int max() const {
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(w_[i]));
        return -1;
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

private:
    std::vector<std::uint64_t> w_;
};

// Vertices reachable from `start` through the adjacency masks, ignoring the pair (skip_i, skip_j).
std::uint32_t reach(const std::uint32_t* adj, int start, int skip_i = -1, int skip_j = -1) {
    std::uint32_t seen = std::uint32_t{1} << start, frontier = seen;
    while (frontier) {
        const int a = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint32_t nb = adj[a];
        if (a == skip_i) nb &= ~(std::uint32_t{1} << skip_j);
        if (a == skip_j) nb &= ~(std::uint32_t{1} << skip_i);
        nb &= ~seen;
        seen |= nb;
        frontier |= nb;
    }
    return seen;
}

// Search over the pairs of the listed sets. Every assignment carries the set of decision levels
// it depends on; a conflict jumps back to its highest level and flips that decision.
class Solver {
public:
    Solver(const KSetInstance& inst, std::uint64_t budget) : inst_(inst), budget_(budget) {}

    SolveResult run();

private:
    struct Constraint {
        std::vector<int> pairs;  // local i*k + j, -1 on the diagonal
        bool connected;
    };
    struct Ref {
        int c;
        std::uint8_t i, j;
    };

    void build();
    void add_constraint(const VertexSet& s, bool connected);
    void assign(int p, std::int8_t value, LevelSet reason);
    void undo_to(int level);
    bool propagate();  // false on conflict, with conflict_ filled
    bool revisit(int c);
    void entail(int c) {
        entailed_[c] = level_;
        entail_trail_.push_back(c);
    }
    int choose() const;

    std::uint32_t* known(int c) { return &known_[static_cast<std::size_t>(c) * k_]; }
    std::uint32_t* allowed(int c) { return &allowed_[static_cast<std::size_t>(c) * k_]; }
    const LevelSet& why(int c, int i, int j) const { return reason_[cons_[c].pairs[i * k_ + j]]; }

    const KSetInstance& inst_;
    std::uint64_t budget_;
    int k_ = 0;
    std::uint32_t full_ = 0;
    std::vector<int> pair_index_;
    std::vector<Edge> pairs_;
    std::vector<Constraint> cons_;
    std::vector<std::uint32_t> known_, allowed_;  // per constraint, per local vertex
    std::vector<std::vector<Ref>> pair_cons_;
    std::vector<std::int8_t> val_;  // -1 unassigned, 0 non-edge, 1 edge
    std::vector<LevelSet> reason_;
    std::vector<int> undecided_;
    std::vector<int> entailed_;  // level at which the set became satisfied for good, -1 if not
    std::vector<int> trail_, entail_trail_;
    std::vector<std::size_t> level_start_, entail_start_;
    std::vector<int> decision_;  // pair decided at each level (index 0 unused)
    std::vector<int> queue_;
    std::vector<char> queued_;
    std::size_t words_ = 1;
    int level_ = 0;
    LevelSet conflict_;
};

void Solver::add_constraint(const VertexSet& s, bool connected) {
    Constraint c{std::vector<int>(static_cast<std::size_t>(k_) * k_, -1), connected};
    const int id = static_cast<int>(cons_.size());
    for (int i = 0; i < k_; ++i)
        for (int j = i + 1; j < k_; ++j) {
            const std::size_t slot = static_cast<std::size_t>(s[i]) * inst_.n() + s[j];
            if (pair_index_[slot] < 0) {
                pair_index_[slot] = static_cast<int>(pairs_.size());
                pairs_.push_back({s[i], s[j]});
                pair_cons_.emplace_back();
            }
            const int p = pair_index_[slot];
            c.pairs[i * k_ + j] = c.pairs[j * k_ + i] = p;
            pair_cons_[p].push_back({id, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
        }
    cons_.push_back(std::move(c));
}

void Solver::build() {
    k_ = inst_.k();
    full_ = k_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k_) - 1;
    pair_index_.assign(static_cast<std::size_t>(inst_.n()) * inst_.n(), -1);
    for (const VertexSet& s : inst_.connected_sets()) add_constraint(s, true);
    for (const VertexSet& s : inst_.disconnected_sets()) add_constraint(s, false);
    const std::size_t P = pairs_.size(), C = cons_.size();
    words_ = (P + 2) / 64 + 1;
    val_.assign(P, -1);
    reason_.assign(P, LevelSet(words_));
    known_.assign(C * k_, 0);
    allowed_.resize(C * k_);
    for (std::size_t c = 0; c < C; ++c)
        for (int a = 0; a < k_; ++a) allowed_[c * k_ + a] = full_ & ~(std::uint32_t{1} << a);
    undecided_.assign(C, k_ * (k_ - 1) / 2);
    entailed_.assign(C, -1);
    queued_.assign(C, 0);
    conflict_ = LevelSet(words_);
    level_start_.assign(1, 0);
    entail_start_.assign(1, 0);
    decision_.assign(1, -1);
}

void Solver::assign(int p, std::int8_t value, LevelSet reason) {
    val_[p] = value;
    reason_[p] = std::move(reason);
    trail_.push_back(p);
    for (const Ref& r : pair_cons_[p]) {
        --undecided_[r.c];
        std::uint32_t* kn = known(r.c);
        std::uint32_t* al = allowed(r.c);
        if (value == 1) {
            kn[r.i] |= std::uint32_t{1} << r.j;
            kn[r.j] |= std::uint32_t{1} << r.i;
        } else {
            al[r.i] &= ~(std::uint32_t{1} << r.j);
            al[r.j] &= ~(std::uint32_t{1} << r.i);
        }
        if (entailed_[r.c] >= 0) continue;
        // Edges can only break disconnected sets, non-edges only connected ones; the other
        // polarity can at most settle the set.
        if (cons_[r.c].connected == (value == 0)) {
            if (!queued_[r.c]) {
                queued_[r.c] = 1;
                queue_.push_back(r.c);
            }
        } else if (value == 1 ? reach(kn, 0) == full_ : reach(al, 0) != full_) {
            entail(r.c);
        }
    }
}

void Solver::undo_to(int level) {
    const std::size_t t = level_start_[level + 1];
    while (trail_.size() > t) {
        const int p = trail_.back();
        trail_.pop_back();
        for (const Ref& r : pair_cons_[p]) {
            ++undecided_[r.c];
            if (val_[p] == 1) {
                known(r.c)[r.i] &= ~(std::uint32_t{1} << r.j);
                known(r.c)[r.j] &= ~(std::uint32_t{1} << r.i);
            } else {
                allowed(r.c)[r.i] |= std::uint32_t{1} << r.j;
                allowed(r.c)[r.j] |= std::uint32_t{1} << r.i;
            }
        }
        val_[p] = -1;
    }
    const std::size_t e = entail_start_[level + 1];
    while (entail_trail_.size() > e) {
        entailed_[entail_trail_.back()] = -1;
        entail_trail_.pop_back();
    }
    level_start_.resize(level + 1);
    entail_start_.resize(level + 1);
    decision_.resize(level + 1);
    level_ = level;
    for (int c : queue_) queued_[c] = 0;
    queue_.clear();
}

bool Solver::revisit(int ci) {
    const Constraint& c = cons_[ci];
    std::uint32_t* kn = known(ci);
    std::uint32_t* al = allowed(ci);
    auto undecided = [&](int i, int j) { return (al[i] >> j & 1) && !(kn[i] >> j & 1); };
    // Reasons of the pairs leaving `side`, all of them non-edges, except the pair (skip_i, skip_j).
    auto cut_reason = [&](std::uint32_t side, LevelSet& out, int skip_i, int skip_j) {
        for (int a = 0; a < k_; ++a) {
            if (!(side >> a & 1)) continue;
            for (int b = 0; b < k_; ++b)
                if (!(side >> b & 1) && !(a == skip_i && b == skip_j) && !(a == skip_j && b == skip_i))
                    out.merge(why(ci, a, b));
        }
    };
    auto edge_reasons = [&](LevelSet& out) {
        for (int i = 0; i < k_; ++i)
            for (std::uint32_t m = kn[i] >> (i + 1); m; m &= m - 1) out.merge(why(ci, i, i + 1 + std::countr_zero(m)));
    };
    if (c.connected) {
        const std::uint32_t side = reach(al, 0);
        if (side != full_) {
            conflict_.clear();
            cut_reason(side, conflict_, -1, -1);
            return false;
        }
        if (reach(kn, 0) == full_) {
            entail(ci);
            return true;
        }
        for (int i = 0; i < k_; ++i)
            for (int j = i + 1; j < k_; ++j) {
                if (!undecided(i, j)) continue;
                const std::uint32_t part = reach(al, i, i, j);
                if (part >> j & 1) continue;
                // bridge of the allowed graph
                LevelSet r(words_);
                cut_reason(part, r, i, j);
                assign(c.pairs[i * k_ + j], 1, std::move(r));
            }
        return true;
    }
    const std::uint32_t first = reach(kn, 0);
    if (first == full_) {
        conflict_.clear();
        edge_reasons(conflict_);
        return false;
    }
    if (reach(al, 0) != full_) {
        entail(ci);
        return true;
    }
    // With exactly two known components, every undecided pair across them is forced off.
    const std::uint32_t rest = full_ & ~first;
    if (reach(kn, std::countr_zero(rest)) != rest) return true;
    LevelSet r(words_);
    edge_reasons(r);
    for (int i = 0; i < k_; ++i)
        for (int j = i + 1; j < k_; ++j)
            if (undecided(i, j) && ((first >> i & 1) != (first >> j & 1))) assign(c.pairs[i * k_ + j], 0, r);
    return true;
}

bool Solver::propagate() {
    while (!queue_.empty()) {
        const int c = queue_.back();
        queue_.pop_back();
        queued_[c] = 0;
        if (entailed_[c] >= 0) continue;
        if (!revisit(c)) {
            for (int q : queue_) queued_[q] = 0;
            queue_.clear();
            return false;
        }
    }
    return true;
}

// Most constrained first: an undecided pair of an unsettled set with the fewest undecided pairs.
int Solver::choose() const {
    int best = -1, best_count = 0;
    for (std::size_t c = 0; c < cons_.size(); ++c) {
        const int u = undecided_[c];
        if (u == 0 || entailed_[c] >= 0) continue;
        if (best < 0 || u < best_count) {
            best = static_cast<int>(c);
            best_count = u;
            if (u == 1) break;
        }
    }
    if (best >= 0)
        for (int p : cons_[best].pairs)
            if (p >= 0 && val_[p] < 0) return p;
    for (std::size_t p = 0; p < pairs_.size(); ++p)
        if (val_[p] < 0) return static_cast<int>(p);
    return -1;
}

SolveResult Solver::run() {
    SolveResult result;
    build();
    for (std::size_t c = 0; c < cons_.size(); ++c) {
        queued_[c] = 1;
        queue_.push_back(static_cast<int>(c));
    }
    bool ok = propagate();
    while (true) {
        while (!ok) {
            const int L = conflict_.max();
            if (L <= 0) {
                result.status = SolveResult::Status::Unsatisfiable;
                return result;
            }
            const int p = decision_[L];
            const auto flipped = static_cast<std::int8_t>(1 - val_[p]);
            LevelSet r = conflict_;
            r.remove(L);
            undo_to(L - 1);
            assign(p, flipped, std::move(r));
            ok = propagate();
        }
        const int p = choose();
        if (p < 0) break;
        if (result.nodes >= budget_) {
            result.status = SolveResult::Status::BudgetExceeded;
            return result;
        }
        ++result.nodes;
        ++level_;
        level_start_.push_back(trail_.size());
        entail_start_.push_back(entail_trail_.size());
        decision_.push_back(p);
        LevelSet r(words_);
        r.add(level_);
        assign(p, 0, std::move(r));
        ok = propagate();
    }
    Graph g(inst_.n());
    for (std::size_t p = 0; p < pairs_.size(); ++p)
        if (val_[p] == 1) g.add_edge(pairs_[p].first, pairs_[p].second);
    if (!is_consistent(g, inst_)) throw ContractError("solve_partial: search produced an inconsistent graph");
    result.status = SolveResult::Status::Found;
    result.graph = std::move(g);
    return result;
}

}  // namespace

SolveResult solve_partial(const KSetInstance& inst, std::uint64_t budget) {
    if (inst.k() > 32) throw InvalidParameter("solve_partial: k too large");
    return Solver(inst, budget).run();
}

}  // namespace krecon
