#include "semi2x2/catalog.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace semi2x2 {

CharRegime regime_for(const Ring& ring) {
    return ring.characteristic() == 2 ? CharRegime::Two : CharRegime::ZeroOrOdd;
}

/******** descriptors ********/

GeneratorDescriptor GeneratorDescriptor::bracket(int l, int r) {
    if (l >= r) throw std::invalid_argument("GeneratorDescriptor::bracket: need l < r");
    return {Kind::Bracket, {l, r}};
}

GeneratorDescriptor GeneratorDescriptor::xi(std::vector<int> slots) {
    if (slots.size() < 4 || slots.size() % 2 != 0)
        throw std::invalid_argument("GeneratorDescriptor::xi: need an even slot count >= 4");
    if (!std::is_sorted(slots.begin(), slots.end()) ||
        std::adjacent_find(slots.begin(), slots.end()) != slots.end())
        throw std::invalid_argument("GeneratorDescriptor::xi: slots must be strictly increasing");
    return {Kind::Xi, std::move(slots)};
}

MultiDegree GeneratorDescriptor::multidegree(int m) const {
    MultiDegree d(m, 0);
    for (int k : slots) {
        if (k < 1 || k > m) throw std::invalid_argument("GeneratorDescriptor: slot beyond m");
        d[k - 1] += kind == Kind::Det ? 2 : 1;
    }
    return d;
}

Polynomial GeneratorDescriptor::expand(const Ring& ring) const {
    switch (kind) {
        case Kind::Det: return det_generator(ring, slots[0]);
        case Kind::Bracket: return semi2x2::bracket(ring, slots[0], slots[1]);
        case Kind::Xi: return semi2x2::xi(ring, slots);
    }
    throw std::logic_error("GeneratorDescriptor::expand: bad kind");
}

std::string GeneratorDescriptor::token() const {
    std::string name = kind == Kind::Det ? "det" : kind == Kind::Bracket ? "br" : "xi";
    std::string out = name + "(";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(slots[i]);
    }
    return out + ")";
}

GeneratorDescriptor GeneratorDescriptor::parse(const std::string& token) {
    auto open = token.find('(');
    if (open == std::string::npos || token.back() != ')')
        throw std::invalid_argument("GeneratorDescriptor::parse: bad token '" + token + "'");
    std::string name = token.substr(0, open);
    std::vector<int> slots;
    std::size_t pos = open + 1;
    while (pos < token.size() - 1) {
        std::size_t next = token.find(',', pos);
        if (next == std::string::npos) next = token.size() - 1;
        slots.push_back(std::stoi(token.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (name == "det" && slots.size() == 1) return det(slots[0]);
    if (name == "br" && slots.size() == 2) return bracket(slots[0], slots[1]);
    if (name == "xi") return xi(std::move(slots));
    throw std::invalid_argument("GeneratorDescriptor::parse: bad token '" + token + "'");
}

std::vector<GeneratorDescriptor> enumerate_generators(int m, CharRegime regime) {
    if (m < 1) throw std::invalid_argument("enumerate_generators: m must be positive");
    std::vector<GeneratorDescriptor> out;
    for (int k = 1; k <= m; ++k) out.push_back(GeneratorDescriptor::det(k));
    for (int l = 1; l <= m; ++l)
        for (int r = l + 1; r <= m; ++r) out.push_back(GeneratorDescriptor::bracket(l, r));
    int even_m = m - (m % 2);
    int max_arity = regime == CharRegime::Two ? even_m : std::min(4, even_m);
    for (int arity = 4; arity <= max_arity; arity += 2) {
        // strictly increasing tuples of the given arity
        std::vector<int> tuple(static_cast<std::size_t>(arity));
        for (int i = 0; i < arity; ++i) tuple[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            out.push_back(GeneratorDescriptor::xi(tuple));
            int i = arity - 1;
            while (i >= 0 && tuple[static_cast<std::size_t>(i)] == m - (arity - 1 - i)) --i;
            if (i < 0) break;
            ++tuple[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < arity; ++j)
                tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

/******** generator polynomials ********/

Polynomial det_generator(const Ring& ring, int k) {
    if (k < 1) throw std::invalid_argument("det_generator: slot out of range");
    return determinant(generic_x(ring, k));
}

Polynomial bracket(const Ring& ring, int l, int r) {
    if (l < 1 || r < 1) throw std::invalid_argument("bracket: slot out of range");
    auto xv = [&](int i, int j, int k) { return Polynomial::variable(ring, VariableId::x(i, j, k)); };
    return xv(1, 1, l) * xv(2, 2, r) + xv(1, 1, r) * xv(2, 2, l) - xv(1, 2, l) * xv(2, 1, r) -
           xv(1, 2, r) * xv(2, 1, l);
}

BlockSpec xi_block_spec(const std::vector<int>& slots) {
    if (slots.size() < 4 || slots.size() % 2 != 0)
        throw std::invalid_argument("xi: need an even slot count >= 4");
    int q = static_cast<int>(slots.size()) / 2;
    BlockSpec spec;
    spec.q = q;
    for (int r = 1; r <= q; ++r)
        spec.placements.push_back({r, r, BlockTag::z(r), slots[static_cast<std::size_t>(r - 1)]});
    for (int r = 1; r <= q - 1; ++r)
        spec.placements.push_back({r, r + 1, BlockTag::w(r), slots[static_cast<std::size_t>(q + r - 1)]});
    spec.placements.push_back({q, 1, BlockTag::w(q), slots[static_cast<std::size_t>(2 * q - 1)]});
    return spec;
}

Polynomial xi(const Ring& ring, const std::vector<int>& slots) {
    BlockSpec spec = xi_block_spec(slots);
    int q = spec.q;
    GenericMatrix block = assemble_block(ring, spec);
    // every z_r, w_r appears at most once in the target monomial
    MonomialFilter keep = [](const Monomial& mono) {
        for (const auto& [v, e] : mono.factors()) {
            VarClass c = v.var_class();
            if ((c == VarClass::Z || c == VarClass::W) && e > 1) return false;
        }
        return true;
    };
    Polynomial det = determinant(block, keep);
    std::vector<std::pair<VariableId, unsigned>> pattern;
    for (int r = 1; r <= q; ++r) {
        pattern.push_back({VariableId::z(r), 1});
        pattern.push_back({VariableId::w(r), 1});
    }
    return det.coeff_extract(Monomial::from_factors(std::move(pattern)), {VarClass::Z, VarClass::W});
}

Polynomial trace_poly(const Ring& ring, const std::vector<int>& word) {
    if (word.empty()) throw std::invalid_argument("trace_poly: empty word");
    GenericMatrix acc = generic_x(ring, word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) acc = acc * generic_x(ring, word[i]);
    return acc.trace();
}

Polynomial sigma_star(const Polynomial& f, int m) {
    std::map<VariableId, Polynomial> assignment;
    assignment.emplace(VariableId::x(1, 1, m), Polynomial::constant(f.ring(), 1));
    assignment.emplace(VariableId::x(2, 2, m), Polynomial::constant(f.ring(), 1));
    assignment.emplace(VariableId::x(1, 2, m), Polynomial::zero(f.ring()));
    assignment.emplace(VariableId::x(2, 1, m), Polynomial::zero(f.ring()));
    return f.substitute(assignment);
}

/******** exponent patterns ********/

unsigned ExponentPattern::total() const {
    unsigned t = 0;
    for (const auto& [cell, e] : alpha) t += e;
    return t;
}

unsigned ExponentPattern::cell_sum(int r, int s) const {
    unsigned t = 0;
    for (const auto& [cell, e] : alpha)
        if (std::get<0>(cell) == r && std::get<1>(cell) == s) t += e;
    return t;
}

std::vector<int> ExponentPattern::slots_at(int r, int s) const {
    std::vector<int> out;
    for (const auto& [cell, e] : alpha)
        if (std::get<0>(cell) == r && std::get<1>(cell) == s)
            for (unsigned i = 0; i < e; ++i) out.push_back(std::get<2>(cell));
    return out;
}

MultiDegree ExponentPattern::multidegree(int m) const {
    MultiDegree d(m, 0);
    for (const auto& [cell, e] : alpha) {
        int k = std::get<2>(cell);
        if (k < 1 || k > m) throw std::invalid_argument("ExponentPattern: slot beyond m");
        d[k - 1] += static_cast<int>(e);
    }
    return d;
}

Monomial ExponentPattern::t_monomial() const {
    std::vector<std::pair<VariableId, unsigned>> factors;
    for (const auto& [cell, e] : alpha)
        factors.push_back({VariableId::t(std::get<0>(cell), std::get<1>(cell), std::get<2>(cell)), e});
    return Monomial::from_factors(std::move(factors));
}

std::string ExponentPattern::str() const {
    std::string out = "alpha{q=" + std::to_string(q);
    for (const auto& [cell, e] : alpha) {
        out += " (" + std::to_string(std::get<0>(cell)) + "," + std::to_string(std::get<1>(cell)) + "," +
               std::to_string(std::get<2>(cell)) + ")";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out + "}";
}

static void validate_pattern(const ExponentPattern& alpha, int m) {
    for (const auto& [cell, e] : alpha.alpha) {
        auto [r, s, k] = cell;
        if (r < 1 || r > alpha.q || s < 1 || s > alpha.q)
            throw std::invalid_argument("ExponentPattern: cell outside the q x q grid");
        if (k < 1 || (m > 0 && k > m)) throw std::invalid_argument("ExponentPattern: slot out of range");
        if (e == 0) throw std::invalid_argument("ExponentPattern: zero exponent stored");
    }
}

Polynomial spanning_element(const Ring& ring, const ExponentPattern& alpha, int m) {
    if (alpha.q < 1) throw std::invalid_argument("spanning_element: q must be positive");
    validate_pattern(alpha, m);

    // Only t-variables in the support of alpha can contribute to Coef(t^alpha, .);
    // assemble x (x) t with all others set to zero and prune any monomial whose
    // t-part fails to divide t^alpha.
    int q = alpha.q;
    GenericMatrix mat(ring, 2 * q, 2 * q);
    for (const auto& [cell, e] : alpha.alpha) {
        auto [r, s, k] = cell;
        Polynomial tvar = Polynomial::variable(ring, VariableId::t(r, s, k));
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                int row = (r - 1) * 2 + i, col = (s - 1) * 2 + j;
                mat.set(row, col, mat.at(row, col) + tvar * Polynomial::variable(ring, VariableId::x(i, j, k)));
            }
    }
    const auto& bound = alpha.alpha;
    MonomialFilter keep = [&bound](const Monomial& mono) {
        for (const auto& [v, e] : mono.factors()) {
            if (v.var_class() != VarClass::T) continue;
            auto it = bound.find(std::make_tuple(v.index1(), v.index2(), v.index3()));
            if (it == bound.end() || e > it->second) return false;
        }
        return true;
    };
    Polynomial det = determinant(mat, keep);
    return det.coeff_extract(alpha.t_monomial(), {VarClass::T});
}

/******** canonicalization ********/

CanonicalForm canonicalize_alpha(const ExponentPattern& alpha) {
    validate_pattern(alpha, 0);
    int q = alpha.q;
    CanonicalForm form;

    // degree bookkeeping: det(x (x) t) is t-homogeneous of degree 2q, with
    // exactly two t-factors drawn from each block row and column
    if (alpha.total() != static_cast<unsigned>(2 * q)) return form;  // Zero
    std::vector<unsigned> row_sum(static_cast<std::size_t>(q) + 1, 0), col_sum(static_cast<std::size_t>(q) + 1, 0);
    std::map<std::pair<int, int>, unsigned> cell;
    for (const auto& [key, e] : alpha.alpha) {
        auto [r, s, k] = key;
        row_sum[static_cast<std::size_t>(r)] += e;
        col_sum[static_cast<std::size_t>(s)] += e;
        cell[{r, s}] += e;
    }
    for (int i = 1; i <= q; ++i)
        if (row_sum[static_cast<std::size_t>(i)] != 2 || col_sum[static_cast<std::size_t>(i)] != 2)
            return form;  // Zero

    // a cell of summed exponent 2 splits off det or bracket via the Laplace
    // expansion along its block row
    for (const auto& [pos, sum] : cell) {
        if (sum != 2) continue;
        auto [r0, s0] = pos;
        DetFactorForm df;
        df.row = r0;
        df.col = s0;
        df.slots = alpha.slots_at(r0, s0);
        df.remainder.q = q - 1;
        for (const auto& [key, e] : alpha.alpha) {
            auto [r, s, k] = key;
            if (r == r0 || s == s0) continue;
            df.remainder.alpha[{r > r0 ? r - 1 : r, s > s0 ? s - 1 : s, k}] = e;
        }
        form.verdict = CanonicalForm::Verdict::DetFactor;
        form.det_factor = std::move(df);
        return form;
    }

    // all cells are 0/1: the support is a 2-regular bipartite graph; walk its
    // cycles, relabeling rows and columns in visit order so that each cycle
    // becomes the standard cyclic layout (an even relabeling, hence sign +1)
    std::map<int, std::vector<std::pair<int, int>>> row_edges;  // row -> [(col, slot)]
    for (const auto& [key, e] : alpha.alpha) {
        auto [r, s, k] = key;
        row_edges[r].push_back({s, k});
    }
    for (auto& [r, edges] : row_edges) std::sort(edges.begin(), edges.end());

    std::map<std::pair<int, int>, int> col_to_rows_slot;  // (col, row) -> slot
    std::map<int, std::vector<int>> col_rows;
    for (const auto& [key, e] : alpha.alpha) {
        auto [r, s, k] = key;
        col_to_rows_slot[{s, r}] = k;
        col_rows[s].push_back(r);
    }

    std::set<int> visited_rows;
    for (int start = 1; start <= q; ++start) {
        if (visited_rows.count(start)) continue;
        CycleForm cyc;
        std::vector<int> diag_slots, super_slots;
        // row `start` gets label 1; its smaller-column edge is the diagonal edge
        auto edges = row_edges.at(start);
        int diag_col = edges[0].first;
        diag_slots.push_back(edges[0].second);
        int cur_col = edges[1].first;
        int cur_slot = edges[1].second;
        int prev_row = start;
        visited_rows.insert(start);
        while (true) {
            // cur_col is the next column label; the edge we arrived on is the
            // previous row's superdiagonal (or, when it closes, the corner)
            if (cur_col == diag_col) {
                super_slots.push_back(cur_slot);  // corner slot, lands last
                break;
            }
            super_slots.push_back(cur_slot);
            const auto& rows = col_rows.at(cur_col);
            int next_row = rows[0] == prev_row ? rows[1] : rows[0];
            visited_rows.insert(next_row);
            diag_slots.push_back(col_to_rows_slot.at({cur_col, next_row}));
            // the next row's other edge continues the walk
            const auto& nedges = row_edges.at(next_row);
            if (nedges[0].first == cur_col) {
                cur_col = nedges[1].first;
                cur_slot = nedges[1].second;
            } else {
                cur_col = nedges[0].first;
                cur_slot = nedges[0].second;
            }
            prev_row = next_row;
        }
        cyc.slots = diag_slots;
        cyc.slots.insert(cyc.slots.end(), super_slots.begin(), super_slots.end());
        cyc.sign = 1;
        form.cycles.push_back(std::move(cyc));
    }
    form.verdict = form.cycles.size() == 1 ? CanonicalForm::Verdict::SingleCycle
                                           : CanonicalForm::Verdict::Product;
    return form;
}

Polynomial reconstruct(const CanonicalForm& form, const Ring& ring) {
    switch (form.verdict) {
        case CanonicalForm::Verdict::Zero:
            return Polynomial::zero(ring);
        case CanonicalForm::Verdict::DetFactor: {
            const auto& df = *form.det_factor;
            Polynomial factor = df.slots[0] == df.slots[1] ? det_generator(ring, df.slots[0])
                                                           : bracket(ring, df.slots[0], df.slots[1]);
            if (df.remainder.q == 0) return factor;
            return factor * reconstruct(canonicalize_alpha(df.remainder), ring);
        }
        case CanonicalForm::Verdict::SingleCycle:
        case CanonicalForm::Verdict::Product: {
            Polynomial acc = Polynomial::constant(ring, 1);
            for (const auto& cyc : form.cycles) {
                Polynomial f = xi(ring, cyc.slots);
                if (cyc.sign < 0) f = -f;
                acc = acc * f;
            }
            return acc;
        }
    }
    throw std::logic_error("reconstruct: bad verdict");
}

/******** collapse identities ********/

CollapseReport collapse_identity(const Ring& ring, int q) {
    if (q < 2) throw std::invalid_argument("collapse_identity: q must be at least 2");
    CollapseReport report;
    report.q = q;
    std::vector<int> lhs_slots;
    for (int i = 1; i <= q; ++i) lhs_slots.push_back(i);
    lhs_slots.push_back(1);  // x_{q+1} -> x_1
    for (int i = q + 2; i <= 2 * q; ++i) lhs_slots.push_back(i);
    Polynomial lhs = xi(ring, lhs_slots);

    Polynomial tail(ring);
    if (q == 2) {
        tail = bracket(ring, 2, 4);
    } else {
        std::vector<int> rest;
        for (int i = 2; i <= q; ++i) rest.push_back(i);
        for (int i = q + 2; i <= 2 * q; ++i) rest.push_back(i);
        tail = xi(ring, rest);
    }
    Polynomial rhs = -(det_generator(ring, 1) * tail);
    report.difference = lhs - rhs;
    report.ok = report.difference.is_zero();
    return report;
}

/******** enumeration ********/

std::vector<std::vector<std::vector<int>>> enumerate_supports(int q) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q), 0));
    std::vector<int> col_left(static_cast<std::size_t>(q), 2);
    // per row place an unordered pair of columns (c1 <= c2)
    auto rec = [&](auto&& self, int row) -> void {
        if (row == q) {
            out.push_back(grid);
            return;
        }
        for (int c1 = 0; c1 < q; ++c1) {
            if (col_left[static_cast<std::size_t>(c1)] < 1) continue;
            --col_left[static_cast<std::size_t>(c1)];
            ++grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(c1)];
            for (int c2 = c1; c2 < q; ++c2) {
                if (col_left[static_cast<std::size_t>(c2)] < 1) continue;
                --col_left[static_cast<std::size_t>(c2)];
                ++grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)];
                self(self, row + 1);
                ++col_left[static_cast<std::size_t>(c2)];
                --grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)];
            }
            ++col_left[static_cast<std::size_t>(c1)];
            --grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(c1)];
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

// canonical byte string of alpha under simultaneous row/column relabeling
std::string orbit_key(const ExponentPattern& alpha, const std::vector<std::vector<int>>& perms) {
    std::string best;
    std::vector<std::array<unsigned char, 4>> cells;
    for (const auto& sigma : perms) {
        for (const auto& tau : perms) {
            cells.clear();
            for (const auto& [key, e] : alpha.alpha) {
                auto [r, s, k] = key;
                cells.push_back({static_cast<unsigned char>(sigma[static_cast<std::size_t>(r - 1)]),
                                 static_cast<unsigned char>(tau[static_cast<std::size_t>(s - 1)]),
                                 static_cast<unsigned char>(k), static_cast<unsigned char>(e)});
            }
            std::sort(cells.begin(), cells.end());
            std::string key;
            key.reserve(cells.size() * 4);
            for (const auto& c : cells) key.append(reinterpret_cast<const char*>(c.data()), 4);
            if (best.empty() || key < best) best = std::move(key);
        }
    }
    return best;
}

std::vector<std::vector<int>> all_permutations(int q) {
    std::vector<int> p(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

std::vector<ExponentPattern> enumerate_alpha_orbits(int q, int m) {
    if (q < 1 || m < 1) throw std::invalid_argument("enumerate_alpha_orbits: bad parameters");
    auto perms = all_permutations(q);
    auto supports = enumerate_supports(q);
    std::vector<ExponentPattern> reps;
    std::unordered_set<std::string> seen;

    for (const auto& support : supports) {
        // cells in fixed order with their required sums
        std::vector<std::tuple<int, int, int>> cells;  // (r, s, sum)
        for (int r = 0; r < q; ++r)
            for (int s = 0; s < q; ++s)
                if (support[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] > 0)
                    cells.push_back({r + 1, s + 1, support[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]});

        ExponentPattern alpha;
        alpha.q = q;
        auto rec = [&](auto&& self, std::size_t idx) -> void {
            if (idx == cells.size()) {
                std::string key = orbit_key(alpha, perms);
                if (seen.insert(std::move(key)).second) reps.push_back(alpha);
                return;
            }
            auto [r, s, sum] = cells[idx];
            if (sum == 1) {
                for (int k = 1; k <= m; ++k) {
                    alpha.alpha[{r, s, k}] = 1;
                    self(self, idx + 1);
                    alpha.alpha.erase({r, s, k});
                }
            } else {
                for (int k = 1; k <= m; ++k)
                    for (int l = k; l <= m; ++l) {
                        if (k == l) alpha.alpha[{r, s, k}] = 2;
                        else {
                            alpha.alpha[{r, s, k}] = 1;
                            alpha.alpha[{r, s, l}] = 1;
                        }
                        self(self, idx + 1);
                        alpha.alpha.erase({r, s, k});
                        alpha.alpha.erase({r, s, l});
                    }
            }
        };
        rec(rec, 0);
    }
    return reps;
}

ExponentPattern random_alpha(int q, int m, SplitMix64& rng) {
    auto random_perm = [&](int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i)
            std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
        return p;
    };
    // row/column sums 2 exactly when the support is a sum of two permutation
    // supports; draw those and attach random slots
    auto sigma = random_perm(q), pi = random_perm(q);
    ExponentPattern alpha;
    alpha.q = q;
    for (int r = 1; r <= q; ++r) {
        int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(m))) + 1;
        alpha.alpha[{r, sigma[static_cast<std::size_t>(r - 1)], k}] += 1;
        k = static_cast<int>(rng.below(static_cast<std::uint64_t>(m))) + 1;
        alpha.alpha[{r, pi[static_cast<std::size_t>(r - 1)], k}] += 1;
    }
    return alpha;
}

}  // namespace semi2x2
