#include "mcnet/pda.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace mcnet {

std::string ColumnLabel::to_string() const {
    std::ostringstream os;
    os << "({";
    for (std::size_t i = 0; i < relay_set.size(); ++i) {
        if (i) os << ",";
        os << relay_set[i];
    }
    os << "}," << user_index << ")";
    return os.str();
}

std::int32_t PdaArray::max_symbol() const {
    std::int32_t m = 0;
    for (const PdaEntry& e : cells_) m = std::max(m, e.raw());
    return m;
}

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::C1: return "C1";
        case Axiom::C2: return "C2";
        case Axiom::C3: return "C3";
        case Axiom::C4: return "C4";
    }
    return "?";
}

bool CpdaReport::has_violation(Axiom a) const {
    for (const Violation& v : violations)
        if (v.axiom == a) return true;
    return false;
}

std::string CpdaReport::params_string() const {
    std::ostringstream os;
    os << "(" << K << "," << F << "," << Z << "," << S << ")";
    return os.str();
}

namespace {

void collect_occurrences(const PdaArray& a, CpdaReport& rep) {
    for (int j = 0; j < a.rows(); ++j)
        for (int k = 0; k < a.cols(); ++k) {
            PdaEntry e = a.at(j, k);
            if (!e.is_star()) rep.occurrences[e.symbol_id()].emplace_back(j, k);
        }
}

void check_c1(const PdaArray& a, CpdaReport& rep) {
    std::vector<int> stars(a.cols(), 0);
    for (int k = 0; k < a.cols(); ++k)
        for (int j = 0; j < a.rows(); ++j)
            if (a.at(j, k).is_star()) ++stars[k];
    rep.Z = stars.empty() ? 0 : stars[0];
    for (int k = 1; k < a.cols(); ++k) {
        if (stars[k] != stars[0]) {
            Violation v;
            v.axiom = Axiom::C1;
            std::ostringstream os;
            os << "column " << k << " has " << stars[k] << " stars, column 0 has " << stars[0];
            v.detail = os.str();
            v.cells = {{0, k}};
            rep.violations.push_back(std::move(v));
            return;
        }
    }
}

void check_c2(const PdaArray& a, CpdaReport& rep) {
    std::int32_t m = a.max_symbol();
    rep.S = m;
    for (std::int32_t s = 1; s <= m; ++s) {
        if (!rep.occurrences.count(s)) {
            Violation v;
            v.axiom = Axiom::C2;
            std::ostringstream os;
            os << "integer " << s << " never occurs (largest used is " << m << ")";
            v.detail = os.str();
            rep.violations.push_back(std::move(v));
            return;
        }
    }
}

void check_c3(const PdaArray& a, CpdaReport& rep) {
    for (const auto& [s, cells] : rep.occurrences) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            for (std::size_t l = i + 1; l < cells.size(); ++l) {
                auto [j1, k1] = cells[i];
                auto [j2, k2] = cells[l];
                std::string problem;
                if (j1 == j2)
                    problem = "same row";
                else if (k1 == k2)
                    problem = "same column";
                else if (!a.at(j1, k2).is_star() || !a.at(j2, k1).is_star())
                    problem = "cross cells are not both stars";
                if (!problem.empty()) {
                    Violation v;
                    v.axiom = Axiom::C3;
                    std::ostringstream os;
                    os << "integer " << s << " at (" << j1 << "," << k1 << ") and (" << j2
                       << "," << k2 << "): " << problem;
                    v.detail = os.str();
                    v.cells = {{j1, k1}, {j2, k2}, {j1, k2}, {j2, k1}};
                    rep.violations.push_back(std::move(v));
                    return; // one certificate per axiom is enough
                }
            }
        }
    }
}

// Infers (H, r, u) from the labels and checks that they cover each r-subset
// of [1..H] exactly u times, with distinct user indices in [1..u].
void check_label_structure(const PdaArray& a) {
    if (!a.has_col_labels()) throw StructuralError("column labels are required");
    if (static_cast<int>(a.col_labels.size()) != a.cols())
        throw StructuralError("label count differs from column count");

    const std::size_t r = a.col_labels.front().relay_set.size();
    int H = 0;
    for (const ColumnLabel& c : a.col_labels) {
        if (c.relay_set.size() != r)
            throw StructuralError("relay sets have mixed sizes");
        int prev = 0;
        for (int h : c.relay_set) {
            if (h <= prev) throw StructuralError("relay set not strictly increasing");
            prev = h;
        }
        H = std::max(H, c.relay_set.back());
    }
    if (static_cast<int>(r) > H) throw StructuralError("relay set larger than relay universe");

    std::map<std::vector<int>, std::set<int>> users_per_set;
    for (const ColumnLabel& c : a.col_labels) {
        if (!users_per_set[c.relay_set].insert(c.user_index).second)
            throw StructuralError("duplicate column label " + c.to_string());
    }

    // Every r-subset of [1..H] must appear, each with the same user count u.
    std::size_t expect_sets = 1;
    for (std::size_t i = 0; i < r; ++i)
        expect_sets = expect_sets * (H - i) / (i + 1);
    if (users_per_set.size() != expect_sets)
        throw StructuralError("column labels do not cover every relay subset");
    const std::size_t u = users_per_set.begin()->second.size();
    for (const auto& [set, users] : users_per_set) {
        if (users.size() != u)
            throw StructuralError("relay subsets carry unequal user counts");
        for (int i : users)
            if (i < 1 || i > static_cast<int>(u))
                throw StructuralError("user index out of [1..u]");
    }
}

void check_c4(const PdaArray& a, CpdaReport& rep) {
    for (const auto& [s, cells] : rep.occurrences) {
        std::vector<int> inter = a.col_labels[cells.front().second].relay_set;
        for (const auto& [j, k] : cells) {
            const std::vector<int>& rs = a.col_labels[k].relay_set;
            std::vector<int> next;
            std::set_intersection(inter.begin(), inter.end(), rs.begin(), rs.end(),
                                  std::back_inserter(next));
            inter = std::move(next);
            if (inter.empty()) break;
        }
        rep.intersections[s] = inter;
        if (inter.empty()) {
            Violation v;
            v.axiom = Axiom::C4;
            std::ostringstream os;
            os << "integer " << s << " has empty relay intersection";
            v.detail = os.str();
            v.cells = cells;
            rep.violations.push_back(std::move(v));
        }
    }
}

void fill_mu_nu(const PdaArray& a, CpdaReport& rep) {
    if (rep.intersections.empty()) return;
    bool mu_uniform = true;
    std::size_t mu = rep.intersections.begin()->second.size();
    std::map<int, int> per_relay;
    for (const auto& [s, inter] : rep.intersections) {
        if (inter.size() != mu) mu_uniform = false;
        for (int h : inter) ++per_relay[h];
    }
    if (mu_uniform && mu > 0) rep.mu = static_cast<int>(mu);

    int H = 0;
    for (const ColumnLabel& c : a.col_labels) H = std::max(H, c.relay_set.back());
    bool nu_uniform = !per_relay.empty() && static_cast<int>(per_relay.size()) == H;
    int nu = per_relay.empty() ? 0 : per_relay.begin()->second;
    for (const auto& [h, cnt] : per_relay)
        if (cnt != nu) nu_uniform = false;
    if (nu_uniform) rep.nu = nu;
}

} // namespace

CpdaReport verify_pda(const PdaArray& a) {
    CpdaReport rep;
    rep.F = a.rows();
    rep.K = a.cols();
    collect_occurrences(a, rep);
    check_c1(a, rep);
    check_c2(a, rep);
    check_c3(a, rep);
    rep.is_pda = rep.violations.empty();
    return rep;
}

CpdaReport verify_cpda(const PdaArray& a) {
    check_label_structure(a);
    CpdaReport rep = verify_pda(a);
    check_c4(a, rep);
    fill_mu_nu(a, rep);
    rep.is_cpda = rep.is_pda && !rep.has_violation(Axiom::C4);
    return rep;
}

UselessStars find_useless_stars(const PdaArray& a) {
    // A star is useful iff it is a cross cell of some same-symbol pair, i.e.
    // some symbol s has occurrences in its row and its column whose cross
    // completes the 2x2 pattern. Marking cross cells of every pair visits
    // sum_s g_s^2 cell pairs.
    std::vector<char> useful(static_cast<std::size_t>(a.rows()) * a.cols(), 0);
    std::map<std::int32_t, std::vector<std::pair<int, int>>> occ;
    for (int j = 0; j < a.rows(); ++j)
        for (int k = 0; k < a.cols(); ++k)
            if (!a.at(j, k).is_star()) occ[a.at(j, k).symbol_id()].emplace_back(j, k);

    auto mark = [&](int j, int k) { useful[static_cast<std::size_t>(j) * a.cols() + k] = 1; };
    for (const auto& [s, cells] : occ) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t l = i + 1; l < cells.size(); ++l) {
                auto [j1, k1] = cells[i];
                auto [j2, k2] = cells[l];
                if (j1 == j2 || k1 == k2) continue;
                if (a.at(j1, k2).is_star() && a.at(j2, k1).is_star()) {
                    mark(j1, k2);
                    mark(j2, k1);
                }
            }
    }

    UselessStars out;
    out.rows_per_column.resize(a.cols());
    out.count_per_column.assign(a.cols(), 0);
    for (int k = 0; k < a.cols(); ++k)
        for (int j = 0; j < a.rows(); ++j)
            if (a.at(j, k).is_star() && !useful[static_cast<std::size_t>(j) * a.cols() + k]) {
                out.rows_per_column[k].push_back(j);
                ++out.count_per_column[k];
            }
    return out;
}

bool UselessStars::uniform() const {
    for (int c : count_per_column)
        if (c != count_per_column.front()) return false;
    return !count_per_column.empty();
}

int UselessStars::uniform_count() const {
    if (!uniform()) throw StructuralError("useless star count is not uniform");
    return count_per_column.front();
}

std::int64_t UselessStars::total() const {
    std::int64_t t = 0;
    for (int c : count_per_column) t += c;
    return t;
}

CanonicalizeResult canonicalize_with_map(const PdaArray& a) {
    CanonicalizeResult res;
    res.array = a;
    std::unordered_map<std::int32_t, std::int32_t> renumber;
    for (int j = 0; j < a.rows(); ++j)
        for (int k = 0; k < a.cols(); ++k) {
            PdaEntry e = a.at(j, k);
            if (e.is_star()) continue;
            auto [it, fresh] =
                renumber.emplace(e.symbol_id(), static_cast<std::int32_t>(renumber.size()) + 1);
            if (fresh) res.original_symbol.push_back(e.symbol_id());
            res.array.set(j, k, PdaEntry::symbol(it->second));
        }
    return res;
}

PdaArray canonicalize(const PdaArray& a) { return canonicalize_with_map(a).array; }

} // namespace mcnet
