#include <algorithm>
#include <cstdlib>

#include "cmapf/sat_planner.hpp"

namespace cmapf {
namespace {

// Watched-literal DPLL with first-UIP conflict analysis. A conflict derives
// an asserting clause, the solver jumps back to the second-highest decision
// level in it and continues with the asserted literal; derived clauses are
// kept since they serve as reasons for those assertions. No restarts, no
// clause-database management, static branching order.
class Solver {
public:
    Solver(const CnfFormula& f, const std::vector<bool>* phase)
        : nvars_(f.var_count()),
          assign_(f.var_count(), Unassigned),
          level_(f.var_count(), 0),
          reason_(f.var_count(), NoReason),
          seen_(f.var_count(), 0),
          phase_(f.var_count(), 0),
          watches_(2 * f.var_count()) {
        if (phase)
            for (std::size_t v = 0; v < nvars_ && v < phase->size(); ++v)
                phase_[v] = (*phase)[v];
        ok_ = !f.trivially_unsat();
        for (const auto& c : f.clauses())
            if (ok_) load(c);
    }

    SatResult solve() {
        SatResult res;
        if (!ok_ || propagate() != NoConflict)
            return res;
        for (;;) {
            Lit next = pick_branch();
            if (next == 0) {  // full assignment, no conflict: model found
                res.satisfiable = true;
                res.model.resize(nvars_);
                for (std::size_t v = 0; v < nvars_; ++v)
                    res.model[v] = assign_[v] == True;
                return res;
            }
            trail_lim_.push_back(trail_.size());
            enqueue(next, NoReason);
            while (true) {
                int confl = propagate();
                if (confl == NoConflict) break;
                if (trail_lim_.empty())
                    return res;  // conflict at level zero: UNSAT
                std::vector<Lit> learnt;
                std::size_t back_level = analyze(confl, learnt);
                cancel_until(back_level);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], NoReason);  // level-zero fact
                } else {
                    int id = add_internal(std::move(learnt));
                    enqueue(clauses_[id][0], id);
                }
            }
        }
    }

private:
    static constexpr signed char Unassigned = -1, False = 0, True = 1;
    static constexpr int NoReason = -1, NoConflict = -1;

    static std::size_t widx(Lit l) {
        return 2 * (std::size_t)(std::abs(l) - 1) + (l < 0 ? 1 : 0);
    }
    std::size_t var(Lit l) const { return (std::size_t)std::abs(l) - 1; }
    signed char value(Lit l) const {
        signed char a = assign_[var(l)];
        if (a == Unassigned) return Unassigned;
        return (l > 0) == (a == True) ? True : False;
    }
    std::size_t current_level() const { return trail_lim_.size(); }

    void load(const std::vector<Lit>& in) {
        // Normalize: drop duplicates and tautologies before watching.
        std::vector<Lit> c(in);
        std::sort(c.begin(), c.end(), [](Lit a, Lit b) {
            return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
        });
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] == -c[i + 1]) return;  // tautology
        if (c.empty()) {
            ok_ = false;
            return;
        }
        if (c.size() == 1) {
            if (value(c[0]) == False)
                ok_ = false;
            else if (value(c[0]) == Unassigned)
                enqueue(c[0], NoReason);
            return;
        }
        add_internal(std::move(c));
    }

    int add_internal(std::vector<Lit> c) {
        int id = static_cast<int>(clauses_.size());
        watches_[widx(c[0])].push_back(id);
        watches_[widx(c[1])].push_back(id);
        clauses_.push_back(std::move(c));
        return id;
    }

    void enqueue(Lit l, int why) {
        assign_[var(l)] = l > 0 ? True : False;
        level_[var(l)] = current_level();
        reason_[var(l)] = why;
        trail_.push_back(l);
    }

    int propagate() {
        while (qhead_ < trail_.size()) {
            Lit p = trail_[qhead_++];
            Lit false_lit = -p;
            auto& wl = watches_[widx(false_lit)];
            std::size_t keep = 0;
            for (std::size_t i = 0; i < wl.size(); ++i) {
                int ci = wl[i];
                auto& c = clauses_[ci];
                if (c[0] == false_lit) std::swap(c[0], c[1]);
                if (value(c[0]) == True) {
                    wl[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k) {
                    if (value(c[k]) != False) {
                        std::swap(c[1], c[k]);
                        watches_[widx(c[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                wl[keep++] = ci;  // stays watched by false_lit
                if (value(c[0]) == False) {
                    // Conflict: restore untouched tail of the watch list.
                    for (std::size_t j = i + 1; j < wl.size(); ++j)
                        wl[keep++] = wl[j];
                    wl.resize(keep);
                    qhead_ = trail_.size();
                    return ci;
                }
                enqueue(c[0], ci);
            }
            wl.resize(keep);
        }
        return NoConflict;
    }

    // First-UIP resolution. Fills `learnt` with the asserting clause, its
    // first literal being the one to enqueue; returns the backjump level.
    std::size_t analyze(int confl, std::vector<Lit>& learnt) {
        learnt.push_back(0);  // slot for the asserting literal
        std::size_t counter = 0;
        Lit p = 0;
        std::size_t idx = trail_.size();
        std::vector<std::size_t> to_clear;
        do {
            const auto& c = clauses_[confl];
            for (std::size_t k = (p == 0 ? 0 : 1); k < c.size(); ++k) {
                Lit q = (p == 0) ? c[k] : (c[k] == p ? 0 : c[k]);
                if (q == 0) continue;
                std::size_t v = var(q);
                if (!seen_[v] && level_[v] > 0) {
                    seen_[v] = 1;
                    to_clear.push_back(v);
                    if (level_[v] == current_level())
                        ++counter;
                    else
                        learnt.push_back(q);
                }
            }
            // Walk the trail back to the next marked literal of this level.
            do {
                --idx;
            } while (!seen_[var(trail_[idx])]);
            p = trail_[idx];
            seen_[var(p)] = 0;
            --counter;
            if (counter > 0) {
                confl = reason_[var(p)];
                // Decisions have no reason, but then counter would have hit
                // zero: every other current-level literal is implied.
            }
        } while (counter > 0);
        learnt[0] = -p;

        std::size_t back = 0;
        for (std::size_t i = 1; i < learnt.size(); ++i)
            back = std::max(back, (std::size_t)level_[var(learnt[i])]);
        // Put a highest-remaining-level literal second so it gets watched.
        for (std::size_t i = 1; i < learnt.size(); ++i)
            if (level_[var(learnt[i])] == back) {
                std::swap(learnt[1], learnt[i]);
                break;
            }
        for (std::size_t v : to_clear)
            seen_[v] = 0;
        return back;
    }

    void cancel_until(std::size_t lvl) {
        while (trail_lim_.size() > lvl) {
            std::size_t mark = trail_lim_.back();
            trail_lim_.pop_back();
            while (trail_.size() > mark) {
                std::size_t v = var(trail_.back());
                phase_[v] = assign_[v] == True;  // keep last polarity
                assign_[v] = Unassigned;
                reason_[v] = NoReason;
                order_head_ = std::min(order_head_, v);
                trail_.pop_back();
            }
        }
        qhead_ = std::min(qhead_, trail_.size());
    }

    Lit pick_branch() {
        // Static order: lowest unassigned variable. cancel_until rewinds
        // order_head_, so scanning forward from it is exact.
        while (order_head_ < nvars_ && assign_[order_head_] != Unassigned)
            ++order_head_;
        if (order_head_ == nvars_) return 0;
        std::size_t v = order_head_;
        return phase_[v] ? (Lit)(v + 1) : -(Lit)(v + 1);
    }

    std::size_t nvars_;
    bool ok_ = true;
    std::vector<std::vector<Lit>> clauses_;
    std::vector<signed char> assign_;
    std::vector<std::uint32_t> level_;
    std::vector<int> reason_;
    std::vector<char> seen_;
    std::vector<char> phase_;
    std::vector<std::vector<int>> watches_;
    std::vector<Lit> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t qhead_ = 0;
    std::size_t order_head_ = 0;
};

}  // namespace

SatResult sat_solve(const CnfFormula& f, const std::vector<bool>* phase) {
    if (f.var_count() == 0) {
        SatResult r;
        r.satisfiable = !f.trivially_unsat();
        return r;
    }
    return Solver(f, phase).solve();
}

}  // namespace cmapf
