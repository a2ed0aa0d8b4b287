#pragma once

// Top-level dispatch: pick a solver from the instance shape (or an
// explicit hint) and answer tau*, plus the monotone decision form.

#include "fpt.hpp"
#include "oracle.hpp"
#include "unit_cover.hpp"
#include "unit_join.hpp"
#include "unit_pack.hpp"

namespace imove {

enum class Algo { Auto, Unit, Aliens, Fpt, Oracle };

inline std::optional<Algo> algo_from_name(std::string_view s) {
    if (s == "auto") return Algo::Auto;
    if (s == "unit") return Algo::Unit;
    if (s == "aliens") return Algo::Aliens;
    if (s == "fpt") return Algo::Fpt;
    if (s == "oracle") return Algo::Oracle;
    return std::nullopt;
}

// Uniform-length fast paths; requires kappa == 1.
inline MoveAnswer solve_unit(const Instance& inst, ProblemKind kind) {
    NormalizedInstance norm = normalize(inst, kind);
    if (!norm.ok) return MoveAnswer::infeasible(norm.reason);
    if (!norm.unit()) throw std::invalid_argument("solve_unit: lengths not uniform");
    switch (norm.kind) {
        case ProblemKind::Pack: return solve_unit_pack(norm);
        case ProblemKind::Cover: return solve_unit_cover_dp(norm);
        default: return solve_unit_jfamily(norm);
    }
}

inline MoveAnswer solve(const Instance& inst, ProblemKind kind, Algo algo = Algo::Auto) {
    switch (algo) {
        case Algo::Unit: return solve_unit(inst, kind);
        case Algo::Aliens: {
            NormalizedInstance norm = normalize(inst, kind);
            if (!norm.ok) return MoveAnswer::infeasible(norm.reason);
            if (norm.kind != ProblemKind::Cover)
                throw std::invalid_argument("aliens solver only applies to Cover");
            if (!norm.unit()) throw std::invalid_argument("aliens solver needs uniform lengths");
            return solve_unit_cover_aliens(norm);
        }
        case Algo::Fpt: return fpt_solve(inst, kind);
        case Algo::Oracle: return oracle_solve(inst, kind);
        case Algo::Auto: break;
    }
    if (auto why = kind_precondition_violation(inst, kind))
        return MoveAnswer::infeasible(*why);
    if (inst.kappa() == 1) return solve_unit(inst, kind);
    try {
        return fpt_solve(inst, kind);
    } catch (const resource_error&) {
        if (inst.n() <= 12) return oracle_solve(inst, kind);
        throw;
    }
}

// Monotone decision: can the goal be met moving at most tau intervals?
inline bool decide(const Instance& inst, ProblemKind kind, i64 tau, Algo algo = Algo::Auto) {
    if (tau < 0) return false;
    if (algo == Algo::Fpt && kind != ProblemKind::Cover) {
        if (kind_precondition_violation(inst, kind)) return false;
        return fpt_decide_Aprime(inst, kind, std::min(tau, inst.n()));
    }
    MoveAnswer a = solve(inst, kind, algo);
    return a.feasible && a.tauStar <= tau;
}

}  // namespace imove
