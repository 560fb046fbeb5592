#include "hrlq/model.hpp"

#include <algorithm>

namespace hrlq {

int Instance::edges() const {
    int e = 0;
    for (const auto& list : rpref) e += static_cast<int>(list.size());
    return e;
}

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> out;
    const int n = inst.residents();
    const int m = inst.hospitals();
    if (static_cast<int>(inst.lq.size()) != m || static_cast<int>(inst.uq.size()) != m) {
        out.push_back("quota vectors do not match hospital count");
        return out;
    }

    auto check_list = [&](const char* kind, int id, const std::vector<int>& list, int limit) {
        std::vector<char> seen(limit, 0);
        for (int x : list) {
            if (x < 0 || x >= limit) {
                out.push_back(std::string(kind) + " " + std::to_string(id) + ": list entry " +
                              std::to_string(x) + " out of range");
                return false;
            }
            if (seen[x]) {
                out.push_back(std::string(kind) + " " + std::to_string(id) + ": duplicate entry " +
                              std::to_string(x));
                return false;
            }
            seen[x] = 1;
        }
        return true;
    };

    bool lists_ok = true;
    for (int r = 0; r < n; ++r) lists_ok &= check_list("resident", r, inst.rpref[r], m);
    for (int h = 0; h < m; ++h) lists_ok &= check_list("hospital", h, inst.hpref[h], n);
    if (!lists_ok) return out;

    // mutual acceptability
    std::vector<std::vector<char>> rlists(n, std::vector<char>(m, 0));
    for (int r = 0; r < n; ++r)
        for (int h : inst.rpref[r]) rlists[r][h] = 1;
    for (int h = 0; h < m; ++h) {
        std::vector<char> hl(n, 0);
        for (int r : inst.hpref[h]) {
            hl[r] = 1;
            if (!rlists[r][h])
                out.push_back("hospital " + std::to_string(h) + " lists resident " +
                              std::to_string(r) + " but not conversely");
        }
        for (int r = 0; r < n; ++r)
            if (rlists[r][h] && !hl[r])
                out.push_back("resident " + std::to_string(r) + " lists hospital " +
                              std::to_string(h) + " but not conversely");
    }

    for (int h = 0; h < m; ++h) {
        if (inst.lq[h] < 0)
            out.push_back("hospital " + std::to_string(h) + ": negative lower quota");
        if (inst.uq[h] < 1)
            out.push_back("hospital " + std::to_string(h) + ": upper quota must be positive");
        if (inst.lq[h] > inst.uq[h])
            out.push_back("hospital " + std::to_string(h) + ": lower quota " +
                          std::to_string(inst.lq[h]) + " exceeds upper quota " +
                          std::to_string(inst.uq[h]));
        if (inst.lq[h] > 0 && inst.lq[h] > static_cast<int>(inst.hpref[h].size()))
            out.push_back("hospital " + std::to_string(h) + ": lower quota " +
                          std::to_string(inst.lq[h]) + " exceeds its list length " +
                          std::to_string(inst.hpref[h].size()));
    }
    return out;
}

void finalize(Instance& inst) {
    auto issues = validate_instance(inst);
    if (!issues.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& s : issues) msg += "\n  " + s;
        throw PreconditionError(msg);
    }
    const int n = inst.residents();
    const int m = inst.hospitals();
    inst.rrank.assign(n, std::vector<int>(m, -1));
    inst.hrank.assign(m, std::vector<int>(n, -1));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i < static_cast<int>(inst.rpref[r].size()); ++i)
            inst.rrank[r][inst.rpref[r][i]] = i;
    for (int h = 0; h < m; ++h)
        for (int i = 0; i < static_cast<int>(inst.hpref[h].size()); ++i)
            inst.hrank[h][inst.hpref[h][i]] = i;
    inst.ready = true;
}

std::vector<std::string> validate_matching(const Instance& inst, const Matching& m) {
    std::vector<std::string> out;
    if (m.residents() != inst.residents()) {
        out.push_back("matching covers " + std::to_string(m.residents()) + " residents, instance has " +
                      std::to_string(inst.residents()));
        return out;
    }
    std::vector<int> load(inst.hospitals(), 0);
    for (int r = 0; r < m.residents(); ++r) {
        int h = m[r];
        if (h == kUnmatched) continue;
        if (h < 0 || h >= inst.hospitals()) {
            out.push_back("resident " + std::to_string(r) + " assigned to out-of-range hospital");
            continue;
        }
        if (!inst.acceptable(r, h))
            out.push_back("assigned pair (" + std::to_string(r) + "," + std::to_string(h) +
                          ") is not an edge");
        ++load[h];
    }
    for (int h = 0; h < inst.hospitals(); ++h)
        if (load[h] > inst.uq[h])
            out.push_back("hospital " + std::to_string(h) + " over its upper quota: " +
                          std::to_string(load[h]) + " > " + std::to_string(inst.uq[h]));
    return out;
}

void require_matching(const Instance& inst, const Matching& m) {
    auto issues = validate_matching(inst, m);
    if (!issues.empty()) {
        std::string msg = "invalid matching:";
        for (const auto& s : issues) msg += "\n  " + s;
        throw PreconditionError(msg);
    }
}

int matching_size(const Matching& m) {
    int s = 0;
    for (int h : m.at) s += (h != kUnmatched);
    return s;
}

std::vector<int> unmatched_residents(const Instance& inst, const Matching& m) {
    std::vector<int> out;
    for (int r = 0; r < inst.residents(); ++r)
        if (m[r] == kUnmatched) out.push_back(r);
    return out;
}

std::vector<int> hospital_loads(const Instance& inst, const Matching& m) {
    std::vector<int> load(inst.hospitals(), 0);
    for (int r = 0; r < m.residents(); ++r)
        if (m[r] != kUnmatched) ++load[m[r]];
    return load;
}

std::vector<std::vector<int>> hospital_assignees(const Instance& inst, const Matching& m) {
    std::vector<std::vector<int>> by_h(inst.hospitals());
    for (int h = 0; h < inst.hospitals(); ++h)
        for (int r : inst.hpref[h])
            if (m[r] == h) by_h[h].push_back(r);
    return by_h;
}

int deficiency(const Instance& inst, const Matching& m) {
    auto load = hospital_loads(inst, m);
    int d = 0;
    for (int h = 0; h < inst.hospitals(); ++h) d += std::max(0, inst.lq[h] - load[h]);
    return d;
}

bool is_feasible(const Instance& inst, const Matching& m) {
    return deficiency(inst, m) == 0;
}

std::vector<std::pair<int, int>> blocking_pairs(const Instance& inst, const Matching& m) {
    require_matching(inst, m);
    auto load = hospital_loads(inst, m);
    auto assignees = hospital_assignees(inst, m);
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < inst.residents(); ++r) {
        for (int h : inst.rpref[r]) {
            if (m[r] == h) break;  // everything after is worse than the match
            // r strictly prefers h here, and (r,h) is not in the matching
            bool blocks = load[h] < inst.uq[h];
            if (!blocks && !assignees[h].empty()) {
                int worst = assignees[h].back();
                blocks = inst.hrank[h][r] < inst.hrank[h][worst];
            }
            if (blocks) out.emplace_back(r, h);
        }
    }
    return out;
}

std::vector<std::tuple<int, int, int>> envy_pairs(const Instance& inst, const Matching& m) {
    require_matching(inst, m);
    auto assignees = hospital_assignees(inst, m);
    std::vector<std::tuple<int, int, int>> out;
    for (int r = 0; r < inst.residents(); ++r) {
        for (int h : inst.rpref[r]) {
            if (m[r] == h) break;
            for (int other : assignees[h])
                if (inst.hrank[h][r] < inst.hrank[h][other]) out.emplace_back(r, other, h);
        }
    }
    return out;
}

bool is_stable(const Instance& inst, const Matching& m) {
    return blocking_pairs(inst, m).empty();
}

bool is_envy_free(const Instance& inst, const Matching& m) {
    return envy_pairs(inst, m).empty();
}

RelaxedVerdict is_relaxed_stable(const Instance& inst, const Matching& m) {
    Diagnostics d = diagnose(inst, m);
    RelaxedVerdict v;
    for (int h = 0; h < inst.hospitals(); ++h) {
        if (static_cast<int>(d.blocked_assignees[h].size()) > inst.lq[h]) {
            v.ok = false;
            v.hospital = h;
            return v;
        }
    }
    for (const auto& [r, h] : d.blocking) {
        if (m[r] == kUnmatched) {
            v.ok = false;
            v.resident = r;
            return v;
        }
    }
    return v;
}

Diagnostics diagnose(const Instance& inst, const Matching& m) {
    Diagnostics d;
    d.blocking = blocking_pairs(inst, m);
    d.envy = envy_pairs(inst, m);
    d.deficiency_total = deficiency(inst, m);
    d.blocked_assignees.assign(inst.hospitals(), {});
    std::vector<char> in_block(inst.residents(), 0);
    for (const auto& [r, h] : d.blocking) in_block[r] = 1;
    auto assignees = hospital_assignees(inst, m);
    for (int h = 0; h < inst.hospitals(); ++h)
        for (int r : assignees[h])
            if (in_block[r]) d.blocked_assignees[h].push_back(r);
    return d;
}

bool canonical_less(const Instance& inst, const Matching& a, const Matching& b) {
    const int sentinel = inst.hospitals();
    for (int r = 0; r < inst.residents(); ++r) {
        int ka = a[r] == kUnmatched ? sentinel : a[r];
        int kb = b[r] == kUnmatched ? sentinel : b[r];
        if (ka != kb) return ka < kb;
    }
    return false;
}

}  // namespace hrlq
