#include "tourney/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "tourney/cycles.hpp"
#include "tourney/linalg.hpp"
#include "tourney/structure.hpp"

namespace tourney {

namespace {

constexpr size_t kCounterexampleCap = 10;

void check_search_order(int n) {
    if (n < 3 || n > kMaxEnumerationOrder)
        throw Error("OrderTooLarge", "extremal search limited to 3 <= n <= " +
                                         std::to_string(kMaxEnumerationOrder));
}

void record(std::vector<std::string>& counterexamples, const Tournament& t,
            const std::string& note = {}) {
    if (counterexamples.size() >= kCounterexampleCap) return;
    std::string entry = canonical_code(t).str();
    if (!note.empty()) entry += " (" + note + ")";
    counterexamples.push_back(std::move(entry));
}

}  // namespace

std::string to_string(Objective o) {
    return o == Objective::MaxC3Singular ? "MaxC3Singular" : "MinC3Nonsingular";
}

ExtremalResult max_c3_singular(int n, int threads) {
    check_search_order(n);
    ExtremalResult r{n, Objective::MaxC3Singular, -1, {}, 0};
    for (const Tournament& t : iso_classes(n, threads)) {
        if (!is_singular(t)) continue;
        const long long c3 = c3_direct(t);
        if (c3 > r.value) {
            r.value = c3;
            r.witnesses.clear();
            r.witness_count = 0;
        }
        if (c3 == r.value) {
            ++r.witness_count;
            if (r.witnesses.size() < kWitnessCap) r.witnesses.push_back(canonical_code(t));
        }
    }
    if (n % 2 == 0) {
        if (4 * r.value != binom(n, 3))
            throw Error("BoundViolation", "even-order singular maximum off the closed form");
    } else if (r.value < 2 * binom((n + 1) / 2, 3) || 4 * r.value > binom(n, 3)) {
        throw Error("BoundViolation", "odd-order singular maximum outside the bracket");
    }
    return r;
}

ExtremalResult min_c3_nonsingular(int n, int threads) {
    check_search_order(n);
    ExtremalResult r{n, Objective::MinC3Nonsingular, -1, {}, 0};
    for (const Tournament& t : iso_classes(n, threads)) {
        if (is_singular(t)) continue;
        const long long c3 = c3_direct(t);
        if (r.value < 0 || c3 < r.value) {
            r.value = c3;
            r.witnesses.clear();
            r.witness_count = 0;
        }
        if (c3 == r.value) {
            ++r.witness_count;
            if (r.witnesses.size() < kWitnessCap) r.witnesses.push_back(canonical_code(t));
        }
    }
    if (r.value != n - 2 * (n / 3))
        throw Error("BoundViolation", "nonsingular minimum off n - 2*floor(n/3)");
    for (const CanonicalCode& w : r.witnesses) {
        const Tournament t = from_bits(w.n, w.bits);
        const auto d = scc(t);
        if (d.count() != static_cast<size_t>(n / 3))
            throw Error("BoundViolation", "minimizer witness without floor(n/3) components");
        for (const auto& comp : d.components)
            if (!is_upset(subtournament(t, comp)))
                throw Error("BoundViolation", "minimizer witness with a non-upset component");
    }
    return r;
}

std::vector<CanonicalCode> upset_ground_truth(int n) {
    if (n < 3 || n > kMaxCanonicalOrder)
        throw Error("OrderTooLarge", "upset ground truth limited to 3 <= n <= " +
                                         std::to_string(kMaxCanonicalOrder));
    const Tournament base = construct_transitive(n);
    std::set<CanonicalCode> out;
    // A top-to-bottom path picks a decreasing chain n-1 > i_1 > ... > 0;
    // enumerate all subsets of the interior vertices.
    const uint32_t interior = uint32_t{1} << (n - 2);
    for (uint32_t sub = 0; sub < interior; ++sub) {
        std::vector<int> path = {n - 1};
        for (int v = n - 2; v >= 1; --v)
            if (sub & (uint32_t{1} << (v - 1))) path.push_back(v);
        path.push_back(0);
        Tournament t = base;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            t = reverse_arc(t, path[i], path[i + 1]);
        out.insert(canonical_code(t));
    }
    return {out.begin(), out.end()};
}

namespace {

using Clock = std::chrono::steady_clock;

struct ClaimSpec {
    int min_n;
    std::function<void(int, int, VerificationReport&)> run;  // per full range
};

// Per-n body over iso classes; shared loop with counterexample recording.
void for_each_class(int lo, int hi, VerificationReport& rep,
                    const std::function<void(int, const Tournament&,
                                             std::vector<std::string>&)>& body) {
    for (int n = lo; n <= hi; ++n)
        for (const Tournament& t : iso_classes(n)) body(n, t, rep.counterexamples);
}

void run_prop1_scores(int lo, int hi, VerificationReport& rep) {
    for_each_class(lo, hi, rep, [](int, const Tournament& t, auto& ces) {
        if (c3_from_scores(score_vector(t)) != c3_direct(t)) record(ces, t);
    });
}

void run_lemma_reversal(int lo, int hi, VerificationReport& rep) {
    for_each_class(lo, hi, rep, [](int, const Tournament& t, auto& ces) {
        const auto s = score_vector(t);
        const long long before = c3_direct(t);
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j)
                if (i != j && t.beats(i, j) &&
                    c3_direct(reverse_arc(t, i, j)) - before != reversal_delta(s, i, j))
                    record(ces, t, "arc " + std::to_string(i) + "->" + std::to_string(j));
    });
}

void run_prop_max3cycles(int lo, int hi, VerificationReport& rep) {
    for_each_class(lo, hi, rep, [](int n, const Tournament& t, auto& ces) {
        const long long c3 = c3_direct(t);
        if (c3 > moon_bound(n)) record(ces, t, "above the Moon bound");
        const bool extremal_shape = is_regular(t) || is_almost_regular(t);
        if ((c3 == moon_bound(n)) != extremal_shape) record(ces, t, "equality mismatch");
    });
}

void run_lemma_maxsing(int lo, int hi, VerificationReport& rep) {
    for (int n = lo; n <= hi; ++n) {
        const auto r = max_c3_singular(n);
        if (r.value < moon_bound(n - 1)) {
            rep.counterexamples.push_back("n=" + std::to_string(n) + " max " +
                                          std::to_string(r.value) + " < " +
                                          std::to_string(moon_bound(n - 1)));
        }
    }
}

void run_shader(int lo, int hi, VerificationReport& rep) {
    for_each_class(lo, hi, rep, [](int n, const Tournament& t, auto& ces) {
        if (is_singular(t) && !within_shader_bound(n, c3_direct(t)))
            record(ces, t, "singular above C(n,3)/4");
    });
}

void run_prop_singularextreme(int lo, int hi, VerificationReport& rep) {
    for (int n = lo; n <= hi; ++n) {
        try {
            max_c3_singular(n);  // raises BoundViolation when the claim fails
        } catch (const Error& e) {
            rep.counterexamples.push_back("n=" + std::to_string(n) + ": " + e.what());
        }
    }
}

void run_thm_tse(int lo, int hi, VerificationReport& rep) {
    for (int n = lo; n <= hi; ++n) {
        const auto r = max_c3_singular(n);
        for (const CanonicalCode& w : r.witnesses) {
            const Tournament t = from_bits(w.n, w.bits);
            const auto d = scc(t);
            bool singleton = false;
            for (const auto& comp : d.components) singleton |= comp.size() == 1;
            try {
                const auto cls = classify_singular_maximizer(t, r.value);
                if ((cls.tag != MaximizerTag::Nontrivial) != singleton)
                    record(rep.counterexamples, t, "(i)<=>(iii) mismatch");
            } catch (const Error& e) {
                record(rep.counterexamples, t, e.code());
            }
        }
        // (ii) => (iii): source/sink over every (almost) regular base lands
        // among the singular maximizers with a singleton component.
        for (const Tournament& base : iso_classes(n - 1)) {
            if (!is_regular(base) && !is_almost_regular(base)) continue;
            for (const Tournament& built : {add_sink(base), add_source(base)}) {
                if (!is_singular(built) || c3_direct(built) != r.value) {
                    record(rep.counterexamples, built, "source/sink addition not a maximizer");
                    continue;
                }
                bool has_singleton = false;
                for (const auto& comp : scc(built).components)
                    has_singleton |= comp.size() == 1;
                if (!has_singleton)
                    record(rep.counterexamples, built, "added vertex lost its singleton");
            }
        }
    }
}

void run_nonstrong_bound(int lo, int hi, VerificationReport& rep, bool proof_reading) {
    for_each_class(lo, hi, rep, [&](int n, const Tournament& t, auto& ces) {
        const auto d = scc(t);
        if (d.count() < 2) return;
        for (const auto& comp : d.components)
            if (comp.size() < 3) return;
        const long long c3 = c3_direct(t);
        const bool ok = proof_reading ? 4 * c3 <= binom(n - 2, 3) + 4
                                      : c3 <= binom(n - 2, 3) + 1;
        if (!ok) record(ces, t, "C3 = " + std::to_string(c3));
    });
}

void run_nontrivial_iff_strong(int lo, int hi, VerificationReport& rep) {
    for (int n = lo; n <= hi; ++n) {
        const auto r = max_c3_singular(n);
        for (const CanonicalCode& w : r.witnesses) {
            const Tournament t = from_bits(w.n, w.bits);
            const auto cls = classify_singular_maximizer(t, r.value);
            if ((cls.tag == MaximizerTag::Nontrivial) != is_strong(t))
                record(rep.counterexamples, t, "nontrivial/strong mismatch");
        }
    }
}

void run_prop_determinant(int lo, int hi, VerificationReport& rep) {
    for_each_class(lo, hi, rep, [](int, const Tournament& t, auto& ces) {
        if (determinant(t) != det_via_scc(t, scc(t))) record(ces, t);
    });
}

void run_cor_sing_iff_scc(int lo, int hi, VerificationReport& rep) {
    for_each_class(lo, hi, rep, [](int, const Tournament& t, auto& ces) {
        bool any_singular = false;
        for (const auto& comp : scc(t).components)
            any_singular |= is_singular(subtournament(t, comp));
        if (is_singular(t) != any_singular) record(ces, t);
    });
}

void run_cor_scc_3verts(int lo, int hi, VerificationReport& rep) {
    for_each_class(lo, hi, rep, [](int, const Tournament& t, auto& ces) {
        const auto sizes = scc(t).sizes();
        for (size_t sz : sizes)
            if (sz == 2) record(ces, t, "component of size 2");
        if (!is_singular(t))
            for (size_t sz : sizes)
                if (sz < 3) record(ces, t, "nonsingular with a small component");
    });
}

void run_thm_upset(int lo, int hi, VerificationReport& rep) {
    for (int n = lo; n <= hi; ++n) {
        std::set<CanonicalCode> by_c3;
        for (const Tournament& t : iso_classes(n))
            if (is_strong(t) && c3_direct(t) == n - 2) by_c3.insert(canonical_code(t));
        const auto truth = upset_ground_truth(n);
        const std::set<CanonicalCode> by_paths(truth.begin(), truth.end());
        if (by_c3 != by_paths)
            rep.counterexamples.push_back("n=" + std::to_string(n) + ": sets differ (" +
                                          std::to_string(by_c3.size()) + " vs " +
                                          std::to_string(by_paths.size()) + ")");
        for (const Tournament& t : iso_classes(n)) {
            if (!is_strong(t)) continue;
            if (c3_direct(t) < n - 2) record(rep.counterexamples, t, "strong below n-2");
        }
    }
}

void run_thm_nonsingularextreme(int lo, int hi, VerificationReport& rep) {
    for (int n = lo; n <= hi; ++n) {
        try {
            min_c3_nonsingular(n);  // raises BoundViolation when the claim fails
        } catch (const Error& e) {
            rep.counterexamples.push_back("n=" + std::to_string(n) + ": " + e.what());
        }
    }
}

void run_cor_det_mod3(int lo, int hi, VerificationReport& rep) {
    for (int n = lo; n <= hi; ++n) {
        const Int128 expected = n % 3 == 1 ? -1 : 1;
        for (const CanonicalCode& w : min_c3_nonsingular(n).witnesses) {
            const Tournament t = from_bits(w.n, w.bits);
            if (determinant(t) != expected)
                record(rep.counterexamples, t, "det " + to_string(determinant(t)));
        }
    }
}

void run_cor_subtournament_unimodular(int lo, int hi, VerificationReport& rep) {
    for (int n = lo; n <= hi; ++n)
        for (const CanonicalCode& w : min_c3_nonsingular(n).witnesses) {
            const Tournament t = from_bits(w.n, w.bits);
            for (long long d : subdeterminant_spectrum(t))
                if (d < -1 || d > 1) {
                    record(rep.counterexamples, t, "subdeterminant " + std::to_string(d));
                    break;
                }
        }
}

const std::map<std::string, ClaimSpec>& registry() {
    static const std::map<std::string, ClaimSpec> reg = {
        {"prop1-scores", {1, run_prop1_scores}},
        {"lemma-reversal", {2, run_lemma_reversal}},
        {"prop-max3cycles", {1, run_prop_max3cycles}},
        {"lemma-maxsing", {4, run_lemma_maxsing}},
        {"shader", {1, run_shader}},
        {"prop-singularextreme", {3, run_prop_singularextreme}},
        {"thm-TSE", {3, run_thm_tse}},
        {"prop-nontrivial-iff-strong", {7, run_nontrivial_iff_strong}},
        {"prop-determinant", {1, run_prop_determinant}},
        {"cor-sing-iff-scc", {1, run_cor_sing_iff_scc}},
        {"cor-scc-3verts", {1, run_cor_scc_3verts}},
        {"thm-upset", {3, run_thm_upset}},
        {"thm-nonsingularextreme", {3, run_thm_nonsingularextreme}},
        {"cor-det-mod3", {3, run_cor_det_mod3}},
        {"cor-subtournament-unimodular", {3, run_cor_subtournament_unimodular}},
    };
    return reg;
}

VerificationReport finish(VerificationReport rep, Clock::time_point start) {
    rep.pass = rep.counterexamples.empty();
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rep;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, spec] : registry()) v.push_back(id);
        v.insert(std::lower_bound(v.begin(), v.end(), std::string("lemma-nonstrong-bound")),
                 "lemma-nonstrong-bound");
        return v;
    }();
    return ids;
}

std::vector<VerificationReport> verify(const std::string& claim_id, int n_lo, int n_hi,
                                       int threads) {
    if (n_lo < 1 || n_hi > kMaxEnumerationOrder || n_lo > n_hi)
        throw Error("OrderTooLarge", "verification range must lie in 1.." +
                                         std::to_string(kMaxEnumerationOrder));
    if (threads > 0) iso_classes(n_hi, threads);  // pre-warm with the requested fan-out

    if (claim_id == "lemma-nonstrong-bound") {
        // The printed statement and its proof disagree on the coefficient;
        // check both, with the statement reading governing pass/fail.
        std::vector<VerificationReport> out;
        const int lo = std::max(n_lo, 6);
        for (const bool proof_reading : {false, true}) {
            const auto start = Clock::now();
            VerificationReport rep;
            rep.claim_id = proof_reading ? "lemma-nonstrong-bound-proof"
                                         : "lemma-nonstrong-bound-statement";
            rep.n_lo = lo;
            rep.n_hi = n_hi;
            rep.informational = proof_reading;
            rep.detail = proof_reading ? "proof reading: C3 <= C(n-2,3)/4 + 1"
                                       : "statement reading: C3 <= C(n-2,3) + 1";
            if (lo <= n_hi) run_nonstrong_bound(lo, n_hi, rep, proof_reading);
            out.push_back(finish(std::move(rep), start));
        }
        return out;
    }

    const auto it = registry().find(claim_id);
    if (it == registry().end()) throw Error("UnknownClaim", claim_id);
    const auto start = Clock::now();
    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.n_lo = std::max(n_lo, it->second.min_n);
    rep.n_hi = n_hi;
    if (rep.n_lo <= rep.n_hi)
        it->second.run(rep.n_lo, rep.n_hi, rep);
    else
        rep.detail = "range below the claim's minimum order; vacuously true";
    return {finish(std::move(rep), start)};
}

}  // namespace tourney
