#include "wildram/cli.hpp"

#include <random>

#include "wildram/errors.hpp"
#include "wildram/oracle.hpp"

namespace wildram {

std::string to_string(Command c) {
    switch (c) {
        case Command::Reduce: return "reduce";
        case Command::Jumps: return "jumps";
        case Command::Genus: return "genus";
        case Command::Verify: return "verify";
    }
    return "?";
}

std::optional<Command> command_from_string(const std::string& s) {
    for (auto c : {Command::Reduce, Command::Jumps, Command::Genus, Command::Verify})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

namespace {

std::int64_t oracle_prec(const JobSpec& job, const RunOptions& opts) {
    if (opts.prec) return *opts.prec;
    if (job.prec) return *job.prec;
    return kDefaultPrec;
}

void mark(RamReport& r, bool matched, const std::string& what) {
    r.notes.push_back(what);
    if (!matched) r.status = Status::DiscrepancyFlag;
}

// Oracle on one Artin-Schreier datum; true iff it ran and matched.
bool verify_as(RamReport& r, const ReducedAS& f, std::int64_t prec, const std::string& tag) {
    if (f.kind != ASKind::WildReduced) {
        r.notes.push_back(tag + "oracle not applicable: datum is " + to_string(f.kind));
        return false;
    }
    const std::int64_t j = oracle_p_cyclic_jump(f, prec);
    const bool ok = j == f.pole_order;
    mark(r, ok, tag + "oracle lower jump " + std::to_string(j) + (ok ? " matches " : " differs from ") +
                    "pole order " + std::to_string(f.pole_order));
    return ok;
}

bool verify_witt(RamReport& r, const ReducedWitt2& v, std::int64_t prec, const std::string& tag) {
    if (v.kind0 != ASKind::WildReduced) {
        r.notes.push_back(tag + "oracle not applicable: first component is " + to_string(v.kind0));
        return false;
    }
    const JumpProfile lower = jumps_p2_cyclic(v);
    const std::int64_t j0 = oracle_p_cyclic_jump(reduce_as(v.vec_red.a0), prec);
    const std::int64_t j1 = oracle_p2_second_jump(v, prec);
    const DerivativeReport d = oracle_derivative_check(v, prec);
    const bool ok = Rational(j0) == lower.jumps.at(0) && Rational(j1) == lower.jumps.at(1);
    mark(r, ok, tag + "oracle lower jumps (" + std::to_string(j0) + ", " + std::to_string(j1) + ")" +
                    (ok ? " match the formula" : " differ from the formula"));
    std::string dn = tag + "v(dx/dy) = " + std::to_string(d.dx_dy);
    if (d.dlhs_dy) dn += ", v(d/dy alpha1(x(y))) = " + std::to_string(*d.dlhs_dy);
    r.notes.push_back(dn);
    return ok;
}

void promote(RamReport& r, bool confirmed) {
    if (confirmed && r.status == Status::FormulaOnly) r.status = Status::OracleConfirmed;
}

void add_reduction_notes(RamReport& r, const ExtensionBlock& b, const std::string& tag) {
    if (b.kind == BlockKind::AS) {
        const ReducedAS f = reduce_as(b.a);
        r.notes.push_back(tag + "reduced: " + f.f_red.to_string());
        r.notes.push_back(tag + "shift: " + f.shift.to_string());
        r.notes.push_back(tag + "kind: " + to_string(f.kind));
    } else if (b.kind == BlockKind::Witt2) {
        const ReducedWitt2 v = reduce_witt2(b.witt());
        r.notes.push_back(tag + "reduced: " + v.vec_red.to_string());
        r.notes.push_back(tag + "shift: " + v.shift.to_string());
        r.notes.push_back(tag + "kinds: " + to_string(v.kind0) + ", " + to_string(v.kind1));
    }
}

RamReport cover_jumps(const ExtensionBlock& b) {
    const CoverSpec c = b.cover_spec();
    return report_from_lower(cover_profile(c), to_string(c.kind) + " cover, inertia at infinity");
}

RamReport single(const ExtensionBlock& b) {
    switch (b.kind) {
        case BlockKind::AS: return report_as(reduce_as(b.a));
        case BlockKind::Witt2: return report_witt2(reduce_witt2(b.witt()));
        case BlockKind::Cover: return cover_jumps(b);
    }
    throw InvalidInput("unknown block kind");
}

RamReport pair(const ExtensionBlock& a, const ExtensionBlock& b) {
    if (a.kind == BlockKind::AS) return compositum_p_cyclic(a.a, b.a);
    return compositum_p2(a.witt(), b.witt());
}

RamReport jumps(const JobSpec& job) {
    return job.blocks.size() == 1 ? single(job.blocks[0]) : pair(job.blocks[0], job.blocks[1]);
}

RamReport verify(const JobSpec& job, std::int64_t prec) {
    const ExtensionBlock& b0 = job.blocks.front();
    if (b0.kind == BlockKind::Cover) {
        const CoverSpec c = b0.cover_spec();
        RamReport r = genus_report(c);
        switch (c.kind) {
            case CoverKind::PCyclic: promote(r, verify_as(r, reduce_as(c.f0), prec, "")); break;
            case CoverKind::Cyclic: promote(r, verify_witt(r, reduce_witt2({c.f0, c.f1}), prec, "")); break;
            case CoverKind::Elementary:
                verify_as(r, reduce_as(c.f0), prec, "first factor: ");
                verify_as(r, reduce_as(c.f1), prec, "second factor: ");
                r.notes.push_back("jumps of the compositum itself are not oracle-checked");
                break;
        }
        return r;
    }
    RamReport r = jumps(job);
    if (job.blocks.size() == 1) {
        const bool ok = b0.kind == BlockKind::AS ? verify_as(r, reduce_as(b0.a), prec, "")
                                                 : verify_witt(r, reduce_witt2(b0.witt()), prec, "");
        promote(r, ok);
        return r;
    }
    for (std::size_t i = 0; i < 2; ++i) {
        const std::string tag = i == 0 ? "first factor: " : "second factor: ";
        const ExtensionBlock& b = job.blocks[i];
        if (b.kind == BlockKind::AS) verify_as(r, reduce_as(b.a), prec, tag);
        else verify_witt(r, reduce_witt2(b.witt()), prec, tag);
    }
    r.notes.push_back("jumps of the compositum itself are not oracle-checked");
    return r;
}

}  // namespace

RamReport run(const JobSpec& job, Command cmd, const RunOptions& opts) {
    if (job.blocks.empty()) throw InvalidInput("job has no extension block");
    switch (cmd) {
        case Command::Reduce: {
            if (job.blocks.front().kind == BlockKind::Cover)
                throw InvalidInput("reduce applies to `as` and `witt2` blocks");
            RamReport r = jumps(job);
            for (std::size_t i = 0; i < job.blocks.size(); ++i)
                add_reduction_notes(r, job.blocks[i], job.blocks.size() == 1 ? "" : "block " + std::to_string(i + 1) + " ");
            return r;
        }
        case Command::Jumps: return jumps(job);
        case Command::Genus:
            if (job.blocks.front().kind != BlockKind::Cover) throw InvalidInput("genus needs a `cover` block");
            return genus_report(job.blocks.front().cover_spec());
        case Command::Verify: return verify(job, oracle_prec(job, opts));
    }
    throw InvalidInput("unknown command");
}

RamReport run_verification_suite(const SuiteOptions& opts) {
    if (opts.trials <= 0) throw InvalidInput("--trials must be positive");
    std::mt19937_64 rng(opts.seed);
    std::vector<FieldPtr> fields;
    if (opts.field) fields.push_back(opts.field);
    else for (std::uint32_t p : {2u, 3u, 5u}) fields.push_back(FieldCtx::make(p, 1));

    std::int64_t ran = 0, skipped = 0;
    std::vector<std::string> mismatches;
    for (std::int64_t t = 0; t < opts.trials; ++t) {
        const FieldPtr& F = fields[std::size_t(t) % fields.size()];
        const std::int64_t p = F->p();
        auto pick_pole = [&] {
            std::int64_t n;
            do n = 1 + std::int64_t(rng() % 12); while (n % p == 0);
            return n;
        };
        auto random_datum = [&](std::int64_t n) {
            std::map<std::int64_t, FieldElem> m;
            for (std::int64_t k = -n; k <= 2; ++k) m[k] = FieldElem{std::uint32_t(rng() % F->size())};
            m[-n] = FieldElem{1 + std::uint32_t(rng() % (F->size() - 1))};
            return LaurentSeries(F, m);
        };
        const WittVec2 w(random_datum(pick_pole()), random_datum(pick_pole()));
        const ReducedWitt2 v = reduce_witt2(w);
        if (v.kind0 != ASKind::WildReduced) {
            ++skipped;
            continue;
        }
        try {
            const JumpProfile lower = jumps_p2_cyclic(v);
            const std::int64_t j0 = oracle_p_cyclic_jump(reduce_as(v.vec_red.a0), opts.prec.value_or(kDefaultPrec));
            const std::int64_t j1 = oracle_p2_second_jump(v, opts.prec.value_or(kDefaultPrec));
            ++ran;
            if (Rational(j0) != lower.jumps.at(0) || Rational(j1) != lower.jumps.at(1))
                mismatches.push_back("trial " + std::to_string(t) + " (p=" + std::to_string(p) + "): " +
                                     w.to_string() + " oracle (" + std::to_string(j0) + ", " + std::to_string(j1) +
                                     ")");
        } catch (const RootNotInField&) {
            ++skipped;
        }
    }

    RamReport r;
    r.group = "-";
    r.case_label = "randomized verification, " + std::to_string(opts.trials) + " trials, seed " + std::to_string(opts.seed);
    r.status = mismatches.empty() && ran > 0 ? Status::OracleConfirmed
               : mismatches.empty()          ? Status::Undetermined
                                             : Status::DiscrepancyFlag;
    r.notes.push_back("trials checked: " + std::to_string(ran));
    r.notes.push_back("trials skipped (not totally ramified or root outside the field): " + std::to_string(skipped));
    r.notes.insert(r.notes.end(), mismatches.begin(), mismatches.end());
    return r;
}

}  // namespace wildram
