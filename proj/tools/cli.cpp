#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semicong/json_io.hpp"
#include "semicong/lattice.hpp"
#include "semicong/suite.hpp"

namespace semicong::cli {

namespace {

// Largest accepted semilattice, from SEMICONG_MAX_N (bounded by 64).
std::size_t size_cap() {
    const char* env = std::getenv("SEMICONG_MAX_N");
    if (!env || !*env)
        return kMaxElements;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1)
        throw InvalidInput(std::string("SEMICONG_MAX_N must be a positive integer, got \"") + env + "\"");
    return std::min<std::size_t>(static_cast<std::size_t>(v), kMaxElements);
}

Semilattice load(const std::string& path) {
    auto s = load_semilattice(path);
    if (s.size() > size_cap())
        throw SizeCapExceeded(s.size(), size_cap());
    return s;
}

Congruence parse_congruence(const Semilattice& s, const std::string& text) {
    auto p = Partition::parse(text);
    if (p.size() != s.size())
        throw InvalidInput("partition " + text + " covers " + std::to_string(p.size()) +
                           " elements, semilattice has " + std::to_string(s.size()));
    return Congruence::certify(s, std::move(p));
}

std::vector<Congruence> parse_family(const Semilattice& s, const std::string& text) {
    std::vector<Congruence> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos)
            out.push_back(parse_congruence(s, item));
    return out;
}

Json blocks_list(std::span<const Congruence> cs) {
    Json out = Json::array();
    for (const auto& c : cs)
        out.push_back(to_json(c.partition()));
    return out;
}

enum class IdentityArg { Pwd, Crossing, OnePsi, Generalized, FullPsi };

IdentityReport evaluate(IdentityArg which, const Semilattice& s, std::span<const Congruence> family,
                        const ComparablePair& g) {
    if (which == IdentityArg::Pwd)
        return check_pwd_law(s, family, g);
    if (which == IdentityArg::FullPsi)
        return check_psi_join_full(s, family, g);
    const auto split = classify_family(s, family, g);
    switch (which) {
    case IdentityArg::Crossing:
        return check_maximal_crossing(s, split.phis, split.psis, g);
    case IdentityArg::OnePsi:
        if (split.psis.size() != 1)
            throw HypothesisViolation("psis", split.psis.size(),
                                      "exactly one member must avoid (t⊙s, s), found " +
                                          std::to_string(split.psis.size()));
        return check_one_psi(s, split.phis, split.psis.front(), g);
    default:
        return check_generalized_crossing(s, split.phis, split.psis, g);
    }
}

// Whether a family split satisfies the hypotheses of `which`, so that the
// exhaustive driver only evaluates valid instances.
bool hypotheses_hold(IdentityArg which, const FamilySplit& split) {
    switch (which) {
    case IdentityArg::Pwd: return true;
    case IdentityArg::Crossing: return !split.phis.empty() && !split.psis.empty();
    case IdentityArg::OnePsi: return !split.phis.empty() && split.psis.size() == 1;
    case IdentityArg::Generalized: return !split.psis.empty() && (!split.phis.empty() || split.psis.size() > 1);
    case IdentityArg::FullPsi: return split.phis.empty() && !split.psis.empty();
    }
    return false;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    int indent = -1;

    void emit(const Json& doc) const { out << doc.dump(indent) << '\n'; }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Congruences of finite join semilattices", "semicong"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out, err};
    app.add_option("--json-indent", ctx.indent, "Pretty-print JSON with this indent");

    std::function<int()> action;

    // validate
    std::string file;
    auto* validate = app.add_subcommand("validate", "Check the semilattice axioms of a document");
    validate->add_option("file", file)->required();
    validate->callback([&] {
        action = [&] {
            try {
                const auto s = load(file);
                ctx.emit(Json{{"valid", true}, {"n", s.size()}});
                return int{kOk};
            } catch (const AxiomViolation& v) {
                ctx.emit(Json{{"valid", false}, {"violation", to_string(v.kind())}, {"witness", v.witness()}});
                ctx.err << "invalid semilattice: " << v.what() << '\n';
                return int{kInvalidInput};
            } catch (const FamilyError& f) {
                Json doc{{"valid", false}, {"violation", f.what()}, {"witness", {f.first(), f.second()}}};
                if (f.kind() == FamilyError::Kind::NotUnionClosed)
                    doc["missing_union"] = set_label(f.missing_union());
                ctx.emit(doc);
                ctx.err << "invalid family: " << f.what() << '\n';
                return int{kInvalidInput};
            }
        };
    });

    // gen
    std::string kind;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "Generate a semilattice");
    gen->add_option("--kind", kind, "chain|free_join|boolean|fan|random_union_closed")->required();
    gen->add_option("--params", params, "key=value pairs, or a JSON object");
    gen->add_option("--seed", seed);
    gen->callback([&] {
        action = [&] {
            GenSpec spec;
            spec.kind = parse_gen_kind(kind);
            spec.seed = seed;
            for (const auto& p : params) {
                if (!p.empty() && p.front() == '{') {
                    for (auto& [k, v] : Json::parse(p).get<std::map<std::string, std::int64_t>>())
                        spec.params[k] = v;
                    continue;
                }
                std::istringstream in(p);
                std::string item;
                while (std::getline(in, item, ',')) {
                    const auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw InvalidInput("parameter \"" + item + "\" is not key=value");
                    try {
                        spec.params[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
                    } catch (const std::logic_error&) {
                        throw InvalidInput("parameter \"" + item + "\" has a non-integer value");
                    }
                }
            }
            const auto s = generate(spec);
            if (s.size() > size_cap())
                throw SizeCapExceeded(s.size(), size_cap());
            ctx.emit(to_json(s));
            return int{kOk};
        };
    });

    // principal
    Element t = 0, s_elem = 0;
    std::string method = "formula";
    auto* principal = app.add_subcommand("principal", "Principal congruence identifying t⊙s with s");
    principal->add_option("file", file)->required();
    principal->add_option("--t", t)->required();
    principal->add_option("--s", s_elem)->required();
    principal->add_option("--method", method)->check(CLI::IsMember({"formula", "closure", "both"}));
    principal->callback([&] {
        action = [&] {
            const auto s = load(file);
            const ComparablePair g(s, t, s_elem);
            Json doc{{"t", t}, {"s", s_elem}};
            std::optional<Congruence> formula, closure;
            if (method != "closure")
                doc["formula"] = to_json((formula = principal_comparable_formula(s, g))->partition());
            if (method != "formula")
                doc["closure"] = to_json((closure = principal_closure(s, g))->partition());
            int code = kOk;
            if (formula && closure) {
                doc["agree"] = *formula == *closure;
                code = *formula == *closure ? kOk : kViolated;
            }
            ctx.emit(doc);
            return code;
        };
    });

    // congruences
    std::string strategy = "auto";
    bool maximal_only = false;
    auto* congs = app.add_subcommand("congruences", "Enumerate congruences");
    congs->add_option("file", file)->required();
    congs->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "bell", "meet"}));
    congs->add_flag("--maximal-only", maximal_only);
    congs->callback([&] {
        action = [&] {
            const auto s = load(file);
            std::vector<Congruence> list;
            if (maximal_only) {
                list = maximal_congruences(s);
            } else {
                const auto strat = strategy == "bell"   ? EnumerationStrategy::BellFilter
                                   : strategy == "meet" ? EnumerationStrategy::MeetClosure
                                                        : EnumerationStrategy::Auto;
                list = all_congruences(s, strat);
            }
            ctx.emit(Json{{"count", list.size()}, {"congruences", blocks_list(list)}});
            return int{kOk};
        };
    });

    // decompose
    std::string blocks;
    auto* decompose = app.add_subcommand("decompose", "Maximal congruences containing a congruence");
    decompose->add_option("file", file)->required();
    decompose->add_option("--congruence", blocks)->required();
    decompose->callback([&] {
        action = [&] {
            const auto s = load(file);
            const auto theta = parse_congruence(s, blocks);
            const auto parts = papert_decomposition(s, theta);
            ctx.emit(Json{{"congruence", to_json(theta.partition())},
                          {"maximal", blocks_list(parts)},
                          {"meet", to_json(meet_all(s, parts).partition())}});
            return int{kOk};
        };
    });

    // quotient
    auto* quot = app.add_subcommand("quotient", "Quotient semilattice and projection");
    quot->add_option("file", file)->required();
    quot->add_option("--congruence", blocks)->required();
    quot->callback([&] {
        action = [&] {
            const auto s = load(file);
            const auto q = quotient(s, parse_congruence(s, blocks));
            ctx.emit(Json{{"quotient", to_json(q.algebra)}, {"projection", q.projection}});
            return int{kOk};
        };
    });

    // verify
    std::string identity, family;
    bool exhaustive = false;
    std::size_t max_family = 3;
    std::size_t instance_cap = 100000;
    auto* verify = app.add_subcommand("verify", "Evaluate an identity");
    verify->add_option("file", file)->required();
    verify->add_option("--identity", identity)
        ->required()
        ->check(CLI::IsMember({"pwd", "crossing", "onepsi", "generalized", "fullpsi"}));
    verify->add_option("--t", t)->required();
    verify->add_option("--s", s_elem)->required();
    auto* fam_opt = verify->add_option("--family", family, "Partitions separated by ';'");
    auto* exh_opt = verify->add_flag("--exhaustive", exhaustive, "All families up to --max-family-size");
    verify->add_option("--max-family-size", max_family);
    verify->add_option("--instance-cap", instance_cap, "Stop after this many evaluated instances");
    fam_opt->excludes(exh_opt);
    verify->callback([&] {
        action = [&] {
            if (!exhaustive && family.empty())
                throw InvalidInput("verify needs --family or --exhaustive");
            const auto s = load(file);
            const ComparablePair g(s, t, s_elem);
            const IdentityArg which = identity == "pwd"        ? IdentityArg::Pwd
                                      : identity == "crossing" ? IdentityArg::Crossing
                                      : identity == "onepsi"   ? IdentityArg::OnePsi
                                      : identity == "generalized" ? IdentityArg::Generalized
                                                                  : IdentityArg::FullPsi;
            if (!exhaustive) {
                const auto report = evaluate(which, s, parse_family(s, family), g);
                ctx.emit(to_json(report));
                return report.holds ? int{kOk} : int{kViolated};
            }
            const bool maximal_pool = which == IdentityArg::Crossing || which == IdentityArg::FullPsi;
            const auto pool = maximal_pool ? maximal_congruences(s) : all_congruences(s);
            std::size_t instances = 0, failures = 0;
            bool truncated = false;
            Json failing = Json::array();
            for_each_multiset(pool.size(), 1, max_family, [&](std::span<const std::size_t> idx) {
                std::vector<Congruence> fam;
                for (auto i : idx)
                    fam.push_back(pool[i]);
                if (!hypotheses_hold(which, classify_family(s, fam, g)))
                    return true;
                if (instances == instance_cap) {
                    truncated = true;
                    return false;
                }
                ++instances;
                const auto report = evaluate(which, s, fam, g);
                if (!report.holds && failures++ < 10)
                    failing.push_back(to_json(report));
                return true;
            });
            ctx.emit(Json{{"identity", identity},
                          {"t", t},
                          {"s", s_elem},
                          {"instances", instances},
                          {"truncated", truncated},
                          {"holds", failures == 0},
                          {"failures", failures},
                          {"failing_reports", failing}});
            return failures == 0 ? int{kOk} : int{kViolated};
        };
    });

    // search-naive
    std::vector<std::string> corpus_args{"desk"};
    std::size_t budget = 0;
    bool keep_going = false;
    auto* search = app.add_subcommand("search-naive", "Search for counterexamples to the naive variant");
    search->add_option("--corpus", corpus_args, "desk, or semilattice files");
    search->add_option("--budget", budget)->required();
    search->add_option("--seed", seed);
    search->add_option("--max-family-size", max_family);
    search->add_flag("--all", keep_going, "Run the whole budget instead of stopping at the first failure");
    search->callback([&] {
        action = [&] {
            std::vector<Semilattice> pool;
            for (const auto& c : corpus_args) {
                if (c == "desk") {
                    for (auto& e : desk_corpus())
                        pool.push_back(std::move(e.algebra));
                } else {
                    pool.push_back(load(c));
                }
            }
            NaiveSearchOptions opts{budget, seed, max_family, !keep_going};
            const auto r = search_naive_pwd_counterexample(pool, opts);
            std::ostringstream digest;
            digest << std::hex << r.trace_digest;
            Json doc{{"trials", r.trials},
                     {"counterexamples", r.counterexamples},
                     {"found", r.counterexample.has_value()},
                     {"containment_holds", !r.containment_violation.has_value()},
                     {"trace_digest", digest.str()}};
            if (r.counterexample)
                doc["counterexample"] = to_json(*r.counterexample, pool[r.counterexample->pool_index]);
            if (r.containment_violation) {
                doc["containment_violation"] =
                    to_json(*r.containment_violation, pool[r.containment_violation->pool_index]);
                ctx.err << "engine bug: lhs not contained in rhs\n";
            }
            ctx.emit(doc);
            return r.counterexample || r.containment_violation ? int{kViolated} : int{kOk};
        };
    });

    // suite
    std::string preset = "desk";
    std::vector<int> only;
    auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
    suite->add_option("--preset", preset)->check(CLI::IsMember({"desk"}));
    suite->add_option("--criteria", only, "Run only these criteria")->delimiter(',');
    suite->callback([&] {
        action = [&] {
            const auto corpus = desk_corpus();
            Json results = Json::array();
            bool all = true;
            for (int id = 1; id <= kCriterionCount; ++id) {
                if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end())
                    continue;
                const auto r = run_criterion(id, corpus);
                ctx.err << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.summary
                        << '\n';
                all = all && r.passed;
                results.push_back(to_json(r));
            }
            ctx.emit(Json{{"preset", preset}, {"all_passed", all}, {"criteria", results}});
            return all ? int{kOk} : int{kViolated};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        return action();
    } catch (const HypothesisViolation& e) {
        err << e.what() << '\n';
        return kHypothesis;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kInvalidInput;
    } catch (const Json::exception& e) {
        err << "malformed JSON: " << e.what() << '\n';
        return kInvalidInput;
    }
}

} // namespace semicong::cli
