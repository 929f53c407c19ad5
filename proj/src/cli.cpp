#include "pncoef/cli.hpp"

#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pncoef/bijections.hpp"
#include "pncoef/core.hpp"
#include "pncoef/errors.hpp"
#include "pncoef/greedy.hpp"
#include "pncoef/identities.hpp"

namespace pncoef::cli {

namespace {

using nlohmann::json;

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string paren_vector(const std::vector<int>& v) { return "(" + join_ints(v, ",") + ")"; }

std::string tree_parens(const PlaneTree& t, int v) {
    std::string s;
    for (int c : t.children[static_cast<std::size_t>(v)]) {
        s += "(";
        s += tree_parens(t, c);
        s += ")";
    }
    return s;
}

json vector_json(const std::vector<int>& v) { return json(v); }

std::string quotient_string(const Bigint& numerator, const Bigint& denominator) {
    if (denominator == 1) return numerator.str();
    return numerator.str() + "/" + denominator.str();
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "bfile") return Format::bfile;
    throw std::invalid_argument("unknown format: " + name);
}

int cmd_triangle(int n, Format format, const Options& opts, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&]() {
        if (n < 1) throw std::invalid_argument("triangle: n must be >= 1");
        if (n > opts.oracle_bound)
            throw budget_error("triangle: n exceeds the row bound " +
                               std::to_string(opts.oracle_bound) +
                               " (raise --oracle-bound to go further)");

        if (format == Format::csv) out << "n,index,coefficient,monomial\n";
        json rows = json::array();
        long long running = 0;
        for (int k = 1; k <= n; ++k) {
            const TriangleRow row = triangle_row(k);
            switch (format) {
                case Format::text: {
                    for (std::size_t i = 0; i < row.entries.size(); ++i) {
                        if (i) out << ' ';
                        out << row.entries[i].second;
                    }
                    out << '\n';
                    break;
                }
                case Format::csv: {
                    for (std::size_t i = 0; i < row.entries.size(); ++i)
                        out << k << ',' << i + 1 << ',' << row.entries[i].second.str() << ','
                            << join_ints(row.entries[i].first.entries(), " ") << '\n';
                    break;
                }
                case Format::json: {
                    json entries = json::array();
                    for (const auto& [mono, coeff] : row.entries)
                        entries.push_back(
                            {{"monomial", vector_json(mono.entries())}, {"coefficient", coeff.str()}});
                    rows.push_back({{"n", k}, {"entries", entries}});
                    break;
                }
                case Format::bfile: {
                    for (const auto& [mono, coeff] : row.entries)
                        out << ++running << ' ' << coeff.str() << '\n';
                    break;
                }
            }
        }
        if (format == Format::json) out << rows.dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_verify(int n_max, const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        if (n_max < 1) throw std::invalid_argument("verify: n_max must be >= 1");

        long long checks = 0;
        long long failures = 0;
        auto report = [&](const std::string& line, bool pass) {
            ++checks;
            if (!pass) ++failures;
            out << (pass ? "PASS " : "FAIL ") << line << '\n';
        };

        for (int k = 1; k <= n_max; ++k) {
            for (const auto& r : identities::verify_identities(k, opts.oracle_bound)) {
                std::ostringstream line;
                line << "identity " << r.name;
                if (!r.parameters.empty()) line << "(" << join_ints(r.parameters, ",") << ")";
                line << " n=" << k << " formula=" << r.formula_value
                     << " observed=" << r.enumerated_value
                     << (r.enumerated ? "" : " [formula-only]");
                report(line.str(), r.pass);
            }

            if (k <= opts.oracle_bound) {
                const oracle::SparsePolynomial poly = oracle::expand(k, opts.oracle_bound);
                const BinomialTable binom(k);
                bool terms_match = poly.size() == catalan(k);
                long long matched = 0;
                for_each_monomial(k, [&](const std::vector<int>& a) {
                    const auto it = poly.find(a);
                    if (it == poly.end() ||
                        it->second != detail::coefficient_unchecked(a, &binom))
                        terms_match = false;
                    else
                        ++matched;
                });
                terms_match = terms_match && matched == static_cast<long long>(poly.size());
                std::ostringstream line;
                line << "oracle expansion n=" << k << " terms=" << poly.size();
                report(line.str(), terms_match);

                const Bigint ones =
                    oracle::evaluate(poly, std::vector<int>(static_cast<std::size_t>(k), 1));
                report("oracle all-ones value n=" + std::to_string(k), ones == factorial(k));
            } else {
                out << "SKIP oracle expansion n=" << k << " (beyond bound "
                    << opts.oracle_bound << ")\n";
            }

            if (k <= 8) {
                bool round_trips = true;
                std::set<std::string> trees;
                long long members = 0;
                for_each_monomial(k, [&](const std::vector<int>& a) {
                    ++members;
                    const Monomial mono = Monomial::unchecked(a);
                    const BallotSeq ballot = monomial_to_ballot(mono);
                    if (!BallotSeq::is_member(ballot.entries())) round_trips = false;
                    if (!(ballot_to_monomial(ballot) == mono)) round_trips = false;
                    const PlaneTree tree = ballot_to_tree(ballot);
                    if (tree.vertex_count() != k + 1) round_trips = false;
                    if (!(tree_to_ballot(tree) == ballot)) round_trips = false;
                    trees.insert(tree_parens(tree, tree.root));
                    const ChoiceSeq picks = monomial_to_choices(mono);
                    if (!ChoiceSeq::is_member(picks.indices())) round_trips = false;
                    if (!(choices_to_monomial(picks) == mono)) round_trips = false;
                });
                round_trips = round_trips && Bigint(members) == catalan(k) &&
                              Bigint(trees.size()) == catalan(k);
                std::ostringstream line;
                line << "bijection round-trips n=" << k << " members=" << members
                     << " trees=" << trees.size();
                report(line.str(), round_trips);
            }

            if (k <= 9) {
                const auto tally = choice_counts(k);
                const BinomialTable binom(k);
                bool counts_match = tally.size() == catalan(k);
                for_each_monomial(k, [&](const std::vector<int>& a) {
                    const auto it = tally.find(a);
                    if (it == tally.end() ||
                        it->second != detail::coefficient_unchecked(a, &binom))
                        counts_match = false;
                });
                report("choice-sequence counting n=" + std::to_string(k), counts_match);
            }
        }

        out << "verify: " << checks << " checks, " << failures << " failures (n_max=" << n_max
            << ")\n";
        return failures == 0 ? kExitOk : kExitVerifyFail;
    });
}

int cmd_max(int n, bool upto, SearchMethod method, bool all_argmax, Format format,
            const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        if (n < 1) throw std::invalid_argument("max: n must be >= 1");
        if (method == SearchMethod::greedy)
            throw std::invalid_argument("max: the growth procedure has its own subcommand");

        std::vector<MaxResult> results;
        const int first = upto ? 1 : n;
        for (int k = first; k <= n; ++k)
            results.push_back(max_coefficient(k, method, opts.budget, opts.threads));

        std::vector<Bigint> values;
        values.reserve(results.size());
        for (const auto& r : results) values.push_back(r.m);
        std::vector<QuotientEntry> qs;
        if (upto && values.size() > 1) qs = quotients(values);

        if (format == Format::csv) out << "n,m,q,monomials\n";
        json rows = json::array();
        for (std::size_t idx = 0; idx < results.size(); ++idx) {
            const MaxResult& r = results[idx];
            const bool has_q = upto && idx + 1 < results.size();
            const std::string q =
                has_q ? quotient_string(qs[idx].numerator, qs[idx].denominator) : "";
            const std::size_t shown = all_argmax ? r.argmax.size() : 1;
            switch (format) {
                case Format::text: {
                    out << r.n << ' ' << r.m;
                    if (upto) out << ' ' << (has_q ? q : "-");
                    for (std::size_t i = 0; i < shown; ++i)
                        out << ' ' << paren_vector(r.argmax[i].entries());
                    out << '\n';
                    break;
                }
                case Format::csv: {
                    out << r.n << ',' << r.m.str() << ',' << q << ',';
                    for (std::size_t i = 0; i < shown; ++i) {
                        if (i) out << ';';
                        out << join_ints(r.argmax[i].entries(), " ");
                    }
                    out << '\n';
                    break;
                }
                case Format::json: {
                    json argmax = json::array();
                    for (std::size_t i = 0; i < shown; ++i)
                        argmax.push_back(vector_json(r.argmax[i].entries()));
                    json row = {{"n", r.n},
                                {"m", r.m.str()},
                                {"argmax", argmax},
                                {"method", method_name(r.method)},
                                {"search_space_size", r.search_space_size.str()}};
                    row["q"] = has_q ? json(q) : json(nullptr);
                    rows.push_back(row);
                    break;
                }
                case Format::bfile: {
                    out << r.n << ' ' << r.m.str() << '\n';
                    break;
                }
            }
        }
        if (format == Format::json) out << rows.dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_greedy(int l, Format format, bool coefficients_only, int trace_length,
               const Options& opts, std::ostream& out, std::ostream& err) {
    (void)opts;
    return guarded(err, [&]() {
        if (l < 1) throw std::invalid_argument("greedy: l must be >= 1");
        if (trace_length != 0 && (trace_length < 2 || trace_length > l))
            throw std::invalid_argument("greedy: trace length must lie in 2..l");

        const bool keep = !coefficients_only || trace_length > 0;
        const greedy::GreedyRun run = greedy::run(l, keep);

        if (!run.tie_steps.empty())
            err << "warning: argmax tie at length " << join_ints(run.tie_steps, ", ")
                << "; kept the first candidate in scan order\n";

        const bool emit_monomials = !coefficients_only;
        if (format == Format::csv) out << "n,s,monomial\n";
        json rows = json::array();
        for (int k = 1; k <= l; ++k) {
            const Bigint& s = run.s[static_cast<std::size_t>(k - 1)];
            switch (format) {
                case Format::text: {
                    out << k << ' ' << s;
                    if (emit_monomials)
                        out << ' ' << paren_vector(run.r[static_cast<std::size_t>(k - 1)].entries());
                    out << '\n';
                    break;
                }
                case Format::csv: {
                    out << k << ',' << s.str() << ',';
                    if (emit_monomials)
                        out << join_ints(run.r[static_cast<std::size_t>(k - 1)].entries(), " ");
                    out << '\n';
                    break;
                }
                case Format::json: {
                    json row = {{"n", k}, {"s", s.str()}};
                    row["r"] = emit_monomials
                                   ? vector_json(run.r[static_cast<std::size_t>(k - 1)].entries())
                                   : json(nullptr);
                    rows.push_back(row);
                    break;
                }
                case Format::bfile: {
                    out << k << ' ' << s.str() << '\n';
                    break;
                }
            }
        }

        const greedy::QuotientPattern pattern = greedy::quotient_pattern(run.s);
        std::ostringstream pattern_text;
        if (pattern.integral_at.empty()) {
            pattern_text << "no integral quotients\n";
        } else {
            pattern_text << "integral quotients at n:";
            for (std::size_t i = 0; i < pattern.integral_at.size(); ++i)
                pattern_text << ' ' << pattern.integral_at[i] << ':'
                             << pattern.integral_values[i].str();
            pattern_text << '\n';
            Bigint top = 0;
            for (const Bigint& v : pattern.integral_values) {
                if (v > top) top = v;
            }
            pattern_text << "missing integers up to " << top.str() << ":";
            if (pattern.missing.empty()) {
                pattern_text << " none";
            } else {
                for (const Bigint& m : pattern.missing) pattern_text << ' ' << m.str();
            }
            pattern_text << '\n';
        }

        std::ostringstream trace_text;
        json trace_doc;
        if (trace_length > 0) {
            const Monomial& previous = run.r[static_cast<std::size_t>(trace_length - 2)];
            const BinomialTable binom(trace_length);
            const greedy::Step step = greedy::grow_step(previous, binom);
            trace_text << "step " << trace_length << " candidates:\n";
            json cands = json::array();
            for (std::size_t i = 0; i < step.candidates.size(); ++i) {
                const bool selected = static_cast<int>(i) == step.selected;
                trace_text << "  " << paren_vector(step.candidates[i].entries()) << ' '
                           << step.coefficients[i].str() << (selected ? "  <- selected" : "")
                           << '\n';
                cands.push_back({{"monomial", vector_json(step.candidates[i].entries())},
                                 {"coefficient", step.coefficients[i].str()},
                                 {"selected", selected}});
            }
            trace_doc = {{"n", trace_length}, {"candidates", cands}, {"tie", step.tie}};
        }

        switch (format) {
            case Format::text:
                out << pattern_text.str() << trace_text.str();
                break;
            case Format::json: {
                json doc;
                doc["rows"] = rows;
                json ivals = json::array();
                for (const Bigint& v : pattern.integral_values) ivals.push_back(v.str());
                json missing = json::array();
                for (const Bigint& m : pattern.missing) missing.push_back(m.str());
                doc["quotient_pattern"] = {{"integral_at", pattern.integral_at},
                                           {"integral_values", ivals},
                                           {"missing", missing}};
                if (trace_length > 0) doc["trace"] = trace_doc;
                out << doc.dump(2) << '\n';
                break;
            }
            case Format::csv:
            case Format::bfile:
                err << pattern_text.str() << trace_text.str();
                break;
        }
        return kExitOk;
    });
}

int cmd_bijection(int n, Format format, const Options& opts, std::ostream& out,
                  std::ostream& err) {
    return guarded(err, [&]() {
        if (n < 1) throw std::invalid_argument("bijection: n must be >= 1");
        if (format == Format::bfile)
            throw std::invalid_argument("bijection: no single-sequence rendering; use text, csv or json");
        if (n > opts.oracle_bound)
            throw budget_error("bijection: n exceeds the row bound " +
                               std::to_string(opts.oracle_bound));

        if (format == Format::csv) out << "monomial,ballot,tree,choices\n";
        json rows = json::array();
        for_each_monomial(n, [&](const std::vector<int>& a) {
            const Monomial mono = Monomial::unchecked(a);
            const BallotSeq ballot = monomial_to_ballot(mono);
            const PlaneTree tree = ballot_to_tree(ballot);
            const std::string parens = tree_parens(tree, tree.root);
            const ChoiceSeq picks = monomial_to_choices(mono);
            switch (format) {
                case Format::text:
                    out << paren_vector(a) << " | ballot " << join_ints(ballot.entries(), ",")
                        << " | tree " << parens << " | choices "
                        << join_ints(picks.indices(), ",") << '\n';
                    break;
                case Format::csv:
                    out << join_ints(a, " ") << ',' << join_ints(ballot.entries(), " ") << ','
                        << parens << ',' << join_ints(picks.indices(), " ") << '\n';
                    break;
                case Format::json:
                    rows.push_back({{"monomial", vector_json(a)},
                                    {"ballot", vector_json(ballot.entries())},
                                    {"tree", parens},
                                    {"choices", vector_json(picks.indices())}});
                    break;
                case Format::bfile:
                    break;
            }
        });
        if (format == Format::json) out << rows.dump(2) << '\n';
        return kExitOk;
    });
}

}  // namespace pncoef::cli
