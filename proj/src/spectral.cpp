#include "dfaspec/spectral.hpp"

#include <sstream>
#include <stdexcept>

#include "dfaspec/minimize.hpp"

namespace dfaspec {

int language_rank(const Dfa& d) {
    Dfa minimal = minimize(d);
    if (minimal.empty())
        return 0;
    return rank(adjacency(minimal));
}

MinimalityCheck verify_minimality(const Dfa& d) {
    if (d.empty())
        throw Error(ErrorCode::EmptyAutomaton, "verify_minimality needs at least one state");
    if (!is_trim(d))
        throw std::invalid_argument("verify_minimality: automaton must be trim");
    MinimalityCheck check;
    IntMatrix given = adjacency(d);
    check.given_rank = rank(given);
    check.given_nullity = nullity(given);
    IntMatrix min = adjacency(nerode_partition(d).minimal);
    check.minimal_rank = rank(min);
    check.minimal_nullity = nullity(min);
    check.rank_ok = check.minimal_rank <= check.given_rank;
    check.nullity_ok = check.minimal_nullity <= check.given_nullity;
    return check;
}

AnalysisReport analyze(const Dfa& d) {
    AnalysisReport report;
    report.state_count = d.state_count();
    report.is_trim = is_trim(d);

    IntMatrix m = adjacency(d);
    report.rank = rank(m);
    report.nullity = d.state_count() - report.rank;
    report.char_poly = char_poly(m);

    Dfa minimal = minimize(d);
    report.is_minimal = report.is_trim && minimal.state_count() == d.state_count();
    report.language_rank = minimal.empty() ? 0 : rank(adjacency(minimal));
    if (report.language_rank == 1)
        report.rank_one = decompose(adjacency(minimal));
    report.is_expanded_normal = report.rank == 1 && is_expanded_normal(m);
    return report;
}

namespace {

void append_int_array(std::ostringstream& out, const std::vector<Int>& values) {
    out << '[';
    for (size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << values[i].get_str();
    out << ']';
}

} // namespace

std::string report_to_json(const AnalysisReport& report) {
    std::ostringstream out;
    out << "{\"states\":" << report.state_count
        << ",\"trim\":" << (report.is_trim ? "true" : "false")
        << ",\"minimal\":" << (report.is_minimal ? "true" : "false")
        << ",\"rank\":" << report.rank
        << ",\"nullity\":" << report.nullity
        << ",\"charPoly\":";
    append_int_array(out, report.char_poly.coefficients());
    out << ",\"languageRank\":" << report.language_rank
        << ",\"rankOne\":";
    if (report.rank_one) {
        out << "{\"inVector\":";
        append_int_array(out, report.rank_one->in_vector);
        out << ",\"outVector\":";
        append_int_array(out, report.rank_one->out_vector);
        out << ",\"lambda\":" << report.rank_one->lambda.get_str() << "}";
    } else {
        out << "null";
    }
    out << ",\"expandedNormal\":" << (report.is_expanded_normal ? "true" : "false") << "}";
    return out.str();
}

} // namespace dfaspec
